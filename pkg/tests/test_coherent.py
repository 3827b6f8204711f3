import random
from fractions import Fraction

import pytest

from affine_vcs.algebra import parse_generator
from affine_vcs.checks import intertwining_suite, kernel_suite, random_wvector
from affine_vcs.coherent import CoherentStateMap, coherent_state_map
from affine_vcs.realization import Realization, VcsVector
from affine_vcs.verma import WeightSpaceKey, WVector

from .conftest import P

g = parse_generator


def vec(text_word, j=0):
    return WVector.basis(tuple(g(t) for t in text_word.split()) if text_word else (), j)


@pytest.fixture(scope="module")
def C01():
    return CoherentStateMap(0, 1)


def test_highest_weight_vector_maps_to_constant(C01):
    assert C01.coherent_state_map(vec("")) == VcsVector.floor(1, 0)
    assert not C01.kernel_check(vec(""))


def test_f_minus_one_image():
    img = coherent_state_map(vec("f[-1]"), 1, 1)
    assert img == VcsVector((P("2*x_1"), P("-2*y_1")))


def test_singular_vector_maps_to_zero(C01):
    assert C01.kernel_check(vec("e[-1] e[-1]"))
    for key in C01.module.weight_keys(3):
        for s in C01.module.singular_vectors(key):
            assert C01.kernel_check(s)


def test_intertwine_examples(C01):
    assert C01.intertwine_check(g("f[1]"), vec(""))
    assert C01.realization.apply(g("e[-1]"), C01.coherent_state_map(vec(""))) == VcsVector((P("z_1"),))
    assert C01.intertwine_check(g("e[-1]"), vec(""))


def test_image_basis_examples(C01):
    assert C01.image_basis(WeightSpaceKey(0, 0)) == [VcsVector.floor(1, 0)]
    depth1 = [k for k in C01.module.weight_keys(1) if k.depth == 1]
    assert sum(len(C01.image_basis(k)) for k in depth1) == 3
    key = WeightSpaceKey(4, 2)
    assert len(C01.image_basis(key)) < len(C01.module.weight_basis(key))
    C2 = CoherentStateMap(2, 3)
    floor = C2.image_basis(WeightSpaceKey(2, 0)) + C2.image_basis(WeightSpaceKey(0, 0)) \
        + C2.image_basis(WeightSpaceKey(-2, 0))
    assert floor == [VcsVector.floor(3, j) for j in range(3)]


def test_generic_level_has_trivial_kernel():
    C = CoherentStateMap(1, "5/2")
    for key in C.module.weight_keys(3):
        for word, j in C.module.weight_basis(key):
            assert not C.kernel_check(WVector.basis(word, j))


def test_image_basis_matches_coherent_rank():
    C = CoherentStateMap(1, 1)
    for key in C.module.weight_keys(3):
        assert len(C.image_basis(key)) == C.image_span_rank(key) == C.module.gram_rank(key)


@pytest.mark.parametrize("lam,c", [(0, 1), (1, 1)])
def test_kernel_theorem_to_depth_three(lam, c):
    r = kernel_suite(lam, c, max_depth=3)
    assert r.passed, r.failures


def test_linearity():
    C = CoherentStateMap(1, 2)
    rng = random.Random(3)
    for _ in range(25):
        w1 = random_wvector(C.module, rng, 3)
        w2 = random_wvector(C.module, rng, 3)
        a, b = Fraction(rng.randint(-5, 5), 3), Fraction(rng.randint(1, 4), 7)
        lhs = C.coherent_state_map(w1.scale(a) + w2.scale(b))
        rhs = C.coherent_state_map(w1).scale(a) + C.coherent_state_map(w2).scale(b)
        assert lhs == rhs


@pytest.mark.parametrize("lam,c", [(1, 2), (2, "5/3")])
def test_image_grading(lam, c):
    C = CoherentStateMap(lam, c)
    h0 = g("h[0]")
    for key in C.module.weight_keys(3):
        for word, j in C.module.weight_basis(key):
            img = C.coherent_state_map(WVector.basis(word, j))
            assert img.degrees() <= {key.depth}
            assert C.realization.apply(h0, img) == img.scale(key.weight)


def test_intertwining_small_sample():
    r = intertwining_suite(2, "-3/2", samples=40, max_depth=2, seed=5)
    assert r.passed, r.failures


def test_depth_bound_is_enforced(C01):
    with pytest.raises(ValueError):
        C01.coherent_state_map(vec("e[-2] e[-1]"), max_depth=2)


def test_mismatched_parameters_rejected():
    with pytest.raises(ValueError):
        CoherentStateMap(0, 1, realization=Realization(0, 2))
