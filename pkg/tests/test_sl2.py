import pytest

from affine_vcs.sl2 import act_pi0, build_irrep, matmul, matscale, matsub, v0_inner


def _zero(n):
    return tuple(tuple(0 for _ in range(n)) for _ in range(n))


def test_trivial_module():
    V = build_irrep(0)
    assert V.dim == 1
    for g in "ehf":
        assert V.matrix(g) == _zero(1)
    assert list(V.gram_diag) == [1]


def test_small_modules():
    assert [build_irrep(1).pi0_h[j][j] for j in range(2)] == [1, -1]
    assert list(build_irrep(2).gram_diag) == [1, 2, 4]


def test_pi0_examples():
    V1 = build_irrep(1)
    assert act_pi0(V1, "e", V1.basis_vector(1)) == V1.basis_vector(0)
    for lam in range(4):
        V = build_irrep(lam)
        assert not any(act_pi0(V, "e", V.basis_vector(0)))
    V2 = build_irrep(2)
    assert not any(act_pi0(V2, "h", V2.basis_vector(1)))


def test_inner_product_examples():
    V1 = build_irrep(1)
    assert v0_inner(V1, V1.basis_vector(0), V1.basis_vector(0)) == 1
    assert v0_inner(V1, V1.basis_vector(1), V1.basis_vector(1)) == 1
    assert v0_inner(V1, V1.basis_vector(0), V1.basis_vector(1)) == 0


@pytest.mark.parametrize("lam", range(7))
def test_sl2_relations(lam):
    V = build_irrep(lam)
    e, h, f = V.pi0_e, V.pi0_h, V.pi0_f
    assert matsub(matmul(e, f), matmul(f, e)) == h
    assert matsub(matmul(h, e), matmul(e, h)) == matscale(e, 2)
    assert matsub(matmul(h, f), matmul(f, h)) == matscale(f, -2)


@pytest.mark.parametrize("lam", range(7))
def test_contravariance_on_v0(lam):
    V = build_irrep(lam)
    basis = [V.basis_vector(j) for j in range(V.dim)]
    for u in basis:
        for v in basis:
            assert v0_inner(V, act_pi0(V, "e", u), v) == v0_inner(V, u, act_pi0(V, "f", v))
            assert v0_inner(V, act_pi0(V, "h", u), v) == v0_inner(V, u, act_pi0(V, "h", v))


@pytest.mark.parametrize("lam", range(7))
def test_gram_diag_positive(lam):
    assert all(g > 0 for g in build_irrep(lam).gram_diag)


def test_rejects_bad_lambda():
    with pytest.raises(ValueError):
        build_irrep(-1)
