import itertools

import pytest

from affine_vcs.algebra import (
    D,
    KAPPA,
    Generator,
    bracket,
    dagger,
    loop_generators,
    parse_generator,
    pbw_less,
)


def g(text):
    return parse_generator(text)


def combine(terms):
    out = {}
    for c, x in terms:
        out[x] = out.get(x, 0) + c
    return {x: c for x, c in out.items() if c}


def bracket_lin(terms, b):
    """[sum c_i a_i, b] for a linear combination on the left."""
    out = []
    for c, a in terms:
        out.extend((c * c2, x) for c2, x in bracket(a, b))
    return out


def test_bracket_examples():
    assert combine(bracket(g("h[2]"), g("e[-1]"))) == {g("e[1]"): 2}
    assert combine(bracket(g("e[2]"), g("f[-2]"))) == {g("h[0]"): 1, KAPPA: 2}
    assert combine(bracket(g("e[1]"), g("e[5]"))) == {}


def test_grading_bracket():
    assert combine(bracket(D, g("f[-3]"))) == {g("f[-3]"): -3}
    assert combine(bracket(g("e[2]"), D)) == {g("e[2]"): -2}


GENS4 = loop_generators(-4, 4) + [KAPPA, D]
GENS3 = loop_generators(-3, 3) + [KAPPA]


def test_antisymmetry():
    for a, b in itertools.product(GENS4, repeat=2):
        assert combine(bracket(a, b)) == {x: -c for x, c in combine(bracket(b, a)).items()}


def test_jacobi():
    gens = loop_generators(-2, 2) + [KAPPA, D]
    for a, b, c in itertools.combinations_with_replacement(gens, 3):
        total = (bracket_lin(bracket(a, b), c) + bracket_lin(bracket(b, c), a)
                 + bracket_lin(bracket(c, a), b))
        assert combine(total) == {}, (a, b, c)


def test_jacobi_wide_modes():
    gens = loop_generators(-3, 3)
    for a, b, c in itertools.combinations(gens, 3):
        total = (bracket_lin(bracket(a, b), c) + bracket_lin(bracket(b, c), a)
                 + bracket_lin(bracket(c, a), b))
        assert combine(total) == {}, (a, b, c)


def test_dagger_examples():
    assert dagger(g("e[3]")) == g("f[-3]")
    assert dagger(KAPPA) == KAPPA
    assert dagger(g("h[-2]")) == g("h[2]")
    with pytest.raises(ValueError):
        dagger(D)


def test_dagger_involution_and_compatibility():
    for a in GENS3:
        assert dagger(dagger(a)) == a
    for a, b in itertools.product(GENS3, repeat=2):
        lhs = combine((c, dagger(x)) for c, x in bracket(a, b))
        rhs = combine(bracket(dagger(b), dagger(a)))
        assert lhs == rhs, (a, b)


def test_pbw_order():
    assert pbw_less(g("e[-2]"), g("e[-1]"))
    assert pbw_less(g("e[-1]"), g("h[-1]"))
    assert not pbw_less(g("f[-1]"), g("f[-1]"))
    with pytest.raises(ValueError):
        pbw_less(g("e[0]"), g("e[-1]"))


def test_parse_and_print():
    for text in ("e[-2]", "h[0]", "f[3]", "kappa", "d"):
        assert str(parse_generator(text)) == text
    assert parse_generator("κ") == KAPPA
    assert parse_generator(" e[ -2 ] ") == Generator("e", -2)
    with pytest.raises(ValueError):
        parse_generator("q[1]")
