from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from affine_vcs.polynomial import Polynomial, mono_from_exponents, parse, var

settings.register_profile("exact", max_examples=60, deadline=None)
settings.load_profile("exact")

variables = st.builds(var, st.sampled_from("xyz"), st.integers(1, 3))
monomials = st.dictionaries(variables, st.integers(1, 3), max_size=3).map(mono_from_exponents)
rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 6))
polynomials = st.dictionaries(monomials, rationals, max_size=5).map(Polynomial)


def P(text: str) -> Polynomial:
    return parse(text)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
