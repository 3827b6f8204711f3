"""Sparse graded polynomials over Q in the variable families x_k, y_k, z_k.

A monomial is a sorted tuple of ``((family, index), exponent)`` pairs with
``family`` in ``{0, 1, 2}`` for ``X, Y, Z``.  Every variable ``x_k``, ``y_k``,
``z_k`` carries degree ``k``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from gmpy2 import mpq

X, Y, Z = 0, 1, 2
FAMILY_NAMES = ("x", "y", "z")

Var = Tuple[int, int]
Monomial = Tuple[Tuple[Var, int], ...]
# exact rationals; mpq interoperates with (and hashes like) fractions.Fraction
Scalar = type(mpq(0))
ScalarLike = Union[int, Fraction, Scalar, str]
_NUMBER = (int, Fraction, Scalar)

ONE: Monomial = ()


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (float, bool)):
        raise TypeError(f"{type(value).__name__} is not accepted as an exact scalar")
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        if not den:
            return mpq(int(num))
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return mpq(int(num), int(den))
    return mpq(value)


def var(family: Union[int, str], index: int) -> Var:
    if isinstance(family, str):
        family = FAMILY_NAMES.index(family.lower())
    if family not in (X, Y, Z):
        raise ValueError(f"unknown variable family {family!r}")
    if index < 1:
        raise ValueError("variable indices start at 1")
    return (family, index)


def degree_of(m: Monomial) -> int:
    """Weighted degree: sum of index * exponent."""
    return sum(v[1] * e for v, e in m)


@lru_cache(maxsize=1 << 18)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_from_exponents(exps: Mapping[Var, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    eb = dict(b)
    return all(eb.get(v, 0) >= e for v, e in a)


@lru_cache(maxsize=1 << 18)
def mono_derivatives(m: Monomial) -> Tuple[Tuple[Monomial, int, Monomial], ...]:
    """All ``(alpha, c, rest)`` with ``d^alpha m = c * rest`` and ``alpha | m``.

    Here ``d^alpha`` is the composed partial derivative, one factor per unit
    of exponent in ``alpha``, so ``c`` is a product of falling factorials.
    """
    out = [((), 1, m)]
    for v, e in m:
        nxt = []
        for alpha, c, rest in out:
            for a in range(1, e + 1):
                coeff = c
                for t in range(a):
                    coeff *= e - t
                nxt.append((alpha + ((v, a),), coeff, _lower(rest, v, a)))
        out.extend(nxt)
    return tuple(out)


def _lower(m: Monomial, v: Var, a: int) -> Monomial:
    res = []
    for w, e in m:
        if w == v:
            if e > a:
                res.append((w, e - a))
        else:
            res.append((w, e))
    return tuple(res)


def sort_key(m: Monomial):
    """Graded lexicographic: degree, then variables by (family, index)."""
    return (degree_of(m), tuple((v, -e) for v, e in m))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, ScalarLike], None] = None):
        clean: Dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Scalar]) -> "Polynomial":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: ScalarLike) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def variable(cls, family: Union[int, str], index: int) -> "Polynomial":
        return cls._raw({((var(family, index), 1),): mpq(1)})

    @classmethod
    def monomial(cls, m: Monomial, c: ScalarLike = 1) -> "Polynomial":
        return cls({m: c})

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, _NUMBER):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) - self

    def scale(self, c: ScalarLike) -> "Polynomial":
        c = as_scalar(c)
        if not c:
            return ZERO
        return Polynomial._raw({m: c * a for m, a in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, _NUMBER):
            return self.scale(other)
        other = _coerce(other)
        out: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE_POLY
        for _ in range(n):
            result = result * self
        return result

    def degree(self) -> int:
        """Largest weighted degree; -1 for the zero polynomial."""
        return max((degree_of(m) for m in self._terms), default=-1)

    def degrees(self) -> set:
        return {degree_of(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def partial(self, v: Var) -> "Polynomial":
        return partial(v, self)

    def truncate(self, max_degree: int) -> "Polynomial":
        return truncate(self, max_degree)

    def substitute_scale(self, family: int, factor: ScalarLike) -> "Polynomial":
        """Replace every variable ``v_k`` of ``family`` by ``factor * v_k``."""
        factor = as_scalar(factor)
        out = {}
        for m, c in self._terms.items():
            power = sum(e for v, e in m if v[0] == family)
            c = c * factor ** power
            if c:
                out[m] = c
        return Polynomial._raw(out)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: sort_key(mc[0]))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, _NUMBER):
        return Polynomial.constant(p)
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


ZERO = Polynomial()
ONE_POLY = Polynomial.constant(1)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial(v: Var, p: Polynomial) -> Polynomial:
    """Formal partial derivative of ``p`` with respect to ``v``."""
    out: Dict[Monomial, Scalar] = {}
    for m, c in p.items():
        for w, e in m:
            if w == v:
                rest = _lower(m, v, 1)
                out[rest] = out.get(rest, 0) + c * e
                break
    return Polynomial(out)


def truncate(p: Polynomial, max_degree: int) -> Polynomial:
    if max_degree < 0:
        raise ValueError("truncation degree must be nonnegative")
    return Polynomial._raw({m: c for m, c in p.items() if degree_of(m) <= max_degree})


def monomials_of_degree(n: int, families: Iterable[int] = (X, Y, Z)) -> list:
    """Every monomial of weighted degree exactly ``n`` in the given families."""
    fams = tuple(families)
    result = []

    # enumerate multisets of variables by nonincreasing (index, family)
    vars_desc = [(f, k) for k in range(n, 0, -1) for f in reversed(fams)]

    def rec(pos: int, remaining: int, acc: Dict[Var, int]):
        if remaining == 0:
            result.append(mono_from_exponents(acc))
            return
        for i in range(pos, len(vars_desc)):
            v = vars_desc[i]
            if v[1] > remaining:
                continue
            acc[v] = acc.get(v, 0) + 1
            rec(i, remaining - v[1], acc)
            acc[v] -= 1
            if not acc[v]:
                del acc[v]

    rec(0, n, {})
    return sorted(result, key=sort_key)


def monomials_up_to(n: int, families: Iterable[int] = (X, Y, Z)) -> list:
    out = []
    for k in range(n + 1):
        out.extend(monomials_of_degree(k, families))
    return out


# --- text format -----------------------------------------------------------

def render_monomial(m: Monomial) -> str:
    parts = []
    for (f, k), e in m:
        s = f"{FAMILY_NAMES[f]}_{k}"
        if e != 1:
            s += f"^{e}"
        parts.append(s)
    return "*".join(parts)


def render(p: Polynomial) -> str:
    """Render as e.g. ``3/2*x_1^2*y_3 - z_2 + 1``."""
    if not p:
        return "0"
    chunks = []
    for i, (m, c) in enumerate(reversed(p.sorted_terms())):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = render_monomial(m)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if i == 0:
            chunks.append(text if sign == "+" else f"-{text}")
        else:
            chunks.append(f" {sign} {text}")
    return "".join(chunks)


_FACTOR = re.compile(r"^([xyz])_(\d+)(?:\^(\d+))?$")


def parse(text: str) -> Polynomial:
    """Inverse of :func:`render`."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    # split into signed terms, keeping the sign attached
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    out: Dict[Monomial, Scalar] = {}
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        piece = piece.lstrip("+-")
        coeff = mpq(sign)
        exps: Dict[Var, int] = {}
        for factor in piece.split("*"):
            mt = _FACTOR.match(factor)
            if mt:
                v = var(mt.group(1), int(mt.group(2)))
                exps[v] = exps.get(v, 0) + int(mt.group(3) or 1)
            elif re.fullmatch(r"\d+(/\d+)?", factor):
                frac = mpq(factor)
                coeff *= frac
            else:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
        m = mono_from_exponents(exps)
        out[m] = out.get(m, 0) + coeff
    return Polynomial(out)
