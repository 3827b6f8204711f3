"""Differential-operator realization of affine sl(2) on ``P(X, Y, Z) (x) V0``.

Operators are kept normal ordered: a finite sum of
``polynomial * endo * d/dv`` terms where ``endo`` is one of the identity or
``pi0(e), pi0(h), pi0(f)`` and the derivative part is a single composed
partial (possibly empty).  The formal infinite sums are cut at a derivative
order ``n``: a term whose derivative has degree > n kills every monomial of
degree <= n, so the cut operator is exact on inputs of degree <= n.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from gmpy2 import mpq

from .algebra import Generator, bracket, parse_generator
from .polynomial import (
    FAMILY_NAMES,
    ONE,
    ONE_POLY,
    ZERO,
    Monomial,
    Polynomial,
    Scalar,
    ScalarLike,
    X,
    Y,
    Z,
    as_scalar,
    degree_of,
    mono_derivatives,
    mono_mul,
    render,
    sort_key,
)
from .sl2 import Sl2Irrep, build_irrep

ENDOS = ("1", "e", "h", "f")

TermKey = Tuple[Monomial, str]


class VcsVector:
    """Element of ``P(X, Y, Z) (x) V0``; component ``j`` multiplies ``w_j``."""

    __slots__ = ("comps",)

    def __init__(self, comps: Sequence[Polynomial]):
        self.comps = tuple(comps)

    @classmethod
    def floor(cls, dim: int, j: int, poly: Polynomial = ONE_POLY) -> "VcsVector":
        return cls(tuple(poly if i == j else ZERO for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "VcsVector":
        return cls((ZERO,) * dim)

    @property
    def dim(self) -> int:
        return len(self.comps)

    def __add__(self, other: "VcsVector") -> "VcsVector":
        return VcsVector(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "VcsVector") -> "VcsVector":
        return VcsVector(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def scale(self, c) -> "VcsVector":
        return VcsVector(tuple(a.scale(c) for a in self.comps))

    def __eq__(self, other) -> bool:
        return isinstance(other, VcsVector) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def is_zero(self) -> bool:
        return not any(self.comps)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def degree(self) -> int:
        return max((p.degree() for p in self.comps), default=-1)

    def degrees(self) -> set:
        out = set()
        for p in self.comps:
            out |= p.degrees()
        return out

    def coordinates(self) -> Dict[Tuple[int, Monomial], Scalar]:
        return {(j, m): c for j, p in enumerate(self.comps) for m, c in p.items()}

    def __str__(self) -> str:
        parts = [f"({render(p)}) ⊗ w_{j}" for j, p in enumerate(self.comps) if p]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


class DiffOp:
    """Normal-ordered differential operator with V0 endomorphism coefficients."""

    __slots__ = ("order", "terms", "_index")

    def __init__(self, order: int, terms: Dict[TermKey, Polynomial] = None):
        self.order = order
        self.terms: Dict[TermKey, Polynomial] = {}
        for (alpha, endo), p in (terms or {}).items():
            if p and degree_of(alpha) <= order:
                self.terms[(alpha, endo)] = p
        self._index = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, order: int, c: ScalarLike) -> "DiffOp":
        return cls(order, {(ONE, "1"): Polynomial.constant(c)})

    @classmethod
    def endo(cls, order: int, name: str) -> "DiffOp":
        return cls(order, {(ONE, name): ONE_POLY})

    @classmethod
    def deriv(cls, order: int, family: int, index: int) -> "DiffOp":
        return cls(order, {((((family, index), 1),), "1"): ONE_POLY})

    @classmethod
    def mul(cls, order: int, p: Polynomial, endo: str = "1") -> "DiffOp":
        return cls(order, {(ONE, endo): p})

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "DiffOp") -> "DiffOp":
        out = dict(self.terms)
        for k, p in other.terms.items():
            s = out.get(k, ZERO) + p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DiffOp(min(self.order, other.order), out)

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.order, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "DiffOp":
        return DiffOp(self.order, {k: p.scale(c) for k, p in self.terms.items()})

    def lmul(self, p: Polynomial) -> "DiffOp":
        """Left multiplication by a polynomial (stays normal ordered)."""
        return DiffOp(self.order, {k: p * q for k, q in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOp) and self.terms == other.terms

    # -- application -------------------------------------------------------

    def _compiled(self):
        if self._index is None:
            idx: Dict[Monomial, List[Tuple[str, tuple]]] = {}
            for (alpha, endo), p in self.terms.items():
                idx.setdefault(alpha, []).append((endo, tuple(p.items())))
            self._index = idx
        return self._index

    def apply(self, irrep: Sl2Irrep, v: VcsVector) -> VcsVector:
        if v.degree() > self.order:
            raise ValueError(
                f"operator cut at derivative order {self.order} applied to degree {v.degree()} input")
        idx = self._compiled()
        lam = irrep.lam
        n = irrep.dim
        out: List[Dict[Monomial, Scalar]] = [dict() for _ in range(n)]
        for j, comp in enumerate(v.comps):
            for m, c in comp.items():
                for alpha, k, rest in mono_derivatives(m):
                    entries = idx.get(alpha)
                    if entries is None:
                        continue
                    ck = c * k
                    for endo, poly in entries:
                        if endo == "1":
                            i, s = j, ck
                        elif endo == "h":
                            i, s = j, ck * (lam - 2 * j)
                        elif endo == "e":
                            if j == 0:
                                continue
                            i, s = j - 1, ck * (j * (lam - j + 1))
                        else:
                            if j == lam:
                                continue
                            i, s = j + 1, ck
                        if not s:
                            continue
                        target = out[i]
                        for pm, pc in poly:
                            mm = mono_mul(pm, rest)
                            t = target.get(mm, 0) + pc * s
                            if t:
                                target[mm] = t
                            else:
                                del target[mm]
        return VcsVector(tuple(Polynomial._raw(d) for d in out))

    # -- printing ----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []

        def key(item):
            (alpha, endo), _ = item
            return (sort_key(alpha), ENDOS.index(endo))

        for (alpha, endo), p in sorted(self.terms.items(), key=key):
            for m, coeff in p.sorted_terms():
                pieces.append(_render_term(coeff, m, endo, alpha))
        text = " ".join(pieces)
        if text.startswith("+ "):
            text = text[2:]
        elif text.startswith("- "):
            text = "-" + text[2:]
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"DiffOp(order={self.order}, {self.render()})"


def _render_term(coeff: Scalar, m: Monomial, endo: str, alpha: Monomial) -> str:
    sign = "-" if coeff < 0 else "+"
    a = abs(coeff)
    factors = []
    if m:
        factors.append(render(Polynomial._raw({m: mpq(1)})))
    if endo != "1":
        factors.append(f"π₀({endo})")
    for (f, k), e in alpha:
        d = f"∂/∂{FAMILY_NAMES[f]}_{k}"
        factors.extend([d] * e)
    body = " ".join(factors)
    if not body:
        body = str(a)
    elif a != 1:
        body = f"{a}*{body}"
    return f"{sign} {body}"


# --- Z_N polynomials ---------------------------------------------------------

_Z_CACHE: Dict[int, Polynomial] = {0: ONE_POLY}
_Z_SCALED: Dict[Tuple[int, Scalar], Polynomial] = {}


def z_poly(N: int, scale: ScalarLike = 1) -> Polynomial:
    """Coefficient of ``t^N`` in ``exp(sum_k t^k * scale * y_k)``.

    Uses ``N Z_N = sum_{k=1}^N k y_k Z_{N-k}``.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    scale = as_scalar(scale)
    hit = _Z_SCALED.get((N, scale))
    if hit is not None:
        return hit
    for n in range(len(_Z_CACHE), N + 1):
        acc = ZERO
        for k in range(1, n + 1):
            acc = acc + (Polynomial.variable(Y, k) * _Z_CACHE[n - k]).scale(k)
        _Z_CACHE[n] = acc.scale(mpq(1, n))
    res = _Z_CACHE[N].substitute_scale(Y, scale)
    _Z_SCALED[(N, scale)] = res
    return res


# --- the realization ---------------------------------------------------------

def _x(k: int) -> Polynomial:
    return Polynomial.variable(X, k)


def _y(k: int) -> Polynomial:
    return Polynomial.variable(Y, k)


def _z(k: int) -> Polynomial:
    return Polynomial.variable(Z, k)


class Realization:
    """The operators xi(a) for the module with highest weight ``lam``, level ``c``.

    ``operator(a, order)`` returns xi(a) cut at derivative order ``order``;
    negative modes are built recursively from modes closer to zero, all
    memoized.  ``apply`` works monomial by monomial with the order set to the
    monomial's degree, so it is exact on every input.

    ``literal_h_neg=True`` puts an extra factor ``x_k`` in front of the
    ``2 sum_p z_p xi(f[p-k])`` part of xi(h[-k]).  That variant does not
    respect the brackets; it is kept so the verifier can exhibit where it
    breaks.
    """

    def __init__(self, lam: int, c: ScalarLike, d0: ScalarLike = 0, literal_h_neg: bool = False):
        self.irrep = build_irrep(lam)
        self.lam = self.irrep.lam
        self.c = as_scalar(c)
        self.d0 = as_scalar(d0)
        self.literal_h_neg = literal_h_neg
        self._memo: Dict[Tuple[Generator, int], DiffOp] = {}
        self._dk: Dict[Tuple[int, int], DiffOp] = {}
        self._mono: Dict[Tuple[Generator, Monomial, int], Tuple[Dict[Monomial, Scalar], ...]] = {}

    @property
    def dim(self) -> int:
        return self.irrep.dim

    def floor(self, j: int = 0) -> VcsVector:
        """The constant vector ``1 (x) w_j``."""
        return VcsVector.floor(self.dim, j)

    def operator(self, a: Generator, order: int) -> DiffOp:
        key = (a, order)
        op = self._memo.get(key)
        if op is None:
            op = self._build(a, order)
            self._memo[key] = op
        return op

    def apply(self, a: Generator, v: VcsVector) -> VcsVector:
        out: List[Dict[Monomial, Scalar]] = [dict() for _ in range(self.dim)]
        for j, comp in enumerate(v.comps):
            for m, c in comp.items():
                for i, part in enumerate(self._apply_monomial(a, m, j)):
                    target = out[i]
                    for mm, cc in part.items():
                        t = target.get(mm, 0) + c * cc
                        if t:
                            target[mm] = t
                        else:
                            del target[mm]
        return VcsVector(tuple(Polynomial._raw(d) for d in out))

    def _apply_monomial(self, a: Generator, m: Monomial, j: int):
        key = (a, m, j)
        hit = self._mono.get(key)
        if hit is None:
            op = self.operator(a, degree_of(m))
            res = op.apply(self.irrep, VcsVector.floor(self.dim, j, Polynomial._raw({m: mpq(1)})))
            hit = tuple(p.terms for p in res.comps)
            self._mono[key] = hit
        return hit

    def apply_word(self, gens: Iterable[Generator], v: VcsVector) -> VcsVector:
        """Apply ``xi(g_1) ... xi(g_n)`` (rightmost first)."""
        for g in reversed(list(gens)):
            v = self.apply(g, v)
        return v

    def apply_bracket(self, a: Generator, b: Generator, v: VcsVector) -> VcsVector:
        """Apply xi([a, b]) expanded through the structure constants."""
        out = VcsVector.zero(self.dim)
        for coeff, g in bracket(a, b):
            out = out + self.apply(g, v).scale(coeff)
        return out

    def commutator(self, a: Generator, b: Generator, v: VcsVector) -> VcsVector:
        return self.apply(a, self.apply(b, v)) - self.apply(b, self.apply(a, v))

    # -- construction --------------------------------------------------------

    def _build(self, a: Generator, n: int) -> DiffOp:
        fam, k = a.family, a.mode
        c = self.c
        if fam == "kappa":
            return DiffOp.scalar(n, c)
        if fam == "d":
            op = DiffOp.scalar(n, self.d0)
            for p in range(1, n + 1):
                for family, var in ((X, _x(p)), (Y, _y(p)), (Z, _z(p))):
                    op = op - DiffOp.deriv(n, family, p).lmul(var).scale(p)
            return op
        if k > 0:
            return {"e": self._e_pos, "h": self._h_pos, "f": self._f_pos}[fam](k, n)
        if k == 0:
            return {"e": self._e_zero, "h": self._h_zero, "f": self._f_zero}[fam](n)
        return {"e": self._e_neg, "h": self._h_neg, "f": self._f_neg}[fam](-k, n)

    def _f_pos(self, k: int, n: int) -> DiffOp:
        return DiffOp.deriv(n, Z, k)

    def _h_pos(self, k: int, n: int) -> DiffOp:
        op = DiffOp.deriv(n, Y, k)
        for p in range(1, n - k + 1):
            op = op + DiffOp.deriv(n, Z, k + p).lmul(_z(p)).scale(2)
        return op

    def _e_tail(self, k: int, n: int) -> DiffOp:
        """The part of xi(e[k]), k >= 0, after the leading d/dx_k or pi0(e)."""
        op = DiffOp(n)
        for N in range(1, n - k + 1):
            op = op + DiffOp.deriv(n, X, k + N).lmul(z_poly(N, 2))
        for p in range(1, n - k + 1):
            op = op - DiffOp.deriv(n, Y, k + p).lmul(_z(p))
            for q in range(1, n - k - p + 1):
                op = op - DiffOp.deriv(n, Z, k + p + q).lmul(_z(p) * _z(q))
        return op

    def _e_pos(self, k: int, n: int) -> DiffOp:
        return DiffOp.deriv(n, X, k) + self._e_tail(k, n)

    def _e_zero(self, n: int) -> DiffOp:
        return DiffOp.endo(n, "e") + self._e_tail(0, n)

    def _h_zero(self, n: int) -> DiffOp:
        op = DiffOp.endo(n, "h")
        for p in range(1, n + 1):
            op = op + DiffOp.deriv(n, Z, p).lmul(_z(p)).scale(2)
            op = op - DiffOp.deriv(n, X, p).lmul(_x(p)).scale(2)
        return op

    def _f_zero(self, n: int) -> DiffOp:
        op = DiffOp.endo(n, "f")
        for N in range(1, n + 1):
            op = op - DiffOp.deriv(n, Z, N).lmul(z_poly(N, 2))
        for p in range(1, n + 1):
            op = op + DiffOp.deriv(n, Y, p).lmul(_x(p))
            for q in range(1, n - p + 1):
                op = op + DiffOp.deriv(n, X, p + q).lmul(_x(p) * _x(q))
        return op

    def script_d(self, k: int, n: int) -> DiffOp:
        """The auxiliary operator entering xi(f[-k]), k > 0."""
        key = (k, n)
        hit = self._dk.get(key)
        if hit is not None:
            return hit
        c = self.c
        op = DiffOp.mul(n, _x(k).scale(c * k)) + DiffOp.mul(n, _x(k), "h")
        for N in range(1, n + 1):
            op = op - DiffOp.deriv(n, Z, N).lmul(z_poly(N + k, 2))
        for p in range(1, n + 1):
            op = op + DiffOp.deriv(n, Y, p).lmul(_x(p + k))
            for q in range(1, n - p + 1):
                op = op + DiffOp.deriv(n, X, p + q).lmul(_x(p + k) * _x(q))
        for q in range(1, k + 1):
            # theta(p+q-k) d/dx_{p+q-k}, needs 1 <= p+q-k <= n
            for p in range(max(1, k - q + 1), n + k - q + 1):
                op = op - DiffOp.deriv(n, X, p + q - k).lmul(_x(p) * _x(q))
            p = k - q
            if p >= 1:
                op = op - DiffOp.mul(n, _x(p) * _x(q), "e")
        self._dk[key] = op
        return op

    def _f_neg(self, k: int, n: int) -> DiffOp:
        op = self.operator(Generator("f", 0), n).lmul(z_poly(k, -2))
        for t in range(1, k + 1):
            op = op + self.script_d(t, n).lmul(z_poly(k - t, -2))
        return op

    def _h_neg(self, k: int, n: int) -> DiffOp:
        c = self.c
        op = DiffOp.mul(n, _y(k).scale(2 * c * k)) - DiffOp.mul(n, _x(k).scale(2), "e")
        for p in range(1, n + 1):
            op = op + DiffOp.deriv(n, Z, p).lmul(_z(k + p)).scale(2)
            op = op - DiffOp.deriv(n, X, p).lmul(_x(k + p)).scale(2)
        for p in range(1, k + 1):
            coeff = _z(p) * _x(k) if self.literal_h_neg else _z(p)
            op = op + self.operator(Generator("f", p - k), n).lmul(coeff).scale(2)
        return op

    def _e_neg(self, k: int, n: int) -> DiffOp:
        c = self.c
        op = DiffOp.mul(n, _z(k).scale(c * k)) + DiffOp.mul(n, z_poly(k, 2), "e")
        for N in range(1, n + 1):
            op = op + DiffOp.deriv(n, X, N).lmul(z_poly(N + k, 2))
        # - xi(sigma_{-k} H(Z)) = - sum_p z_p xi(h[p-k]); modes p-k > n vanish
        for p in range(1, n + k + 1):
            op = op - self.operator(Generator("h", p - k), n).lmul(_z(p))
        # + sum_p z_p xi(sigma_{p-k} F(Z)) = sum_{p,q} z_p z_q xi(f[p+q-k])
        for p in range(1, n + k + 1):
            for q in range(1, n + k - p + 1):
                op = op + self.operator(Generator("f", p + q - k), n).lmul(_z(p) * _z(q))
        return op


def realize(a, lam: int, c: ScalarLike, d0: ScalarLike = 0, order: int = 5) -> DiffOp:
    """Convenience wrapper: xi(a) cut at derivative order ``order``."""
    if isinstance(a, str):
        a = parse_generator(a)
    return Realization(lam, c, d0).operator(a, order)
