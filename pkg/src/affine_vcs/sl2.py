"""The finite-dimensional irreducible sl(2) module of highest weight lambda.

The basis is ``w_j = f^j v_+`` for ``j = 0..lambda``.  It is orthogonal but
not orthonormal for the contravariant form; ``gram_diag[j]`` holds the norm
``<w_j, w_j>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from gmpy2 import mpq

from .polynomial import Scalar

Matrix = Tuple[Tuple[Scalar, ...], ...]


def _zeros(n: int) -> List[List[Scalar]]:
    return [[mpq(0)] * n for _ in range(n)]


def _freeze(rows: List[List[Scalar]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return _freeze([[sum((a[i][k] * b[k][j] for k in range(n)), mpq(0))
                     for j in range(n)] for i in range(n)])


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return _freeze([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def matscale(a: Matrix, c) -> Matrix:
    return _freeze([[c * x for x in r] for r in a])


@dataclass(frozen=True)
class Sl2Irrep:
    lam: int
    pi0_e: Matrix = field(repr=False)
    pi0_h: Matrix = field(repr=False)
    pi0_f: Matrix = field(repr=False)
    gram_diag: Tuple[Scalar, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.lam + 1

    def matrix(self, gen: str) -> Matrix:
        return {"e": self.pi0_e, "h": self.pi0_h, "f": self.pi0_f}[gen]

    def identity(self) -> Matrix:
        n = self.dim
        return _freeze([[mpq(int(i == j)) for j in range(n)] for i in range(n)])

    def basis_vector(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(mpq(int(i == j)) for i in range(self.dim))

    def weight(self, j: int) -> int:
        return self.lam - 2 * j


def build_irrep(lam: int) -> Sl2Irrep:
    """Return the (lam+1)-dimensional irreducible module."""
    if int(lam) != lam or lam < 0:
        raise ValueError(f"highest weight must be a nonnegative integer, got {lam!r}")
    lam = int(lam)
    n = lam + 1
    e, h, f = _zeros(n), _zeros(n), _zeros(n)
    for j in range(n):
        h[j][j] = mpq(lam - 2 * j)
        if j < lam:
            f[j + 1][j] = mpq(1)
        if j > 0:
            e[j - 1][j] = mpq(j * (lam - j + 1))
    gram = [mpq(1)]
    for j in range(1, n):
        gram.append(gram[-1] * j * (lam - j + 1))
    return Sl2Irrep(lam, _freeze(e), _freeze(h), _freeze(f), tuple(gram))


def act_pi0(irrep: Sl2Irrep, gen: str, v: Sequence) -> Tuple[Scalar, ...]:
    """Matrix-vector product of pi0(gen) with coordinates ``v``."""
    if len(v) != irrep.dim:
        raise ValueError("vector does not belong to this module")
    m = irrep.matrix(gen)
    return tuple(sum((m[i][j] * v[j] for j in range(irrep.dim)), mpq(0))
                 for i in range(irrep.dim))


def v0_inner(irrep: Sl2Irrep, u: Sequence, v: Sequence) -> Scalar:
    if len(u) != irrep.dim or len(v) != irrep.dim:
        raise ValueError("vectors do not belong to this module")
    return sum((mpq(a) * b * g for a, b, g in zip(u, v, irrep.gram_diag)), mpq(0))
