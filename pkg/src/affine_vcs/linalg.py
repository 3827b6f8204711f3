"""Exact linear algebra over Q: fraction-free rank, nullspaces, PSD checks."""

from __future__ import annotations

from math import lcm
from typing import Dict, Hashable, List, Mapping, Sequence, Tuple

from gmpy2 import mpq

from .polynomial import Scalar


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for r in rows:
        r = [mpq(x) for x in r]
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; every intermediate division is exact.
    """
    a = _integer_rows(rows)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            ar = a[r]
            q = ar[col]
            pr = a[rank]
            for k in range(col + 1, ncols):
                ar[k] = (p * ar[k] - q * pr[k]) // prev
            ar[col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_determinant(rows: Sequence[Sequence]) -> Scalar:
    n = len(rows)
    if n == 0:
        return mpq(1)
    dens = []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, mpq(x).denominator)
        dens.append(d)
    a = _integer_rows(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k]), None)
            if piv is None:
                return mpq(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    total_den = 1
    for d in dens:
        total_den *= d
    return mpq(sign * a[n - 1][n - 1], total_den)


def rref(rows: Sequence[Sequence]) -> Tuple[List[List[Scalar]], List[int]]:
    a = [[mpq(x) for x in r] for r in rows]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(rows: Sequence[Sequence], ncols: int = None) -> List[List[Scalar]]:
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[mpq(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [mpq(0)] * ncols
        v[fc] = mpq(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def psd_pivots(matrix: Sequence[Sequence]) -> Tuple[bool, List[Scalar]]:
    """Symmetric elimination certificate for positive semidefiniteness.

    Diagonal pivots are eliminated one at a time.  A zero diagonal entry
    whose row is not identically zero, or any negative pivot, proves the
    matrix indefinite.  Zero rows (the kernel) are dropped.  Returns
    ``(is_psd, pivots)``.
    """
    a = [[mpq(x) for x in r] for r in matrix]
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    pivots: List[Scalar] = []
    while active:
        active = [i for i in active if any(a[i][j] for j in active)]
        if not active:
            break
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            return False, pivots
        p = a[k][k]
        pivots.append(p)
        if p < 0:
            return False, pivots
        active.remove(k)
        for i in active:
            if a[i][k]:
                f = a[i][k] / p
                for j in active:
                    a[i][j] -= f * a[k][j]
    return True, pivots


def sparse_rank(vectors: Sequence[Mapping[Hashable, Scalar]]) -> int:
    """Rank of a family of sparse coordinate vectors."""
    keys: Dict[Hashable, int] = {}
    for v in vectors:
        for k in v:
            keys.setdefault(k, len(keys))
    if not keys:
        return 0
    rows = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.items():
            row[keys[k]] = c
        rows.append(row)
    # fewer rows than columns is the common case; eliminate on the transpose
    if len(rows) < len(keys):
        rows = [list(col) for col in zip(*rows)]
    return bareiss_rank(rows)


def independent_subset(vectors: Sequence[Mapping[Hashable, Scalar]]) -> List[int]:
    """Indices of a maximal linearly independent subfamily, greedily in order."""
    keys: Dict[Hashable, int] = {}
    for v in vectors:
        for k in v:
            keys.setdefault(k, len(keys))
    basis: List[Tuple[int, List[Scalar]]] = []  # (pivot column, reduced row)
    chosen = []
    for idx, v in enumerate(vectors):
        row = [mpq(0)] * len(keys)
        for k, c in v.items():
            row[keys[k]] = mpq(c)
        for pc, b in basis:
            if row[pc]:
                f = row[pc] / b[pc]
                row = [x - f * y for x, y in zip(row, b)]
        pc = next((i for i, x in enumerate(row) if x), None)
        if pc is not None:
            basis.append((pc, row))
            chosen.append(idx)
    return chosen
