"""The generalized Verma module ``W = U(g) (x)_{U(p)} V0`` and its contravariant form.

As a vector space ``W`` is ``U(u_-) (x) V0``.  Basis vectors are pairs
``(word, j)`` where ``word`` is a tuple of negative-mode generators sorted
so that each factor is >= the next in :func:`~affine_vcs.algebra.pbw_key`
order, and ``j`` indexes ``w_j = f[0]^j v_+``.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple

from gmpy2 import mpq

from .algebra import (
    Generator,
    LOOP_FAMILIES,
    bracket,
    dagger,
    pbw_key,
    weight_of,
)
from .linalg import bareiss_rank, nullspace, psd_pivots
from .polynomial import Scalar, ScalarLike, as_scalar
from .sl2 import Sl2Irrep, build_irrep

Word = Tuple[Generator, ...]
BasisKey = Tuple[Word, int]


class WeightSpaceKey(NamedTuple):
    weight: int
    depth: int


def word_depth(word: Word) -> int:
    return -sum(g.mode for g in word)


def render_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for g, n in _runs(word):
        parts.append(f"{g}^{n}" if n > 1 else str(g))
    return " ".join(parts)


def _runs(word: Word):
    out: List[list] = []
    for g in word:
        if out and out[-1][0] == g:
            out[-1][1] += 1
        else:
            out.append([g, 1])
    return out


class WVector:
    """Sparse element of ``W``: ``{(word, j): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[BasisKey, Scalar] = None):
        self.terms = {k: mpq(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def _from_clean(cls, terms: Dict[BasisKey, Scalar]) -> "WVector":
        v = cls.__new__(cls)
        v.terms = terms
        return v

    @classmethod
    def basis(cls, word: Word, j: int) -> "WVector":
        return cls({(tuple(word), j): mpq(1)})

    def __add__(self, other: "WVector") -> "WVector":
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return WVector(out)

    def __sub__(self, other: "WVector") -> "WVector":
        return self + other.scale(-1)

    def scale(self, c) -> "WVector":
        return WVector({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c) -> "WVector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, WVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[BasisKey, Scalar]]:
        return iter(self.terms.items())

    def depth(self) -> int:
        return max((word_depth(w) for w, _ in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (word, j), c in sorted(self.terms.items(), key=lambda kv: (word_depth(kv[0][0]), kv[0][1], [pbw_key(g) for g in kv[0][0]])):
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            pieces.append(f"{coeff}{render_word(word)} ⊗ w_{j}")
        return " + ".join(pieces).replace("+ -", "- ")

    __repr__ = __str__


def _accumulate(out: Dict, terms: Dict, c: Scalar = 1) -> None:
    for k, v in terms.items():
        s = out.get(k, 0) + c * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)


def negative_words(depth: int) -> List[Word]:
    """All PBW words of exactly the given depth."""
    gens_by_depth = {k: [Generator(f, -k) for f in LOOP_FAMILIES] for k in range(1, depth + 1)}
    # canonical factor order: descending pbw_key
    ordered = sorted((g for gs in gens_by_depth.values() for g in gs), key=pbw_key, reverse=True)
    out: List[Word] = []

    def rec(start: int, remaining: int, acc: List[Generator]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(ordered)):
            g = ordered[i]
            if -g.mode <= remaining:
                acc.append(g)
                rec(i, remaining + g.mode, acc)
                acc.pop()

    rec(0, depth, [])
    return out


class GeneralizedVermaModule:
    """``W`` induced from the (lam+1)-dimensional module with central charge c.

    The left action is computed by moving each generator rightward through a
    PBW word with the affine brackets until it reaches ``V0``, memoized on
    ``(generator, word, j)``.
    """

    def __init__(self, lam: int, c: ScalarLike):
        self.irrep: Sl2Irrep = build_irrep(lam)
        self.lam = self.irrep.lam
        self.c = as_scalar(c)
        self._memo: Dict[Tuple[Generator, Word, int], Dict[BasisKey, Scalar]] = {}

    # -- structure ---------------------------------------------------------

    def basis_weight(self, word: Word, j: int) -> int:
        return self.lam - 2 * j + sum(weight_of(g) for g in word)

    def key_of(self, word: Word, j: int) -> WeightSpaceKey:
        return WeightSpaceKey(self.basis_weight(word, j), word_depth(word))

    def highest_weight_vector(self) -> WVector:
        return WVector.basis((), 0)

    def weight_basis(self, key: WeightSpaceKey) -> List[BasisKey]:
        weight, depth = key
        if depth < 0:
            return []
        out = []
        for word in negative_words(depth):
            for j in range(self.irrep.dim):
                if self.basis_weight(word, j) == weight:
                    out.append((word, j))
        return out

    def weight_keys(self, max_depth: int) -> List[WeightSpaceKey]:
        keys = set()
        for depth in range(max_depth + 1):
            for word in negative_words(depth):
                for j in range(self.irrep.dim):
                    keys.add(self.key_of(word, j))
        return sorted(keys, key=lambda k: (k.depth, -k.weight))

    # -- action ------------------------------------------------------------

    def act(self, a: Generator, w: WVector) -> WVector:
        if a.family == "d":
            raise ValueError("d is not acted on W directly; depth plays its role")
        out: Dict[BasisKey, Scalar] = {}
        for (word, j), coeff in w.terms.items():
            _accumulate(out, self._act_basis(a, word, j), coeff)
        return WVector._from_clean(out)

    def act_word(self, gens: Iterable[Generator], w: WVector) -> WVector:
        """Apply ``g_1 g_2 ... g_n`` (rightmost first)."""
        for g in reversed(list(gens)):
            w = self.act(g, w)
        return w

    def _act_terms(self, a: Generator, terms: Dict[BasisKey, Scalar]) -> Dict[BasisKey, Scalar]:
        out: Dict[BasisKey, Scalar] = {}
        for (word, j), coeff in terms.items():
            _accumulate(out, self._act_basis(a, word, j), coeff)
        return out

    def _act_bracket(self, a: Generator, b: Generator, word: Word, j: int) -> Dict[BasisKey, Scalar]:
        """``[a, b] . (word (x) w_j)``."""
        out: Dict[BasisKey, Scalar] = {}
        for coeff, g in bracket(a, b):
            if g.family == "kappa":
                _accumulate(out, {(word, j): mpq(1)}, coeff * self.c)
            else:
                _accumulate(out, self._act_basis(g, word, j), coeff)
        return out

    def _act_basis(self, a: Generator, word: Word, j: int) -> Dict[BasisKey, Scalar]:
        key = (a, word, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if a.family == "kappa":
            res = {(word, j): self.c} if self.c else {}
        elif a.mode < 0 and (not word or pbw_key(a) >= pbw_key(word[0])):
            res = {((a,) + word, j): mpq(1)}
        elif not word:
            res = self._act_floor(a, j)
        else:
            # a y rest = y (a rest) + [a, y] rest
            y, rest = word[0], word[1:]
            res = self._act_terms(y, self._act_basis(a, rest, j))
            _accumulate(res, self._act_bracket(a, y, rest, j))
        self._memo[key] = res
        return res

    def _act_floor(self, a: Generator, j: int) -> Dict[BasisKey, Scalar]:
        if a.mode > 0:
            return {}
        # zero mode on V0
        mat = self.irrep.matrix(a.family)
        return {((), i): mat[i][j] for i in range(self.irrep.dim) if mat[i][j]}

    # -- contravariant form ---------------------------------------------------

    def _pair_basis(self, word: Word, j: int, w: Dict[BasisKey, Scalar]) -> Scalar:
        # <y1 y2 ... v_j | w> = <v_j | ... y2^+ y1^+ w>
        cur = w
        for y in word:
            cur = self._act_terms(dagger(y), cur)
            if not cur:
                return mpq(0)
        return cur.get(((), j), mpq(0)) * self.irrep.gram_diag[j]

    def contravariant_form(self, w1: WVector, w2: WVector) -> Scalar:
        total = mpq(0)
        for (word, j), c1 in w1.terms.items():
            if c1:
                total += c1 * self._pair_basis(word, j, w2.terms)
        return total

    def gram_matrix(self, key: WeightSpaceKey) -> List[List[Scalar]]:
        basis = self.weight_basis(key)
        return [[self._pair_basis(w1, j1, {(w2, j2): mpq(1)}) for (w2, j2) in basis]
                for (w1, j1) in basis]

    def gram_rank(self, key: WeightSpaceKey) -> int:
        return bareiss_rank(self.gram_matrix(key))

    def singular_vectors(self, key: WeightSpaceKey) -> List[WVector]:
        basis = self.weight_basis(key)
        if not basis:
            return []
        kernel = nullspace(self.gram_matrix(key), len(basis))
        return [WVector({b: c for b, c in zip(basis, v) if c}) for v in kernel]

    def is_positive_semidefinite(self, key: WeightSpaceKey) -> bool:
        ok, _ = psd_pivots(self.gram_matrix(key))
        return ok

    def character_table(self, max_depth: int) -> Dict[WeightSpaceKey, Tuple[int, int]]:
        table = {}
        for key in self.weight_keys(max_depth):
            basis = self.weight_basis(key)
            table[key] = (len(basis), self.gram_rank(key))
        return table


def character_table(lam: int, c: ScalarLike, max_depth: int):
    return GeneralizedVermaModule(lam, c).character_table(max_depth)
