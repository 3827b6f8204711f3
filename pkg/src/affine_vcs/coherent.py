"""The coherent-state map ``W -> P(X, Y, Z) (x) V0`` and its image.

For ``w`` in ``W`` the image is ``sum_j <w_j | g w> / <w_j | w_j> (x) w_j``
with ``g = exp(E(X)) exp(H(Y)) exp(F(Z))``.  Since the ``w_j`` are orthogonal,
the ``j``-th component is simply the coefficient of ``w_j`` in the depth-0
part of ``g w``.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from gmpy2 import mpq

from .algebra import Generator
from .linalg import independent_subset, sparse_rank
from .polynomial import ZERO, Polynomial, ScalarLike, X, Y, Z
from .realization import Realization, VcsVector
from .verma import BasisKey, GeneralizedVermaModule, WeightSpaceKey, WVector, word_depth

PolyVector = Dict[BasisKey, Polynomial]

_EXPONENT_ORDER = (("f", Z), ("h", Y), ("e", X))


class CoherentStateMap:
    """Pairs a generalized Verma module with the operator realization.

    Both sides share ``(lam, c)``; ``d0`` only affects the realized grading
    operator.
    """

    def __init__(self, lam: int, c: ScalarLike, d0: ScalarLike = 0,
                 module: Optional[GeneralizedVermaModule] = None,
                 realization: Optional[Realization] = None):
        self.module = module or GeneralizedVermaModule(lam, c)
        self.realization = realization or Realization(lam, c, d0)
        if (self.module.lam, self.module.c) != (self.realization.lam, self.realization.c):
            raise ValueError("module and realization disagree on (lam, c)")
        self.lam = self.module.lam
        self.c = self.module.c

    @property
    def dim(self) -> int:
        return self.module.irrep.dim

    def _exp_series(self, family: str, var_family: int, v: PolyVector, budget: int) -> PolyVector:
        """``exp(sum_k a[k] t_k) v`` truncated at ``budget`` factors."""
        total = dict(v)
        term = v
        for n in range(1, budget + 1):
            nxt: PolyVector = {}
            for (word, j), coeff in term.items():
                depth = word_depth(word)
                for k in range(1, depth + 1):
                    image = self.module._act_basis(Generator(family, k), word, j)
                    if not image:
                        continue
                    tk = Polynomial.variable(var_family, k) * coeff
                    for key, c in image.items():
                        nxt[key] = nxt.get(key, ZERO) + tk.scale(c)
            term = {k: p.scale(mpq(1, n)) for k, p in nxt.items() if p}
            if not term:
                break
            for key, p in term.items():
                s = total.get(key, ZERO) + p
                if s:
                    total[key] = s
                else:
                    total.pop(key, None)
        return total

    def coherent_state_map(self, w: WVector, max_depth: Optional[int] = None) -> VcsVector:
        budget = w.depth()
        if max_depth is not None and budget > max_depth:
            raise ValueError(f"vector depth {budget} exceeds the configured bound {max_depth}")
        v: PolyVector = {k: Polynomial.constant(c) for k, c in w.terms.items()}
        # rightmost factor of g acts first
        for family, var_family in _EXPONENT_ORDER:
            v = self._exp_series(family, var_family, v, budget)
        comps = [v.get(((), j), ZERO) for j in range(self.dim)]
        return VcsVector(comps)

    def intertwine_check(self, u: Generator, w: WVector) -> bool:
        lhs = self.realization.apply(u, self.coherent_state_map(w))
        rhs = self.coherent_state_map(self.module.act(u, w))
        return lhs == rhs

    def kernel_check(self, w: WVector) -> bool:
        """True iff ``w`` maps to zero, i.e. lies in the maximal submodule."""
        return self.coherent_state_map(w).is_zero()

    def image_span_rank(self, key: WeightSpaceKey) -> int:
        images = [self.coherent_state_map(WVector.basis(word, j)).coordinates()
                  for word, j in self.module.weight_basis(key)]
        return sparse_rank(images)

    def image_basis(self, key: WeightSpaceKey) -> List[VcsVector]:
        """Basis of the image space at ``key`` built from the realized operators.

        Each PBW word ``y_1 ... y_k (x) w_j`` of the right weight and depth
        is turned into ``xi(y_1) ... xi(y_k) (1 (x) w_j)``, then reduced to
        an independent family.
        """
        spanning = []
        for word, j in self.module.weight_basis(key):
            spanning.append(self.realization.apply_word(word, self.realization.floor(j)))
        keep = independent_subset([v.coordinates() for v in spanning])
        return [spanning[i] for i in keep]

    def kernel_table(self, max_depth: int) -> Dict[WeightSpaceKey, Tuple[int, int, int]]:
        """``key -> (dim W, gram rank, image rank)`` for every key up to ``max_depth``."""
        out = {}
        for key in self.module.weight_keys(max_depth):
            out[key] = (len(self.module.weight_basis(key)),
                        self.module.gram_rank(key),
                        self.image_span_rank(key))
        return out


def coherent_state_map(w: WVector, lam: int, c: ScalarLike) -> VcsVector:
    return CoherentStateMap(lam, c).coherent_state_map(w)
