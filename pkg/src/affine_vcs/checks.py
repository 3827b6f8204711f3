"""Verification suites shared by the ``verify`` command and the test-suite.

Each suite returns a :class:`CheckResult`; failures carry a printable
counterexample instead of raising.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .algebra import D, KAPPA, Generator, bracket, dagger, loop_generators, weight_of
from .coherent import CoherentStateMap
from .linalg import psd_pivots
from .polynomial import Polynomial, ScalarLike, as_scalar, monomials_up_to, render_monomial
from .realization import Realization, VcsVector
from .verma import GeneralizedVermaModule, WVector, render_word


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": list(self.failures)}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"


def monomial_basis(dim: int, max_degree: int) -> List[Tuple[str, VcsVector]]:
    """Every ``monomial (x) w_j`` of degree <= max_degree, with a label."""
    out = []
    for m in monomials_up_to(max_degree):
        for j in range(dim):
            label = f"{render_monomial(m) or '1'} ⊗ w_{j}"
            out.append((label, VcsVector.floor(dim, j, Polynomial.monomial(m))))
    return out


def generator_pairs(max_mode: int, with_kappa: bool = True) -> List[Tuple[Generator, Generator]]:
    gens = loop_generators(-max_mode, max_mode) + ([KAPPA] if with_kappa else [])
    return [(a, b) for i, a in enumerate(gens) for b in gens[i:]]


def _homomorphism_chunk(args) -> Tuple[int, List[str]]:
    lam, c, d0, literal, max_degree, pairs = args
    R = Realization(lam, c, d0, literal_h_neg=literal)
    basis = monomial_basis(R.dim, max_degree)
    checked, failures = 0, []
    for a, b in pairs:
        for label, v in basis:
            checked += 1
            lhs = R.commutator(a, b, v)
            rhs = R.apply_bracket(a, b, v)
            if lhs != rhs:
                failures.append(f"[xi({a}), xi({b})] != xi([{a}, {b}]) on {label}: "
                                f"commutator {lhs}, expected {rhs}")
                break
    return checked, failures


def homomorphism_suite(lam: int, c: ScalarLike, max_degree: int = 5, max_mode: int = 3,
                       d0: ScalarLike = 0, literal_h_neg: bool = False, jobs: int = 1,
                       pairs: Optional[Sequence[Tuple[Generator, Generator]]] = None) -> CheckResult:
    """``[xi(a), xi(b)] = xi([a, b])`` on every monomial basis vector of degree <= max_degree.

    Only the first counterexample per pair is recorded.
    """
    pairs = list(pairs) if pairs is not None else generator_pairs(max_mode)
    c = str(as_scalar(c))
    d0 = str(as_scalar(d0))
    result = CheckResult("homomorphism")
    chunks = [pairs[i::max(jobs, 1)] for i in range(max(jobs, 1))]
    tasks = [(lam, c, d0, literal_h_neg, max_degree, ch) for ch in chunks if ch]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_homomorphism_chunk, tasks))
    else:
        parts = [_homomorphism_chunk(t) for t in tasks]
    for checked, failures in parts:
        result.checked += checked
        result.failures.extend(failures)
    return result


def grading_suite(lam: int, c: ScalarLike, d0: ScalarLike, max_degree: int = 5,
                  max_mode: int = 3) -> CheckResult:
    """``[xi(d), xi(a[n])] = n xi(a[n])`` on degree <= max_degree."""
    R = Realization(lam, c, d0)
    result = CheckResult(f"grading(d0={as_scalar(d0)})")
    basis = monomial_basis(R.dim, max_degree)
    for a in loop_generators(-max_mode, max_mode):
        for label, v in basis:
            result.checked += 1
            lhs = R.commutator(D, a, v)
            rhs = R.apply(a, v).scale(a.mode)
            if lhs != rhs:
                result.failures.append(f"[xi(d), xi({a})] != {a.mode} xi({a}) on {label}")
                break
    return result


def degree_suite(lam: int, c: ScalarLike, max_degree: int = 5, max_mode: int = 3) -> CheckResult:
    """xi(a[n]) maps degree m to degree m - n."""
    R = Realization(lam, c)
    result = CheckResult("degree homogeneity")
    for a in loop_generators(-max_mode, max_mode) + [KAPPA, D]:
        for label, v in monomial_basis(R.dim, max_degree):
            result.checked += 1
            out = R.apply(a, v)
            expected = v.degree() - a.mode
            if out and out.degrees() != {expected}:
                result.failures.append(f"xi({a}) on {label} has degrees {sorted(out.degrees())}")
    return result


def random_wvector(module: GeneralizedVermaModule, rng: random.Random, max_depth: int) -> WVector:
    depth = rng.randint(0, max_depth)
    keys = [k for k in module.weight_keys(depth) if k.depth == depth]
    basis = module.weight_basis(rng.choice(keys))
    picked = rng.sample(basis, min(len(basis), rng.randint(1, 3)))
    terms = {}
    for b in picked:
        coeff = mpq(rng.randint(-4, 4), rng.randint(1, 3))
        terms[b] = coeff or mpq(1)
    return WVector(terms)


def intertwining_suite(lam: int, c: ScalarLike, samples: int = 200, max_depth: int = 3,
                       max_mode: int = 3, seed: int = 0,
                       cmap: Optional[CoherentStateMap] = None) -> CheckResult:
    """``xi(u) xi_w = xi_{u w}`` for random ``(u, w)``."""
    cmap = cmap or CoherentStateMap(lam, c)
    rng = random.Random(seed)
    gens = loop_generators(-max_mode, max_mode) + [KAPPA]
    result = CheckResult("intertwining")
    for _ in range(samples):
        u = rng.choice(gens)
        w = random_wvector(cmap.module, rng, max_depth)
        result.checked += 1
        if not cmap.intertwine_check(u, w):
            result.failures.append(f"xi({u}) xi_w != xi_(u w) for w = {w}")
    return result


def kernel_suite(lam: int, c: ScalarLike, max_depth: int = 4,
                 cmap: Optional[CoherentStateMap] = None) -> CheckResult:
    """Gram rank equals the rank of the coherent-state images, per weight space."""
    cmap = cmap or CoherentStateMap(lam, c)
    result = CheckResult("kernel = radical of form")
    for key, (dim, rank, image) in cmap.kernel_table(max_depth).items():
        result.checked += 1
        if rank != image:
            result.failures.append(
                f"weight {key.weight}, depth {key.depth}: dim W {dim}, gram rank {rank}, image rank {image}")
    return result


def contravariance_suite(lam: int, c: ScalarLike, max_depth: int = 3, max_mode: int = 2,
                         module: Optional[GeneralizedVermaModule] = None) -> CheckResult:
    """``<a w1 | w2> = <w1 | a^+ w2>`` on basis vectors of depth <= max_depth."""
    M = module or GeneralizedVermaModule(lam, c)
    result = CheckResult("contravariance")
    basis = [b for k in M.weight_keys(max_depth) for b in M.weight_basis(k)]
    for a in loop_generators(-max_mode, max_mode):
        ad = dagger(a)
        for word, j in basis:
            w1 = WVector.basis(word, j)
            aw1 = M.act(a, w1)
            # only w2 in the weight space of a w1 can pair nontrivially
            key = M.key_of(word, j)
            target = (key.weight + weight_of(a), key.depth - a.mode)
            for word2, j2 in basis:
                if M.key_of(word2, j2) != target:
                    continue
                w2 = WVector.basis(word2, j2)
                result.checked += 1
                if M.contravariant_form(aw1, w2) != M.contravariant_form(w1, M.act(ad, w2)):
                    result.failures.append(
                        f"<{a} {render_word(word)} w_{j} | {render_word(word2)} w_{j2}> mismatch")
    return result


def module_axiom_suite(lam: int, c: ScalarLike, max_depth: int = 3, max_mode: int = 2,
                       module: Optional[GeneralizedVermaModule] = None) -> CheckResult:
    """``a(b w) - b(a w) = [a, b] w`` on W."""
    M = module or GeneralizedVermaModule(lam, c)
    result = CheckResult("module axiom on W")
    basis = [b for k in M.weight_keys(max_depth) for b in M.weight_basis(k)]
    gens = loop_generators(-max_mode, max_mode)
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            for word, j in basis:
                w = WVector.basis(word, j)
                result.checked += 1
                lhs = M.act(a, M.act(b, w)) - M.act(b, M.act(a, w))
                rhs = WVector()
                for coeff, g in bracket(a, b):
                    rhs = rhs + (w.scale(coeff * M.c) if g == KAPPA else M.act(g, w).scale(coeff))
                if lhs != rhs:
                    result.failures.append(f"[{a}, {b}] on {render_word(word)} w_{j}")
    return result


def unitarity_suite(lam: int, c: ScalarLike, max_depth: int = 3,
                    module: Optional[GeneralizedVermaModule] = None) -> CheckResult:
    """Every Gram block is positive semidefinite (nonnegative elimination pivots)."""
    M = module or GeneralizedVermaModule(lam, c)
    result = CheckResult("positive semidefinite Gram blocks")
    for key in M.weight_keys(max_depth):
        result.checked += 1
        ok, pivots = psd_pivots(M.gram_matrix(key))
        if not ok:
            result.failures.append(f"weight {key.weight}, depth {key.depth}: pivots {[str(p) for p in pivots]}")
    return result


def local_finiteness_suite(lam: int, c: ScalarLike, max_depth: int = 3, max_mode: int = 3,
                           module: Optional[GeneralizedVermaModule] = None) -> CheckResult:
    """Positive modes applied depth+1 times annihilate a basis vector."""
    M = module or GeneralizedVermaModule(lam, c)
    result = CheckResult("local finiteness of u_+")
    for key in M.weight_keys(max_depth):
        for word, j in M.weight_basis(key):
            for u in loop_generators(1, max_mode):
                w = WVector.basis(word, j)
                for _ in range(key.depth + 1):
                    w = M.act(u, w)
                result.checked += 1
                if w:
                    result.failures.append(f"{u}^{key.depth + 1} {render_word(word)} w_{j} = {w}")
    return result


def e_minus_one_powers(lam: int, c: ScalarLike, n_max: int) -> List[bool]:
    """``[xi(e[-1])^n (1 (x) v_+) == 0 for n = 1..n_max]``."""
    R = Realization(lam, c)
    v = R.floor(0)
    out = []
    for _ in range(n_max):
        v = R.apply(Generator("e", -1), v)
        out.append(v.is_zero())
    return out
