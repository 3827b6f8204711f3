"""Generators, structure constants and the anti-involution of affine sl(2).

Basis: ``kappa`` (central), ``e[n], h[n], f[n]`` for integer ``n`` and the
grading element ``d`` with ``[d, a[n]] = n a[n]``.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Tuple

from gmpy2 import mpq

from .polynomial import Scalar

LOOP_FAMILIES = ("e", "h", "f")
FAMILIES = LOOP_FAMILIES + ("kappa", "d")
_FAMILY_RANK = {"e": 0, "h": 1, "f": 2}


class Generator(NamedTuple):
    family: str
    mode: int = 0

    def __str__(self) -> str:
        if self.family in ("kappa", "d"):
            return self.family
        return f"{self.family}[{self.mode}]"


def gen(family: str, mode: int = 0) -> Generator:
    if family not in FAMILIES:
        raise ValueError(f"unknown generator family {family!r}")
    if family in ("kappa", "d") and mode != 0:
        raise ValueError(f"{family} carries mode 0 only")
    return Generator(family, int(mode))


KAPPA = Generator("kappa", 0)
D = Generator("d", 0)

BracketResult = List[Tuple[Scalar, Generator]]

_GEN_RE = re.compile(r"^\s*([ehf])\s*\[\s*([+-]?\d+)\s*\]\s*$")


def parse_generator(text: str) -> Generator:
    s = text.strip()
    if s in ("kappa", "κ", "k"):
        return KAPPA
    if s == "d":
        return D
    m = _GEN_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse generator {text!r}")
    return Generator(m.group(1), int(m.group(2)))


def bracket(a: Generator, b: Generator) -> BracketResult:
    """Lie bracket ``[a, b]`` as a list of ``(coefficient, generator)``."""
    if a.family == "kappa" or b.family == "kappa":
        return []
    if a.family == "d":
        if b.family == "d" or b.mode == 0:
            return []
        return [(mpq(b.mode), b)]
    if b.family == "d":
        return [(c * -1, g) for c, g in bracket(b, a)]
    m, n = a.mode, b.mode
    fa, fb = a.family, b.family
    if fa == fb:
        if fa == "h" and m + n == 0 and m != 0:
            return [(mpq(2 * m), KAPPA)]
        return []
    if fa == "h":
        sign = 2 if fb == "e" else -2
        return [(mpq(sign), Generator(fb, m + n))]
    if fb == "h":
        return [(-c, g) for c, g in bracket(b, a)]
    if fa == "e":  # fb == "f"
        out: BracketResult = [(mpq(1), Generator("h", m + n))]
        if m + n == 0 and m != 0:
            out.append((mpq(m), KAPPA))
        return out
    return [(-c, g) for c, g in bracket(b, a)]


def dagger(a: Generator) -> Generator:
    if a.family == "d":
        raise ValueError("the anti-involution is not defined on d")
    if a.family == "kappa":
        return a
    return Generator({"e": "f", "f": "e", "h": "h"}[a.family], -a.mode)


def pbw_key(a: Generator) -> Tuple[int, int]:
    return (a.mode, _FAMILY_RANK[a.family])


def pbw_less(a: Generator, b: Generator) -> bool:
    """Strict order on negative-mode generators: mode, then e < h < f."""
    for g in (a, b):
        if g.family not in _FAMILY_RANK or g.mode >= 0:
            raise ValueError(f"{g} is not a negative-mode loop generator")
    return pbw_key(a) < pbw_key(b)


def loop_generators(min_mode: int, max_mode: int) -> List[Generator]:
    return [Generator(f, n) for n in range(min_mode, max_mode + 1) for f in LOOP_FAMILIES]


def weight_of(a: Generator) -> int:
    """h[0]-eigenvalue of ad(a)."""
    return {"e": 2, "h": 0, "f": -2}.get(a.family, 0)
