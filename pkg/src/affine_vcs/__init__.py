"""Exact vector coherent state realization of affine sl(2) highest weight modules."""

from .algebra import D, KAPPA, Generator, bracket, dagger, parse_generator, pbw_less
from .coherent import CoherentStateMap
from .polynomial import Polynomial, partial, poly_add, poly_mul, truncate
from .realization import DiffOp, Realization, VcsVector, realize, z_poly
from .sl2 import Sl2Irrep, act_pi0, build_irrep, v0_inner
from .verma import GeneralizedVermaModule, WeightSpaceKey, WVector, character_table

__all__ = [
    "CoherentStateMap",
    "D",
    "DiffOp",
    "GeneralizedVermaModule",
    "Generator",
    "KAPPA",
    "Polynomial",
    "Realization",
    "Sl2Irrep",
    "VcsVector",
    "WVector",
    "WeightSpaceKey",
    "act_pi0",
    "bracket",
    "build_irrep",
    "character_table",
    "dagger",
    "parse_generator",
    "partial",
    "pbw_less",
    "poly_add",
    "poly_mul",
    "realize",
    "truncate",
    "v0_inner",
    "z_poly",
]

__version__ = "0.1.0"
