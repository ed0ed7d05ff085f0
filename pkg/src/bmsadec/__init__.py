"""Locator decoding of bivariate abelian codes via the two-dimensional
Berlekamp-Massey iteration, with inference of missing syndrome values
and parametrized basis families when inference is provably impossible.
"""

from . import (
    bmsa,
    codes,
    errors,
    family,
    fixtures,
    gf,
    inference,
    lattice,
    locator,
    oracle,
    poly,
    syndrome,
)
from .codes import AbelianCode, DecodeResult, decode, make_code
from .gf import ZERO, FieldSpec, FieldTower, RootPair, build_field
from .lattice import GRADED, LEX
from .syndrome import SyndromeTable

__all__ = [
    "AbelianCode", "DecodeResult", "FieldSpec", "FieldTower", "GRADED",
    "LEX", "RootPair", "SyndromeTable", "ZERO", "bmsa", "build_field",
    "codes", "decode", "errors", "family", "fixtures", "gf", "inference",
    "lattice", "locator", "make_code", "oracle", "poly", "syndrome",
]
