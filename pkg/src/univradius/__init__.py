"""Radii of univalence for ``F(z) = z^3 / (f(z) g(z))`` under coefficient bounds on ``f`` and ``g``."""

from .bounds import HALF_N_PLUS_1, N, ONE, TWO_OVER_N, CoeffClass, uF_bound
from .errors import InvalidOrderParam, InvalidRadius, NoSignChange, UnknownCase, ZeroConstantTerm
from .powser import NormalizedSeries, Series
from .radii import RadiusResult, dedicated_radius, radius_from_bound
from .uclass import Verdict, in_class_U, u_functional, u_of_product

__version__ = "0.1.0"

__all__ = [
    "CoeffClass",
    "ONE",
    "N",
    "TWO_OVER_N",
    "HALF_N_PLUS_1",
    "uF_bound",
    "Series",
    "NormalizedSeries",
    "RadiusResult",
    "dedicated_radius",
    "radius_from_bound",
    "Verdict",
    "in_class_U",
    "u_functional",
    "u_of_product",
    "ZeroConstantTerm",
    "InvalidRadius",
    "InvalidOrderParam",
    "NoSignChange",
    "UnknownCase",
]
