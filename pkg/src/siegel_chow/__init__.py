"""Exact Chow-ring computations for the Siegel flag variety of GSp_2g."""

from .bundles import chern_class, hodge_bundle, normal_bundle, tangent_bundle, whitney_check
from .chowring import (
    ChowClass,
    FlagPresentation,
    build_presentation,
    kernel_generator_check,
    levi_space,
    pullback_iota,
    siegel_space,
    verify_symmetric_identity,
)
from .intersection import integrate, point_class, pushforward_unit, self_intersection_check, verify_theorem
from .polycore import Poly, elementary_symmetric, parse

__version__ = "0.1.0"
