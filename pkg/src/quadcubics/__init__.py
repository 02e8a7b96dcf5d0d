"""Quadratic counts of twisted cubics on complete intersections via N-equivariant localization."""

from .errors import (
    ConsistencyError,
    DomainError,
    NonGenericWeightsError,
    NotOrientableError,
    QuadCubicsError,
    RankMismatchError,
    RefusalError,
    UnsupportedDegreeError,
    VanishingError,
)
from .gw import GWElement, assemble, render
from .localization import CountResult, DegreeProfile, signature, signature_verified
from .orientation import OrientationReport, check, enumerate_orientable
from .weights import WeightVector, default_weights, random_generic_weights

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CountResult",
    "DegreeProfile",
    "DomainError",
    "GWElement",
    "NonGenericWeightsError",
    "NotOrientableError",
    "OrientationReport",
    "QuadCubicsError",
    "RankMismatchError",
    "RefusalError",
    "UnsupportedDegreeError",
    "VanishingError",
    "WeightVector",
    "assemble",
    "check",
    "default_weights",
    "enumerate_orientable",
    "random_generic_weights",
    "render",
    "signature",
    "signature_verified",
]
