"""Exact arithmetic helpers and small closed-form constants.

All coefficient arithmetic uses Python integers and
:class:`fractions.Fraction`; nothing on the counting path touches floats.
"""

from fractions import Fraction
from math import comb, prod
from typing import NamedTuple

from .errors import DomainError

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "OrientationConstants",
    "double_factorial",
    "epsilon",
    "lin_prod",
    "orientation_constants",
]


def double_factorial(m: int) -> int:
    """Return ``1*3*5*...*m`` for odd ``m >= 1``."""
    if m < 1 or m % 2 == 0:
        raise DomainError(f"double_factorial needs an odd positive integer, got {m}")
    return prod(range(1, m + 1, 2))


def epsilon(a: int) -> int:
    """+1 if ``a = 1 mod 4``, -1 if ``a = 3 mod 4``; ``a`` must be odd.

    Negative arguments are reduced mod 4 like any other integer.
    """
    if a % 2 == 0:
        raise DomainError(f"epsilon is only defined on odd integers, got {a}")
    return 1 if a % 4 == 1 else -1


def lin_prod(terms) -> int:
    """Product of an iterable of integers (empty product is 1)."""
    return prod(terms, start=1)


class OrientationConstants(NamedTuple):
    N: int
    M: int
    K: int


def _N(m: int) -> int:
    return comb(m + 3, 4) if m >= 0 else 0


def alternating_M(m: int) -> int:
    """``N_m - 3 N_{m-2} + 2 N_{m-3}``, the exponent of O(1) in det E_m."""
    return _N(m) - 3 * _N(m - 2) + 2 * _N(m - 3)


def orientation_constants(m: int) -> OrientationConstants:
    """The determinant-bookkeeping constants ``N_m``, ``M_m``, ``K_m`` for degree ``m >= 3``."""
    if m < 3:
        raise DomainError(f"orientation constants need m >= 3, got {m}")
    M = (3 * m - 1) * m // 2
    if alternating_M(m) != M:  # pragma: no cover - identity is exact
        raise AssertionError(f"M_{m} identity failed")
    return OrientationConstants(N=_N(m), M=M, K=comb(m - 1, 2))
