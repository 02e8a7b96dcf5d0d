"""Fixed-point local data on a fixed 3-plane.

The six N-fixed twisted cubics in the plane with coordinate weights
``(a1, -a1, a2, -a2)`` are indexed 1..6::

    y1 = (x0x2, x0x1, x1x3)    y2 = (x0x2, x2x3, x1x3)
    y3 = (x0x3, x0x1, x1x2)    y4 = (x0x3, x2x3, x1x2)
    y5 = (x0^2, x0x1, x1^2)    y6 = (x2^2, x2x3, x3^2)

Two conventions live here.  The counting path uses the sign-cancelled
closed forms (:func:`bundle_local_class`, :func:`tangent_h3_class`,
:func:`grassmann_class`), in which every weight-dependent sign has already
cancelled between numerator and denominator.  The verification path keeps
the signs (:func:`bundle_local_class_signed`, :func:`grassmann_class_signed`)
and rebuilds everything from representation lists
(:func:`bundle_basis_reps`, :func:`tangent_reps`, :func:`grassmann_reps`).

All e-powers are implicit (``e = 1``); values are plain integers.
"""

from dataclasses import dataclass
from typing import List, Tuple

from .arith import double_factorial, epsilon, lin_prod
from .errors import DomainError, NonGenericWeightsError
from .reps import IrredRep

FIXED_POINTS = (1, 2, 3, 4, 5, 6)

FIXED_CURVE_IDEALS = {
    1: ("x0*x2", "x0*x1", "x1*x3"),
    2: ("x0*x2", "x2*x3", "x1*x3"),
    3: ("x0*x3", "x0*x1", "x1*x2"),
    4: ("x0*x3", "x2*x3", "x1*x2"),
    5: ("x0^2", "x0*x1", "x1^2"),
    6: ("x2^2", "x2*x3", "x3^2"),
}

# (extra sign, number of basis swaps) for the tangent space at each fixed point
TANGENT_SWAPS = {1: 1, 2: 1, 3: 2, 4: 2, 5: 0, 6: 3}


def _check_y(y):
    if y not in FIXED_POINTS:
        raise DomainError(f"fixed point index must be in 1..6, got {y}")


def _check_m(m):
    if m < 3 or m % 2 == 0:
        raise DomainError(f"degree must be odd and >= 3, got {m}")


# -- bundle ----------------------------------------------------------------


def bundle_local_class(m: int, y: int, a1: int, a2: int) -> int:
    """Euler class of E_m at ``y`` in the sign-cancelled counting convention."""
    _check_m(m)
    _check_y(y)
    df = double_factorial(m)
    h = (m + 1) // 2
    k = (m - 1) // 2
    if y == 1:
        return df * a2 ** h * lin_prod((m - i) * a1 - i * a2 for i in range(m))
    if y == 2:
        return df * a1 ** h * m * a2 * lin_prod((m - i) * a1 - i * a2 for i in range(1, m))
    if y == 3:
        return df * a2 ** h * lin_prod((m - i) * a1 + i * a2 for i in range(m))
    if y == 4:
        return df * a1 ** h * m * a2 * lin_prod((m - i) * a1 + i * a2 for i in range(1, m))
    if y == 5:
        return df * a2 ** h * lin_prod(a1 + 2 * i * a2 for i in range(-k, k + 1))
    return df * a1 ** h * lin_prod(a2 + 2 * i * a1 for i in range(-k, k + 1))


def sigma(m: int, y: int, a1: int, a2: int) -> int:
    """Sign of the bundle Euler class at ``y`` for odd weights."""
    _check_m(m)
    _check_y(y)
    if m % 4 == 1:
        return epsilon(a1 * a2)
    if y in (2, 4, 5):
        return -epsilon(a1)
    return -epsilon(a2)


def bundle_local_class_unsigned_prop(m: int, y: int, a1: int, a2: int) -> int:
    """The bracketed product of the signed formulas, before the sign is applied.

    Agrees with :func:`bundle_local_class` except at ``y6``, where the two
    differ by ``(-1)**((m-1)/2)``.
    """
    _check_m(m)
    _check_y(y)
    if y != 6:
        return bundle_local_class(m, y, a1, a2)
    return (
        lin_prod((m - 1 - 2 * i) ** 2 * a1 ** 2 - a2 ** 2 for i in range((m - 1) // 2))
        * a2
        * double_factorial(m)
        * a1 ** ((m + 1) // 2)
    )


def bundle_local_class_signed(m: int, y: int, a1: int, a2: int) -> int:
    if a1 % 2 == 0 or a2 % 2 == 0:
        raise DomainError("the signed forms need odd weights")
    return sigma(m, y, a1, a2) * bundle_local_class_unsigned_prop(m, y, a1, a2)


# -- tangent space of H_3 --------------------------------------------------


def tangent_h3_class(y: int, a1: int, a2: int) -> int:
    """Euler class of T_{H_3} at ``y`` including the orientation correction."""
    _check_y(y)
    p, q = a1 + a2, a1 - a2
    if y == 1:
        v = -4 * a1 * a2 * p * q ** 2 * (a1 + 3 * a2)
    elif y == 2:
        v = -4 * a1 * a2 * p * q ** 2 * (3 * a1 + a2)
    elif y == 3:
        v = 4 * a1 * a2 * p ** 2 * q * (a1 - 3 * a2)
    elif y == 4:
        v = 4 * a1 * a2 * p ** 2 * q * (3 * a1 - a2)
    elif y == 5:
        v = p ** 2 * q ** 2 * (3 * a1 + a2) * (3 * a1 - a2)
    else:
        v = -(p ** 2) * q ** 2 * (a1 + 3 * a2) * (a1 - 3 * a2)
    if v == 0:
        raise NonGenericWeightsError(
            f"tangent Euler class at y{y} vanishes for (a1, a2) = ({a1}, {a2})"
        )
    return v


# -- Grassmannian ----------------------------------------------------------


def _plane_weights(n, w, p):
    i, j = p
    s = (n + 1) // 2
    if len(w) != s:
        raise DomainError(f"n={n} needs {s} weights, got {len(w)}")
    if not 1 <= i < j <= s:
        raise DomainError(f"invalid plane pair {p} for s={s}")
    a1, a2 = w.pair(i, j)
    return a1, a2, w.complement(i, j)


def grassmann_class_at(n: int, a1: int, a2: int, rest) -> int:
    """Same as :func:`grassmann_class` from raw plane and complement weights."""
    v = lin_prod((a1 ** 2 - c ** 2) * (a2 ** 2 - c ** 2) for c in rest)
    if n % 2 == 0:
        v *= a1 * a2
    if v == 0:
        raise NonGenericWeightsError(
            f"Grassmannian Euler class vanishes at ({a1}, {a2}) with complement {tuple(rest)}"
        )
    return v


def grassmann_class(n: int, w, p: Tuple[int, int]) -> int:
    """Euler class of T_{Gr(4,n+1)} at the plane ``p`` (sign-cancelled convention)."""
    return grassmann_class_at(n, *_plane_weights(n, w, p))


def grassmann_class_signed(n: int, w, p: Tuple[int, int]) -> int:
    """As :func:`grassmann_class` but carrying eps(a1*a2) when ``n`` is even."""
    a1, a2, _ = _plane_weights(n, w, p)
    v = grassmann_class(n, w, p)
    return epsilon(a1 * a2) * v if n % 2 == 0 else v


# -- representation templates ---------------------------------------------


@dataclass(frozen=True)
class RepTemplate:
    """``rho^{twist}`` of the weight ``c1*a1 + c2*a2 + c0``."""

    c1: int
    c2: int
    twist: int = 1
    c0: int = 0

    def weight(self, a1: int, a2: int) -> int:
        return self.c1 * a1 + self.c2 * a2 + self.c0

    def at(self, a1: int, a2: int) -> IrredRep:
        return IrredRep.oriented(self.weight(a1, a2), self.twist)

    def __str__(self):
        terms = []
        for c, v in ((self.c1, "a1"), (self.c2, "a2")):
            if c:
                terms.append(f"{c:+d}{v}".replace("+1a", "+a").replace("-1a", "-a"))
        if self.c0:
            terms.append(f"{self.c0:+d}")
        form = "".join(terms).lstrip("+") or "0"
        return f"rho{'-' if self.twist < 0 else ''}_({form})"


def _sgn(i):
    return -1 if i % 2 else 1


def bundle_basis_reps(m: int, y: int) -> List[RepTemplate]:
    """sigma-dual monomial pairs spanning E_m at ``y``, as representations."""
    _check_m(m)
    _check_y(y)
    k = (m - 1) // 2
    T = RepTemplate
    if y == 1:
        return [T(m - i, -i, _sgn(i)) for i in range(m)] + [
            T(0, m - 2 * i, _sgn(i)) for i in range(k + 1)
        ]
    if y == 2:
        return (
            [T(m - i, -i, _sgn(i)) for i in range(1, m)]
            + [T(0, m)]
            + [T(m - 2 * i, 0, _sgn(i)) for i in range(k + 1)]
        )
    if y == 3:
        return [T(m - i, i) for i in range(m)] + [T(0, m - 2 * i, _sgn(i)) for i in range(k + 1)]
    if y == 4:
        return (
            [T(m - i, i) for i in range(1, m)]
            + [T(0, m)]
            + [T(m - 2 * i, 0, _sgn(i)) for i in range(k + 1)]
        )
    if y == 5:
        return [T(1, m - 1 - 2 * i, _sgn(i)) for i in range(m)] + [
            T(0, m - 2 * i, _sgn(i)) for i in range(k + 1)
        ]
    return (
        [T(m - 1 - 2 * i, 1, _sgn(i)) for i in range(k + 1)]
        + [T(m - 1 - 2 * i, -1, _sgn(i + 1)) for i in range(k)]
        + [T(m - 2 * i, 0, _sgn(i)) for i in range(k + 1)]
    )


_M = -1
_TANGENT = {
    1: [(2, 0, _M), (1, -1, 1), (1, 3, 1), (0, 2, _M), (1, 1, _M), (1, -1, 1)],
    2: [(1, -1, 1), (0, 2, _M), (2, 0, _M), (3, 1, 1), (1, 1, _M), (1, -1, 1)],
    3: [(1, 1, _M), (2, 0, _M), (0, 2, _M), (1, -3, _M), (1, -1, 1), (1, 1, _M)],
    4: [(1, 1, _M), (0, 2, _M), (2, 0, _M), (3, -1, _M), (1, -1, 1), (1, 1, _M)],
    5: [(1, -1, 1), (1, 1, _M), (1, 1, _M), (3, 1, 1), (3, -1, _M), (1, -1, 1)],
    6: [(1, -1, 1), (1, 1, _M), (1, 1, _M), (1, 3, 1), (1, -3, _M), (1, -1, 1)],
}


def tangent_reps(y: int) -> Tuple[List[RepTemplate], int]:
    """The six tangent representations at ``y`` and the orientation correction.

    The correction is -1 exactly when the swap count is odd (y1, y2, y6).
    """
    _check_y(y)
    reps = [RepTemplate(c1, c2, t) for c1, c2, t in _TANGENT[y]]
    return reps, -1 if TANGENT_SWAPS[y] % 2 else 1


def grassmann_reps(n: int, w, p: Tuple[int, int]) -> List[RepTemplate]:
    """rho_{a+c} (+) rho^-_{a-c} for ``a`` in the pair, ``c`` in the complement.

    For even ``n`` the trivial quotient line adds rho_{a1} and rho_{a2}.  A
    negative ``a - c`` is oriented on evaluation, which flips the twist.
    """
    _, _, rest = _plane_weights(n, w, p)
    out = []
    for c in rest:
        out += [
            RepTemplate(1, 0, 1, c),
            RepTemplate(1, 0, -1, -c),
            RepTemplate(0, 1, 1, c),
            RepTemplate(0, 1, -1, -c),
        ]
    if n % 2 == 0:
        out += [RepTemplate(1, 0), RepTemplate(0, 1)]
    return out


def evaluate(templates, a1: int, a2: int) -> List[IrredRep]:
    return [t.at(a1, a2) for t in templates]
