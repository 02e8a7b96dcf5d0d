"""Bott residue sum over the N-fixed points of H_n.

For a profile ``(n; m_1, ..., m_r)`` with ``sum(3 m_i + 1) == 4 n`` the signed
count is

    sum over fixed planes (i, j), sum over y = 1..6 of
        prod_k E_{m_k}(y) / (T(y) * G_{ij})

evaluated at integer weights with exact rationals.  The total does not
depend on the weights, so evaluating at several generic weight vectors and
comparing is a strong, cheap correctness check.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from .arith import epsilon, lin_prod
from .errors import (
    ConsistencyError,
    DomainError,
    NotOrientableError,
    RankMismatchError,
    UnsupportedDegreeError,
    VanishingError,
)
from .local import (
    FIXED_POINTS,
    bundle_local_class,
    bundle_local_class_signed,
    grassmann_class,
    grassmann_class_at,
    grassmann_class_signed,
    tangent_h3_class,
)
from .weights import WeightVector, check, default_weights, random_generic_weights

log = logging.getLogger(__name__)

PlanePair = Tuple[int, int]


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(int(m) for m in self.degrees)))
        if not self.degrees:
            raise DomainError("a profile needs at least one degree")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def s(self) -> int:
        """Number of coordinate pairs, i.e. weights needed."""
        return (self.n + 1) // 2

    @property
    def rank(self) -> int:
        return sum(3 * m + 1 for m in self.degrees)

    @property
    def rank_ok(self) -> bool:
        return self.rank == 4 * self.n

    def planes(self) -> List[PlanePair]:
        return list(combinations(range(1, self.s + 1), 2))

    def __str__(self):
        return f"({self.n}, [{', '.join(map(str, self.degrees))}])"


@dataclass
class CountResult:
    profile: DegreeProfile
    signature: int
    weights_used: WeightVector
    per_plane: List[Tuple[PlanePair, Fraction]] = field(default_factory=list)
    samples_checked: int = 1
    sample_weights: List[WeightVector] = field(default_factory=list)


def _terms_at(profile, a1, a2, G, signed):
    bundle = bundle_local_class_signed if signed else bundle_local_class
    for y in FIXED_POINTS:
        num = lin_prod(bundle(m, y, a1, a2) for m in profile.degrees)
        yield y, num, tangent_h3_class(y, a1, a2) * G


def _local_terms(profile, w, p, signed):
    a1, a2 = w.pair(*p)
    G = grassmann_class_signed(profile.n, w, p) if signed else grassmann_class(profile.n, w, p)
    return _terms_at(profile, a1, a2, G, signed)


def contribution_at(profile: DegreeProfile, a1: int, a2: int, rest) -> Fraction:
    """Plane contribution from raw weights; ``a1`` and ``a2`` need not be sorted."""
    G = grassmann_class_at(profile.n, a1, a2, rest)
    return sum((Fraction(num, den) for _, num, den in _terms_at(profile, a1, a2, G, False)), Fraction(0))


def fixed_point_terms(profile: DegreeProfile, w: WeightVector, p: PlanePair, signed=False):
    """The six ratios ``E(y) / T_{H_n}(y)`` at the plane ``p``."""
    return [(y, Fraction(num, den)) for y, num, den in _local_terms(profile, w, p, signed)]


def plane_contribution(
    profile: DegreeProfile, w: WeightVector, p: PlanePair, signed: bool = False
) -> Fraction:
    """Sum of the six fixed-point ratios in the plane ``p``.

    ``signed=True`` uses the sign-carrying forms and needs odd weights.
    """
    if not profile.rank_ok:
        raise RankMismatchError(
            f"rank {profile.rank} != dim H_n = {4 * profile.n} for {profile}"
        )
    if any(m % 2 == 0 or m < 3 for m in profile.degrees):
        raise DomainError(f"plane contributions need odd degrees >= 3, got {profile.degrees}")
    terms = list(_local_terms(profile, w, p, signed))
    return sum((Fraction(num, den) for _, num, den in terms), Fraction(0))


def admissible(profile: DegreeProfile, allow_non_orientable: bool = False):
    """Raise the appropriate refusal unless the profile can be counted.

    Returns ``0`` when the count is known to vanish (even degree present and
    overridden), else ``None``.
    """
    from .orientation import check as orient_check

    if any(m < 3 for m in profile.degrees):
        raise UnsupportedDegreeError(
            f"degrees below 3 are not covered: {profile.degrees}",
            reason="unsupported degree: m_i >= 3 required",
        )
    rep = orient_check(profile)
    # an even degree settles the answer before any dimension bookkeeping
    if rep.vanishing and not allow_non_orientable:
        raise VanishingError(f"{profile} has an even degree: Euler class vanishes, count 0")
    if not rep.rank_ok:
        raise RankMismatchError(
            f"rank/dimension mismatch: sum(3m_i+1) = {profile.rank} != 4n = {4 * profile.n}"
        )
    if rep.vanishing:
        return 0
    if not rep.orientable:
        raise NotOrientableError(
            f"{profile} is not relatively orientable: {rep.violated()}",
            reason="not relatively orientable: " + rep.violated(),
        )
    return None


def signature(
    profile: DegreeProfile,
    w: Optional[WeightVector] = None,
    override: bool = False,
    signed: bool = False,
) -> CountResult:
    """Signed count of twisted cubics on a general complete intersection."""
    if w is None:
        w = default_weights(profile.s)
    known = admissible(profile, override)
    if known is not None:
        return CountResult(profile, known, w, [], 0)
    if len(w) != profile.s:
        raise DomainError(f"n={profile.n} needs {profile.s} weights, got {len(w)}")
    check(w)
    per_plane = [(p, plane_contribution(profile, w, p, signed)) for p in profile.planes()]
    total = sum((v for _, v in per_plane), Fraction(0))
    if total.denominator != 1:
        raise ConsistencyError(
            f"localization sum for {profile} at weights {w.as_list()} is not integral: {total}"
        )
    log.debug("signature %s at %s = %s", profile, w.as_list(), total)
    return CountResult(profile, int(total), w, per_plane, 1, [w])


def sample_seeds(seed: int, samples: int) -> List[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(samples)]


def signature_verified(
    profile: DegreeProfile, samples: int = 3, seed: int = 0, override: bool = False
) -> CountResult:
    """Evaluate at ``samples`` random generic weight vectors and demand agreement."""
    if samples < 2:
        raise DomainError(f"verification needs at least 2 samples, got {samples}")
    known = admissible(profile, override)
    if known is not None:
        return CountResult(profile, known, default_weights(profile.s), [], 0)
    results = [
        signature(profile, random_generic_weights(profile.s, sd))
        for sd in sample_seeds(seed, samples)
    ]
    values = {r.signature for r in results}
    if len(values) != 1:
        raise ConsistencyError(
            f"weight-dependent result for {profile}: "
            + ", ".join(f"{r.weights_used.as_list()} -> {r.signature}" for r in results)
        )
    first = results[0]
    return CountResult(
        profile,
        first.signature,
        first.weights_used,
        first.per_plane,
        samples,
        [r.weights_used for r in results],
    )


def sign_cancellation_holds(profile: DegreeProfile, w: WeightVector) -> bool:
    """Per fixed point, the signed and sign-cancelled ratios coincide."""
    for p in profile.planes():
        a = fixed_point_terms(profile, w, p, signed=False)
        b = fixed_point_terms(profile, w, p, signed=True)
        if a != b:
            return False
    return True


def local_sign(profile: DegreeProfile, a1: int, a2: int) -> int:
    """Sign of the product bundle class at any fixed point: eps(a1 a2) for odd r, else 1."""
    return epsilon(a1 * a2) if profile.r % 2 else 1
