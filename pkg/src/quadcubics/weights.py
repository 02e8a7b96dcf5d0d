"""Generic weight vectors for the N-action on P^n.

A weight vector assigns one positive integer to each coordinate pair
``(x_{2i-2}, x_{2i-1})``.  For localization to make sense every tangent and
Grassmannian denominator must be non-zero; for all weights positive this
reduces to: entries pairwise distinct and no entry equal to three times
another.
"""

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, NamedTuple, Optional, Tuple

from .errors import DomainError, NonGenericWeightsError


class Violation(NamedTuple):
    kind: str  # "non-positive" | "duplicate" | "ratio-3" | "even"
    pair: Tuple[int, ...]

    def __str__(self):
        return f"{self.kind}: {self.pair}"


@dataclass(frozen=True)
class WeightVector:
    """Ascending tuple of weights; ``sign_faithful`` demands all-odd entries."""

    entries: Tuple[int, ...]
    sign_faithful: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(int(a) for a in self.entries)))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def as_list(self) -> List[int]:
        return list(self.entries)

    def pair(self, i: int, j: int) -> Tuple[int, int]:
        """Weights of the 1-based plane pair ``(i, j)``, smaller index first."""
        return self.entries[i - 1], self.entries[j - 1]

    def complement(self, i: int, j: int) -> Tuple[int, ...]:
        return tuple(a for k, a in enumerate(self.entries, 1) if k not in (i, j))


def validate(w: WeightVector) -> List[Violation]:
    """Return every violated invariant; an empty list means the vector is generic."""
    out = []
    for a in w:
        if a <= 0:
            out.append(Violation("non-positive", (a,)))
    for a, b in combinations(w.entries, 2):
        if a == b:
            out.append(Violation("duplicate", (a, b)))
        elif b == 3 * a or a == 3 * b:
            out.append(Violation("ratio-3", (a, b)))
    if w.sign_faithful:
        out.extend(Violation("even", (a,)) for a in w if a % 2 == 0)
    return out


def check(w: WeightVector) -> WeightVector:
    """Raise :class:`NonGenericWeightsError` unless ``validate`` is clean."""
    bad = validate(w)
    if bad:
        raise NonGenericWeightsError("non-generic weights: " + "; ".join(map(str, bad)))
    return w


def _odd_sequence():
    # 1, then the primes >= 5: odd, and never 3x another entry.
    yield 1
    k = 5
    while True:
        if all(k % p for p in range(3, int(k ** 0.5) + 1, 2)):
            yield k
        k += 2


def default_weights(s: int) -> WeightVector:
    """First ``s`` terms of 1, 5, 7, 11, 13, 17, ..."""
    if s < 1:
        raise DomainError(f"need at least one weight, got s={s}")
    seq = _odd_sequence()
    return WeightVector(tuple(next(seq) for _ in range(s)), sign_faithful=True)


def random_generic_weights(s: int, seed: int, upper: int = 10 ** 6) -> WeightVector:
    """Deterministic random sign-faithful weights in ``[1, upper]``.

    Rejection-resamples single entries until the vector is generic.
    """
    if s < 1:
        raise DomainError(f"need at least one weight, got s={s}")
    rng = random.Random(seed)
    chosen: List[int] = []
    while len(chosen) < s:
        a = 2 * rng.randrange((upper + 1) // 2) + 1
        if any(a == b or a == 3 * b or b == 3 * a for b in chosen):
            continue
        chosen.append(a)
    return WeightVector(tuple(chosen), sign_faithful=True)


def parse_weights(text: str, sign_faithful: Optional[bool] = None) -> WeightVector:
    """Parse a comma-separated weight list as given on the command line."""
    try:
        entries = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise DomainError(f"cannot parse weights {text!r}") from None
    if sign_faithful is None:
        sign_faithful = all(a % 2 for a in entries)
    return WeightVector(entries, sign_faithful=sign_faithful)
