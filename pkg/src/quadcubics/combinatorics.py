"""Monomial bookkeeping behind the orientation signs.

Monomials in x1..x4 carry weights (a1, -a1, a2, -a2).  Everything here is
brute force over explicit exponent tuples and exists to check, not to
count: the closed-form counts and swap parities are compared against
enumeration.
"""

from itertools import combinations_with_replacement
from math import comb
from typing import List, Tuple

from .errors import DomainError

Monomial4 = Tuple[int, int, int, int]

POSITIVE, NEGATIVE, NEUTRAL = "positive", "negative", "neutral"


def monomials(d: int) -> List[Monomial4]:
    """All degree-``d`` monomials in lexicographic order (x1 > x2 > x3 > x4)."""
    out = []
    for c in combinations_with_replacement(range(4), d):
        e = [0, 0, 0, 0]
        for k in c:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def classify(g: Monomial4) -> str:
    m1, m2, m3, m4 = g
    if m1 > m2 or (m1 == m2 and m3 > m4):
        return POSITIVE
    if m1 < m2 or (m1 == m2 and m3 < m4):
        return NEGATIVE
    return NEUTRAL


def star(g: Monomial4) -> Monomial4:
    m1, m2, m3, m4 = g
    return (m2, m1, m4, m3)


def weight(g: Monomial4, a1: int, a2: int) -> int:
    return a1 * (g[0] - g[1]) + a2 * (g[2] - g[3])


def canonical_order(d: int) -> List[Monomial4]:
    lex = monomials(d)
    out = []
    for g in lex:
        if classify(g) == POSITIVE:
            out += [g, star(g)]
    out += [g for g in lex if classify(g) == NEUTRAL]
    return out


def permutation_sign(perm: List[int]) -> int:
    """Sign of a permutation of ``range(len(perm))`` via its cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def canonical_permutation_sign(d: int) -> int:
    lex = monomials(d)
    index = {g: i for i, g in enumerate(lex)}
    return permutation_sign([index[g] for g in canonical_order(d)])


def format_monomial(g: Monomial4) -> str:
    parts = []
    for k, e in enumerate(g, 1):
        if e == 1:
            parts.append(f"x{k}")
        elif e:
            parts.append(f"x{k}^{e}")
    return "*".join(parts) or "1"


# -- weight-range counts ---------------------------------------------------

# case -> (degree offset below m, bound as (c1, c2) meaning c1*a1 + c2*a2)
CASES = {
    1: (2, (1, 1)),
    2: (2, (1, -1)),
    3: (2, (0, 2)),
    4: (2, (2, 0)),
    5: (3, (0, 1)),
    6: (3, (1, 0)),
}


def closed_form(case_id: int, m: int) -> int:
    if case_id not in CASES:
        raise DomainError(f"case id must be 1..6, got {case_id}")
    return {
        1: (m - 1) * (m + 1) // 4,
        2: (m - 1) ** 2 // 4,
        3: (m - 1) // 2,
        4: (m - 1) ** 2 // 2,
        5: 0,
        6: (m - 1) * (m - 3) // 4,
    }[case_id]


def _regime_weights(m):
    return 4 * m + 1, 1


def count_weight_range(case_id: int, m: int, a1: int = None, a2: int = None) -> int:
    """Brute-force count of monomials with ``0 < wt(g) < bound`` for the case.

    Default weights ``a1 = 4m + 1, a2 = 1`` put the count in the generic
    regime where it no longer depends on the weights.
    """
    if case_id not in CASES:
        raise DomainError(f"case id must be 1..6, got {case_id}")
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    if a1 is None:
        a1, a2 = _regime_weights(m)
    off, (c1, c2) = CASES[case_id]
    bound = c1 * a1 + c2 * a2
    return sum(1 for g in monomials(m - off) if 0 < weight(g, a1, a2) < bound)


# wt(e1) case, wt(f1) case per fixed point
SWAP_CASES = {1: (1, 5), 2: (1, 6), 3: (2, 5), 4: (2, 6), 5: (4, 6), 6: (3, 5)}


def bundle_swap_count(m: int, y: int) -> int:
    """Pair swaps needed to orient the resolution basis of E_m at ``y``."""
    if y not in SWAP_CASES:
        raise DomainError(f"fixed point index must be in 1..6, got {y}")
    ce, cf = SWAP_CASES[y]
    return count_weight_range(ce, m) + count_weight_range(cf, m)


def expected_swap_parity(m: int, y: int) -> int:
    """Parity of the swap count: 0 on y1, y2, y5 or when m = 1 mod 4, else 1."""
    if m % 4 == 1:
        return 0
    return 0 if y in (1, 2, 5) else 1


def canonical_order_length(d: int) -> int:
    return comb(d + 3, 3)
