"""Property suites behind ``quadcubics verify``.

Each suite returns a list of :class:`Check` results instead of raising, so
the CLI can print all of them and choose an exit code.
"""

import random
from typing import Callable, Dict, List, NamedTuple

from . import combinatorics as comb
from .arith import epsilon, orientation_constants
from .local import (
    FIXED_POINTS,
    bundle_basis_reps,
    bundle_local_class_signed,
    evaluate,
    grassmann_class,
    grassmann_class_signed,
    grassmann_reps,
    tangent_h3_class,
    tangent_reps,
)
from .localization import DegreeProfile, contribution_at, signature
from .orientation import (
    check as orient_check,
    enumerate_orientable,
    odd_degree_profiles,
    picard_parities,
)
from .reps import euler_product, total_dim
from .weights import random_generic_weights

ODD_DEGREES = (3, 5, 7, 9, 11, 13)


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def oracle_pairs(m: int):
    """Odd weight pairs with a1 > m*a2, where the basis lists apply verbatim."""
    return [(4 * m + 1, 1), (6 * m + 1, 3), (2 * m + 3, 1)]


def _first_failure(cases, f):
    for case in cases:
        msg = f(*case)
        if msg:
            return msg
    return ""


def bundle_oracle_mismatch(m, y, a1, a2):
    reps = evaluate(bundle_basis_reps(m, y), a1, a2)
    if total_dim(reps) != 3 * m + 1:
        return f"E_{m} at y{y}: rank {total_dim(reps)} != {3 * m + 1}"
    c = euler_product(reps)
    want = bundle_local_class_signed(m, y, a1, a2)
    if c.etilde_parity or c.e_pow != (3 * m + 1) // 2 or c.coeff != want:
        return f"E_{m} at y{y}, ({a1},{a2}): reps give {c}, closed form {want}"
    return ""


def tangent_oracle_mismatch(y, a1, a2):
    templates, extra = tangent_reps(y)
    reps = evaluate(templates, a1, a2)
    if total_dim(reps) != 12:
        return f"tangent at y{y}: dim {total_dim(reps)} != 12"
    c = euler_product(reps)
    want = tangent_h3_class(y, a1, a2)
    if c.etilde_parity or c.e_pow != 6 or extra * c.coeff != want:
        return f"tangent at y{y}, ({a1},{a2}): {extra} * {c} != {want}"
    return ""


def grassmann_oracle_mismatch(n, w, p):
    a1, a2 = w.pair(*p)
    reps = evaluate(grassmann_reps(n, w, p), a1, a2)
    if total_dim(reps) != 4 * (n - 3):
        return f"Gr at n={n}: dim {total_dim(reps)} != {4 * (n - 3)}"
    c = euler_product(reps)
    signed = grassmann_class_signed(n, w, p)
    plain = grassmann_class(n, w, p)
    if c.etilde_parity or c.e_pow != 2 * (n - 3) or c.coeff != signed:
        return f"Gr at n={n}, w={w.as_list()}, plane {p}: reps give {c}, closed form {signed}"
    expected = epsilon(a1 * a2) * plain if n % 2 == 0 else plain
    if signed != expected:
        return f"Gr at n={n}: signed form {signed} != {expected}"
    return ""


def suite_oracle(seed: int = 0) -> List[Check]:
    bundle = [(m, y, a1, a2) for m in ODD_DEGREES for y in FIXED_POINTS for a1, a2 in oracle_pairs(m)]
    tangent = [(y, a1, a2) for m in ODD_DEGREES for y in FIXED_POINTS for a1, a2 in oracle_pairs(m)]
    tangent += [(y, a2, a1) for y, a1, a2 in tangent]
    rng = random.Random(seed)
    grass = []
    for n in range(4, 14):
        s = (n + 1) // 2
        for _ in range(5):
            w = random_generic_weights(s, rng.getrandbits(32), upper=500)
            for p in DegreeProfile(n, (3,)).planes():
                grass.append((n, w, p))
    out = []
    for name, cases, f in (
        ("bundle classes match representation products", bundle, bundle_oracle_mismatch),
        ("tangent classes match representation products", tangent, tangent_oracle_mismatch),
        ("Grassmannian classes match representation products", grass, grassmann_oracle_mismatch),
    ):
        msg = _first_failure(cases, f)
        out.append(Check(name, not msg, msg or f"{len(cases)} cases"))
    return out


def suite_combinatorics() -> List[Check]:
    out = []
    bad = [
        (c, m)
        for m in ODD_DEGREES
        for c in comb.CASES
        if comb.count_weight_range(c, m) != comb.closed_form(c, m)
    ]
    out.append(Check("weight-range counts match closed forms", not bad, f"mismatches: {bad}" if bad else ""))
    bad = [
        (m, y)
        for m in ODD_DEGREES
        for y in FIXED_POINTS
        if comb.bundle_swap_count(m, y) % 2 != comb.expected_swap_parity(m, y)
    ]
    out.append(Check("swap-count parities", not bad, f"mismatches: {bad}" if bad else ""))
    sign = comb.canonical_permutation_sign(2)
    out.append(Check("canonical order sign for degree 2 is +1", sign == 1, f"got {sign}"))
    bad = []
    for m in range(3, 40):
        c = orientation_constants(m)
        if m % 2 and (c.M % 2 == 1) != (m % 4 == 1):
            bad.append(m)
    out.append(Check("M_m odd iff m = 1 mod 4", not bad, f"fails at {bad}" if bad else ""))
    bad = []
    for n in range(4, 25):
        for p in odd_degree_profiles(n):
            if all(picard_parities(p).values()) != orient_check(p).orientable:
                bad.append(str(p))
    out.append(Check("Picard parities agree with the congruence test", not bad, ", ".join(bad[:5])))
    return out


def invariance_trials(trials: int = 100, seed: int = 0) -> List[str]:
    """Random pair-swap, scaling and integrality trials; returns failure messages."""
    rng = random.Random(seed)
    profiles = enumerate_orientable(12)
    failures = []
    for t in range(trials):
        prof = rng.choice(profiles)
        w = random_generic_weights(prof.s, rng.getrandbits(32), upper=10 ** 4)
        i, j = rng.choice(prof.planes())
        a1, a2 = w.pair(i, j)
        rest = w.complement(i, j)
        lam = rng.randint(2, 9)
        base = contribution_at(prof, a1, a2, rest)
        if contribution_at(prof, a2, a1, rest) != base:
            failures.append(f"trial {t}: swap changes plane ({i},{j}) of {prof} at {w.as_list()}")
        if contribution_at(prof, lam * a1, lam * a2, [lam * c for c in rest]) != base:
            failures.append(f"trial {t}: scaling by {lam} changes plane ({i},{j}) of {prof}")
        total = sum((v for _, v in signature(prof, w).per_plane), 0)
        if total.denominator != 1:
            failures.append(f"trial {t}: total {total} for {prof} not integral")
    return failures


def weight_independence(profile: DegreeProfile, seeds) -> Dict[int, int]:
    return {sd: signature(profile, random_generic_weights(profile.s, sd)).signature for sd in seeds}


def suite_invariance(trials: int = 100, seed: int = 0) -> List[Check]:
    out = []
    for prof in enumerate_orientable(12):
        vals = weight_independence(prof, range(seed, seed + 5))
        ok = len(set(vals.values())) == 1
        out.append(Check(f"weight independence {prof}", ok, "" if ok else str(vals)))
    fails = invariance_trials(trials, seed)
    out.append(
        Check(
            f"swap, scaling and integrality over {trials} trials",
            not fails,
            "; ".join(fails[:3]),
        )
    )
    return out


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "oracle": suite_oracle,
    "combinatorics": suite_combinatorics,
    "invariance": suite_invariance,
}


def run(name: str = "all") -> List[Check]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        out += SUITES[nm]()
    return out
