"""Relative orientability of E_{m_1,...,m_r;n} and enumeration of countable cases."""

from dataclasses import dataclass, asdict
from math import comb
from typing import Dict, List

from .arith import orientation_constants
from .localization import DegreeProfile


@dataclass(frozen=True)
class OrientationReport:
    rank_ok: bool
    all_odd: bool
    count_neg_mod4: int
    r_parity_ok: bool
    orientable: bool
    vanishing: bool

    def violated(self) -> str:
        out = []
        if not self.rank_ok:
            out.append("sum(3m_i+1) != 4n")
        if not self.all_odd:
            out.append("some m_i even")
        if self.count_neg_mod4 % 2:
            out.append(f"#{{m_i = 3 mod 4}} = {self.count_neg_mod4} is odd")
        if not self.r_parity_ok:
            out.append("r must be even for odd n and odd for even n")
        return "; ".join(out) or "none"

    def as_dict(self):
        return asdict(self)


def check(profile: DegreeProfile) -> OrientationReport:
    n, ms = profile.n, profile.degrees
    rank_ok = profile.rank_ok
    all_odd = all(m % 2 for m in ms)
    neg = sum(1 for m in ms if m % 4 == 3)
    r_ok = (profile.r % 2 == 0) if n % 2 else (profile.r % 2 == 1)
    return OrientationReport(
        rank_ok=rank_ok,
        all_odd=all_odd,
        count_neg_mod4=neg,
        r_parity_ok=r_ok,
        orientable=rank_ok and all_odd and neg % 2 == 0 and r_ok,
        vanishing=not all_odd,
    )


def picard_parities(profile: DegreeProfile) -> Dict[str, bool]:
    """Parity view through Pic(H_n) = Z<O(1), gamma, O(H^ncm)>.

    det E_m carries O(1)^{M_m}, gamma^{C(m,3) - C(m+1,3)} and O(H^ncm)^{K_m};
    det T_{H_n} carries O(1)^{n+1} and even powers of the other two.  The
    bundle is relatively oriented iff every exponent of the tensor product
    is even.  Only meaningful for odd degrees >= 3.
    """
    consts = [orientation_constants(m) for m in profile.degrees]
    o1 = sum(c.M for c in consts) + profile.n + 1
    gamma = sum(comb(m, 3) - comb(m + 1, 3) for m in profile.degrees)
    ncm = sum(c.K for c in consts)
    return {"O(1)": o1 % 2 == 0, "gamma": gamma % 2 == 0, "H_ncm": ncm % 2 == 0}


def _odd_partitions(total: int, smallest: int):
    """Multisets of odd m >= smallest (ascending) with sum(3m+1) == total."""
    if total == 0:
        yield ()
        return
    m = smallest
    while 3 * m + 1 <= total:
        for rest in _odd_partitions(total - (3 * m + 1), m):
            yield (m,) + rest
        m += 2


def odd_degree_profiles(n: int) -> List[DegreeProfile]:
    """Every profile of odd degrees >= 3 satisfying the rank condition for ``n``."""
    return [DegreeProfile(n, ms) for ms in _odd_partitions(4 * n, 3)]


def enumerate_orientable(n_max: int) -> List[DegreeProfile]:
    out = []
    for n in range(4, n_max + 1):
        out += [p for p in odd_degree_profiles(n) if check(p).orientable]
    return out
