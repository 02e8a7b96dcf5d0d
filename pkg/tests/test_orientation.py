from itertools import combinations_with_replacement

import pytest

from quadcubics.localization import DegreeProfile
from quadcubics.orientation import check, enumerate_orientable, odd_degree_profiles, picard_parities

NINE = {
    (4, (5,)),
    (10, (13,)),
    (5, (3, 3)),
    (11, (3, 11)),
    (11, (5, 9)),
    (11, (7, 7)),
    (12, (3, 3, 9)),
    (12, (3, 5, 7)),
    (12, (5, 5, 5)),
}


def brute_orientable(n_max):
    """All odd-degree multisets, filtered by the congruences directly."""
    out = set()
    for n in range(4, n_max + 1):
        odd = range(3, (4 * n - 1) // 3 + 1, 2)
        for r in range(1, 4 * n // 10 + 1):
            for ms in combinations_with_replacement(odd, r):
                if sum(3 * m + 1 for m in ms) != 4 * n:
                    continue
                if sum(m % 4 == 3 for m in ms) % 2:
                    continue
                if (n % 2 == 1) != (r % 2 == 0):
                    continue
                out.add((n, ms))
    return out


def test_examples():
    assert check(DegreeProfile(4, (5,))).orientable
    rep = check(DegreeProfile(7, (9,)))
    assert rep.rank_ok and not rep.orientable and not rep.r_parity_ok
    rep = check(DegreeProfile(4, (3,)))
    assert not rep.rank_ok and not rep.orientable


def test_enumerate_examples():
    got = {(p.n, p.degrees) for p in enumerate_orientable(12)}
    assert got == NINE
    assert [(p.n, p.degrees) for p in enumerate_orientable(4)] == [(4, (5,))]
    assert enumerate_orientable(3) == []


@pytest.mark.parametrize("n_max", [12, 20])
def test_enumeration_exhaustive(n_max):
    got = {(p.n, p.degrees) for p in enumerate_orientable(n_max)}
    assert got == brute_orientable(n_max)


def test_enumerated_parity_link():
    for p in enumerate_orientable(24):
        assert check(p).orientable
        assert (p.n % 2 == 0) == (p.r % 2 == 1)


def test_vanishing_flag():
    rep = check(DegreeProfile(8, (4, 6)))
    assert rep.vanishing and rep.rank_ok and not rep.orientable
    assert "even" in rep.violated()


def test_count_neg():
    assert check(DegreeProfile(11, (3, 11))).count_neg_mod4 == 2
    rep = check(DegreeProfile(6, (7,)))  # rank 22 != 24, one m = 3 mod 4
    assert rep.count_neg_mod4 == 1


@pytest.mark.parametrize("n", range(4, 26))
def test_picard_view_agrees(n):
    for p in odd_degree_profiles(n):
        assert all(picard_parities(p).values()) == check(p).orientable


def test_picard_view_for_rejected_example():
    d = picard_parities(DegreeProfile(7, (9,)))
    assert d == {"O(1)": False, "gamma": True, "H_ncm": True}
