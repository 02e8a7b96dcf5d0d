"""Acceptance criteria; run with pytest or directly as a script."""

import io
import json
import random
import sys
from itertools import product

from quadcubics import combinatorics as comb
from quadcubics import fixtures
from quadcubics.arith import epsilon
from quadcubics.cli import run
from quadcubics.gw import assemble
from quadcubics.local import (
    bundle_basis_reps,
    bundle_local_class_signed,
    evaluate,
    grassmann_class,
    grassmann_class_signed,
    grassmann_reps,
    tangent_h3_class,
    tangent_reps,
)
from quadcubics.localization import DegreeProfile, contribution_at, signature
from quadcubics.reps import euler_product, total_dim
from quadcubics.weights import random_generic_weights

TABLE = [
    (4, [5], 765),
    (5, [3, 3], 90),
    (10, [13], 768328170191602020),
    (11, [3, 11], 4407109540744680),
    (11, [5, 9], 313563865853700),
    (11, [7, 7], 136498002303600),
    (12, [3, 3, 9], 43033957366680),
    (12, [3, 5, 7], 5860412510400),
    (12, [5, 5, 5], 1833366298500),
]
ODD_M = (3, 5, 7, 9, 11, 13)


def _cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out, io.StringIO())
    return code, out.getvalue()


def test_criterion_1_table_reproduction():
    for n, degs, want in TABLE:
        code, out = _cli("count", "--n", str(n), "--degrees", ",".join(map(str, degs)), "--json")
        assert code == 0
        assert json.loads(out)["signature"] == want, (n, degs)


def test_criterion_2_weight_independence():
    for n, degs, want in TABLE:
        p = DegreeProfile(n, degs)
        for seed in (101, 202, 303, 404, 505):
            w = random_generic_weights(p.s, seed)
            assert signature(p, w).signature == want, (n, degs, w.as_list())


def test_criterion_3_oracle_equivalence():
    for m in ODD_M:
        for a1, a2 in [(4 * m + 1, 1), (6 * m + 1, 3), (2 * m + 3, 1)]:
            for y in range(1, 7):
                c = euler_product(evaluate(bundle_basis_reps(m, y), a1, a2))
                assert c.etilde_parity == 0 and c.e_pow == (3 * m + 1) // 2
                assert c.coeff == bundle_local_class_signed(m, y, a1, a2), (m, y, a1, a2)
                templates, extra = tangent_reps(y)
                assert extra == (-1 if y in (1, 2, 6) else 1)
                t = euler_product(evaluate(templates, a1, a2))
                assert extra * t.coeff == tangent_h3_class(y, a1, a2), (y, a1, a2)
    rng = random.Random(7)
    for n in range(4, 13):
        s = (n + 1) // 2
        for _ in range(3):
            w = random_generic_weights(s, rng.getrandbits(32), upper=400)
            for i in range(1, s + 1):
                for j in range(i + 1, s + 1):
                    a1, a2 = w.pair(i, j)
                    g = euler_product(evaluate(grassmann_reps(n, w, (i, j)), a1, a2))
                    assert g.coeff == grassmann_class_signed(n, w, (i, j))
                    plain = grassmann_class(n, w, (i, j))
                    assert g.coeff == (epsilon(a1 * a2) * plain if n % 2 == 0 else plain)


def _brute_count(case, m):
    off, (c1, c2) = comb.CASES[case]
    a1, a2 = 4 * m + 1, 1
    d, bound = m - off, c1 * a1 + c2 * a2
    return sum(
        0 < a1 * (e1 - e2) + a2 * (e3 - (d - e1 - e2 - e3)) < bound
        for e1, e2, e3 in product(range(d + 1), repeat=3)
        if e1 + e2 + e3 <= d
    )


def test_criterion_4_combinatorics():
    for m in ODD_M:
        for case in range(1, 7):
            assert _brute_count(case, m) == comb.closed_form(case, m), (case, m)
        for y in range(1, 7):
            ce, cf = comb.SWAP_CASES[y]
            swaps = _brute_count(ce, m) + _brute_count(cf, m)
            want = 0 if m % 4 == 1 or y in (1, 2, 5) else 1
            assert swaps % 2 == want, (m, y)
            assert comb.bundle_swap_count(m, y) == swaps


def test_criterion_5_enumeration():
    code, out = _cli("enumerate", "--max-n", "12", "--json")
    got = {(d["n"], tuple(d["degrees"])) for d in json.loads(out)}
    assert got == {(n, tuple(d)) for n, d, _ in TABLE}
    code, out = _cli("orient", "--n", "7", "--degrees", "9", "--json")
    assert not json.loads(out)["orientable"]
    assert _cli("count", "--n", "7", "--degrees", "9")[0] == 2


def test_criterion_6_structural_invariants():
    rng = random.Random(2024)
    profiles = [DegreeProfile(n, d) for n, d, _ in TABLE]
    for trial in range(120):
        p = rng.choice(profiles)
        w = random_generic_weights(p.s, rng.getrandbits(48), upper=10 ** 5)
        i, j = rng.choice(p.planes())
        a1, a2 = w.pair(i, j)
        rest = w.complement(i, j)
        lam = rng.randint(2, 50)
        base = contribution_at(p, a1, a2, rest)
        assert contribution_at(p, a2, a1, rest) == base, trial
        assert contribution_at(p, lam * a1, lam * a2, [lam * c for c in rest]) == base, trial
        total = sum(v for _, v in signature(p, w).per_plane)
        assert total.denominator == 1, trial
        for m in p.degrees:
            for y in range(1, 7):
                assert total_dim(evaluate(bundle_basis_reps(m, y), 4 * m + 1, 1)) == 3 * m + 1
        assert total_dim(evaluate(tangent_reps(rng.randint(1, 6))[0], a1, a2)) == 12
        assert total_dim(evaluate(grassmann_reps(p.n, w, (i, j)), a1, a2)) == 4 * (p.n - 3)


def test_rank_parity_on_all_rows():
    rows = fixtures.load()
    assert len(rows) == 9
    for row in rows:
        assert (row.rank - row.signature) % 2 == 0
        g = assemble(row.signature, row.rank)
        assert g.signature + 2 * g.hyperbolic_multiplicity == row.rank


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS  {name}")
            except AssertionError as exc:
                failed += 1
                print(f"FAIL  {name}  {exc}")
    sys.exit(1 if failed else 0)
