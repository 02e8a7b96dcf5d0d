"""Command-line entry point: ``quadcubics <command> [options]``.

Exit codes: 0 success, 1 usage or input error, 2 refusal (rank mismatch,
not orientable, vanishing), 3 internal consistency failure.  Set
``QUADCUBICS_LOG`` to a logging level name for diagnostics on stderr.
"""

import argparse
import json
import logging
import os
import sys
import time
from typing import List, Optional

from . import fixtures, verify
from .errors import ConsistencyError, DomainError, RefusalError
from .gw import FIELD_KINDS, assemble, render
from .localization import DegreeProfile, signature, signature_verified
from .orientation import check as orient_check, enumerate_orientable, picard_parities
from .weights import parse_weights

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_INCONSISTENT = 0, 1, 2, 3

log = logging.getLogger("quadcubics")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(obj, out):
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _profile(args):
    if not args.degrees:
        raise UsageError("--degrees needs at least one integer")
    return DegreeProfile(args.n, args.degrees)


# -- commands --------------------------------------------------------------


def cmd_count(args, out):
    prof = _profile(args)
    if args.weights is not None:
        res = signature(prof, parse_weights(args.weights), override=args.allow_vanishing)
    elif args.samples < 2:
        res = signature(prof, override=args.allow_vanishing)
    else:
        res = signature_verified(prof, args.samples, args.seed, override=args.allow_vanishing)
    g = assemble(res.signature, args.rank) if args.rank is not None else None

    if args.json:
        doc = {
            "n": prof.n,
            "degrees": list(prof.degrees),
            "signature": res.signature,
            "weights_used": res.weights_used.as_list(),
            "samples_checked": res.samples_checked,
        }
        if args.trace:
            doc["per_plane"] = [{"plane": list(p), "value": str(v)} for p, v in res.per_plane]
        if g is not None:
            doc["gw"] = g.as_dict()
        _dump(doc, out)
        return EXIT_OK

    out.write(f"{prof}: signature {res.signature}\n")
    out.write(f"weights {res.weights_used.as_list()}, {res.samples_checked} sample(s) agree\n")
    if args.trace:
        for p, v in res.per_plane:
            out.write(f"  plane {p}: {v}\n")
    if g is not None:
        out.write(f"GW: {render(g)}\n")
        out.write(f"general field: {render(g, 'general')}\n")
    return EXIT_OK


def cmd_orient(args, out):
    prof = _profile(args)
    rep = orient_check(prof)
    diag = None
    if rep.all_odd and all(m >= 3 for m in prof.degrees):
        diag = picard_parities(prof)
    if args.json:
        doc = {"n": prof.n, "degrees": list(prof.degrees), **rep.as_dict()}
        if diag is not None:
            doc["picard_parities_even"] = diag
        _dump(doc, out)
        return EXIT_OK
    out.write(f"{prof}\n")
    for k, v in rep.as_dict().items():
        out.write(f"  {k}: {v}\n")
    if not rep.orientable:
        out.write(f"  violated: {rep.violated()}\n")
    if diag is not None:
        out.write("  exponents even in Pic: " + ", ".join(f"{k}={v}" for k, v in diag.items()) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    profs = enumerate_orientable(args.max_n)
    if args.json:
        _dump([{"n": p.n, "degrees": list(p.degrees)} for p in profs], out)
    else:
        for p in profs:
            out.write(f"{p}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite == "all":
        checks = verify.suite_oracle(args.seed) + verify.suite_combinatorics()
        checks += verify.suite_invariance(args.trials, args.seed)
    elif args.suite == "oracle":
        checks = verify.suite_oracle(args.seed)
    elif args.suite == "invariance":
        checks = verify.suite_invariance(args.trials, args.seed)
    else:
        checks = verify.suite_combinatorics()
    for c in checks:
        line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}"
        if c.detail and not c.ok:
            line += f"  ({c.detail})"
        out.write(line + "\n")
    failed = sum(not c.ok for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} passed\n")
    return EXIT_OK if not failed else EXIT_INCONSISTENT


def cmd_gw(args, out):
    g = assemble(args.signature, args.rank)
    if args.json:
        _dump(g.as_dict(), out)
    else:
        out.write(render(g, args.field) + "\n")
    return EXIT_OK


def cmd_table(args, out):
    rows = fixtures.load(args.fixtures)
    results = []
    for row in rows:
        got = signature(row.profile).signature
        results.append((row, got))
    mismatches = [(r, g) for r, g in results if g != r.signature]
    if args.json:
        _dump(
            [
                {
                    "n": r.n,
                    "degrees": list(r.degrees),
                    "expected": r.signature,
                    "computed": g,
                    "rank": r.rank,
                    "match": g == r.signature,
                }
                for r, g in results
            ],
            out,
        )
    else:
        for r, g in results:
            mark = "ok " if g == r.signature else "BAD"
            out.write(f"{mark} {str(r.profile):<18} {g:>20}  (table {r.signature})\n")
        out.write(f"{len(results) - len(mismatches)}/{len(results)} rows match\n")
    return EXIT_OK if not mismatches else EXIT_INCONSISTENT


def cmd_bench(args, out):
    profs = [p for p in enumerate_orientable(12) if p.n == 12]
    for prof in profs:
        timings = {}
        values = set()
        for label, signed in (("counting", False), ("signed", True)):
            t0 = time.perf_counter()
            for _ in range(args.repeat):
                values.add(signature(prof, signed=signed).signature)
            timings[label] = (time.perf_counter() - t0) / args.repeat
        if len(values) != 1:
            raise ConsistencyError(f"counting and signed paths disagree on {prof}: {values}")
        out.write(
            f"{str(prof):<16} {values.pop():>16}  "
            + "  ".join(f"{k} {v * 1e3:7.2f} ms" for k, v in timings.items())
            + "\n"
        )
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadcubics", description="Signed counts of twisted cubics on complete intersections.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def profile_args(p):
        p.add_argument("--n", type=int, required=True, help="ambient dimension")
        p.add_argument("--degrees", type=_int_list, required=True, help="comma-separated, e.g. 3,5,7")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="signed count for one profile")
    profile_args(p)
    p.add_argument("--weights", help="comma-separated weights, one per coordinate pair")
    p.add_argument("--samples", type=int, default=3, help="random weight vectors to compare (default 3)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank", type=int, help="rank of the quadratic count, to print the GW form")
    p.add_argument("--trace", action="store_true", help="show each plane's contribution")
    p.add_argument(
        "--allow-vanishing",
        action="store_true",
        help="report 0 instead of refusing when some degree is even",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("orient", help="orientability report")
    profile_args(p)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("enumerate", help="list orientable profiles")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=["oracle", "combinatorics", "invariance", "all"], default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gw", help="render s + ((r - s)/2) H")
    p.add_argument("--signature", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--field", choices=FIELD_KINDS, default="squares-2-3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("table", help="recompute and diff the tabulated cases")
    p.add_argument("--fixtures", help="alternative table file (default: bundled)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time the n=12 cases")
    p.add_argument("--repeat", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def _setup_logging():
    level = os.environ.get("QUADCUBICS_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    _setup_logging()
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except RefusalError as exc:
        if getattr(args, "json", False):
            _dump({"status": "refused", "reason": exc.reason, "message": str(exc)}, out)
        err.write(f"refused: {exc.reason}\n{exc}\n")
        return EXIT_REFUSED
    except ConsistencyError as exc:
        err.write(f"consistency failure: {exc}\n")
        return EXIT_INCONSISTENT
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
