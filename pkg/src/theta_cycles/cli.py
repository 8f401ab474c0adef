"""Command line entry point: ``theta-cycles {analyze,verify,scan,count,enumerate}``.

Exit codes: 0 pass, 1 theorem mismatch, 2 usage error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from .cohomology import hodge_polynomial
from .decomposability import FAMILIES, SymmetricPair, is_discretely_decomposable, non_decomposability_witness
from .enumeration import BudgetExceeded, count_patterns, default_budget, enumerate_all, enumerate_Q
from .parabolic import DominanceError, Lambda, LevelPattern, canonicalize, invariants
from .roots import Signature
from .verifier import verify_theorem

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("theta_cycles")


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _signature(args) -> Signature:
    try:
        return Signature(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _pair(sig: Signature, family: str, k: int) -> SymmetricPair:
    try:
        pair = SymmetricPair(family, k)
        pair.check(sig)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return pair


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


# analyze ----------------------------------------------------------------

def analyze_payload(sig: Signature, pat: LevelPattern, k: int = 1) -> dict:
    inv = invariants(pat)
    poly = hodge_polynomial(pat)
    verdicts = {}
    for family in FAMILIES:
        pair = SymmetricPair(family, k)
        try:
            pair.check(sig)
        except ValueError as exc:
            verdicts[str(pair)] = {"applicable": False, "reason": str(exc)}
            continue
        verdicts[str(pair)] = {
            "applicable": True,
            "subalgebra": pair.subalgebra(sig),
            "decomposable": is_discretely_decomposable(pat, pair, sig),
            "witness_s": non_decomposability_witness(pat, pair, sig),
        }
    return {
        "signature": {"p": sig.p, "q": sig.q},
        "pattern": str(pat),
        "representative": list(pat.representative().coords),
        "r_plus": inv.r_plus,
        "r_minus": inv.r_minus,
        "r_total": inv.r_total,
        "holomorphic": inv.holomorphic,
        "antiholomorphic": inv.antiholomorphic,
        "levi": inv.levi_blocks(),
        "hodge": {"shift": list(poly.shift), "diag": list(poly.diag), "total": poly.total},
        "pairs": verdicts,
    }


def _analyze_text(d: dict) -> str:
    lines = [
        f"signature      su({d['signature']['p']},{d['signature']['q']})",
        f"pattern        {d['pattern']}",
        f"representative {tuple(d['representative'])}",
        f"R+ / R- / R    {d['r_plus']} / {d['r_minus']} / {d['r_total']}",
        f"holomorphic    {d['holomorphic']}",
        f"antiholomorph. {d['antiholomorphic']}",
        f"Levi           {' + '.join(d['levi'])}",
        f"Hodge shift    {tuple(d['hodge']['shift'])}",
        f"Hodge diag     {tuple(d['hodge']['diag'])}  (total {d['hodge']['total']})",
    ]
    for name, v in d["pairs"].items():
        if not v["applicable"]:
            lines.append(f"{name:<14} n/a ({v['reason']})")
        elif v["decomposable"]:
            lines.append(f"{name:<14} decomposable")
        else:
            lines.append(f"{name:<14} not decomposable, witness s={v['witness_s']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    sig = _signature(args)
    if (args.lam is None) == (args.pattern is None):
        raise UsageError("give exactly one of --lambda or --pattern")
    if args.lam is not None:
        try:
            coords = tuple(int(a) for a in args.lam.split(","))
        except ValueError:
            raise UsageError(f"--lambda must be comma separated integers, got {args.lam!r}") from None
        try:
            pat = canonicalize(Lambda(sig, coords))
        except (DominanceError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            pat = LevelPattern.parse(args.pattern)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if (pat.p, pat.q) != (sig.p, sig.q):
            raise UsageError(f"pattern {pat} has block sizes ({pat.p},{pat.q}), not ({sig.p},{sig.q})")
    payload = analyze_payload(sig, pat, args.k)
    _emit(dump_json(payload) if args.format == "json" else _analyze_text(payload), args.out)
    return EXIT_OK


# verify -----------------------------------------------------------------

def _verify_text(report) -> str:
    d = report.to_dict()
    lines = [
        f"{report.signature} with {report.pair} ({report.pair.subalgebra(report.signature)}), t={report.t}",
        f"{'pattern':<28} {'R+':>4} {'R-':>4}  verdict",
    ]
    for e in d["Q"]:
        verdict = "D" if e["decomposable"] else f"Q\\D (s={e['witness_s']})"
        lines.append(f"{e['pattern']:<28} {e['r_plus']:>4} {e['r_minus']:>4}  {verdict}")
    lines.append(f"Q minus D (A_q classes): {', '.join(d['q_minus_d']) or '(empty)'}")
    lines.append(f"expected: {d['expected']}  singleton: {d['singleton']}  matches: {d['matches_expected']}")
    if not report.in_hypothesis:
        lines.append("note: configuration lies outside the theorem's hypothesis")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    sig = _signature(args)
    pair = _pair(sig, args.pair, args.k)
    budget = args.budget if args.budget is not None else default_budget()
    try:
        report = verify_theorem(sig, pair, budget=budget, workers=args.workers)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        _emit(dump_json(report.to_dict()), args.json)
    _emit(dump_json(report.to_dict()) if args.format == "json" else _verify_text(report), args.out)
    if args.expect_count is not None:
        ok = len(report.q_minus_d) == args.expect_count
    else:
        ok = report.matches_expected
    return EXIT_OK if ok else EXIT_MISMATCH


# scan -------------------------------------------------------------------

SCAN_COLUMNS = ["p", "q", "t", "Q", "D_cap_Q", "Q_minus_D", "q_patterns", "total_patterns",
                "in_hypothesis", "matches_expected", "surviving", "millis", "error"]


def scan_rows(p_range, q_range, family: str, k: int, *, upper: bool = False,
              budget: int | None = None, workers: int = 1) -> list[dict]:
    rows = []
    for p in p_range:
        for q in q_range:
            if upper and q < p:
                continue
            row = dict.fromkeys(SCAN_COLUMNS, None)
            row.update(p=p, q=q, error="")
            start = time.perf_counter()
            try:
                sig = Signature(p, q)
                row["total_patterns"] = count_patterns(sig)
                pair = SymmetricPair(family, k)
                pair.check(sig)
                report = verify_theorem(sig, pair, budget=budget, workers=workers)
            except (ValueError, BudgetExceeded) as exc:
                row["error"] = str(exc)
            else:
                counts = report.class_counts()
                row.update(t=report.t, Q=counts["Q"], D_cap_Q=counts["D_cap_Q"],
                           Q_minus_D=counts["Q_minus_D"], q_patterns=len(report.q_set),
                           in_hypothesis=report.in_hypothesis,
                           matches_expected=report.matches_expected,
                           surviving=";".join(str(c) for c in report.q_minus_d))
            row["millis"] = int((time.perf_counter() - start) * 1000)
            rows.append(row)
    return rows


def _csv_text(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SCAN_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def cmd_scan(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    rows = scan_rows(args.p_range, args.q_range, args.pair, args.k, upper=args.upper,
                     budget=budget, workers=args.workers)
    _emit(dump_json(rows) if args.format == "json" else _csv_text(rows), args.out)
    return EXIT_OK


# count / enumerate ------------------------------------------------------

def cmd_count(args) -> int:
    sig = _signature(args)
    try:
        value = count_patterns(sig, limit=args.limit)
    except OverflowError as exc:
        raise UsageError(str(exc)) from None
    _emit(f"{value}\n", args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sig = _signature(args)
    if args.t is None:
        lines = (str(pat) for pat in enumerate_all(sig))
    else:
        try:
            found = enumerate_Q(sig, args.t, budget=args.budget)
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        lines = (f"{pat} {inv.r_plus} {inv.r_minus}" for pat, inv in found)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


# parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="theta-cycles",
                                     description="theta-stable parabolic classes of su(p,q)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("text", "json")):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("analyze", help="invariants of one class")
    common(sp)
    sp.add_argument("--lambda", dest="lam", help="dominant parameter a_1,...,a_{p+q}")
    sp.add_argument("--pattern", help='level pattern such as "1|0>3|5>1|0"')
    sp.add_argument("--k", type=int, default=1)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="compute Q minus D for one pair")
    common(sp)
    sp.add_argument("--pair", choices=FAMILIES, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--json", help="also write the JSON report to this path")
    sp.add_argument("--budget", type=int, help="node budget for the pruned search")
    sp.add_argument("--expect-count", type=int, help="pass iff |Q minus D| equals this")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="verify over a grid of signatures")
    sp.add_argument("--p-range", type=_int_range, required=True)
    sp.add_argument("--q-range", type=_int_range, required=True)
    sp.add_argument("--pair", choices=FAMILIES, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--upper", action="store_true", help="skip cells with q < p")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("count", help="number of level patterns")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--limit", type=int, help="report overflow above this value")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list level patterns, or Q with --t")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"theta-cycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # THETA_CYCLE_BUDGET parse errors land here
        print(f"theta-cycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
