"""Command line entry point: ``bmaps jack|htable|enumerate|etatable|verify``."""

from __future__ import annotations

import argparse
import json
import sys

from .harness import SUITES, run_suite
from .harness import htable as load_htable
from .jack import build_jack
from .mapcore import canonical_key, genus2x, is_orientable, key_to_string, map_type
from .mapstats import enumerate_maps, eta, h_eta_table, handle_count, parse_rules, trace
from .partitions import Partition, all_partitions


def _emit(payload, target: str | None):
    text = json.dumps(payload, indent=1, sort_keys=True)
    if target in (None, "-"):
        print(text)
    else:
        with open(target, "w") as fh:
            fh.write(text + "\n")


def _parse_type(text: str):
    pieces = text.split(":")
    if len(pieces) != 3:
        raise argparse.ArgumentTypeError("type must look like MU:NU:TAU, e.g. 2,1:3:2,1")
    return tuple(Partition.parse(p) for p in pieces)


def cmd_jack(args) -> int:
    tab = build_jack(args.n)
    if args.json is not None:
        payload = {
            "n": args.n,
            "jacks": [
                {"lambda": str(lam), "p": tab.p[lam].to_json()["coeffs"], "norm": str(tab.norms[lam])}
                for lam in all_partitions(args.n)
            ],
        }
        _emit(payload, args.json)
        return 0
    for lam in all_partitions(args.n):
        terms = " + ".join(f"({c}) p_{mu}" for mu, c in sorted(tab.p[lam].coeffs.items(), reverse=True))
        print(f"J_({lam}) = {terms}")
        print(f"  <J,J> = {tab.norms[lam]}")
    return 0


def cmd_htable(args) -> int:
    table = load_htable(args.n)
    if args.json:
        table.write_json(args.json, args.n)
    if args.csv:
        table.write_csv(args.csv, args.n)
    if not (args.json or args.csv):
        for (mu, nu, tau), h in table.items(args.n):
            if h:
                print(f"h_{{{mu};{nu}}}^{{{tau}}} = {h}")
    return 0


def cmd_enumerate(args) -> int:
    rule = parse_rules(args.orientation)[0]
    maps = enumerate_maps(args.n, audit=args.audit_dedup)
    if args.type is not None:
        target = args.type
        maps = (m for m in maps if map_type(m).as_tuple() == target)
    rows, counts = [], {}
    for m in maps:
        t = map_type(m)
        counts[str(t)] = counts.get(str(t), 0) + 1
        if args.json is not None:
            rows.append(
                {
                    "key": key_to_string(canonical_key(m)),
                    "mu": str(t.mu),
                    "nu": str(t.nu),
                    "tau": str(t.tau),
                    "genus2x": genus2x(m),
                    "orientable": is_orientable(m),
                    "handles": handle_count(m),
                    "eta": eta(m, rule),
                    "trace": [str(s.edge_type) for s in trace(m, rule).steps],
                }
            )
    if args.json is not None:
        _emit({"n": args.n, "orientation": str(rule), "count": len(rows), "maps": rows}, args.json)
        return 0
    for name in sorted(counts):
        print(f"{name}\t{counts[name]}")
    print(f"total\t{sum(counts.values())}")
    return 0


def cmd_etatable(args) -> int:
    rule = parse_rules(args.orientation)[0]
    table = h_eta_table(args.n, rule)
    if args.json is not None:
        _emit(table.to_json(), args.json)
        return 0
    for row in table.to_json()["entries"]:
        split = ", ".join(f"a_{s['i']}={s['a']}" for s in row["i_split"])
        print(f"({row['mu']};{row['nu']};{row['tau']})  H={row['h']}  {split}")
    return 0


def cmd_verify(args) -> int:
    rules = parse_rules(args.orientation)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, args.n_max, rules) for name in names]
    for rep in reports:
        for line in rep.summary_lines():
            print(line)
        for msg in rep.failures():
            print(f"  FAILURE {msg}")
        if rep.observations:
            print(f"[{rep.suite}] {len(rep.observations)} observations recorded")
    if args.json is not None:
        _emit({"reports": [r.to_json(args.timings) for r in reports]}, args.json)
    ok = all(r.passed for r in reports)
    print("ALL PASSED" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bmaps", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jack", help="Jack polynomials of degree n in the power-sum basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", nargs="?", const="-", help="write JSON (to stdout if no path)")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("htable", help="h_{mu,nu}^tau(beta) for all triples of partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_htable)

    p = sub.add_parser("enumerate", help="all rooted bipartite maps with n edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", type=_parse_type, help="MU:NU:TAU filter, e.g. 2:2:1,1")
    p.add_argument("--audit-dedup", action="store_true", help="fail on a repeated canonical key")
    p.add_argument("--orientation", default="canonical", help="rule used for eta in JSON output")
    p.add_argument("--json", nargs="?", const="-")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("etatable", help="H_eta and a-polynomials from the map census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orientation", default="canonical", help="canonical or seeded:SEED")
    p.add_argument("--json", nargs="?", const="-")
    p.set_defaults(func=cmd_etatable)

    p = sub.add_parser("verify", help="run verification suites; exit 1 on any failure")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--orientation", default="canonical", help="comma list: canonical,seeded:1,...")
    p.add_argument("--json", nargs="?", const="-", help="report path")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in the JSON")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"bmaps: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
