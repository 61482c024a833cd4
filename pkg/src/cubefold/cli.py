"""Command-line front end: classify, solve, enumerate, render, counts.

Exit codes: 0 success, 1 NOT_FOLDABLE (classify), 2 usage or input
error, 3 UNKNOWN verdict / budget exhausted (classify).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .grid import ParseError, Polyomino, parse, serialize
from .cube import enumerate_consistent_mappings
from .layers import (PseudoFolding, count_layer_maps, find_layer_map,
                     pseudo_folding_to_text, stamp_fold_count)
from .classify import FOLDABLE, NOT_FOLDABLE, UNKNOWN, classify
from .enumeration import (FamilySpec, cube_nets, enumerate_family,
                          minimal_foldable_set, net_type, verify_counts)
from .render import BadMappingIndex, render


def _load(path: str) -> Polyomino:
    return parse(Path(path).read_text())


def _budget() -> float:
    ms = os.environ.get("CUBEFOLD_BUDGET_MS")
    return float(ms) / 1000.0 if ms else 60.0


def _cmd_classify(args) -> int:
    p = _load(args.file)
    verdict = classify(p, budget=_budget())
    if args.json:
        print(json.dumps(verdict.to_json(), indent=2, sort_keys=True))
    else:
        cert = verdict.certificate
        label = cert.get("name") or cert.get("method") or cert.get("kind")
        print(f"{verdict.status} ({cert['kind']}: {label})")
    if verdict.status == NOT_FOLDABLE:
        return 1
    if verdict.status == UNKNOWN or verdict.budget_exhausted:
        return 3
    return 0


def _cmd_solve(args) -> int:
    p = _load(args.file)
    examined = 0
    found = None
    for m in enumerate_consistent_mappings(p, surjective_only=True,
                                           up_to_rotation=True):
        if args.limit is not None and examined >= args.limit:
            break
        examined += 1
        if args.count_layer_maps:
            n = count_layer_maps(m)
            print(f"mapping {examined}: {n} layer maps")
            continue
        res = find_layer_map(m)
        if res.layer_map is not None:
            found = PseudoFolding(p, m, res.layer_map)
            break
    if args.count_layer_maps:
        print(f"mappings examined: {examined}")
        return 0
    if found is None:
        print(f"no valid folding found ({examined} mappings examined)")
        return 0
    print(pseudo_folding_to_text(found), end="")
    return 0


def _cmd_enumerate(args) -> int:
    if not args.tree:
        print("only --tree enumeration is supported", file=sys.stderr)
        return 2
    try:
        h, w = (int(x) for x in args.bbox.lower().split("x"))
    except ValueError:
        print(f"bad --bbox value: {args.bbox}", file=sys.stderr)
        return 2
    if args.minimal_foldable:
        shapes = minimal_foldable_set((h, w))
    else:
        shapes = enumerate_family(FamilySpec("TreeShaped", (h, w)))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, p in enumerate(shapes):
            (outdir / f"shape_{i:05d}.txt").write_text(serialize(p))
        print(f"wrote {len(shapes)} shapes to {outdir}")
    else:
        print("\n".join(serialize(p) for p in shapes), end="")
    return 0


def _cmd_nets(args) -> int:
    print("\n".join(f"# type {net_type(p)}\n{serialize(p)}"
                    for p in cube_nets()), end="")
    return 0


def _cmd_stamp(args) -> int:
    print(stamp_fold_count(args.k))
    return 0


def _cmd_verify_counts(args) -> int:
    report = verify_counts()
    for chk in report["checks"]:
        status = "PASS" if chk["pass"] else "FAIL"
        print(f"{status} {chk['name']}: {chk['actual']} "
              f"(expected {chk['expected']}, {chk['seconds']}s)")
    return 0 if report["all_pass"] else 1


def _cmd_render(args) -> int:
    p = _load(args.file)
    mapping = None
    if args.mapping is not None:
        found = None
        for i, m in enumerate(enumerate_consistent_mappings(
                p, surjective_only=False, up_to_rotation=True)):
            if i == args.mapping:
                found = m
                break
        if found is None:
            raise BadMappingIndex(f"no mapping with index {args.mapping}")
        mapping = found
    print(render(p, mapping, args.format), end="")
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cubefold",
        description="Decide and enumerate foldings of polyominoes onto "
                    "the unit cube.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="decide foldability of a shape")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_classify)

    s = sub.add_parser("solve", help="search for a pseudo-folding")
    s.add_argument("file")
    s.add_argument("--count-layer-maps", action="store_true")
    s.add_argument("--limit", type=int, default=None,
                   help="maximum number of mappings to examine")
    s.set_defaults(func=_cmd_solve)

    e = sub.add_parser("enumerate", help="enumerate shape families")
    e.add_argument("--tree", action="store_true")
    e.add_argument("--bbox", required=True, metavar="HxW")
    e.add_argument("--minimal-foldable", action="store_true")
    e.add_argument("--out", default=None, metavar="DIR")
    e.set_defaults(func=_cmd_enumerate)

    n = sub.add_parser("nets", help="print the 11 cube nets")
    n.set_defaults(func=_cmd_nets)

    st = sub.add_parser("stamp", help="count flat foldings of a 1xK strip")
    st.add_argument("k", type=int)
    st.set_defaults(func=_cmd_stamp)

    v = sub.add_parser("verify-counts",
                       help="recompute all published counts")
    v.set_defaults(func=_cmd_verify_counts)

    r = sub.add_parser("render", help="draw a shape as ascii or svg")
    r.add_argument("file")
    r.add_argument("--mapping", type=int, default=None, metavar="IDX")
    r.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    r.set_defaults(func=_cmd_render)
    return ap


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, BadMappingIndex,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
