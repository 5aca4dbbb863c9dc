"""Command-line front end: ``qchar compute | dominant | partitions | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import liealg
from .liealg import RootSystem, RootSystemError, root_system
from .lweight import LWeight
from .partitions import PartitionCtx, PartitionError, enumerate_J, index_set, mult_exponent
from .qcharacter import dominant_entries, full_character
from .verify import SUITES, run_suite

SCHEMA = "1"
CLI_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _valid_ranges(kind: str) -> str:
    return {
        "A": "A_n, n >= 1: every node 1..n",
        "B": "B_n, n >= 2: every node; partition formulas for 1 <= i < n",
        "C": "C_n, n >= 2: every node; partition formulas for 1 < i <= n",
        "D": "D_n, n >= 4: every node; partition formulas for 1 < i <= n-2",
    }[kind]


def _root_system(args) -> RootSystem:
    kind = args.type
    if args.rank < CLI_MIN_RANK[kind]:
        raise UsageError(f"rank {args.rank} too small for type {kind} ({_valid_ranges(kind)})")
    rs = root_system(kind, args.rank)
    if not 1 <= args.node <= rs.n:
        raise UsageError(f"node {args.node} out of range for {rs.name} ({_valid_ranges(kind)})")
    return rs


def _entry(x: LWeight, mult: int, n: int) -> dict[str, Any]:
    return {"monomial": x.triples(), "weight": list(x.weight(n)), "mult": mult}


def compute_document(rs: RootSystem, node: int, base_exp: int = 0, jobs: int = 1) -> dict[str, Any]:
    ch = full_character(rs, node, base_exp, jobs=jobs)
    entries = [_entry(x, m, rs.n) for x, m in ch.sorted_items()]
    return {
        "schema": SCHEMA,
        "meta": {"type": rs.kind, "rank": rs.n, "node": node, "base_exp": base_exp},
        "entries": entries,
        "totals": {"entries": len(entries), "mass": ch.total},
    }


def dominant_document(rs: RootSystem, node: int, base_exp: int = 0, r: int | None = None) -> dict[str, Any]:
    if node not in liealg.theorem_nodes(rs):
        raise UsageError(
            f"node {node} of {rs.name} has no partition formula ({_valid_ranges(rs.kind)})"
        )
    allowed = index_set(rs, node)
    if r is not None and r not in allowed:
        raise UsageError(f"r={r} not in I_{node} = {allowed} for {rs.name}")
    groups = []
    mass = 0
    for rr, entries in dominant_entries(rs, node, r).items():
        ctx = PartitionCtx(rs, node, rr)
        items = []
        for e in entries:
            item = _entry(e.lweight.shift(base_exp), e.mult, rs.n)
            item["partitions"] = [{"parts": list(p), "sign": s} for p, s in e.sources]
            if rs.kind == "D":
                item["class_exponent"] = mult_exponent(ctx, e.sources[0][0])
            items.append(item)
            mass += e.mult
        groups.append({"r": rr, "weight": list(rs.omega(rr)), "entries": items})
    return {
        "schema": SCHEMA,
        "meta": {"type": rs.kind, "rank": rs.n, "node": node, "base_exp": base_exp, "r": r},
        "groups": groups,
        "totals": {"entries": sum(len(g["entries"]) for g in groups), "mass": mass},
    }


def partitions_document(rs: RootSystem, node: int, r: int | None = None) -> dict[str, Any]:
    if node not in liealg.theorem_nodes(rs):
        raise UsageError(
            f"node {node} of {rs.name} has no partition formula ({_valid_ranges(rs.kind)})"
        )
    allowed = index_set(rs, node)
    if r is not None and r not in allowed:
        raise UsageError(f"r={r} not in I_{node} = {allowed} for {rs.name}")
    groups = []
    for rr in allowed:
        if r is not None and rr != r:
            continue
        fam = enumerate_J(PartitionCtx(rs, node, rr))
        groups.append({"r": rr, "by_length": {str(k): [list(p) for p in ps] for k, ps in fam.items()}})
    return {"schema": SCHEMA, "meta": {"type": rs.kind, "rank": rs.n, "node": node, "r": r},
            "groups": groups}


def dumps(doc: dict[str, Any]) -> str:
    """Canonical JSON text; parsing and re-dumping reproduces it exactly."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _mono_text(triples, notation: str) -> str:
    return LWeight(tuple(t) for t in triples).to_text(notation)


def _compute_text(doc: dict[str, Any], notation: str) -> str:
    m = doc["meta"]
    lines = [f"# {m['type']}{m['rank']} node {m['node']} base q^{m['base_exp']}"]
    for e in doc["entries"]:
        lines.append(f"{e['mult']}\t{tuple(e['weight'])}\t{_mono_text(e['monomial'], notation)}")
    lines.append(f"# entries {doc['totals']['entries']}, mass {doc['totals']['mass']}")
    return "\n".join(lines) + "\n"


def _dominant_text(doc: dict[str, Any], notation: str) -> str:
    m = doc["meta"]
    lines = [f"# {m['type']}{m['rank']} node {m['node']} dominant l-weights"]
    for g in doc["groups"]:
        lines.append(f"r = {g['r']}  weight {tuple(g['weight'])}")
        for e in g["entries"]:
            src = " ".join(
                f"{tuple(s['parts'])}{'+' if s['sign'] > 0 else '-' if s['sign'] < 0 else ''}"
                for s in e["partitions"]
            )
            extra = f"  M={e['class_exponent']}" if "class_exponent" in e else ""
            lines.append(f"  {e['mult']}\t{_mono_text(e['monomial'], notation)}\t<- {src}{extra}")
    lines.append(f"# entries {doc['totals']['entries']}, mass {doc['totals']['mass']}")
    return "\n".join(lines) + "\n"


def _partitions_text(doc: dict[str, Any]) -> str:
    lines = []
    for g in doc["groups"]:
        for k, ps in g["by_length"].items():
            lines.append(f"r={g['r']} k={k}: " + " ".join(str(tuple(p)) for p in ps))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--node", required=True, type=int)
    p.add_argument("--base-exp", type=int, default=0, dest="base_exp")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--notation", choices=["w", "y"], default="w")
    p.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qchar", description="q-characters of fundamental modules")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="full q-character")
    _add_common(p)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("dominant", help="l-weights of dominant weight, with partitions")
    _add_common(p)
    p.add_argument("--r", type=int)

    p = sub.add_parser("partitions", help="the partition families J_{k,r}")
    _add_common(p)
    p.add_argument("--r", type=int)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--max-rank", type=int, default=5, dest="max_rank")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    return parser


def _run_verify(args) -> int:
    if args.max_rank < 1 or args.samples < 0:
        raise UsageError("--max-rank must be positive and --samples nonnegative")
    reports = run_suite(args.suite, args.max_rank, args.samples, args.seed)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    else:
        width = max(len(r.name) for r in reports)
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name:<{width}}  {status}  cases={r.cases:<6} {r.elapsed:8.3f}s")
            if not r.passed:
                lines.append(f"  counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            return _run_verify(args)
        rs = _root_system(args)
        if args.command == "compute":
            if args.jobs < 1:
                raise UsageError("--jobs must be at least 1")
            doc = compute_document(rs, args.node, args.base_exp, args.jobs)
            text = dumps(doc) if args.format == "json" else _compute_text(doc, args.notation)
        elif args.command == "dominant":
            doc = dominant_document(rs, args.node, args.base_exp, args.r)
            text = dumps(doc) if args.format == "json" else _dominant_text(doc, args.notation)
        else:
            doc = partitions_document(rs, args.node, args.r)
            text = dumps(doc) if args.format == "json" else _partitions_text(doc)
    except (UsageError, RootSystemError, PartitionError) as exc:
        print(f"qchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
