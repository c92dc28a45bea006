"""Command line interface: ``coiso report|verify-all|branch|poisson-check|list``.

Exit status: 0 clean, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .catalog import CatalogError, default_catalog_path, find, load, verify_entry
from .homog import InadmissiblePair, verify_theorems
from .repth import branch
from .rootsys import RootSystemError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled points")
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="largest rank of G for series entries")
    common.add_argument("--catalog", default=argparse.SUPPRESS, help="catalog file or directory (default: $COISO_CATALOG or bundled)")

    p = argparse.ArgumentParser(prog="coiso", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("report", parents=[common], help="numerics and theorem checks for one pair")
    r.add_argument("label")
    v = sub.add_parser("verify-all", parents=[common], help="recompute every expected value in the catalog")
    v.add_argument("--points", type=int, default=100)
    v.add_argument("--jobs", type=int, default=0, help="worker processes (0: one per CPU, 1: in-process)")
    b = sub.add_parser("branch", parents=[common], help="decompose a G-module over H")
    b.add_argument("label")
    b.add_argument("weight", help='fundamental coordinates "1,0,2" (torus charges after ";") or "adjoint"')
    c = sub.add_parser("poisson-check", parents=[common], help="relations and Poisson ranks of invariant sets")
    c.add_argument("label")
    c.add_argument("--points", type=int, default=100)
    sub.add_parser("list", parents=[common], help="catalog labels")
    return p


def _options(ns):
    return {
        "format": getattr(ns, "format", "text"),
        "seed": getattr(ns, "seed", 0),
        "bound": getattr(ns, "bound", None),
        "catalog": getattr(ns, "catalog", None) or str(default_catalog_path()),
    }


@lru_cache(maxsize=4)
def _entries(path: str, bound):
    return load(path, bound)


def _entry(opts, label):
    try:
        return find(_entries(opts["catalog"], opts["bound"]), label)
    except KeyError:
        raise UsageError(f"unknown label {label!r} (see 'coiso list')") from None


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def cmd_report(opts, ns) -> tuple[int, str]:
    entry = _entry(opts, ns.label)
    try:
        rep = verify_theorems(entry.embedding)
    except InadmissiblePair as exc:
        raise UsageError(str(exc)) from None
    d = rep.to_dict()
    code = EXIT_OK if rep.ok else EXIT_FAIL
    if opts["format"] == "json":
        return code, _dump(d)
    if opts["format"] == "csv":
        flat = {k: v for k, v in d.items() if k not in ("inequality_verdicts", "diamond_verdicts")}
        flat["diamond_1"], flat["diamond_2"] = d["diamond_verdicts"]
        for k, v in sorted(d["inequality_verdicts"].items()):
            flat[f"check:{k}"] = v
        keys = sorted(flat)
        return code, _csv([[flat[k] for k in keys]], keys)
    e = entry.embedding
    lines = [
        f"{rep.label}: G = {e.big}, H = {e.small}",
        f"  ctilde = {rep.c_tilde}, rtilde = {rep.r_tilde}, dim g//H = {rep.quotient_dim}",
        f"  dim g^T_H = {rep.fixed_dim}, dim nullcone = {rep.nullcone_dim}, defect = {rep.defect}",
        f"  s-regular = {rep.s_regular}, diamonds = {list(rep.diamond_verdicts)}",
    ]
    for k, v in sorted(rep.inequality_verdicts.items()):
        lines.append(f"  {k:40s} {v}")
    return code, "\n".join(lines) + "\n"


def _verify_one(args):
    label, path, bound, seed, points = args
    entry = find(_entries(path, bound), label)
    return verify_entry(entry, seed=seed, points=points).to_dict()


def cmd_verify_all(opts, ns) -> tuple[int, str]:
    entries = _entries(opts["catalog"], opts["bound"])
    labels = sorted(e.label for e in entries)
    work = [(label, opts["catalog"], opts["bound"], opts["seed"], ns.points) for label in labels]
    jobs = ns.jobs or min(len(work), os.cpu_count() or 1)
    if jobs <= 1 or len(work) <= 1:
        results = [_verify_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, work))
    bad = [r for r in results if not r["ok"]]
    code = EXIT_FAIL if bad else EXIT_OK
    summary = {
        "entries": len(results),
        "failed": len(bad),
        "quantities": sum(len(r["quantities"]) for r in results),
        "mismatches": sum(1 for r in results for q in r["quantities"] if q["status"] == "mismatch"),
        "seed": opts["seed"],
        "points": ns.points,
    }
    if opts["format"] == "json":
        return code, _dump({"entries": results, "summary": summary})
    if opts["format"] == "csv":
        rows = [
            [r["label"], q["name"], q["status"], json.dumps(q["expected"], ensure_ascii=False), json.dumps(q["computed"], ensure_ascii=False)]
            for r in results
            for q in r["quantities"]
        ]
        return code, _csv(rows, ["label", "quantity", "status", "expected", "computed"])
    lines = []
    for r in results:
        counts = {s: sum(1 for q in r["quantities"] if q["status"] == s) for s in ("match", "mismatch", "skipped")}
        lines.append(f"{'ok  ' if r['ok'] else 'FAIL'} {r['label']:24s} {counts['match']} match, {counts['mismatch']} mismatch, {counts['skipped']} skipped")
        for q in r["quantities"]:
            if q["status"] == "mismatch":
                lines.append(f"     {q['name']}: expected {q['expected']!r}, computed {q['computed']!r} {q['reason']}".rstrip())
    lines.append(
        f"summary: {summary['entries']} entries, {summary['quantities']} quantities, "
        f"{summary['mismatches']} mismatches, {summary['failed']} failing entries (seed {summary['seed']}, {ns.points} points)"
    )
    return code, "\n".join(lines) + "\n"


def cmd_branch(opts, ns) -> tuple[int, str]:
    entry = _entry(opts, ns.label)
    e = entry.embedding
    try:
        lam = e.big.parse_weight(ns.weight)
        e.big.check_weight(lam, dominant=True)
    except (ValueError, RootSystemError) as exc:
        raise UsageError(f"bad weight {ns.weight!r}: {exc}") from None
    dec = branch(e, lam)
    if opts["format"] == "json":
        return EXIT_OK, _dump({"label": entry.label, "weight": str(lam), "dim": dec.dim, "summands": dec.to_list(), "text": dec.format()})
    if opts["format"] == "csv":
        return EXIT_OK, _csv([[item["weight"], item["mult"]] for item in dec.to_list()], ["weight", "mult"])
    return EXIT_OK, dec.format() + "\n"


def cmd_poisson_check(opts, ns) -> tuple[int, str]:
    entry = _entry(opts, ns.label)
    if not entry.invariants:
        raise UsageError(f"{entry.label} has no invariant sets")
    trimmed = type(entry)(
        entry.label, entry.embedding, {}, entry.provenance, entry.realization, entry.invariants, entry.notes, entry.source_file
    )
    v = verify_entry(trimmed, seed=opts["seed"], points=ns.points)
    qs = [q for q in v.quantities if "." in q.name or q.name.startswith("invariants[")]
    bad = [q for q in qs if q.status == "mismatch"]
    code = EXIT_FAIL if bad else EXIT_OK
    if opts["format"] == "json":
        return code, _dump({"label": entry.label, "ok": not bad, "quantities": [q.to_dict() for q in qs]})
    if opts["format"] == "csv":
        rows = [[q.name, q.status, json.dumps(q.to_dict()["expected"]), json.dumps(q.to_dict()["computed"])] for q in qs]
        return code, _csv(rows, ["quantity", "status", "expected", "computed"])
    lines = [f"{q.status:9s} {q.name}: expected {q.to_dict()['expected']!r}, computed {q.to_dict()['computed']!r} {q.reason}".rstrip() for q in qs]
    return code, "\n".join(lines) + "\n"


def cmd_list(opts, ns) -> tuple[int, str]:
    entries = sorted(_entries(opts["catalog"], opts["bound"]), key=lambda e: e.label)
    rows = [[e.label, str(e.embedding.big), str(e.embedding.small), e.provenance] for e in entries]
    if opts["format"] == "json":
        return EXIT_OK, _dump([dict(zip(("label", "G", "H", "provenance"), r)) for r in rows])
    if opts["format"] == "csv":
        return EXIT_OK, _csv(rows, ["label", "G", "H", "provenance"])
    return EXIT_OK, "".join(f"{r[0]:24s} {r[1]:>6s} > {r[2]:<10s} {r[3]}\n" for r in rows)


COMMANDS = {
    "report": cmd_report,
    "verify-all": cmd_verify_all,
    "branch": cmd_branch,
    "poisson-check": cmd_poisson_check,
    "list": cmd_list,
}


def run(argv=None) -> tuple[int, str, str]:
    """Parse and execute; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            ns = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), "", err.getvalue()
    opts = _options(ns)
    try:
        code, out = COMMANDS[ns.command](opts, ns)
    except (UsageError, CatalogError, FileNotFoundError) as exc:
        return EXIT_USAGE, "", f"coiso: error: {exc}\n"
    return code, out, ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
