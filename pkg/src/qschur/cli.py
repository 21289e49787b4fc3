"""Command line front end.

Exit status: 0 on success, 1 when a check fails or output differs from a
golden file, 2 on usage or scope errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from . import __version__
from .combinatorics import Multicharge, Multipartition, graded_standard, residue_sequence
from .errors import NotLevelTwo, PositivityViolation, QSchurError, Unsupported
from .fock import (
    GradedMatrix,
    cartan_matrix,
    decomposition_matrix,
    dim_hecke_block,
    dim_lower,
    dim_schur_block,
    dim_upper,
    is_conjectural,
    level2_decomposition,
    tilting_matrix,
)
from .oracle import conjugate_duality_check, verify_block_invariants
from .roots import Block, RootVector, blocks, check_scope

THREADS_ENV = "QSCHUR_THREADS"
COMMANDS = ("blocks", "tableaux", "decomp", "cartan", "dims", "level2", "tilting", "verify")
FORMATS = ("json", "csv", "latex", "text")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qschur",
        description="Graded decomposition numbers of cyclotomic quiver Schur algebras.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=name != "tableaux", help="number of boxes")
        sp.add_argument("--charge", required=True, help="multicharge, e.g. 0,0,0")
        sp.add_argument("--e", type=int, default=0, help="quantum characteristic (0 or >= 2)")
        sp.add_argument("--block", help="block selector, e.g. a-1:1,a0:3,a1:1")
        sp.add_argument("--shape", help="multipartition, e.g. 2,1|1|-")
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--golden", help="compare the JSON result with this file")
        sp.add_argument(
            "--threads",
            type=int,
            default=int(os.environ.get(THREADS_ENV, "1") or 1),
            help=f"worker processes for per-block work (default ${THREADS_ENV} or 1)",
        )
    return p


# ---------------------------------------------------------------------------


def _select_blocks(args, mc: Multicharge) -> list[Block]:
    found = blocks(args.n, mc)
    if args.block:
        beta = RootVector.parse(args.block, mc.e)
        found = [b for b in found if b.beta == beta]
        if not found:
            raise UsageError(f"no multipartition of {args.n} has content {beta}")
    if args.shape:
        mu = Multipartition.parse(args.shape)
        found = [b for b in found if mu in b.members]
        if not found:
            raise UsageError(f"{mu} is not a multipartition of {args.n} at level {mc.level}")
    return found


def _parallel_map(fn: Callable, items: list, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _matrix_job(job):
    kind, block, mc = job
    if kind == "decomp":
        return decomposition_matrix(block, mc)
    if kind == "cartan":
        return cartan_matrix(decomposition_matrix(block, mc))
    if kind == "level2":
        return level2_decomposition(block, mc)
    if kind == "tilting":
        return tilting_matrix(block, mc)
    raise ValueError(kind)


def _verify_job(job):
    block, mc = job
    reports = [verify_block_invariants(block, mc)]
    if mc.e == 0 or mc.level == 2:
        reports.append(conjugate_duality_check(block, mc))
    return reports


# ---------------------------------------------------------------------------
# rendering


def _render_matrices(found: list[Block], mats: list[GradedMatrix], fmt: str, single: bool) -> tuple[str, Any]:
    if single:
        return mats[0].render(fmt), mats[0].to_json()
    doc = [{"block": b.key, "defect": b.defect, "matrix": m.to_json()} for b, m in zip(found, mats)]
    if fmt == "json":
        return json.dumps(doc, indent=1, sort_keys=True) + "\n", doc
    marker = "%" if fmt == "latex" else "#"
    chunks = [f"{marker} block {b.key} defect {b.defect}\n" + m.render(fmt) for b, m in zip(found, mats)]
    return "\n".join(chunks), doc


def _render_records(records: list[dict], columns: list[str], fmt: str, doc: Any) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: r[k] for k in columns})
        return buf.getvalue()
    if fmt == "text":
        return "".join("  ".join(f"{k}={r[k]}" for k in columns) + "\n" for r in records)
    raise UsageError(f"format {fmt!r} is not available for this command")


def _cmd_blocks(args, mc):
    found = _select_blocks(args, mc)
    doc = [b.to_json() for b in found]
    records = [{"block": b.key or "0", "defect": b.defect, "members": " ".join(map(str, b.members))} for b in found]
    return _render_records(records, ["block", "defect", "members"], args.format, doc), doc, True


def _cmd_tableaux(args, mc):
    if not args.shape:
        raise UsageError("tableaux needs --shape")
    lam = Multipartition.parse(args.shape)
    if lam.level != mc.level:
        raise UsageError(f"{lam} has level {lam.level} but the multicharge has level {mc.level}")
    if args.n is not None and args.n != lam.n:
        raise UsageError(f"--n {args.n} does not match |{lam}| = {lam.n}")
    check_scope(lam.n, mc)
    records, doc = [], []
    for t, d, cd in graded_standard(lam, mc):
        res = ",".join(map(str, residue_sequence(t, mc)))
        records.append({"tableau": str(t), "deg": d, "codeg": cd, "residues": res})
        doc.append({"rows": t.rows(), "deg": d, "codeg": cd, "residues": list(residue_sequence(t, mc))})
    doc = {"shape": str(lam), "tableaux": doc}
    return _render_records(records, ["tableau", "deg", "codeg", "residues"], args.format, doc), doc, True


def _cmd_matrix(args, mc):
    found = _select_blocks(args, mc)
    if args.command == "level2" and mc.level != 2:
        raise NotLevelTwo("level2 needs a multicharge of level 2")
    mats = _parallel_map(_matrix_job, [(args.command, b, mc) for b in found], args.threads)
    text, doc = _render_matrices(found, mats, args.format, single=bool(args.block) and len(found) == 1)
    return text, doc, True


def _cmd_dims(args, mc):
    found = _select_blocks(args, mc)
    only = Multipartition.parse(args.shape) if args.shape else None
    records, doc = [], []
    for b in found:
        mods = {}
        for mu in b.members:
            if only is not None and mu != only:
                continue
            up, low = dim_upper(mu, mc), dim_lower(mu, mc)
            mods[str(mu)] = {"upper": up.to_text(), "lower": low.to_text()}
            records.append({"block": b.key, "object": str(mu), "upper": up.to_text(), "lower": low.to_text()})
        schur, hecke = dim_schur_block(b, mc).to_text(), dim_hecke_block(b, mc).to_text()
        records.append({"block": b.key, "object": "block", "upper": schur, "lower": hecke})
        doc.append({"block": b.key, "defect": b.defect, "schur": schur, "hecke": hecke, "modules": mods})
    return _render_records(records, ["block", "object", "upper", "lower"], args.format, doc), doc, True


def _cmd_verify(args, mc):
    found = _select_blocks(args, mc)
    results = _parallel_map(_verify_job, [(b, mc) for b in found], args.threads)
    reports = [r for rs in results for r in rs]
    ok = all(r.passed for r in reports)
    doc = {"passed": ok, "reports": [r.to_json() for r in reports]}
    if args.format == "json":
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    elif args.format == "text":
        lines = [f"block {r.scope['block'] or '0'}: {r.summary()}" for r in reports]
        lines.append("all checks passed" if ok else "CHECK FAILURES")
        text = "\n".join(lines) + "\n"
    else:
        raise UsageError(f"format {args.format!r} is not available for verify")
    return text, doc, ok


HANDLERS = {
    "blocks": _cmd_blocks,
    "tableaux": _cmd_tableaux,
    "decomp": _cmd_matrix,
    "cartan": _cmd_matrix,
    "level2": _cmd_matrix,
    "tilting": _cmd_matrix,
    "dims": _cmd_dims,
    "verify": _cmd_verify,
}


# ---------------------------------------------------------------------------
# golden files


def _matrix_triples(obj) -> set:
    return GradedMatrix.from_json(obj).triples()


def _is_matrix(obj) -> bool:
    return isinstance(obj, dict) and {"rows", "cols", "entries"} <= set(obj)


def golden_matches(doc: Any, golden: Any) -> bool:
    """Matrices compare as entry triples; everything else as canonical JSON."""
    if _is_matrix(doc) and _is_matrix(golden):
        return _matrix_triples(doc) == _matrix_triples(golden)
    if isinstance(doc, list) and isinstance(golden, list) and len(doc) == len(golden):
        if all(isinstance(x, dict) and "matrix" in x for x in doc + golden):
            return all(
                a["block"] == b["block"] and _matrix_triples(a["matrix"]) == _matrix_triples(b["matrix"])
                for a, b in zip(doc, golden)
            )
    return json.dumps(doc, sort_keys=True) == json.dumps(golden, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            mc = Multicharge.parse(args.charge, args.e)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        n = args.n if args.n is not None else (Multipartition.parse(args.shape).n if args.shape else 0)
        if n < 0:
            raise UsageError("--n must be nonnegative")
        check_scope(n, mc)
        text, doc, ok = HANDLERS[args.command](args, mc)
    except (UsageError, Unsupported, NotLevelTwo, ValueError) as exc:
        print(f"qschur: error: {exc}", file=sys.stderr)
        return 2
    except (PositivityViolation, QSchurError) as exc:
        print(f"qschur: computation failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    if is_conjectural(n, mc) and args.command in ("decomp", "cartan", "tilting", "verify"):
        print(f"note: conjectural result (e={mc.e} with level {mc.level})", file=sys.stderr)
    if args.golden:
        with open(args.golden, encoding="utf-8") as fh:
            golden = json.load(fh)
        if not golden_matches(doc, golden):
            print(f"qschur: output differs from golden file {args.golden}", file=sys.stderr)
            return 1
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
