"""Command-line front end.

    lrcpir construct --n-prime 6 --k 4 --r 2 --delta 2 --field 'GF(2^3):poly=[1,0,1,1]'
    lrcpir check --code pyramid.json
    lrcpir ematrix --code pyramid.json --trace trace.json
    lrcpir validate --code pyramid.json --matrix E.txt
    lrcpir search-e --code pyramid.json
    lrcpir capacity --n 7 --k 4 --files 2
    lrcpir verdict --code pyramid.json --out E.txt
    lrcpir dmin --code pyramid.json

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on bad
input.  ``--json`` switches stdout to a machine-readable report.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import capacity as cap
from .code import LinearCode, reed_solomon
from .ematrix import brute_force_search, construct, validate
from .errors import BudgetExceeded, LrcPirError
from .formats import binary_to_json, dump_json, load_code, lrc_to_json
from .gf import FieldSpec, default_field
from .lrc import LrcCode, build_from_mds_parent, check_compliance
from .matrix import BinaryMatrix

log = logging.getLogger("lrcpir")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    inputs: dict
    outputs: dict
    field: str | None
    seed: int | None
    verbosity: int
    json: bool


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrcpir", description=__doc__.split("\n\n")[0])
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("construct", "build a locality code from a Reed-Solomon parent")
    p.add_argument("--n-prime", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--field", help="field literal, e.g. 'GF(2^4)' (default: smallest GF(2^m) that fits)")
    p.add_argument("--out", type=Path)

    p = add("check", "print the compliance report of a locality code")
    p.add_argument("--code", type=Path, required=True)

    p = add("ematrix", "construct the witness matrix E")
    p.add_argument("--code", type=Path, required=True)
    p.add_argument("--trace", type=Path, help="write the swap trace as JSON")
    p.add_argument("--out", type=Path, help="write E as 0/1 text")

    p = add("validate", "validate a candidate E against a code")
    p.add_argument("--code", type=Path, required=True)
    p.add_argument("--matrix", type=Path, required=True)

    p = add("search-e", "exhaustive backtracking search for E")
    p.add_argument("--code", type=Path, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, help="shuffle candidate order deterministically")
    p.add_argument("--out", type=Path)

    p = add("capacity", "finite or asymptotic MDS-PIR capacity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--files", type=int, help="number of files (omit for the asymptotic value)")

    p = add("verdict", "capacity-achievability verdict with witness")
    p.add_argument("--code", type=Path, required=True)
    p.add_argument("--out", type=Path, help="write the witness E as 0/1 text")

    p = add("dmin", "minimum distance of a code")
    p.add_argument("--code", type=Path, required=True)
    return ap


def _config(args) -> RunConfig:
    ins = {k: v for k, v in vars(args).items() if k in ("code", "matrix") and v is not None}
    outs = {k: v for k, v in vars(args).items() if k in ("out", "trace") and v is not None}
    return RunConfig(
        args.cmd, ins, outs, getattr(args, "field", None), getattr(args, "seed", None),
        args.verbose, args.json,
    )


def _emit(cfg: RunConfig, report: dict, text: str):
    sys.stdout.write(dump_json(report) if cfg.json else text.rstrip("\n") + "\n")


def _lrc(path) -> LrcCode:
    code = load_code(path)
    if not isinstance(code, LrcCode):
        raise LrcPirError(f"{path} is not a locality-code descriptor (needs r and delta)")
    return code


def _write(path: Path | None, text: str):
    if path is not None:
        path.write_text(text)
        log.info("wrote %s", path)


def cmd_construct(args, cfg) -> int:
    if args.field:
        field = FieldSpec.parse(args.field)
    else:
        m = 1
        while 2**m - 1 < args.n_prime:
            m += 1
        field = default_field(2, m)
    parent = reed_solomon(field, args.n_prime, args.k)
    code = build_from_mds_parent(parent, args.r, args.delta)
    desc = dump_json(lrc_to_json(code))
    _write(args.out, desc)
    sys.stdout.write(desc)
    return 0


def cmd_check(args, cfg) -> int:
    report = check_compliance(_lrc(args.code))
    d = report.as_dict()
    text = "\n".join(f"{k}: {v}" for k, v in d.items())
    _emit(cfg, d, text)
    return 0 if report.ok else 1


def cmd_ematrix(args, cfg) -> int:
    code = _lrc(args.code)
    E, trace = construct(code)
    _write(args.out, E.matrix.to_text())
    if args.trace is not None:
        _write(args.trace, dump_json(trace.as_dict()))
    _emit(cfg, {"E": binary_to_json(E.matrix), "trace": trace.as_dict()}, E.matrix.to_text())
    return 0


def cmd_validate(args, cfg) -> int:
    code = load_code(args.code)
    E = BinaryMatrix.from_text(args.matrix.read_text())
    report = validate(E, code)
    lines = [f"target weight: {report.target}"]
    for i, (w, ok) in enumerate(zip(report.row_weights, report.row_correctable), 1):
        lines.append(f"row {i}: weight {w}, {'correctable' if ok else 'NOT correctable'}")
    lines.append(f"column weights: {report.col_weights}")
    lines.append(f"verdict: {'valid' if report.verdict else 'invalid'}")
    _emit(cfg, report.as_dict(), "\n".join(lines))
    return 0 if report.verdict else 1


def cmd_search(args, cfg) -> int:
    code = load_code(args.code)
    try:
        E = brute_force_search(code, budget=args.budget, seed=args.seed)
    except BudgetExceeded as exc:
        _emit(cfg, {"status": "BudgetExceeded", "detail": str(exc)}, f"budget exceeded: {exc}")
        return 1
    if E is None:
        _emit(cfg, {"status": "NotFound"}, "no witness exists")
        return 1
    _write(args.out, E.to_text())
    _emit(cfg, {"status": "Found", "E": binary_to_json(E)}, E.to_text())
    return 0


def cmd_capacity(args, cfg) -> int:
    value = cap.capacity(args.n, args.k, args.files)
    label = "C_inf" if args.files is None else f"C_{args.files}"
    _emit(
        cfg,
        {"n": args.n, "k": args.k, "files": args.files, "exact": str(value), "decimal": float(value)},
        f"{label} = {value} ~ {float(value):.10f}",
    )
    return 0


def cmd_verdict(args, cfg) -> int:
    v = cap.verdict(_lrc(args.code))
    if v.witness is not None:
        _write(args.out, v.witness.to_text())
    lines = [v.status]
    if v.reason:
        lines.append(f"reason: {v.reason}")
    lines.append(f"C_inf = {v.c_inf}")
    lines.append(f"C_f = {v.c_f}")
    if v.witness is not None:
        lines.append(f"witness ({v.method}):")
        lines.append(v.witness.to_text())
    _emit(cfg, v.as_dict(), "\n".join(lines))
    return 0 if v else 1


def cmd_dmin(args, cfg) -> int:
    code = load_code(args.code)
    lin: LinearCode = code.code if isinstance(code, LrcCode) else code
    d = lin.minimum_distance()
    _emit(cfg, {"n": lin.n, "k": lin.k, "dmin": d}, f"d_min = {d}")
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "check": cmd_check,
    "ematrix": cmd_ematrix,
    "validate": cmd_validate,
    "search-e": cmd_search,
    "capacity": cmd_capacity,
    "verdict": cmd_verdict,
    "dmin": cmd_dmin,
}


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(args)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), format="%(message)s")
    try:
        return COMMANDS[cfg.subcommand](args, cfg)
    except (LrcPirError, ValueError, OSError, KeyError) as exc:
        sys.stderr.write(f"lrcpir {cfg.subcommand}: {type(exc).__name__}: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
