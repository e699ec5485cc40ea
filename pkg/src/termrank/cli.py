"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (empty class, bad input
file, invalid move, interrupted enumeration), 2 on usage errors.  Row and
column numbers in the output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import classops, oracle, rank, realize
from .core import BinaryMatrix, DegreePair, parse_inline, parse_matrix
from .errors import TermRankError

SCHEMA_VERSION = 1


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return value


def _cells_arg(text: str) -> tuple[int, int, int, int]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected i1,i2,j1,j2") from None
    if len(values) != 4 or min(values) < 1:
        raise argparse.ArgumentTypeError("expected four positive indices i1,i2,j1,j2")
    return values  # type: ignore[return-value]


def _default_limit() -> int:
    env = os.environ.get("TERMRANK_LIMIT")
    if env:
        try:
            return _positive_int(env)
        except argparse.ArgumentTypeError:
            pass
    return classops.DEFAULT_LIMIT


# --- output -----------------------------------------------------------------

class _CellList(list):
    """1-based [row, col] pairs; rendered as (r,c) tokens."""


def _cells(cells) -> _CellList:
    return _CellList([i + 1, j + 1] for i, j in cells)


def _indices(ix) -> list[int]:
    return [i + 1 for i in sorted(ix)]


def _to_json(value: Any) -> Any:
    if isinstance(value, BinaryMatrix):
        return ["".join(map(str, row)) for row in value.rows]
    if isinstance(value, (list, tuple)):
        return [_to_json(v) for v in value]
    if isinstance(value, dict):
        return {k: _to_json(v) for k, v in value.items()}
    return value


def _render_value(key: str, value: Any) -> list[str]:
    if isinstance(value, BinaryMatrix):
        return [f"{key}:"] + ["  " + "".join(map(str, row)) for row in value.rows]
    if isinstance(value, bool):
        return [f"{key} = {'true' if value else 'false'}"]
    if isinstance(value, list) and value and isinstance(value[0], BinaryMatrix):
        out = []
        for k, item in enumerate(value, 1):
            out.extend(_render_value(f"{key}[{k}]", item))
        return out
    if isinstance(value, _CellList):
        return [f"{key} = " + " ".join(f"({a},{b})" for a, b in value)]
    if isinstance(value, list) and value and isinstance(value[0], list):
        return [f"{key}:"] + ["  " + " ".join(map(str, row)) for row in value]
    if isinstance(value, list):
        return [f"{key} = " + " ".join(map(str, value))]
    return [f"{key} = {value}"]


def emit(command: str, inputs: dict, result: dict, certificates: dict, as_json: bool, out) -> None:
    if as_json:
        doc = {
            "v": SCHEMA_VERSION,
            "command": command,
            "inputs": _to_json(inputs),
            "result": _to_json(result),
            "certificates": _to_json(certificates),
        }
        out.write(json.dumps(doc, sort_keys=False) + "\n")
        return
    lines: list[str] = []
    for section in (result, certificates):
        for key, value in section.items():
            lines.extend(_render_value(key, value))
    out.write("\n".join(lines) + "\n")


# --- argument helpers ---------------------------------------------------------

def _load_matrix(args) -> BinaryMatrix:
    if args.inline is not None:
        return parse_inline(args.inline)
    with open(args.matrix, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


# --- commands -------------------------------------------------------------------

def cmd_rank(args, A):
    value, witness = rank.t_term_rank(A, args.t)
    return {"matrix": A, "t": args.t}, {f"rho_{args.t}": value}, {"witness": _cells(witness.cells)}


def cmd_cover(args, A):
    cover = rank.min_cover(A, args.t)
    return (
        {"matrix": A, "t": args.t},
        {"weight": cover.weight},
        {"rows": _indices(cover.rows), "columns": _indices(cover.columns)},
    )


def cmd_profile(args, A):
    prof = rank.rank_profile(A, args.tmax)
    return {"matrix": A, "tmax": args.tmax}, {"profile": list(prof.values)}, {}


def cmd_strength(args, A):
    return {"matrix": A}, {"strength": rank.strength(A)}, {}


def cmd_nested(args, A):
    ns = rank.nested_selections(A, args.t)
    certs = {f"K_{j}": _cells(layer.cells) for j, layer in enumerate(ns.layers, 1)}
    return {"matrix": A, "t": args.t}, {"sizes": list(ns.sizes)}, certs


def cmd_interchange(args, A):
    i1, i2, j1, j2 = args.cells
    move = rank.InterchangeMove((i1 - 1, i2 - 1), (j1 - 1, j2 - 1))
    return {"matrix": A, "cells": list(args.cells)}, {"matrix": rank.apply_interchange(A, move)}, {}


def cmd_pad(args, A):
    P = rank.padded_matrix(A, args.t, args.p)
    return {"matrix": A, "t": args.t, "p": args.p}, {"rows": P.m, "cols": P.n, "matrix": P}, {}


MATRIX_COMMANDS = {
    "rank": cmd_rank,
    "cover": cmd_cover,
    "profile": cmd_profile,
    "strength": cmd_strength,
    "nested": cmd_nested,
    "interchange": cmd_interchange,
    "pad": cmd_pad,
}


def _pair_inputs(pair: DegreePair, **extra) -> dict:
    return {"R": list(pair.R), "S": list(pair.S), **extra}


def class_check(args, pair):
    return _pair_inputs(pair), {"nonempty": classops.is_nonempty(pair)}, {}


def class_construct(args, pair):
    return _pair_inputs(pair), {"matrix": classops.construct_member(pair)}, {}


def class_structure(args, pair):
    T = classops.structure_matrix(pair)
    return _pair_inputs(pair), {"structure": [list(row) for row in T]}, {}


def class_maxrank(args, pair):
    return _pair_inputs(pair, t=args.t), {f"maxrho_{args.t}": classops.max_t_term_rank(pair, args.t)}, {}


def class_enumerate(args, pair):
    members: list[BinaryMatrix] = []
    partial = False
    try:
        for A in classops.enumerate_class(pair, args.limit):
            members.append(A)
    except KeyboardInterrupt:
        partial = True
    result = {"count": len(members), "partial": partial, "members": members}
    return _pair_inputs(pair, limit=args.limit), result, {}


def class_sample(args, pair):
    A = classops.sample_class(pair, args.steps, args.seed)
    return _pair_inputs(pair, steps=args.steps, seed=args.seed), {"matrix": A}, {}


def class_realize(args, pair):
    jr = realize.joint_realizer(pair, args.t)
    A, C = jr.in_original_order()
    prof = rank.rank_profile(A, args.t)
    result = {
        "max_profile": list(jr.max_profile.values),
        "profile": list(prof.values),
        "counts": list(jr.counts),
        "matrix": A,
    }
    witness = sorted((jr.row_perm[i], jr.col_perm[j]) for i, j in jr.witness(args.t))
    return _pair_inputs(pair, t=args.t), result, {"C": C, "witness": _cells(witness)}


def class_nestedpair(args, pair):
    inner = DegreePair.parse(args.inner)
    A, A2 = realize.nested_pair(pair, inner, args.t)
    inputs = {"outer": _pair_inputs(pair), "inner": _pair_inputs(inner), "t": args.t}
    return inputs, {"outer_matrix": A, "inner_matrix": A2}, {}


CLASS_COMMANDS = {
    "check": class_check,
    "construct": class_construct,
    "structure": class_structure,
    "maxrank": class_maxrank,
    "enumerate": class_enumerate,
    "sample": class_sample,
    "realize": class_realize,
    "nestedpair": class_nestedpair,
}


def oracle_rank(args):
    A = _load_matrix(args)
    return {"matrix": A, "t": args.t}, {f"rho_{args.t}": oracle.brute_rank(A, args.t)}, {}


def oracle_cover(args):
    A = _load_matrix(args)
    return {"matrix": A, "t": args.t}, {"weight": oracle.brute_cover(A, args.t)}, {}


def oracle_maxrank(args):
    pair = DegreePair.parse(args.pair)
    value = oracle.brute_max_rank(pair, args.t, args.limit)
    return _pair_inputs(pair, t=args.t), {f"maxrho_{args.t}": value}, {}


def oracle_nestedpair(args):
    outer = DegreePair.parse(args.pair)
    inner = DegreePair.parse(args.inner)
    exists = oracle.brute_nested_pair(outer, inner, args.limit)
    return {"outer": _pair_inputs(outer), "inner": _pair_inputs(inner)}, {"exists": exists}, {}


ORACLE_COMMANDS = {
    "rank": oracle_rank,
    "cover": oracle_cover,
    "maxrank": oracle_maxrank,
    "nestedpair": oracle_nestedpair,
}


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    matrix_src = argparse.ArgumentParser(add_help=False)
    group = matrix_src.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help="matrix file, one row of 0/1 per line")
    group.add_argument("--inline", help='matrix inline, rows separated by ";" e.g. "10;01"')

    pair_src = argparse.ArgumentParser(add_help=False)
    pair_src.add_argument("--pair", required=True, help='degree pair "R=2,2,1;S=2,2,1"')

    parser = argparse.ArgumentParser(prog="termrank", description="t-term rank toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", parents=[common, matrix_src], help="t-term rank with witness")
    p.add_argument("--t", type=_positive_int, required=True)
    p = sub.add_parser("cover", parents=[common, matrix_src], help="minimum line cover")
    p.add_argument("--t", type=_positive_int, required=True)
    p = sub.add_parser("profile", parents=[common, matrix_src], help="rho_0..rho_K")
    p.add_argument("--tmax", type=_positive_int, required=True)
    sub.add_parser("strength", parents=[common, matrix_src], help="smallest t with rho_t = n")
    p = sub.add_parser("nested", parents=[common, matrix_src], help="nested selections K_1..K_t")
    p.add_argument("--t", type=_positive_int, required=True)
    p = sub.add_parser("interchange", parents=[common, matrix_src], help="apply an interchange")
    p.add_argument("--cells", type=_cells_arg, required=True, metavar="i1,i2,j1,j2")
    p = sub.add_parser("pad", parents=[common, matrix_src], help="padding matrix A*")
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--p", type=_nonnegative_int, required=True)

    cls = sub.add_parser("class", help="operations on a class A(R,S)")
    csub = cls.add_subparsers(dest="action", required=True)
    for name in ("check", "construct", "structure"):
        csub.add_parser(name, parents=[common, pair_src])
    p = csub.add_parser("maxrank", parents=[common, pair_src])
    p.add_argument("--t", type=_positive_int, required=True)
    p = csub.add_parser("enumerate", parents=[common, pair_src])
    p.add_argument("--limit", type=_positive_int, default=_default_limit())
    p = csub.add_parser("sample", parents=[common, pair_src])
    p.add_argument("--steps", type=_nonnegative_int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p = csub.add_parser("realize", parents=[common, pair_src])
    p.add_argument("--t", type=_positive_int, required=True)
    p = csub.add_parser("nestedpair", parents=[common, pair_src], help="--pair is the outer class")
    p.add_argument("--inner", required=True)
    p.add_argument("--t", type=_positive_int, required=True)

    orc = sub.add_parser("oracle", help="brute-force reference answers")
    osub = orc.add_subparsers(dest="action", required=True)
    for name in ("rank", "cover"):
        p = osub.add_parser(name, parents=[common, matrix_src])
        p.add_argument("--t", type=_positive_int, required=True)
    p = osub.add_parser("maxrank", parents=[common, pair_src])
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--limit", type=_positive_int, default=_default_limit())
    p = osub.add_parser("nestedpair", parents=[common, pair_src], help="--pair is the outer class")
    p.add_argument("--inner", required=True)
    p.add_argument("--limit", type=_positive_int, default=_default_limit())
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command in MATRIX_COMMANDS:
            inputs, result, certs = MATRIX_COMMANDS[args.command](args, _load_matrix(args))
            name = args.command
        elif args.command == "class":
            pair = DegreePair.parse(args.pair)
            inputs, result, certs = CLASS_COMMANDS[args.action](args, pair)
            name = f"class {args.action}"
        else:
            inputs, result, certs = ORACLE_COMMANDS[args.action](args)
            name = f"oracle {args.action}"
    except (TermRankError, OSError, ValueError) as exc:
        err.write(f"termrank: error: {exc}\n")
        return 1
    emit(name, inputs, result, certs, args.json, out)
    if result.get("partial"):
        err.write("termrank: interrupted, output is partial\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
