"""Command-line surface: code generation, single decodes and benchmarks.

Exit codes: 0 success, 2 usage/parameter error, 3 decode-level failure.
The bench report path writes the shot CSV and aggregate JSON and, by
default, renders summary figures alongside them.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bitmatrix import format_bits, parse_bits, read_matrix_text, write_matrix_text
from .codes import COLOR_SIZES, ConstructionError, make_code, tanner_graph, total_weight
from .decoder import BACKENDS, NonterminationError, decode
from .sim import SimConfig, aggregate, csv_rows, run_config, write_aggregate_json, write_shot_csv

OUTDIR_ENV = "GF2UF_OUTDIR"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2uf",
        description="GF(2) union-find decoding with offline/online elimination",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_out = os.environ.get(OUTDIR_ENV, ".")

    gen = sub.add_parser("gen", help="write a code's check matrices to files")
    _add_code_args(gen)
    gen.add_argument("--out-dir", default=default_out, help="output directory")
    gen.set_defaults(func=cmd_gen)

    dec = sub.add_parser("decode", help="decode one syndrome from a matrix file")
    dec.add_argument("--matrix", required=True, help="matrix in coordinate text format")
    dec.add_argument("--syndrome", required=True, help="syndrome as a 0/1 string")
    dec.add_argument("--backend", choices=BACKENDS, default="online")
    dec.set_defaults(func=cmd_decode)

    bench = sub.add_parser("bench", help="run a seeded benchmark grid")
    _add_code_args(bench, repeatable=True)
    bench.add_argument("--p", type=float, default=0.05, help="bit-flip probability")
    bench.add_argument("--shots", type=int, default=60)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument(
        "--backends", default="offline,online", help="comma-separated backend list"
    )
    bench.add_argument("--out-dir", default=default_out, help="output directory")
    bench.add_argument("--prefix", default=None, help="output file prefix")
    bench.add_argument(
        "--figures",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="render summary figures next to the CSV",
    )
    bench.set_defaults(func=cmd_bench)
    return parser


def _add_code_args(p: argparse.ArgumentParser, repeatable: bool = False) -> None:
    p.add_argument("--code", required=True, choices=("toric2d", "toric3d", "color666"))
    if repeatable:
        p.add_argument("--L", type=int, action="append", help="toric lattice size (repeatable)")
        p.add_argument(
            "--n",
            type=int,
            action="append",
            help=f"color666 qubit count (repeatable; known: {sorted(COLOR_SIZES)})",
        )
    else:
        p.add_argument("--L", type=int, help="toric lattice size")
        p.add_argument("--n", type=int, help=f"color666 qubit count (known: {sorted(COLOR_SIZES)})")
    p.add_argument("--Lx", type=int, help="color666 cells in x")
    p.add_argument("--Ly", type=int, help="color666 cells in y")


def _resolve_sizes(parser, args) -> list[int | tuple[int, int]]:
    """Turn the flag soup into a list of size parameters for make_code."""
    ls = args.L if isinstance(args.L, list) else ([args.L] if args.L is not None else [])
    ns = args.n if isinstance(args.n, list) else ([args.n] if args.n is not None else [])
    if args.code in ("toric2d", "toric3d"):
        if ns or args.Lx is not None or args.Ly is not None:
            parser.error("--n/--Lx/--Ly only apply to color666")
        if not ls:
            parser.error(f"{args.code} needs --L")
        return list(ls)
    if ls:
        parser.error("color666 takes --Lx/--Ly or --n, not --L")
    sizes: list[int | tuple[int, int]] = list(ns)
    if args.Lx is not None or args.Ly is not None:
        if args.Lx is None or args.Ly is None:
            parser.error("--Lx and --Ly must be given together")
        sizes.append((args.Lx, args.Ly))
    if not sizes:
        parser.error("color666 needs --Lx/--Ly or --n")
    return sizes


def cmd_gen(args, parser) -> int:
    sizes = _resolve_sizes(parser, args)
    if len(sizes) != 1:
        parser.error("gen takes exactly one size")
    code = make_code(args.code, sizes[0])
    os.makedirs(args.out_dir, exist_ok=True)
    stem = os.path.join(args.out_dir, f"{code.name}_{code.size_label}")
    print(f"code={code.name} size={code.size_label} n_qubits={code.n_qubits}")
    for sector, h in (("hx", code.hx), ("hz", code.hz)):
        path = f"{stem}_{sector}.txt"
        write_matrix_text(h, path)
        print(f"{sector}: {path} rows={h.rows} total_weight={total_weight(h)}")
    return 0


def cmd_decode(args, parser) -> int:
    matrix = read_matrix_text(args.matrix)
    try:
        sigma, length = parse_bits(args.syndrome)
    except ValueError as exc:
        parser.error(str(exc))
    if length != matrix.rows:
        parser.error(
            f"syndrome length {length} does not match check count {matrix.rows}"
        )
    result = decode(matrix, tanner_graph(matrix), sigma, args.backend)
    payload = {
        "correction": format_bits(result.correction, matrix.cols),
        "iterations": result.iterations,
        "counters": result.counters.as_dict(),
        "valid": result.valid,
        "backend": args.backend,
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_bench(args, parser) -> int:
    sizes = _resolve_sizes(parser, args)
    backends = tuple(b.strip() for b in args.backends.split(",") if b.strip())
    for b in backends:
        if b not in BACKENDS:
            parser.error(f"unknown backend {b!r}; choose from {BACKENDS}")
    if not backends:
        parser.error("--backends must name at least one backend")
    os.makedirs(args.out_dir, exist_ok=True)
    prefix = args.prefix or f"bench_{args.code}"

    rows: list[dict[str, object]] = []
    agg = {}
    sizes_meta: dict[str, dict[str, int]] = {}
    for size in sizes:
        config = SimConfig(
            code=args.code,
            size=size,
            p=args.p,
            shots=args.shots,
            seed=args.seed,
            backends=backends,
        )
        code = make_code(config.code, config.size)
        records = run_config(config, code)
        rows.extend(csv_rows(config, code, records))
        agg.update(aggregate(records, code.name, code.size_label))
        sizes_meta[code.size_label] = {
            "n_qubits": code.n_qubits,
            "hx_weight": total_weight(code.hx),
        }

    csv_path = os.path.join(args.out_dir, f"{prefix}_shots.csv")
    json_path = os.path.join(args.out_dir, f"{prefix}_aggregate.json")
    write_shot_csv(csv_path, rows)
    write_aggregate_json(json_path, agg)
    written = [csv_path, json_path]
    if args.figures:
        from .plots import render_bench_figures

        title = f"{args.code}, p={args.p}, {args.shots} shots"
        written.extend(
            render_bench_figures(agg, sizes_meta, args.out_dir, prefix, title)
        )
    for path in written:
        print(path)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonterminationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
