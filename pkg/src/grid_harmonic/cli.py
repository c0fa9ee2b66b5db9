"""Command-line interface.

``m`` and ``n`` are always graph (point lattice) dimensions; the tiled
rectangle R has sides ``m - 1`` and ``n - 1``.  Every algorithm is
deterministic; the ``GRID_HARMONIC_SEED`` environment variable is reserved
and currently ignored.

Exit status: 0 on success, 1 when a verification or input check fails,
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .exact_arith import TEST_FIELDS, FieldError, FieldSpec
from .grid import BLACK, BLACK_TO_WHITE, WHITE, WHITE_TO_BLACK, adjacency_matrix, build_grid, grid_parameter
from .kernel import KernelVector, kernel_dimensions, structured_basis
from .render import render_ascii_list, render_svg, render_svg_sheet
from .tiling import Tiling, enumerate_tilings, lift
from .verify import check_cell, sweep


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _polarities(choice: str) -> tuple[str, ...]:
    return (BLACK, WHITE) if choice == "both" else (choice,)


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path or 'stdin'}: {exc}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_dims(args) -> int:
    c = grid_parameter(args.m, args.n)
    bw, wb = kernel_dimensions(args.m, args.n)
    with _output(args.out) as out:
        out.write(f"c={c} dim_bw={bw} dim_wb={wb}\n")
    return 0


def cmd_basis(args) -> int:
    field = args.field or FieldSpec.rationals()
    bases = [structured_basis(args.m, args.n, pol, field).to_json() for pol in _polarities(args.polarity)]
    with _output(args.out) as out:
        out.write(_dump(bases[0] if len(bases) == 1 else bases))
    return 0


def cmd_matrix(args) -> int:
    mat = adjacency_matrix(build_grid(args.m, args.n), args.direction)
    with _output(args.out) as out:
        out.write(_dump(mat.to_json()) if args.format == "json" else mat.to_dense_text() + "\n")
    return 0


def _selected_tilings(args) -> list[Tiling]:
    if args.m < 2 or args.n < 2:
        raise UsageError("tilings need m, n >= 2")
    try:
        black, white = enumerate_tilings(args.m, args.n, max_dim=args.max_dim)
    except ValueError as exc:
        raise UsageError(str(exc))
    chosen = _polarities(args.polarity)
    return (black if BLACK in chosen else []) + (white if WHITE in chosen else [])


def _write_tilings(tilings: list[Tiling], fmt: str, path) -> None:
    with _output(path) as out:
        if fmt == "json":
            out.write(_dump([t.to_json() for t in tilings]))
        elif fmt == "svg":
            out.write(render_svg(tilings[0]) if len(tilings) == 1 else render_svg_sheet(tilings))
        else:
            out.write(render_ascii_list(tilings))


def cmd_tilings(args) -> int:
    if args.field is not None and args.field.p != 2:
        raise UsageError("tilings are defined over gf2 only")
    tilings = _selected_tilings(args)
    _write_tilings(tilings, args.format, args.out)
    return 0


def cmd_lift(args) -> int:
    try:
        u = KernelVector.from_json(_read_json(args.input))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a kernel vector document: {exc}")
    if u.field.p != 2:
        raise UsageError("lift expects a gf2 vector")
    try:
        result = lift(u, args.field or FieldSpec.rationals())
    except ValueError as exc:
        print(f"lift failed: {exc}", file=sys.stderr)
        return 1
    with _output(args.out) as out:
        out.write(_dump(result.to_json()))
    return 0


def cmd_render(args) -> int:
    data = _read_json(args.input)
    docs = data if isinstance(data, list) else [data]
    try:
        tilings = [Tiling.from_json(d) for d in docs]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a tiling document: {exc}")
    if not tilings:
        raise UsageError("no tilings to render")
    _write_tilings(tilings, args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    fields = (args.field,) if args.field else TEST_FIELDS
    if args.m is not None:
        if args.n is None:
            raise UsageError("verify takes both m and n, or neither")
        results = check_cell(args.m, args.n, fields, max_dim=args.max_dim)
    else:
        results = sweep(args.max, fields, tiling_max=min(args.max, 16), max_dim=args.max_dim)
    failed = 0
    with _output(args.out) as out:
        for r in results:
            if not r.ok:
                failed += 1
            if not r.ok or args.verbose:
                out.write(r.line() + "\n")
        out.write(f"{'FAILED' if failed else 'OK'}: {failed} failing checks\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grid-harmonic", description=__doc__.splitlines()[0].rstrip("."))
    sub = parser.add_subparsers(dest="verb", required=True)

    def dims_args(p):
        p.add_argument("m", type=_positive)
        p.add_argument("n", type=_positive)

    def common(p):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = sub.add_parser("dims", help="print c and both kernel dimensions")
    dims_args(p)
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("basis", help="structured {0,1,-1} kernel bases as JSON")
    dims_args(p)
    p.add_argument("--field", type=_field, default=None, help="gf2, gf3, gf5, gf7, ... or rational (default)")
    p.add_argument("--polarity", choices=("black", "white", "both"), default="both")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("matrix", help="export an adjacency matrix")
    dims_args(p)
    p.add_argument("--direction", choices=(BLACK_TO_WHITE, WHITE_TO_BLACK), default=BLACK_TO_WHITE)
    p.add_argument("--format", choices=("json", "dense"), default="json")
    common(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("tilings", help="enumerate every tiling of R")
    dims_args(p)
    p.add_argument("--field", type=_field, default=None, help="only gf2 (the default) is meaningful")
    p.add_argument("--polarity", choices=("black", "white", "both"), default="both")
    p.add_argument("--format", choices=("json", "svg", "ascii"), default="json")
    p.add_argument("--max-dim", type=int, default=20, help="refuse kernels of larger dimension")
    common(p)
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("lift", help="lift a gf2 kernel vector JSON to a signed vector")
    p.add_argument("input", nargs="?", default="-", help="vector JSON path, '-' for stdin")
    p.add_argument("--field", type=_field, default=None, help="target field (default rational)")
    common(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("render", help="draw tiling JSON as SVG or ASCII")
    p.add_argument("input", nargs="?", default="-", help="tiling JSON path, '-' for stdin")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("m", type=_positive, nargs="?")
    p.add_argument("n", type=_positive, nargs="?")
    p.add_argument("--field", type=_field, default=None, help="restrict to one field (default: all test fields)")
    p.add_argument("--max", type=_positive, default=12, help="sweep 1 <= n <= m <= MAX when m, n are omitted")
    p.add_argument("--max-dim", type=int, default=20)
    p.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
