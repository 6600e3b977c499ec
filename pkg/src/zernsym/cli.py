"""Command-line front end: ``zernsym {convert,expr,table,eval,check}``.

Exit codes: 0 success, 1 invalid input or failed check, 2 I/O error.
"""

from __future__ import annotations

import argparse
import io
import sys

from .coefficients import zernike_spec
from .evaluation import QuadratureConfig, eval_zernike, max_orthonormality_error
from .indexing import (
    ZernikeIndexError,
    ansi_to_nm,
    j_to_nm,
    nm_to_ansi,
    nm_to_j,
    nm_to_k,
    validate_nm,
)
from .symbolic import PROFILES, emit_zernike, render
from .tablegen import TableSpec, gen_document

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nm_pair(text: str) -> tuple[int, int]:
    try:
        n, m = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'n,m', got {text!r}") from None
    return n, m


def cmd_convert(args, out) -> int:
    if (args.j is None) == (args.nm is None):
        raise UsageError("give exactly one of --j or --nm")
    if args.nm is not None:
        idx = validate_nm(*args.nm)
    elif args.scheme == "ansi":
        idx = ansi_to_nm(args.j)
    else:
        idx = j_to_nm(args.j)
    j = nm_to_j(idx)
    r = j - idx.n * (idx.n + 1) // 2
    out.write(f"j={j} n={idx.n} m={idx.m} k={nm_to_k(idx)} ansi={nm_to_ansi(idx)} r={r}\n")
    return EXIT_OK


def cmd_expr(args, out) -> int:
    spec = zernike_spec(args.j)
    if args.format == "json":
        out.write(spec.to_json() + "\n")
    else:
        text = render(emit_zernike, spec.idx, PROFILES[args.format], normalized=args.normalized)
        out.write(text.rstrip() + "\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    spec = TableSpec(j_min=args.jmin, j_max=args.jmax)
    buf = io.StringIO()
    gen_document(buf, spec, standalone=args.standalone)
    if args.out is None or args.out == "-":
        out.write(buf.getvalue())
        print(f"rows={spec.n_rows}", file=sys.stderr)
        return EXIT_OK
    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(buf.getvalue())
    out.write(f"rows={spec.n_rows} file={args.out}\n")
    return EXIT_OK


def cmd_eval(args, out) -> int:
    value = eval_zernike(zernike_spec(args.j), args.rho, args.theta, normalized=not args.unnormalized)
    out.write(f"{value!r}\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    cfg = QuadratureConfig(args.radial_nodes, args.angular_nodes)
    err = max_orthonormality_error(args.jmax, cfg)
    ok = err <= args.tol
    out.write(
        f"jmax={args.jmax} nodes={cfg.radial_nodes}x{cfg.angular_nodes} "
        f"max_deviation={err!r} tol={args.tol!r} {'PASS' if ok else 'FAIL'}\n"
    )
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zernsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert between Noll, Born-Wolf and ANSI indices")
    p.add_argument("--j", type=int, help="single index (Noll unless --scheme ansi)")
    p.add_argument("--nm", type=_nm_pair, help="Born-Wolf pair as 'n,m'")
    p.add_argument("--scheme", choices=("noll", "ansi"), default="noll")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("expr", help="print the expression of Z_j")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--format", choices=("latex", "plain", "code", "json"), default="latex")
    p.add_argument("--normalized", action="store_true", help="prefix the normalization factor")
    p.set_defaults(func=cmd_expr)

    p = sub.add_parser("table", help="write the LaTeX longtable")
    p.add_argument("--jmin", type=int, default=1)
    p.add_argument("--jmax", type=int, default=465)
    p.add_argument("-o", "--out", help="output .tex path (default: stdout)")
    p.add_argument("--standalone", action="store_true", help="emit a complete document")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eval", help="evaluate Z_j(rho, theta)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--unnormalized", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="quadrature check of orthonormality")
    p.add_argument("--jmax", type=int, default=36)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--radial-nodes", type=int, default=64)
    p.add_argument("--angular-nodes", type=int, default=256)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"zernsym: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ZernikeIndexError as exc:
        print(f"zernsym: {exc.reason}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"zernsym: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"zernsym: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
