"""Command-line front end.

Exit codes: 0 on success, 2 when an input violates a precondition (for
example ``||A - I|| >= 1``), 3 when ``sweep`` finds a bound violation.
"""

from __future__ import annotations

import argparse
import sys

from .errors import PreconditionError
from .experiments import (
    approx_rows,
    bounds_rows,
    complexity_rows,
    count_violations,
    matrix_sparsity,
    quadrature_rows,
    sweep_rows,
)
from .io import generate_matrix, parse_generator, read_matrix, resolve_b, write_matrix
from .logquad import distance_to_identity

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_VIOLATION = 3


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _fmt_csv(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _fmt_table(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def render(header, rows, fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt_csv(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    cells = [list(header)] + [[_fmt_table(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    out = []
    for n, r in enumerate(cells):
        out.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
        if n == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_matrix(args):
    if args.matrix and args.gen:
        raise PreconditionError("give either --matrix or --gen, not both")
    if args.matrix:
        return read_matrix(args.matrix)
    if args.gen:
        return generate_matrix(args.gen)
    raise PreconditionError("a matrix source is required (--matrix PATH or --gen rho=R,n=K,seed=S)")


def _add_matrix_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--matrix", metavar="PATH", help="matrix file (JSON dense or .mtx)")
    p.add_argument("--gen", metavar="SPEC", help="generate a Hermitian test matrix, e.g. rho=0.5,n=3,seed=1")


def _add_output_args(p: argparse.ArgumentParser, default_format: str = "csv") -> None:
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "table"), default=default_format)


def cmd_quadrature(args) -> int:
    header, rows = quadrature_rows(args.M)
    _emit(render(header, rows, args.format), args.out)
    return EXIT_OK


def cmd_approx(args) -> int:
    A = _load_matrix(args)
    header, rows = approx_rows(A, args.M)
    _emit(render(header, rows, args.format), args.out)
    return EXIT_OK


def _run_grid(args):
    A = _load_matrix(args)
    b = resolve_b(args.b, A.shape[0], seed=args.seed)
    for eps in args.eps_prime:
        if not 0.0 <= eps < 0.5:
            raise PreconditionError(f"eps-prime values must lie in [0, 1/2), got {eps}")
    return sweep_rows(
        A,
        b,
        args.M,
        args.eps_prime,
        args.seeds,
        root_seed=args.seed,
        alpha=args.alpha,
        L=args.L,
        s=args.s,
        jobs=getattr(args, "jobs", 1),
    )


def cmd_pipeline(args) -> int:
    header, rows = _run_grid(args)
    _emit(render(header, rows, args.format), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    header, rows = _run_grid(args)
    _emit(render(header, rows, args.format), args.out)
    v5, v6 = count_violations(rows)
    print(f"# rows={len(rows)} thm5_violations={v5} thm6_violations={v6}", file=sys.stderr)
    return EXIT_VIOLATION if v5 or v6 else EXIT_OK


def cmd_bounds(args) -> int:
    A = _load_matrix(args)
    header, rows = bounds_rows(A, args.M, alpha=args.alpha)
    _emit(render(header, rows, args.format), args.out)
    return EXIT_OK


def cmd_complexity(args) -> int:
    if args.matrix or args.gen:
        A = _load_matrix(args)
        rho, N, d = distance_to_identity(A), A.shape[0], matrix_sparsity(A)
    else:
        if args.rho is None or args.N is None:
            raise PreconditionError("complexity needs a matrix source or both --rho and --N")
        rho, N, d = args.rho, args.N, args.d
    if args.d is not None:
        d = args.d
    header, rows = complexity_rows(rho, d, args.eps_prime, args.M, N, s=args.s, L=args.L, p_lower_bound=args.p)
    _emit(render(header, rows, args.format), args.out)
    return EXIT_OK


def cmd_corpus(args) -> int:
    g = parse_generator(args.gen)
    write_matrix(args.out, generate_matrix(args.gen))
    print(f"wrote {g['N']}x{g['N']} matrix with ||A - I|| = {g['rho']} to {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantlog",
        description="Gauss-Legendre matrix logarithm and simulated log(A)|b> state preparation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quadrature", help="Gauss-Legendre nodes and weights on [0, 1]")
    p.add_argument("--M", type=_int_list, default=[4], help="comma-separated orders")
    _add_output_args(p, default_format="table")
    p.set_defaults(func=cmd_quadrature)

    p = sub.add_parser("approx", help="quadrature log error against the certified bound")
    _add_matrix_args(p)
    p.add_argument("--M", type=_int_list, default=[1, 2, 4, 8])
    _add_output_args(p)
    p.set_defaults(func=cmd_approx)

    for name, func, helptext, seeds in (
        ("pipeline", cmd_pipeline, "simulate the state-preparation circuit", 1),
        ("sweep", cmd_sweep, "pipeline over an (M, eps', seed) grid with bound checks", 25),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_matrix_args(p)
        p.add_argument("--b", default="uniform", help="PATH, uniform, e1 or random")
        p.add_argument("--M", type=_int_list, default=[1, 2, 4, 8], help="powers of two")
        p.add_argument("--eps-prime", dest="eps_prime", type=_float_list, default=[0.0])
        p.add_argument("--seeds", type=int, default=seeds, help="trials per (M, eps') point")
        p.add_argument("--seed", type=int, default=0, help="root seed")
        p.add_argument("--alpha", type=float, default=None)
        p.add_argument("--s", type=int, default=32, help="oracle bit accuracy")
        p.add_argument("--L", type=float, default=0.0, help="gate count of the shifted block-encoding")
        if name == "sweep":
            p.add_argument("--jobs", type=int, default=1)
        _add_output_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="condition-number and block-encoding checks")
    _add_matrix_args(p)
    p.add_argument("--M", type=_int_list, default=[1, 2, 4, 8])
    p.add_argument("--alpha", type=float, default=None)
    _add_output_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("complexity", help="query and gate cost estimates")
    _add_matrix_args(p)
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--M", type=_int_list, default=[8])
    p.add_argument("--eps-prime", dest="eps_prime", type=_float_list, default=[0.1])
    p.add_argument("--s", type=int, default=32)
    p.add_argument("--L", type=float, default=0.0)
    p.add_argument("--p", type=float, default=None, help="success-probability lower bound")
    _add_output_args(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("corpus", help="write a generated test matrix to a file")
    p.add_argument("--gen", required=True, metavar="SPEC")
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "complexity" and args.d is None and not (args.matrix or args.gen):
        args.d = 1
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
