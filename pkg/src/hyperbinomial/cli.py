"""Command-line front end.

Exit codes: 0 success, 1 parse/usage error, 2 precondition violation,
3 consistency-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

import mpmath

from . import closed_form, qk, rowpoly, sturm, triangle
from .errors import PreconditionError
from .exact import format_rational
from .poly import Poly
from .triangle import Params

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(text: str) -> Params:
    try:
        return Params.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _emit_poly(p: Poly, fmt: str) -> str:
    if fmt == "json":
        return p.to_json()
    if fmt == "csv":
        return ",".join(p.to_strings())
    return str(p)


def cmd_triangle(args: argparse.Namespace) -> int:
    table = triangle.compute_table(args.params, args.max_n)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        for row in table.to_strings():
            print(" ".join(row))
    return EXIT_OK


def cmd_closed(args: argparse.Namespace) -> int:
    fv = closed_form.gbc_factored(args.params, args.n, args.k)
    d = fv.to_dict()
    if args.format == "json":
        print(json.dumps(d))
    elif args.format == "csv":
        print("first,second,product")
        print(",".join(d.values()))
    else:
        for key, val in d.items():
            print(f"{key}: {val}")
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    print(_emit_poly(rowpoly.phi(args.params, args.n), args.format))
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    p = rowpoly.phi(args.params, args.n)
    cert = sturm.certify_all_real(p)
    if args.format == "json":
        print(cert.to_json())
    elif args.format == "csv":
        d = cert.to_dict()
        print(",".join(d))
        print(",".join(str(v).lower() for v in d.values()))
    else:
        for key, val in cert.to_dict().items():
            print(f"{key}: {str(val).lower()}")
    return EXIT_OK


def cmd_rowsums(args: argparse.Namespace) -> int:
    table = triangle.compute_table(args.params, args.max_n)
    sums = [format_rational(table.row_sum(n)) for n in range(args.max_n + 1)]
    if args.format == "json":
        print(json.dumps(sums))
    elif args.format == "csv":
        print("n,rho")
        for n, s in enumerate(sums):
            print(f"{n},{s}")
    else:
        for s in sums:
            print(s)
    return EXIT_OK


def cmd_rowsum_series(args: argparse.Namespace) -> int:
    res = closed_form.row_sum_series_sum(args.params, args.n, args.terms, args.bits)
    exact = triangle.compute_table(args.params, args.n).row_sum(args.n)
    with mpmath.workprec(args.bits):
        value = mpmath.nstr(res.value, args.digits)
        tail = mpmath.nstr(res.last_term, 5)
    out = {
        "n": args.n,
        "truncation_j": res.truncation_j,
        "precision_bits": res.precision_bits,
        "series": value,
        "last_term": tail,
        "exact": format_rational(exact),
    }
    if args.format == "json":
        print(json.dumps(out))
    elif args.format == "csv":
        print(",".join(out))
        print(",".join(str(v) for v in out.values()))
    else:
        for key, val in out.items():
            print(f"{key}: {val}")
    return EXIT_OK


def cmd_qk(args: argparse.Namespace) -> int:
    spec = qk.QkSpec(args.n, args.k)
    if args.form != "all":
        fn = {"rec": qk.qk_recurrence, "1": qk.qk_form1, "2": qk.qk_form2, "3": qk.qk_form3}[args.form]
        print(_emit_poly(fn(spec), args.format))
        return EXIT_OK
    forms = qk.qk_all_forms(spec)
    ref = forms["rec"]
    bad = [name for name, p in forms.items() if p != ref]
    if bad:
        for name, p in forms.items():
            print(f"{name}: {_emit_poly(p, args.format)}", file=sys.stderr)
        print(f"mismatch between forms: rec vs {', '.join(bad)}", file=sys.stderr)
        return EXIT_MISMATCH
    print(_emit_poly(ref, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperbinomial", description="Generalized binomial coefficient triangles, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable[[argparse.Namespace], int], help: str, params: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if params:
            p.add_argument("--params", type=_params, required=True, help="alpha,beta,gamma,alpha',beta',gamma'")
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
        p.set_defaults(func=fn)
        return p

    p = add("triangle", cmd_triangle, "print rows 0..max-n of the triangle")
    p.add_argument("--max-n", type=_nonneg, required=True)

    p = add("closed", cmd_closed, "factored closed form of one entry (alpha' = 0)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("phi", cmd_phi, "row polynomial phi_n")
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("roots", cmd_roots, "Sturm reality certificate for phi_n")
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("rowsums", cmd_rowsums, "exact row sums rho(0..max-n)")
    p.add_argument("--max-n", type=_nonneg, required=True)

    p = add("rowsum-series", cmd_rowsum_series, "floating row-sum series next to the exact value")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--terms", type=_positive, default=400, help="truncation index j")
    p.add_argument("--bits", type=_positive, default=128, help="working precision in bits")
    p.add_argument("--digits", type=_positive, default=30, help="significant digits printed")

    p = add("qk", cmd_qk, "Q_k polynomial(s)", params=False)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--form", choices=("rec", "1", "2", "3", "all"), default="all")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
