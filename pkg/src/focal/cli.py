"""Command-line entry point.

Exit status: 0 on success, 1 when a verification report contains a
failure, 2 on usage errors (bad rationals, missing files, cap violations).
Polynomial coefficients are read and written constant term first.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import appell, canonical, krawtchouk, multivar, operators
from .errors import FocalError
from .exactmath import MSeries, Series, format_rational, log_cosh_series, parse_rational
from .formats import (dumps, matrix_to_json, multi_v_from_json, rows_to_csv, rows_to_text,
                      series_from_json, series_to_json, tensor_to_json, vector_to_csv)

POLY_ORDER_NOTE = "Coefficient vectors are constant term first; rationals are 'a/b'."


class UsageError(Exception):
    pass


def _rational(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unparseable rational: {token!r}") from None


def _positive_int(token: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {token!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {token!r}")
    return v


def _poly(token: str) -> tuple:
    try:
        return tuple(parse_rational(t) for t in token.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _multi_index(token: str) -> tuple:
    try:
        n = tuple(int(t) for t in token.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"multi-index must be integers: {token!r}") from None
    if any(k < 0 for k in n):
        raise argparse.ArgumentTypeError(f"multi-index entries must be >= 0: {token!r}")
    return n


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {path!r}: {exc}") from None


# -- emitters -----------------------------------------------------------------

def emit_matrix(m, fmt):
    if fmt == "json":
        return dumps(matrix_to_json(m))
    if fmt == "csv":
        return rows_to_csv(m.rows)
    return rows_to_text(m.rows)


def emit_rows(rows, fmt, key="rows", extra=None):
    if fmt == "json":
        obj = dict(extra or {})
        obj[key] = [[format_rational(x) for x in r] for r in rows]
        return dumps(obj)
    if fmt == "csv":
        return rows_to_csv(rows)
    return rows_to_text(rows)


def emit_vector(vec, fmt, key="coeffs"):
    if fmt == "json":
        return dumps({key: [format_rational(x) for x in vec]})
    return vector_to_csv(vec) + "\n"


def emit_reports(reports, fmt):
    if fmt == "json":
        return dumps([r.to_json() for r in reports])
    return "".join(r.line() + "\n" for r in reports)


# -- verify_all -----------------------------------------------------------------

SEMIGROUP_PAIRS = [(Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(-1, 3)),
                   (Fraction(-3, 4), Fraction(5, 7)), (Fraction(0), Fraction(9, 2)),
                   (Fraction(2, 3), Fraction(2, 3))]


def verify_taa_reports(p_max):
    for p in range(1, p_max + 1):
        ctx = operators.make_context(p)
        yield operators.check_taa(ctx)


def verify_orthofermion_reports(p_max):
    for p in range(1, p_max + 1):
        ofs = operators.orthofermion_set(p)
        yield operators.check_orthofermions(ofs)
        yield operators.check_taa_generators(ofs)


def verify_theorem1_reports(p_max):
    for p in range(1, p_max + 1):
        ctx = operators.make_context(p)
        yield operators.check_lie_closure(ctx)
        yield operators.check_theorem_ladder(ctx)


def verify_canonical_reports(p_max, alpha=Fraction(1)):
    for name in canonical.PRESETS:
        for p in range(1, p_max + 1):
            yield canonical.verify_hw_on_subspace(canonical.preset(name, p, alpha=alpha))


def verify_appell_reports(p_max):
    p = max(p_max, 1)
    sys_ = canonical.preset("identity", p)
    h = Series.from_polynomial([0, 0, Fraction(1, 2)], p)
    for t1, t2 in SEMIGROUP_PAIRS:
        yield appell.check_semigroup(sys_, h, t1, t2)


def verify_krawtchouk_reports(N_max):
    for N in range(0, N_max + 1):
        yield krawtchouk.verify_krawtchouk(N, N + 1)


def verify_multi_reports(p_max):
    for nvars, p in ((2, min(p_max, 3)), (3, min(p_max, 2))):
        if p < 1:
            continue
        ctx = multivar.make_multicontext(nvars, p)
        yield multivar.check_multicontext(ctx)
        v = [MSeries.variable(i, nvars, p) for i in range(nvars)]
        if p >= 2:
            v[1] = v[1] + MSeries(nvars, p, {(2,) + (0,) * (nvars - 1): 1})
        sys_ = multivar.make_multicanonical(ctx, v)
        yield from multivar.multicanonical_reports(sys_)
        yield multivar.check_ordering_independence(sys_)


def verify_all(p_max: int, N_max: int) -> list:
    """Every identity suite over the parameter ranges, in a fixed order."""
    reports = []
    reports += verify_taa_reports(p_max)
    reports += verify_orthofermion_reports(p_max)
    reports += verify_theorem1_reports(p_max)
    reports += verify_canonical_reports(p_max)
    reports += verify_appell_reports(p_max)
    reports += verify_krawtchouk_reports(N_max)
    reports += verify_multi_reports(p_max)
    return reports


# -- subcommand handlers ----------------------------------------------------------

def _series_arg(args):
    if getattr(args, "series", None):
        return series_from_json(_load_json(args.series))
    return None


def cmd_op(args):
    ctx = operators.make_context(args.p)
    name = args.which
    if name == "dhat":
        m = ctx.dhat
    elif name == "xhat":
        m = ctx.xhat
    elif name == "number":
        m = operators.number_operator(ctx)
    elif name == "ou":
        m = operators.ou_operator(ctx, args.t)
    elif name == "gegenbauer":
        m = operators.gegenbauer_operator(ctx, args.alpha)
    elif name == "translation":
        m = operators.translation_operator(ctx, args.t)
    elif name == "cosh":
        m = operators.cosh_dhat(ctx)
    elif name == "sech":
        m = operators.sech_dhat(ctx)
    elif name == "commutator":
        m = ctx.dhat @ ctx.xhat - ctx.xhat @ ctx.dhat
    else:  # series
        s = _series_arg(args)
        if s is None:
            raise UsageError("op series needs --series FILE")
        m = operators.apply_series(ctx, s)
    return emit_matrix(m, args.format), 0


def _canonical_system(args):
    s = _series_arg(args)
    if s is not None:
        return canonical.make_canonical(args.p, s, "custom")
    return canonical.preset(args.preset, args.p, alpha=args.alpha)


def cmd_canonical(args):
    sys_ = _canonical_system(args)
    show = args.show
    if show == "yhat":
        return emit_matrix(sys_.yhat, args.format), 0
    if show == "vhat":
        return emit_matrix(sys_.vhat, args.format), 0
    if show in ("w", "u", "recurrence"):
        s = {"w": sys_.w, "u": sys_.u,
             "recurrence": canonical.recurrence_coefficients(sys_)}[show]
        if args.format == "json":
            return dumps(series_to_json(s)), 0
        return vector_to_csv(s.coeffs) + "\n", 0
    if show == "hw":
        r = canonical.verify_hw_on_subspace(sys_)
        return emit_reports([r], args.format), 0 if r.passed else 1
    table = canonical.canonical_polynomials(sys_)
    return emit_rows(table.rows, args.format, extra={"system": sys_.name, "p": sys_.p}), 0


H_PRESETS = {
    "z": lambda p: Series.identity(p),
    "z2half": lambda p: Series.from_polynomial([0, 0, Fraction(1, 2)], p),
    "logcosh": log_cosh_series,
}


def cmd_appell(args):
    if args.action == "hermite":
        table = appell.hermite_family(args.p, args.t)
        return emit_rows(table.rows, args.format), 0
    if args.action == "gegenbauer":
        table = appell.gegenbauer_family(args.p, args.alpha)
        return emit_rows(table.rows, args.format), 0
    sys_ = _canonical_system(args)
    if args.h_file:
        h = series_from_json(_load_json(args.h_file))
    else:
        h = H_PRESETS[args.h](args.p)
    ev = appell.evolve(sys_, h, args.t)
    if args.show == "matrix":
        return emit_matrix(ev.evo, args.format), 0
    return emit_rows(ev.table().rows, args.format), 0


def cmd_krawtchouk(args):
    N = args.N
    p = N if args.p is None else args.p
    if args.action == "table":
        table = krawtchouk.krawtchouk(p, N)
        return emit_rows(table.rows, args.format, extra={"N": N, "p": p}), 0
    if args.action == "expand":
        if args.poly is None:
            raise UsageError("krawtchouk expand needs --poly")
        return emit_vector(krawtchouk.expand(p, N, args.poly), args.format), 0
    if args.action == "matrix":
        y, yinv = krawtchouk.expansion_matrix(p, N)
        if args.format == "json":
            return dumps({"Y": matrix_to_json(y), "Yinv": matrix_to_json(yinv)}), 0
        return emit_matrix(y, args.format) + "\n" + emit_matrix(yinv, args.format), 0
    p = N + 1 if args.p is None else args.p
    report = krawtchouk.verify_krawtchouk(N, p)
    return emit_reports([report], args.format), 0 if report.passed else 1


def cmd_multi(args):
    obj = _load_json(args.v)
    v = multi_v_from_json(obj)
    if len(v) != args.vars:
        raise UsageError(f"--vars {args.vars} but the file holds {len(v)} series")
    ctx = multivar.make_multicontext(args.vars, args.p, args.cap)
    sys_ = multivar.make_multicanonical(ctx, v)
    if args.n is not None:
        t = multivar.multi_polynomials(sys_, args.n)
        out = {"n": list(args.n), "tensor": tensor_to_json(t)}
    else:
        out = {"nvars": args.vars, "p": args.p,
               "yhat": [matrix_to_json(y) for y in sys_.yhats]}
    return dumps(out), 0


def cmd_verify(args):
    suite = args.suite
    if suite == "all":
        reports = verify_all(args.p_max, args.N_max)
    elif suite == "taa":
        reports = [operators.check_taa(operators.make_context(args.p))]
    elif suite == "orthofermion":
        reports = list(verify_orthofermion_reports(args.p))[-2:]
    elif suite == "theorem1":
        reports = list(verify_theorem1_reports(args.p))[-2:]
    elif suite == "canonical":
        reports = [canonical.verify_hw_on_subspace(canonical.preset(n, args.p))
                   for n in canonical.PRESETS]
    elif suite == "appell":
        reports = list(verify_appell_reports(args.p))
    elif suite == "krawtchouk":
        reports = list(verify_krawtchouk_reports(args.N_max))
    else:
        reports = list(verify_multi_reports(args.p))
    if args.format == "text" and suite == "taa":
        comm = reports[0].details["commutator"]
        text = emit_reports(reports, "text") + "[D,X] =\n" + rows_to_text(comm.rows)
    else:
        text = emit_reports(reports, args.format)
    return text, 0 if all(r.passed for r in reports) else 1


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--cap", type=int, default=None,
                        help="dimension cap for tensor products (env FOCAL_CAP)")

    parser = argparse.ArgumentParser(
        prog="focal", description="Exact finite operator calculus. " + POLY_ORDER_NOTE)
    sub = parser.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", parents=[common], help="operator matrices")
    op.add_argument("which", choices=("dhat", "xhat", "number", "ou", "gegenbauer",
                                      "translation", "cosh", "sech", "commutator", "series"))
    op.add_argument("--p", type=_positive_int, required=True)
    op.add_argument("--t", type=_rational, default=Fraction(1))
    op.add_argument("--alpha", type=_rational, default=Fraction(0))
    op.add_argument("--series", metavar="FILE")
    op.set_defaults(func=cmd_op)

    can = sub.add_parser("canonical", parents=[common], help="canonical systems")
    can.add_argument("--preset", choices=sorted(canonical.PRESETS), default="identity")
    can.add_argument("--series", metavar="FILE", help="V as a series JSON file (order >= p+1)")
    can.add_argument("--p", type=_positive_int, required=True)
    can.add_argument("--alpha", type=_rational, default=Fraction(1))
    can.add_argument("--show", choices=("table", "yhat", "vhat", "w", "u", "recurrence", "hw"),
                     default="table")
    can.set_defaults(func=cmd_canonical)

    app = sub.add_parser("appell", help="Appell evolution and eigen-families")
    app_sub = app.add_subparsers(dest="action", required=True)
    ev = app_sub.add_parser("evolve", parents=[common])
    ev.add_argument("--preset", choices=sorted(canonical.PRESETS), default="identity")
    ev.add_argument("--series", metavar="FILE")
    ev.add_argument("--p", type=_positive_int, required=True)
    ev.add_argument("--alpha", type=_rational, default=Fraction(1))
    ev.add_argument("--h", choices=sorted(H_PRESETS), default="z")
    ev.add_argument("--h-file", metavar="FILE")
    ev.add_argument("--t", type=_rational, required=True)
    ev.add_argument("--show", choices=("table", "matrix"), default="table")
    for name in ("hermite", "gegenbauer"):
        a = app_sub.add_parser(name, parents=[common])
        a.add_argument("--p", type=_positive_int, required=True)
        a.add_argument("--t", type=_rational, default=Fraction(1))
        a.add_argument("--alpha", type=_rational, default=Fraction(1))
    app.set_defaults(func=cmd_appell)

    kr = sub.add_parser("krawtchouk", help="Krawtchouk tables, expansions and checks")
    kr_sub = kr.add_subparsers(dest="action", required=True)
    for name in ("table", "expand", "matrix", "verify"):
        k = kr_sub.add_parser(name, parents=[common])
        k.add_argument("--N", type=_positive_int, required=True)
        k.add_argument("--p", type=_positive_int, default=None)
        if name == "expand":
            k.add_argument("--poly", type=_poly, help="coefficients, constant term first")
    kr.set_defaults(func=cmd_krawtchouk)

    mu = sub.add_parser("multi", help="multivariate canonical systems")
    mu_sub = mu.add_subparsers(dest="action", required=True)
    mc = mu_sub.add_parser("canonical", parents=[common])
    mc.add_argument("--vars", type=_positive_int, required=True)
    mc.add_argument("--p", type=_positive_int, required=True)
    mc.add_argument("--v", required=True, metavar="FILE")
    mc.add_argument("--n", type=_multi_index, default=None, help="multi-index, e.g. 1,1")
    mu.set_defaults(func=cmd_multi)

    ver = sub.add_parser("verify", parents=[common], help="identity verification suites")
    ver.add_argument("suite", choices=("taa", "orthofermion", "theorem1", "canonical", "appell",
                                       "krawtchouk", "multi", "all"))
    ver.add_argument("--p", type=_positive_int, default=4)
    ver.add_argument("--p-max", type=_positive_int, default=4)
    ver.add_argument("--N-max", type=_positive_int, default=5)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p", None) == 0 and args.command not in ("krawtchouk",):
        parser.error("argument --p: must be >= 1")
    try:
        cap = multivar.dimension_cap(args.cap)
        for flag in ("p", "p_max"):
            value = getattr(args, flag, None)
            if value is not None and value + 1 > cap:
                raise UsageError(f"--{flag.replace('_', '-')} {value} gives dimension "
                                 f"{value + 1} above the cap {cap}")
        text, status = args.func(args)
    except (UsageError, FocalError, ValueError) as exc:
        print(f"focal: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"focal: error: cannot write {args.out!r}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
