"""Command-line front end.

Exit codes: 0 success / verified, 1 domain failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .constructions import (
    Example4Params, Example5Params, J3Params, auto_example4_params, auto_example5_params,
    build_bigc, build_example4, build_example5, build_j3, solve_j3_params,
)
from .errors import BudgetExceeded, ParseError, RBJordanError
from .jordan import BilinearForm, CliffordAlgebra
from .quadform import UNDECIDED, DiagonalForm, isotropic_vector, represent, unit_representation
from .rbindex import (
    SearchConfig, census, census_rows, rb_index_bruteforce, rb_index_table, write_census_csv,
)
from .rbop import check_rb, format_operator, read_operator, write_operator
from .scalars import FieldCtx

# form arguments such as "-1,-1,-1" must not be mistaken for options
_NEGATIVE = re.compile(r"^-\d[\d/,\-]*$")


def _render(data: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    for key, value in data.items():
        if isinstance(value, dict):
            value = " ".join(f"{k}={_flag(v)}" for k, v in value.items())
        elif isinstance(value, list):
            value = " ".join(str(tuple(v)) if isinstance(v, list) else str(v) for v in value) or "-"
        elif isinstance(value, str) and "\n" in value:
            value = "\n  " + value.rstrip("\n").replace("\n", "\n  ")
        out.write(f"{key}: {value}\n")


def _flag(v):
    return {True: "pass", False: "FAIL", None: "n/a"}.get(v, v)


def _form(ctx: FieldCtx, text: str) -> BilinearForm:
    return BilinearForm.parse(ctx, text)


def _scalars(ctx: FieldCtx, text: str | None, what: str):
    if text is None:
        raise ParseError(f"missing --{what}")
    return tuple(ctx.parse_scalar(t) for t in text.split(","))


# -- subcommands -------------------------------------------------------------

def cmd_verify(args, out) -> int:
    try:
        R = read_operator(args.file)
    except OSError as exc:
        raise ParseError(str(exc)) from None
    report = check_rb(R, R.ctx.parse_scalar(args.weight))
    _render(report.to_dict(R.ctx), args.format, out)
    return 0 if report.is_rb else 1


def cmd_construct(args, out) -> int:
    ctx = FieldCtx.parse(args.field)
    alg = CliffordAlgebra(_form(ctx, args.form))
    family = args.family
    if family == "j3":
        if args.auto:
            params = solve_j3_params(alg)
            if params is None or params is UNDECIDED:
                raise RBJordanError(f"no parameters found ({'undecided' if params is UNDECIDED else 'absent'})")
        else:
            a, b, c = _scalars(ctx, args.abc, "abc")
            (k,), (l,) = _scalars(ctx, args.k, "k"), _scalars(ctx, args.l, "l")
            params = J3Params(a, b, c, k, l)
        R = build_j3(alg, params)
    elif family == "example4":
        if args.auto:
            params = auto_example4_params(alg, args.split)
            if params is None:
                raise RBJordanError("no Example-4 parameters in the natural basis order")
        else:
            if args.split is None:
                raise ParseError("missing --split")
            params = Example4Params(args.split, _scalars(ctx, args.l, "l"), _scalars(ctx, args.k, "k"))
        R = build_example4(alg, params)
    elif family == "example5":
        if args.auto:
            params = auto_example5_params(alg)
            if params is None:
                raise RBJordanError("no Example-5 parameters exist for this form")
        else:
            (x0,) = _scalars(ctx, args.x0, "x0")
            params = Example5Params(_scalars(ctx, args.k, "k"), x0)
        R = build_example5(alg, params)
    else:
        R = build_bigc(alg)
    text = format_operator(R)
    if args.output:
        write_operator(R, args.output)
    if args.format == "json":
        _render({"family": family, "operator": text}, "json", out)
    else:
        out.write(text)
    return 0


def cmd_index(args, out) -> int:
    ctx = FieldCtx.parse(args.field)
    form = _form(ctx, args.form)
    data = {}
    verdicts = []
    if args.certify in ("table", "both"):
        verdicts.append(rb_index_table(ctx, form))
    if args.certify in ("brute", "both"):
        verdicts.append(rb_index_bruteforce(ctx, form, SearchConfig.from_env()))
    main = verdicts[0]
    data["rb"] = main.value
    data["method"] = main.method
    if args.certify == "both":
        data["brute"] = verdicts[1].value
        data["agree"] = verdicts[0].value == verdicts[1].value
    if main.certificate:
        data["census"] = {str(k): v for k, v in main.certificate.items()}
    data["notes"] = list(main.notes)
    if main.witness is not None and args.witness_out:
        write_operator(main.witness, args.witness_out)
        data["witness_file"] = args.witness_out
    elif main.witness is not None:
        data["witness"] = format_operator(main.witness)
    _render(data, args.format, out)
    return 0 if data.get("agree", True) else 1


def _search_config(args) -> SearchConfig:
    kw = {"parallel_width": args.parallel}
    if args.budget is not None:
        kw["max_naive_space"] = args.budget
    if args.mode == "naive":
        kw["pruning"] = False
    return SearchConfig.from_env(**kw)


def cmd_search(args, out) -> int:
    ctx = FieldCtx.parse(args.field)
    verdict = rb_index_bruteforce(ctx, _form(ctx, args.form), _search_config(args), mode=args.mode)
    _render(verdict.to_dict(), args.format, out)
    return 0


def cmd_census(args, out) -> int:
    ctx = FieldCtx.parse(args.field)
    cfg = _search_config(args)
    results = [census(ctx, _form(ctx, f), cfg, mode=args.mode) for f in args.forms]
    if args.format == "csv":
        write_census_csv(results, out)
    elif args.format == "json":
        rows = [dict(zip(("p", "form", "index", "count", "certified"), r))
                for c in results for r in census_rows(c)]
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        for c in results:
            for p, form, idx, cnt, cert in census_rows(c):
                out.write(f"p={p} form=({form}) index={idx} count={cnt} certified={cert}\n")
    return 0


def cmd_solve_form(args, out) -> int:
    ctx = FieldCtx.parse(args.field)
    coeffs = tuple(ctx.parse_scalar(t) for t in args.coefficients.split(","))
    if args.kind == "isotropic":
        sol = isotropic_vector(DiagonalForm(ctx, coeffs), args.height_bound)
    elif args.kind == "unit":
        sol = unit_representation(DiagonalForm(ctx, coeffs), args.height_bound)
    else:
        if len(coeffs) != 3:
            raise ParseError("represent takes a,b,c")
        sol = represent(*coeffs, ctx)
    if sol is UNDECIDED:
        status, shown = "undecided", None
    elif sol is None:
        status, shown = "absent", None
    else:
        status, shown = "found", [ctx.format(x) for x in sol]
    if args.format == "json":
        _render({"kind": args.kind, "status": status, "solution": shown}, "json", out)
    else:
        out.write(f"({','.join(shown)})\n" if shown else f"{status}\n")
    return 0 if status != "undecided" else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbjordan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        sp._negative_number_matcher = _NEGATIVE
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    sp = add("verify", cmd_verify, "check an operator file")
    sp.add_argument("file")
    sp.add_argument("--weight", default="0")

    sp = add("construct", cmd_construct, "emit an operator from an explicit family")
    sp.add_argument("family", choices=["j3", "example4", "example5", "bigc"])
    sp.add_argument("field")
    sp.add_argument("form")
    sp.add_argument("--auto", action="store_true", help="solve for parameters")
    sp.add_argument("--abc", help="j3: a,b,c")
    sp.add_argument("--k", help="j3: k; example4: k_{p+1},...,k_n; example5: k1,k2,k3")
    sp.add_argument("--l", help="j3: l; example4: l_1,...,l_p")
    sp.add_argument("--split", type=int, help="example4: the split p")
    sp.add_argument("--x0", help="example5: root of x^2 + d1 d2 d3")
    sp.add_argument("-o", "--output", help="also write the operator file here")

    sp = add("index", cmd_index, "nilpotency index rb(J)")
    sp.add_argument("field")
    sp.add_argument("form")
    sp.add_argument("--certify", choices=["table", "brute", "both"], default="table")
    sp.add_argument("--witness-out")

    for name, func, formats in (("search", cmd_search, ("text", "json")),
                                ("census", cmd_census, ("csv", "json", "text"))):
        sp = add(name, func, "exhaustive search over Z_p" if name == "search"
                 else "census of all RB-operators over Z_p", formats)
        sp.add_argument("field")
        if name == "search":
            sp.add_argument("form")
        else:
            sp.add_argument("forms", nargs="+")
        sp.add_argument("--mode", choices=["auto", "naive", "pruned"], default="auto")
        sp.add_argument("--budget", type=int)
        sp.add_argument("--parallel", type=int, default=1)

    sp = add("solve-form", cmd_solve_form, "diagonal quadratic-form solvers")
    sp.add_argument("kind", choices=["isotropic", "represent", "unit"])
    sp.add_argument("field")
    sp.add_argument("coefficients")
    sp.add_argument("--height-bound", type=int, default=1000)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc} (partial census is not a certificate)", file=sys.stderr)
        return 1
    except RBJordanError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
