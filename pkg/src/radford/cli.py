"""Command-line interface: `radford --n N [--m M] [--json] COMMAND ...`.

Exit codes: 0 on success / all checks passing; 1 when a verification
fails or an equivalence query answers "not equivalent" or
"unknown-within-bound"; 2 on usage, parse, or malformed-input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .algebra import Element
from .classify import (
    equivalence_witness_diag,
    scan_star_candidates,
    solve_equivalence_n2,
    verify_equivalence,
)
from .coalgebra import antipode, antipode_order, counit, delta, delta_closed
from .errors import ExprSyntaxError, KernelError, NotARootOfUnityError
from .parser import format_element, format_scalar, format_tensor, parse_element, \
    parse_scalar
from .scalars import make_context, unify_contexts
from .solver import is_grouplike, skew_primitive_space
from .star import apply_star, make_star_diag, verify_hopf_axioms, \
    verify_star_axioms


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _report_lines(report):
    lines = []
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        line = f"{mark} {c.name}"
        if c.counterexample is not None:
            kind, at = c.counterexample.location
            if kind == "monomial":
                where = f"y^{at.r}*x^{at.s}*g^{at.l}"
            else:
                a, b = at
                where = (
                    f"(y^{a.r}*x^{a.s}*g^{a.l}, y^{b.r}*x^{b.s}*g^{b.l})"
                )
            line += f" at {where}"
        lines.append(line)
    return "\n".join(lines)


def _load_star(path, ctx):
    try:
        with open(path, "r", encoding="utf-8") as f:
            obj = json.load(f)
    except OSError as exc:
        raise KernelError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise KernelError(f"{path} is not valid JSON: {exc}") from exc
    st = jsonio.star_from_json(obj)
    if st.ctx.n != ctx.n:
        raise KernelError(
            f"star structure has n={st.ctx.n}, command requested n={ctx.n}"
        )
    return st.embed(unify_contexts(st.ctx, ctx))


def _cmd_normalize(args, ctx):
    e = parse_element(args.expr, ctx)
    _emit(args, jsonio.element_to_json(e), format_element(e))
    return 0


def _cmd_mul(args, ctx):
    e = parse_element(args.lhs, ctx) * parse_element(args.rhs, ctx)
    _emit(args, jsonio.element_to_json(e), format_element(e))
    return 0


def _cmd_delta(args, ctx):
    t = delta(parse_element(args.expr, ctx))
    _emit(args, jsonio.tensor_to_json(t), format_tensor(t))
    return 0


def _cmd_delta_closed(args, ctx):
    e = parse_element(args.expr, ctx)
    acc = None
    for mono, c in e.terms.items():
        piece = delta_closed(ctx, mono).scale(c)
        acc = piece if acc is None else acc + piece
    if acc is None:
        from .coalgebra import TensorElement

        acc = TensorElement.zero(ctx)
    _emit(args, jsonio.tensor_to_json(acc), format_tensor(acc))
    return 0


def _cmd_counit(args, ctx):
    c = counit(parse_element(args.expr, ctx))
    payload = {"context": jsonio.context_to_json(ctx),
               "coords": jsonio.scalar_to_json(c)}
    _emit(args, payload, format_scalar(c))
    return 0


def _cmd_antipode(args, ctx):
    e = antipode(parse_element(args.expr, ctx))
    _emit(args, jsonio.element_to_json(e), format_element(e))
    return 0


def _cmd_antipode_order(args, ctx):
    k = antipode_order(ctx)
    _emit(args, {"order": k}, str(k))
    return 0


def _cmd_star_apply(args, ctx):
    st = _load_star(args.star, ctx)
    e = apply_star(st, parse_element(args.expr, st.ctx))
    _emit(args, jsonio.element_to_json(e), format_element(e))
    return 0


def _cmd_verify_hopf(args, ctx):
    report = verify_hopf_axioms(ctx, max_pairs=args.max_pairs)
    _emit(args, jsonio.report_to_json(report), _report_lines(report))
    return 0 if report.all_passed else 1


def _cmd_verify_star(args, ctx):
    st = _load_star(args.star, ctx)
    report = verify_star_axioms(st, max_pairs=args.max_pairs)
    _emit(args, jsonio.report_to_json(report), _report_lines(report))
    return 0 if report.all_passed else 1


def _cmd_solve_skew(args, ctx):
    if not 0 <= args.w < ctx.n:
        raise KernelError(f"--w must lie in [0, {ctx.n})")
    vectors = skew_primitive_space(ctx, args.w)
    text = "\n".join(
        [f"dimension {len(vectors)}"] + [format_element(v) for v in vectors]
    )
    _emit(args, jsonio.skew_to_json(vectors), text)
    return 0


def _cmd_grouplike(args, ctx):
    verdict = is_grouplike(parse_element(args.expr, ctx))
    _emit(args, {"grouplike": verdict}, "true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_equiv_diag(args, ctx):
    if ctx.n <= 2:
        raise KernelError("equiv diag applies to n > 2; use equiv n2 for n = 2")
    alpha = parse_scalar(args.alpha, ctx)
    beta = parse_scalar(args.beta, ctx)
    st = make_star_diag(ctx, alpha, beta)
    try:
        phi = equivalence_witness_diag(st)
    except NotARootOfUnityError as exc:
        payload = {"equivalent": "unknown-within-bound", "witness": None,
                   "nullspace_dimension": None, "error": str(exc)}
        _emit(args, payload, f"unknown-within-bound: {exc}")
        return 1
    trivial = make_star_diag(phi.ctx, phi.ctx.one, phi.ctx.one)
    ok = verify_equivalence(phi, st.embed(phi.ctx), trivial)
    payload = {
        "equivalent": bool(ok),
        "witness": jsonio.automorphism_to_json(phi) if ok else None,
        "nullspace_dimension": None,
    }
    _emit(args, payload,
          "equivalent" if ok else "not equivalent")
    return 0 if ok else 1


def _cmd_equiv_n2(args, ctx):
    st_a = _load_star(args.a, ctx)
    st_b = _load_star(args.b, ctx)
    result = solve_equivalence_n2(st_a, st_b, height_bound=args.height_bound)
    payload = jsonio.equivalence_to_json(result)
    if result.equivalent is True:
        text = "equivalent"
    elif result.equivalent is False:
        text = "not equivalent"
    else:
        text = "unknown-within-bound"
    _emit(args, payload, text)
    return 0 if result.equivalent is True else 1


def _cmd_scan(args, ctx):
    grid = None
    if args.grid:
        grid = [parse_scalar(part.strip(), ctx) for part in args.grid.split(",")]
    survivors = scan_star_candidates(ctx, grid=grid, max_pairs=args.max_pairs)
    text = "\n".join(
        [f"survivors {len(survivors)}"]
        + [
            f"g -> {format_element(st.g_img)}; x -> {format_element(st.x_img)}; "
            f"y -> {format_element(st.y_img)}"
            for st in survivors
        ]
    )
    _emit(args, jsonio.scan_to_json(survivors), text)
    return 0


def _add_expr(p):
    p.add_argument("expr", help="element expression, e.g. 'x*g + w*g*x'")


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    shared.add_argument("--n", type=int, default=argparse.SUPPRESS,
                        help="order of the root of unity (required)")
    shared.add_argument("--m", type=int, default=argparse.SUPPRESS,
                        help="conductor, a multiple of lcm(4, n)")

    top = argparse.ArgumentParser(
        prog="radford",
        description="Exact kernel for the Radford Hopf algebra H_n",
    )
    top.add_argument("--n", type=int, help="order of the root of unity (required)")
    top.add_argument("--m", type=int, default=None,
                     help="conductor, a multiple of lcm(4, n)")
    top.add_argument("--json", action="store_true", default=False,
                     help="emit JSON instead of text")
    sub = top.add_subparsers(dest="command", required=True)

    def leaf(name, func, configure=None):
        p = sub.add_parser(name, parents=[shared])
        p.set_defaults(func=func)
        if configure:
            configure(p)
        return p

    leaf("normalize", _cmd_normalize, _add_expr)

    def conf_mul(p):
        p.add_argument("lhs")
        p.add_argument("rhs")

    leaf("mul", _cmd_mul, conf_mul)
    leaf("delta", _cmd_delta, _add_expr)
    leaf("delta-closed", _cmd_delta_closed, _add_expr)
    leaf("counit", _cmd_counit, _add_expr)
    leaf("antipode", _cmd_antipode, _add_expr)
    leaf("antipode-order", _cmd_antipode_order)

    def conf_star_apply(p):
        p.add_argument("--star", required=True, help="star-structure JSON file")
        _add_expr(p)

    leaf("star-apply", _cmd_star_apply, conf_star_apply)

    def conf_pairs(p):
        p.add_argument("--max-pairs", type=int, default=None,
                       help="sample this many basis pairs for binary laws")

    def conf_verify_star(p):
        p.add_argument("--star", required=True)
        conf_pairs(p)

    verify = sub.add_parser("verify")
    vsub = verify.add_subparsers(dest="subcommand", required=True)
    vh = vsub.add_parser("hopf", parents=[shared])
    vh.set_defaults(func=_cmd_verify_hopf)
    conf_pairs(vh)
    vs = vsub.add_parser("star", parents=[shared])
    vs.set_defaults(func=_cmd_verify_star)
    conf_verify_star(vs)
    leaf("verify-hopf", _cmd_verify_hopf, conf_pairs)
    leaf("verify-star", _cmd_verify_star, conf_verify_star)

    def conf_skew(p):
        p.add_argument("--w", type=int, required=True,
                       help="group-like exponent in D(h) = h(x)g^w + 1(x)h")

    solve = sub.add_parser("solve")
    ssub = solve.add_subparsers(dest="subcommand", required=True)
    sk = ssub.add_parser("skew", parents=[shared])
    sk.set_defaults(func=_cmd_solve_skew)
    conf_skew(sk)
    leaf("solve-skew", _cmd_solve_skew, conf_skew)

    leaf("grouplike", _cmd_grouplike, _add_expr)

    def conf_equiv_diag(p):
        p.add_argument("--alpha", required=True, help="scalar expression")
        p.add_argument("--beta", required=True, help="scalar expression")

    def conf_equiv_n2(p):
        p.add_argument("--a", required=True, help="star-structure JSON file")
        p.add_argument("--b", required=True, help="star-structure JSON file")
        p.add_argument("--height-bound", type=int, default=3,
                       help="height cap for the invertibility search")

    equiv = sub.add_parser("equiv")
    esub = equiv.add_subparsers(dest="subcommand", required=True)
    ed = esub.add_parser("diag", parents=[shared])
    ed.set_defaults(func=_cmd_equiv_diag)
    conf_equiv_diag(ed)
    en = esub.add_parser("n2", parents=[shared])
    en.set_defaults(func=_cmd_equiv_n2)
    conf_equiv_n2(en)
    leaf("equiv-diag", _cmd_equiv_diag, conf_equiv_diag)
    leaf("equiv-n2", _cmd_equiv_n2, conf_equiv_n2)

    def conf_scan(p):
        p.add_argument("--grid", default=None,
                       help="comma-separated scalar expressions; default is "
                            "all m-th roots of unity and 0")
        conf_pairs(p)

    leaf("scan", _cmd_scan, conf_scan)
    return top


def main(argv=None):
    top = build_parser()
    args = top.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    if not hasattr(args, "max_pairs"):
        args.max_pairs = None
    if getattr(args, "n", None) is None:
        top.error("--n is required")
    try:
        ctx = make_context(args.n, getattr(args, "m", None))
    except KernelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, ctx)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except NotARootOfUnityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KernelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
