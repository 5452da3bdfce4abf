"""Command-line front end.

Exit codes: 0 success, 1 domain error (one JSON line on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .covers import (
    CoverSpec,
    all_covers,
    count_by_support_oracle,
    count_formula_corrected,
    count_formula_paper,
    cover_genus,
    covers_by_quotient_genus,
    intermediate_quotients,
    iso_classes,
)
from .curves import base_genus, curve_from_json, curve_to_dict
from .equations import (
    base_equation,
    certify_coordinate_change,
    coordinate_change,
    cover_equations,
    dumps,
    rational_cover_from_factors,
    render_text,
    system_to_dict,
    two_point_transform,
    verify_two_point_identity,
)
from .errors import CurveFormatError, CyclicCoverError, InvalidQuery
from .ff_linear import ExponentVector, reduce
from .polynomial import Polynomial
from .rationals import format_rational, parse_rational
from .verification import count_audit, run_checks


def _int_list(text):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _coeff_list(text):
    try:
        return Polynomial(parse_rational(p.strip()) for p in text.split(","))
    except CurveFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_curve(source):
    if source.lstrip().startswith("{"):
        return curve_from_json(source)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise CurveFormatError(f"cannot read {source}: {exc.strerror}") from None
    return curve_from_json(text)


def _vector(curve, raw, flag):
    if len(raw) != curve.r:
        raise InvalidQuery(f"{flag} has {len(raw)} entries, curve has r={curve.r}")
    return reduce(raw, curve.d)


def _vec(v: ExponentVector):
    return list(v.entries)


def _emit(args, payload, text):
    if args.json:
        print(dumps(payload))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------


def cmd_curve_info(args):
    curve = _load_curve(args.curve)
    g = base_genus(curve)
    eq = render_text(base_equation(curve))
    payload = {"d": curve.d, "r": curve.r, "genus": g, "curve": curve_to_dict(curve), "equation": eq}
    _emit(args, payload, f"d = {curve.d}\nr = {curve.r}\ngenus = {g}\n{eq}")


def cmd_covers_list(args):
    curve = _load_curve(args.curve)
    rows = []
    for cov in all_covers(curve):
        qs = intermediate_quotients(cov)
        rows.append(
            {
                "beta": _vec(cov.beta),
                "genus": cover_genus(cov),
                "quotients": [{"beta": _vec(v), "genus": g} for v, g in qs],
            }
        )
    lines = [
        f"{ExponentVector(tuple(row['beta']), curve.d)}  genus={row['genus']}  quotient genera="
        + ",".join(str(q["genus"]) for q in row["quotients"])
        for row in rows
    ]
    _emit(args, {"count": len(rows), "covers": rows}, "\n".join([f"{len(rows)} covers"] + lines))


def cmd_covers_classes(args):
    curve = _load_curve(args.curve)
    classes = iso_classes(curve)
    rows = [
        {
            "canonical": _vec(c.canonical),
            "size": len(c.members),
            "members": [_vec(m) for m in sorted(c.members)],
            "quotient_genera": list(c.quotient_genera),
        }
        for c in classes
    ]
    lines = [
        f"{c.canonical}  size={len(c.members)}  quotient genera={list(c.quotient_genera)}"
        for c in classes
    ]
    _emit(args, {"count": len(rows), "classes": rows}, "\n".join([f"{len(rows)} classes"] + lines))


def cmd_covers_count(args):
    curve = _load_curve(args.curve)
    if args.support is not None:
        k = args.support
        if not 0 <= k <= curve.r:
            raise InvalidQuery(f"--support {k} outside [0, {curve.r}]")
    else:
        g0 = args.genus
        if g0 < 0 or (2 * g0) % (curve.d - 1):
            raise InvalidQuery(f"no quotient of genus {g0} for d={curve.d}")
        k = 2 * g0 // (curve.d - 1) + 2
        if k > curve.r:
            raise InvalidQuery(f"genus {g0} needs {k} branch points, curve has {curve.r}")
    payload = {
        "k": k,
        "oracle": count_by_support_oracle(curve, k, include_trivial=args.include_trivial),
        "formula_corrected": count_formula_corrected(curve.d, curve.r, k),
        "formula_paper": format_rational(count_formula_paper(curve.d, curve.r, k)),
    }
    text = "\n".join(f"{key} = {value}" for key, value in payload.items())
    if args.genus is not None and not args.json:
        vecs = covers_by_quotient_genus(curve, args.genus)
        text += "\n" + "\n".join(str(v) for v in vecs)
    _emit(args, payload, text)


def cmd_equations_base(args):
    system = base_equation(_load_curve(args.curve))
    _emit(args, system_to_dict(system), render_text(system))


def cmd_equations_cover(args):
    curve = _load_curve(args.curve)
    system = cover_equations(CoverSpec(curve, _vector(curve, args.beta, "--beta")))
    _emit(args, system_to_dict(system), render_text(system))


def cmd_change_of_coords(args):
    curve = _load_curve(args.curve)
    b1 = _vector(curve, args.beta1, "--beta1")
    b2 = _vector(curve, args.beta2, "--beta2")
    for b in (b1, b2):
        CoverSpec(curve, b)
    change = coordinate_change(curve.alpha, b1, b2)
    payload = change.to_dict(curve)
    payload["certified"] = certify_coordinate_change(curve, change)
    text = "\n".join(
        [
            change.formula(curve),
            f"j = {change.j}",
            f"extraction_exponents = {list(change.extraction_exponents)}",
            f"certified = {payload['certified']}",
        ]
    )
    _emit(args, payload, text)


def cmd_transform(args):
    curve = _load_curve(args.curve)
    tr = two_point_transform(curve, args.i, args.j)
    payload = tr.to_dict()
    a_i, a_j = curve.branch_points[tr.i], curve.branch_points[tr.j]
    payload["x_of_t"] = (
        f"({format_rational(a_i)} - {format_rational(a_j)}*t^{tr.d}) / (1 - t^{tr.d})"
    )
    if args.verify:
        payload["verified"] = verify_two_point_identity(curve, tr)
    lines = [
        f"z^{tr.d} = (x - {format_rational(a_i)})^1 * (x - {format_rational(a_j)})^{tr.d - 1}",
        f"x = {payload['x_of_t']}",
        "c = " + ", ".join(f"c_{k}={format_rational(c)}" for k, c in tr.c_values),
        payload["equation"],
    ]
    if args.verify:
        lines.append(f"verified = {payload['verified']}")
    _emit(args, payload, "\n".join(lines))
    if args.verify and not payload["verified"]:
        return 1
    return 0


def cmd_rational_cover(args):
    system = rational_cover_from_factors(args.d, args.f1, args.f2)
    _emit(args, system_to_dict(system), render_text(system))


def cmd_verify(args):
    curve = _load_curve(args.curve)
    results = run_checks(curve)
    audit = count_audit(curve)
    ok = all(r.ok for r in results)
    payload = {
        "curve": curve_to_dict(curve),
        "checks": [r.to_dict() for r in results],
        "count_audit": audit,
        "ok": ok,
    }
    lines = [f"{r.status} {r.name}: {r.detail}" for r in results]
    for row in audit:
        verdict = "matches" if row["paper_matches"] else "differs"
        lines.append(
            f"AUDIT count_paper k={row['k']}: oracle={row['oracle']} "
            f"corrected={row['formula_corrected']} paper={row['formula_paper']} ({verdict})"
        )
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    curve_arg = argparse.ArgumentParser(add_help=False)
    curve_arg.add_argument("curve", help="curve JSON file, or inline JSON object")

    parser = argparse.ArgumentParser(
        prog="cyclic-covers", description="Strongly cyclic covers of prime-degree cyclic curves."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve").add_subparsers(dest="action", required=True)
    p = curve.add_parser("info", parents=[common, curve_arg])
    p.set_defaults(func=cmd_curve_info)

    covers = sub.add_parser("covers").add_subparsers(dest="action", required=True)
    covers.add_parser("list", parents=[common, curve_arg]).set_defaults(func=cmd_covers_list)
    covers.add_parser("classes", parents=[common, curve_arg]).set_defaults(func=cmd_covers_classes)
    p = covers.add_parser("count", parents=[common, curve_arg])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--support", type=int)
    group.add_argument("--genus", type=int)
    p.add_argument("--include-trivial", action="store_true")
    p.set_defaults(func=cmd_covers_count)

    equations = sub.add_parser("equations").add_subparsers(dest="action", required=True)
    equations.add_parser("base", parents=[common, curve_arg]).set_defaults(func=cmd_equations_base)
    p = equations.add_parser("cover", parents=[common, curve_arg])
    p.add_argument("--beta", type=_int_list, required=True)
    p.set_defaults(func=cmd_equations_cover)

    p = sub.add_parser("change-of-coords", parents=[common, curve_arg])
    p.add_argument("--beta1", type=_int_list, required=True)
    p.add_argument("--beta2", type=_int_list, required=True)
    p.set_defaults(func=cmd_change_of_coords)

    p = sub.add_parser("transform", parents=[common, curve_arg])
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("rational-cover", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f1", type=_coeff_list, required=True, help="coefficients, lowest degree first")
    p.add_argument("--f2", type=_coeff_list, required=True, help="coefficients, lowest degree first")
    p.set_defaults(func=cmd_rational_cover)

    sub.add_parser("verify", parents=[common, curve_arg]).set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except CyclicCoverError as exc:
        sys.stdout.flush()
        print(dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
