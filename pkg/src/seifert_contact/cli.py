"""Command-line front end.

Every subcommand parses its inputs, calls one library operation and
prints either human-oriented text or JSON.  JSON is the stable machine
contract: keys are documented in the README, rationals appear as "p/q"
strings, lattice vectors as [s, f] pairs.  Exit codes: 0 success, 1
domain error (JSON carries a machine-readable error tag), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import selftest as selftest_module
from .criteria import (
    count_isotopy_classes,
    exists_transverse,
    foliation_necessary,
    realizable,
    tangent_levels,
    torus_bundle_geodesible,
    twisting_spectrum,
)
from .errors import DomainError
from .rationals import best_lower_approximations, format_rational, parse_rational
from .sails import Cone, cover_thresholds, sail, sail_svg, solid_torus_counts
from .seifert import euler_data, format_manifold, parse_manifold


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _parse_vector(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError("invalid-argument", f"expected 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise DomainError("invalid-argument", f"expected integers in {text!r}") from None


def _parse_matrix(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise DomainError("invalid-argument", f"expected 'a,b,c,d', got {text!r}")
    try:
        a, b, c, d = (int(p) for p in parts)
    except ValueError:
        raise DomainError("invalid-argument", f"expected integers in {text!r}") from None
    return ((a, b), (c, d))


def _vec_json(v):
    return [v[0], v[1]]


def _point_json(p):
    return [format_rational(Fraction(p[0])), format_rational(Fraction(p[1]))]


def _multi_index_json(mi):
    return None if mi is None else {"n": mi.n, "multi_index": list(mi.values)}


def build_parser() -> _Parser:
    parser = _Parser(prog="seifert-contact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("euler", parents=[fmt], help="Euler data of a Seifert manifold")
    p.add_argument("manifold")

    p = sub.add_parser("exists", parents=[fmt], help="existence of a transverse contact structure")
    p.add_argument("manifold")

    p = sub.add_parser("spectrum", parents=[fmt], help="candidate twisting levels up to --max")
    p.add_argument("manifold")
    p.add_argument("--max", type=int, required=True, dest="n_max")

    p = sub.add_parser("count", parents=[fmt], help="isotopy-class counts at level --n")
    p.add_argument("manifold")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("tangent", parents=[fmt], help="tangent-type levels up to --max")
    p.add_argument("manifold")
    p.add_argument("--max", type=int, required=True, dest="n_max")

    p = sub.add_parser("realizable", parents=[fmt], help="realizability witness for a tuple in (0,1)")
    p.add_argument("gammas", nargs="+")

    p = sub.add_parser("foliation", parents=[fmt], help="necessary condition for a transverse foliation")
    p.add_argument("manifold")

    p = sub.add_parser("blap", parents=[fmt], help="best lower approximations")
    p.add_argument("value")
    p.add_argument("--max-denominator", type=int, required=True, dest="max_denominator")

    p = sub.add_parser("solid-torus", parents=[fmt], help="tight counts on a fibered solid torus")
    p.add_argument("--meridian", required=True)
    p.add_argument("--boundary", required=True)

    p = sub.add_parser("polygon", parents=[fmt], help="sail of a cone")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--include-left", action="store_true")
    p.add_argument("--include-right", action="store_true")
    p.add_argument("--emit-svg", dest="emit_svg")

    p = sub.add_parser("cover-thresholds", parents=[fmt], help="overtwisted-cover thresholds")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--class", required=True, dest="klass")

    p = sub.add_parser("torus-bundle", parents=[fmt], help="geodesibility of a torus bundle")
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("selftest", parents=[fmt], help="run the acceptance sweeps")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")
    return parser


def _cmd_euler(args):
    v = parse_manifold(args.manifold)
    data = euler_data(v)
    payload = {
        "e": format_rational(data.e),
        "e0": data.e0,
        "chi": format_rational(data.chi_orbifold),
        "gamma": [format_rational(t) for t in data.gamma],
    }
    text = "\n".join(
        [
            f"manifold: {format_manifold(v)}",
            f"e = {format_rational(data.e)}",
            f"e0 = {data.e0}",
            f"chi = {format_rational(data.chi_orbifold)}",
            "gamma = (" + ", ".join(format_rational(t) for t in data.gamma) + ")",
        ]
    )
    return payload, text


def _cmd_exists(args):
    v = parse_manifold(args.manifold)
    report = exists_transverse(v)
    payload = {
        "answer": report.answer,
        "case": report.case,
        "certificate": _multi_index_json(report.multi_index),
        "witness": list(report.witness) if report.witness else None,
    }
    if not report.answer:
        return payload, "transverse contact structure: no"
    bits = [f"case {report.case}", f"n={report.multi_index.n}", f"multi-index {report.multi_index.values}"]
    if report.witness:
        bits.append(f"witness (a,m)={report.witness}")
    return payload, "transverse contact structure: yes (" + ", ".join(bits) + ")"


def _cmd_spectrum(args):
    v = parse_manifold(args.manifold)
    report = twisting_spectrum(v, args.n_max)
    payload = {
        "exactness": report.exactness,
        "entries": [_multi_index_json(mi) for mi in report.entries],
    }
    lines = [f"twisting levels up to {args.n_max} ({report.exactness}):"]
    if not report.entries:
        lines.append("  (none)")
    for mi in report.entries:
        lines.append(f"  n={mi.n} (twisting number {-mi.n}), multi-index {mi.values}")
    return payload, "\n".join(lines)


def _cmd_count(args):
    v = parse_manifold(args.manifold)
    count = count_isotopy_classes(v, args.n)
    payload = {
        "regime": count.regime,
        "total": count.total,
        "per_r_class": count.per_r_class,
        "transverse_oriented": count.transverse_oriented,
        "transverse_unoriented": count.transverse_unoriented,
        "no_structures": count.no_structures,
    }
    if count.no_structures:
        return payload, f"no contact structures with twisting number {-args.n}"
    if count.regime == "flexible":
        text = (
            f"flexible regime: {count.total} isotopy classes, "
            f"{count.transverse_oriented} transverse ({count.transverse_unoriented} unoriented)"
        )
    else:
        text = (
            f"rigid regime: {count.per_r_class} isotopy classes per 1-form class, "
            f"{count.transverse_oriented} transverse ({count.transverse_unoriented} unoriented)"
        )
    return payload, text


def _cmd_tangent(args):
    v = parse_manifold(args.manifold)
    report = tangent_levels(v, args.n_max)
    payload = {"levels": list(report.levels), "infinite_family": report.infinite_family}
    levels = ", ".join(str(n) for n in report.levels) or "(none)"
    suffix = " (infinite family)" if report.infinite_family else ""
    return payload, f"tangent levels up to {args.n_max}: {levels}{suffix}"


def _cmd_realizable(args):
    gammas = [parse_rational(t) for t in args.gammas]
    witness = realizable(gammas)
    if witness is None:
        return {"realizable": False}, "realizable: no"
    a, m = witness
    return {"realizable": True, "a": a, "m": m}, f"realizable: yes (a={a}, m={m})"


def _cmd_foliation(args):
    v = parse_manifold(args.manifold)
    answer = foliation_necessary(v)
    return {"necessary_condition": answer}, f"transverse foliation necessary condition: {'holds' if answer else 'fails'}"


def _cmd_blap(args):
    value = parse_rational(args.value)
    approx = best_lower_approximations(value, args.max_denominator)
    payload = {
        "value": format_rational(value),
        "max_denominator": args.max_denominator,
        "best_lower_approximations": [format_rational(t) for t in approx],
    }
    return payload, ", ".join(format_rational(t) for t in approx)


def _cmd_solid_torus(args):
    counts = solid_torus_counts(_parse_vector(args.meridian), _parse_vector(args.boundary))
    payload = {"tight": counts.tight, "universally_tight": counts.universally_tight}
    return payload, f"tight: {counts.tight}, universally tight: {counts.universally_tight}"


def _cmd_polygon(args):
    cone = Cone(
        _parse_vector(args.left),
        _parse_vector(args.right),
        args.include_left,
        args.include_right,
    )
    result = sail(cone)
    payload = {
        "points": [_vec_json(p) for p in result.points],
        "edges": [
            {"points": [_vec_json(p) for p in e.points], "cardinality": e.cardinality}
            for e in result.edges
        ],
        "extremal": [_vec_json(p) for p in result.extremal],
    }
    lines = ["points (right to left): " + ", ".join(str(p) for p in result.points)]
    for i, e in enumerate(result.edges):
        lines.append(f"edge {i}: {e.points[0]} .. {e.points[-1]}, {e.cardinality} lattice points")
    lines.append("extremal: " + ", ".join(str(p) for p in result.extremal))
    if args.emit_svg:
        with open(args.emit_svg, "w", encoding="utf-8") as handle:
            handle.write(sail_svg(cone, result))
        payload["svg"] = args.emit_svg
        lines.append(f"wrote {args.emit_svg}")
    return payload, "\n".join(lines)


def _cmd_cover_thresholds(args):
    cone = Cone(_parse_vector(args.left), _parse_vector(args.right), True, True)
    d = _parse_vector(args.klass)
    t = cover_thresholds(cone, d)
    payload = {
        "a": _point_json(t.a),
        "b": _point_json(t.b),
        "l_h": format_rational(t.l_h),
        "l_v": format_rational(t.l_v),
        "n0": t.n0,
        "m0": t.m0,
    }
    text = (
        f"a = ({format_rational(t.a[0])}, {format_rational(t.a[1])}), "
        f"b = ({format_rational(t.b[0])}, {format_rational(t.b[1])})\n"
        f"l_h = {format_rational(t.l_h)}, l_v = {format_rational(t.l_v)}\n"
        f"n0 = {t.n0}, m0 = {t.m0}"
    )
    return payload, text


def _cmd_torus_bundle(args):
    report = torus_bundle_geodesible(_parse_matrix(args.matrix))
    payload = {"geodesible": report.answer, "isotopy_classes": report.isotopy_classes}
    if report.answer:
        return payload, "geodesible: yes (unique isotopy class)"
    return payload, "geodesible: no"


def _cmd_selftest(args):
    only = None
    if args.only:
        try:
            only = {int(p) for p in args.only.split(",")}
        except ValueError:
            raise DomainError("invalid-argument", f"bad --only list {args.only!r}") from None
    results = selftest_module.run_selftest(only)
    payload = {
        "passed": all(r.passed for r in results),
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }
    lines = [
        f"criterion {r.number} ({r.name}): {'PASS' if r.passed else 'FAIL'} - {r.detail}"
        for r in results
    ]
    lines.append("selftest: " + ("PASS" if payload["passed"] else "FAIL"))
    return payload, "\n".join(lines)


_HANDLERS = {
    "euler": _cmd_euler,
    "exists": _cmd_exists,
    "spectrum": _cmd_spectrum,
    "count": _cmd_count,
    "tangent": _cmd_tangent,
    "realizable": _cmd_realizable,
    "foliation": _cmd_foliation,
    "blap": _cmd_blap,
    "solid-torus": _cmd_solid_torus,
    "polygon": _cmd_polygon,
    "cover-thresholds": _cmd_cover_thresholds,
    "torus-bundle": _cmd_torus_bundle,
    "selftest": _cmd_selftest,
}


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI on argv (no program name); returns (exit_code, output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return 2, str(exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0), parser.format_help()
    wants_json = getattr(args, "format", "text") == "json"
    try:
        payload, text = _HANDLERS[args.command](args)
    except DomainError as exc:
        if wants_json:
            return 1, json.dumps({"error": exc.tag, "message": str(exc)})
        return 1, f"error[{exc.tag}]: {exc}"
    code = 0
    if args.command == "selftest" and not payload["passed"]:
        code = 1
    return code, json.dumps(payload) if wants_json else text


def main() -> None:
    code, output = run(sys.argv[1:])
    print(output)
    sys.exit(code)


if __name__ == "__main__":
    main()
