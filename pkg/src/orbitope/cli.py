"""Command line front end.

Verbs:

  ineqs    assembled inequality system of the moment polyhedron
  member   membership of a point, with the violated row on failure
  oracle   membership by the Horn route, with a cone witness
  check    grid cross-check of the two routes (exit 3 on disagreement)
  adm      dominant indivisible admissible one-parameter subgroups
  horn     the triple set T_r^n
  pairs    m = 0 well-covering pairs per admissible cocharacter
  plot     SVG of a rank-2 polyhedron with cone rays and chamber wall

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 cross-check
disagreement.  Output is deterministic: identical inputs give identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import goldens  # noqa: F401  (re-exported for `python -m` users)
from .admissible import enumerate_admissible, sorted_admissible
from .exactmath import Fraction as _F  # noqa: F401
from .exactmath import HPolyhedron, RatVec, rat_str
from .horn import enum_T
from .polytope import (
    DomainError,
    OrbitPolytope,
    assemble,
    cross_check,
    display_ineq,
    horn_oracle_member,
    member,
)
from .rootdata import GroupFamily, UnsupportedFamilyError, build
from .wellcover import enumerate_m0

USAGE_EXIT = 2
DOMAIN_EXIT = 1
DISAGREE_EXIT = 3


def _parse_vec(text: str) -> RatVec:
    try:
        return RatVec([Fraction(part.strip()) for part in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad vector {text!r}: {exc}") from exc


def _parse_group(text: str) -> GroupFamily:
    try:
        return GroupFamily.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False)


def cmd_ineqs(args) -> int:
    g = build(args.group)
    pol = assemble(g, args.lam)
    if args.format == "json":
        _emit(_json_dumps(pol.to_json_obj()), args.out)
    else:
        _emit(pol.pretty(), args.out)
    return 0


def cmd_member(args) -> int:
    g = build(args.group)
    pol = assemble(g, args.lam)
    xi = args.xi
    ok = member(pol, xi)
    detail = None
    if not ok:
        for row in pol.system.ineqs:
            if not row.satisfied_by(xi):
                detail = display_ineq(row)
                break
    if args.format == "json":
        obj = {"member": ok}
        if detail:
            obj["violated"] = detail
        _emit(_json_dumps(obj), args.out)
    else:
        _emit(f"member: {str(ok).lower()}"
              + (f"\nviolated: {detail}" if detail else ""), args.out)
    return 0


def cmd_oracle(args) -> int:
    g = build(args.group)
    ok, gamma = horn_oracle_member(g, args.lam, args.mu, witness=True)
    if args.format == "json":
        obj = {"member": ok}
        if gamma is not None:
            obj["cone_witness"] = [rat_str(x) for x in gamma]
        _emit(_json_dumps(obj), args.out)
    else:
        lines = [f"member: {str(ok).lower()}"]
        if gamma is not None:
            lines.append("cone witness: " + ",".join(rat_str(x) for x in gamma))
        _emit("\n".join(lines), args.out)
    return 0


def cmd_check(args) -> int:
    g = build(args.group)
    report = cross_check(g, args.lam, args.radius)
    if args.format == "json":
        obj = {
            "group": report.group,
            "Lambda": list(report.Lambda),
            "radius": report.radius,
            "points_checked": report.points_checked,
            "disagreements": report.disagreements,
        }
        _emit(_json_dumps(obj), args.out)
    else:
        _emit(report.summary(), args.out)
    return 0 if report.ok else DISAGREE_EXIT


def cmd_adm(args) -> int:
    g = build(args.group)
    lams = sorted_admissible(enumerate_admissible(g))
    if args.format == "json":
        _emit(_json_dumps([list(l.ints()) for l in lams]), args.out)
    else:
        _emit("\n".join(",".join(str(c) for c in l.ints()) for l in lams), args.out)
    return 0


def cmd_horn(args) -> int:
    triples = enum_T(args.r, args.n)
    obj = [t.to_json_obj() for t in triples]
    if args.format == "json":
        _emit(_json_dumps(obj), args.out)
    else:
        _emit("\n".join(
            "I={} J={} L={}".format(list(t.I), list(t.J), list(t.L)) for t in triples
        ), args.out)
    return 0


def cmd_pairs(args) -> int:
    g = build(args.group)
    records = []
    for lam in sorted_admissible(enumerate_admissible(g)):
        for pair in enumerate_m0(g, lam):
            records.append(pair.to_json_obj())
    if args.format == "json":
        _emit(_json_dumps(records), args.out)
    else:
        _emit("\n".join(
            "lambda={} w={} w'={} m={}".format(r["lambda"], r["w"], r["w_prime"], r["m"])
            for r in records
        ), args.out)
    return 0


# ---------------------------------------------------------------------------
# Rank-2 SVG plots
# ---------------------------------------------------------------------------


def _clip_polygon(points, normal, bound):
    """Sutherland-Hodgman clip of a polygon by <normal, x> <= bound."""
    out = []
    k = len(points)
    for i in range(k):
        cur, nxt = points[i], points[(i + 1) % k]
        c_in = normal.dot(cur) <= bound
        n_in = normal.dot(nxt) <= bound
        if c_in:
            out.append(cur)
        if c_in != n_in:
            d = RatVec([nxt[0] - cur[0], nxt[1] - cur[1]])
            denom = normal.dot(d)
            t = (bound - normal.dot(cur)) / denom
            out.append(RatVec([cur[0] + t * d[0], cur[1] + t * d[1]]))
    return out


def _clip_to_box(system: HPolyhedron, lo: Fraction, hi: Fraction):
    pts = [RatVec([lo, lo]), RatVec([hi, lo]), RatVec([hi, hi]), RatVec([lo, hi])]
    for row in system.ineqs:
        if row.kind != "le":
            return []
        pts = _clip_polygon(pts, row.normal, row.bound)
        if not pts:
            return []
    return pts


def render_svg(pol: OrbitPolytope, window: int = 0) -> str:
    """Static SVG of a rank-2 moment polyhedron: shaded feasible region
    clipped to a viewport, facet lines, chamber wall and the cone rays
    from Lambda along the noncompact positive roots."""
    g, Lambda = pol.group, pol.Lambda
    if g.dim != 2:
        raise DomainError("plot supports rank-2 groups only (sp:n=2, su:p=2,q=1)")
    coords = [abs(x) for x in Lambda] + [Fraction(1)]
    span = max(coords) + (window if window else max(coords) + 4)
    lo, hi = -span, span
    size = 560
    pad = 30

    def sx(x: Fraction) -> float:
        return pad + float((x - lo) / (hi - lo)) * (size - 2 * pad)

    def sy(y: Fraction) -> float:
        return size - pad - float((y - lo) / (hi - lo)) * (size - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    # axes
    parts.append(
        f'<line x1="{sx(lo)}" y1="{sy(0)}" x2="{sx(hi)}" y2="{sy(0)}" '
        'stroke="#999" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{sx(0)}" y1="{sy(lo)}" x2="{sx(0)}" y2="{sy(hi)}" '
        'stroke="#999" stroke-width="1"/>'
    )
    # shaded feasible region
    poly = _clip_to_box(pol.system, lo, hi)
    if poly:
        pts = " ".join(f"{sx(p[0]):.2f},{sy(p[1]):.2f}" for p in poly)
        parts.append(f'<polygon points="{pts}" fill="#9ecae1" fill-opacity="0.55" '
                     'stroke="#3182bd" stroke-width="2"/>')
    # chamber wall xi1 = xi2
    parts.append(
        f'<line x1="{sx(lo)}" y1="{sy(lo)}" x2="{sx(hi)}" y2="{sy(hi)}" '
        'stroke="#555" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    # cone rays Lambda + R+ . beta
    for beta in g.noncompact_pos:
        end = RatVec([Lambda[0] + beta[0] * span, Lambda[1] + beta[1] * span])
        parts.append(
            f'<line x1="{sx(Lambda[0])}" y1="{sy(Lambda[1])}" '
            f'x2="{sx(end[0])}" y2="{sy(end[1])}" '
            'stroke="#31a354" stroke-width="1" stroke-dasharray="2,3"/>'
        )
    # Lambda marker
    parts.append(
        f'<circle cx="{sx(Lambda[0])}" cy="{sy(Lambda[1])}" r="4" fill="#e6550d"/>'
    )
    parts.append(
        f'<text x="{sx(Lambda[0]) + 7:.2f}" y="{sy(Lambda[1]) - 7:.2f}" '
        f'font-size="13" fill="#e6550d">Lambda=({",".join(rat_str(x) for x in Lambda)})'
        "</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts)


def cmd_plot(args) -> int:
    g = build(args.group)
    pol = assemble(g, args.lam)
    svg = render_svg(pol, window=args.window)
    _emit(svg, args.out)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="orbitope",
        description="Exact moment polyhedra of holomorphic orbit projections.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p, lam=True):
        p.add_argument("--group", type=_parse_group, required=True,
                       help="e.g. sp:n=2, su:p=2,q=2, so_star:n=3, so:p=5")
        if lam:
            p.add_argument("--lambda", dest="lam", type=_parse_vec, required=True,
                           help="comma-separated rationals, e.g. 3,1 or 5/2,1")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("ineqs", help="assembled inequality system")
    common(p)
    p.set_defaults(func=cmd_ineqs)

    p = sub.add_parser("member", help="polyhedron membership of a point")
    common(p)
    p.add_argument("--xi", type=_parse_vec, required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("oracle", help="membership by the Horn route")
    common(p)
    p.add_argument("--mu", type=_parse_vec, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="grid cross-check of both routes")
    common(p)
    p.add_argument("--radius", type=int, default=2)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("adm", help="admissible one-parameter subgroups")
    common(p, lam=False)
    p.set_defaults(func=cmd_adm)

    p = sub.add_parser("horn", help="the triple set T_r^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_horn)

    p = sub.add_parser("pairs", help="m = 0 well-covering pairs")
    common(p, lam=False)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("plot", help="SVG of a rank-2 polyhedron")
    common(p)
    p.add_argument("--window", type=int, default=0,
                   help="half-width of the viewport (0 = auto)")
    p.set_defaults(func=cmd_plot)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize others.
        return USAGE_EXIT if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (DomainError, UnsupportedFamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
