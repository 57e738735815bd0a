"""Cones in the homology of a torus and their lattice sails.

A cone is swept clockwise from a primitive `left` ray to a primitive
`right` ray, so intersection(left, right) <= 0; each boundary ray
belongs to the cone exactly when its foliation has a dividing set
(the included flags).  The sail of a cone is the set of lattice points
lying on the finite-length edges of the boundary of the convex hull of
the cone's lattice points -- or the single point where the two infinite
edges meet.  Sail points are ordered by the intersection form from the
right ray to the left ray.

Two routes compute the sail.  `sail` is exact: the finite part of the
hull boundary lives inside the triangle spanned by the two anchor
points (the first lattice point of each infinite edge) and the apex of
the shifted cone, so hulling the lattice points of that triangle
suffices.  `sail_bruteforce` is the differential-testing oracle: it
enumerates cone lattice points inside a truncation box, hulls them,
extracts the chain between the infinite-edge lines and discards
truncation artifacts, doubling the radius until the extraction
certifies itself.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lattice import (
    LatticeVector,
    _column_span,
    _halfplanes,
    ceil_div,
    convex_hull,
    floor_div,
    intersection,
    is_primitive,
    orient,
    segment_points,
    vadd,
    vscale,
)

ORACLE_RADIUS_ENV = "SEIFERT_ORACLE_RADIUS"
ORACLE_RADIUS_FACTOR = 64


@dataclass(frozen=True)
class Cone:
    """Cone without vertex between two primitive rays, clockwise left to right."""

    left: LatticeVector
    right: LatticeVector
    left_included: bool = False
    right_included: bool = False

    def __post_init__(self):
        for ray in (self.left, self.right):
            if not is_primitive(ray):
                raise DomainError("invalid-argument", f"cone ray {ray} must be primitive and nonzero")
        if intersection(self.left, self.right) > 0:
            raise DomainError(
                "invalid-argument",
                "cone rays must be ordered clockwise: intersection(left, right) <= 0",
            )


def cone_contains(cone: Cone, w: LatticeVector) -> bool:
    """Membership of a nonzero class, boundary rays per the included flags."""
    if w == (0, 0):
        return False
    c1 = intersection(cone.left, w)
    c2 = intersection(w, cone.right)
    if c1 > 0 or c2 > 0:
        return False
    if c1 == 0 and c2 == 0:
        # both rays parallel to w: the degenerate single-ray cone
        same_dir = w[0] * cone.left[0] + w[1] * cone.left[1] > 0
        return same_dir and (cone.left_included or cone.right_included)
    if c1 == 0:
        return cone.left_included
    if c2 == 0:
        return cone.right_included
    return True


@dataclass(frozen=True)
class SailEdge:
    """A maximal run of aligned sail points, endpoints included."""

    points: tuple[LatticeVector, ...]

    @property
    def cardinality(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Sail:
    points: tuple[LatticeVector, ...]
    edges: tuple[SailEdge, ...]
    extremal: tuple[LatticeVector, ...]


def _excluded_degree(included: bool) -> int:
    # lattice points satisfy intersection <= -e with the ray's normal form
    return 0 if included else 1


def _primitive_solution(direction: LatticeVector, e: int, left_side: bool) -> LatticeVector:
    """Some lattice point on the infinite-edge line of the given ray.

    Left side: {w : intersection(direction, w) = -e}; right side:
    {w : intersection(w, direction) = -e}.  For e = 0 the primitive ray
    generator itself works.
    """
    if e == 0:
        return direction
    a, b = direction
    g, u, v = _xgcd(a, b)
    assert g == 1
    if left_side:
        # a*wf - b*ws = -e  with  a*u + b*v = 1
        return (e * v, -e * u)
    # ws*b'... right side: ws*rf - wf*rs = -e
    g, u, v = _xgcd(b, a)  # b*u + a*v = 1
    return (-e * u, e * v)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _anchors(cone: Cone, inter_lr: int) -> tuple[LatticeVector, LatticeVector]:
    """Finite endpoints of the two infinite hull edges.

    The left infinite edge runs along {intersection(left, w) = -e_L}
    from its first point inside the right half-plane out to infinity in
    the left direction; symmetrically on the right.  inter_lr < 0, so
    moving along the edge direction only improves the other constraint.
    """
    e_l = _excluded_degree(cone.left_included)
    e_r = _excluded_degree(cone.right_included)

    p0 = _primitive_solution(cone.left, e_l, left_side=True)
    t0 = ceil_div(e_r + intersection(p0, cone.right), -inter_lr)
    a = vadd(p0, vscale(t0, cone.left))
    if a == (0, 0):
        a = vadd(a, cone.left)

    p0 = _primitive_solution(cone.right, e_r, left_side=False)
    t0 = ceil_div(e_l + intersection(cone.left, p0), -inter_lr)
    b = vadd(p0, vscale(t0, cone.right))
    if b == (0, 0):
        b = vadd(b, cone.right)
    return a, b


def _triangle_column_extremes(a, v, b) -> list[LatticeVector]:
    """Per-column extreme lattice points of closed triangle a, v, b.

    a, b are lattice points, v may be rational.  The origin is never
    returned (it can only occur as the apex of a both-included cone).
    """
    planes = _halfplanes((a, v, b))
    xs = (Fraction(a[0]), Fraction(b[0]), Fraction(v[0]))
    out = []
    for s in range(ceil_div(min(xs).numerator, min(xs).denominator),
                   floor_div(max(xs).numerator, max(xs).denominator) + 1):
        span = _column_span(planes, s)
        if span is None:
            continue
        lo, hi = span
        if s == 0:
            if lo == 0:
                lo += 1
            if hi == 0:
                hi -= 1
            if lo > hi:
                continue
        out.append((s, lo))
        if hi != lo:
            out.append((s, hi))
    return out


def _expand_chain(chain: list[LatticeVector]) -> Sail:
    points: list[LatticeVector] = [chain[0]]
    edges = []
    for u, w in zip(chain, chain[1:]):
        seg = segment_points(u, w)
        edges.append(SailEdge(tuple(seg)))
        points.extend(seg[1:])
    if len(points) == 1:
        extremal = (points[0],)
    else:
        extremal = (points[0], points[-1])
    return Sail(tuple(points), tuple(edges), extremal)


def sail(cone: Cone) -> Sail:
    """The sail of a cone: lattice points on the finite hull edges.

    Points run from the right ray to the left ray, so consecutive
    entries p, q satisfy intersection(p, q) >= 0.
    """
    if cone.left == cone.right:
        if not (cone.left_included or cone.right_included):
            raise DomainError("degenerate-cone", "equal excluded rays contain no lattice point")
        return Sail((cone.left,), (), (cone.left,))
    inter_lr = intersection(cone.left, cone.right)
    if inter_lr == 0:
        raise DomainError("degenerate-cone", "opposite rays bound a half-plane, which has no sail")

    a, b = _anchors(cone, inter_lr)
    if a == b:
        return Sail((a,), (), (a,))

    e_l = _excluded_degree(cone.left_included)
    e_r = _excluded_degree(cone.right_included)
    v = (
        Fraction(e_r * cone.left[0] + e_l * cone.right[0], -inter_lr),
        Fraction(e_r * cone.left[1] + e_l * cone.right[1], -inter_lr),
    )
    candidates = _triangle_column_extremes(a, v, b)
    hull = convex_hull(candidates)
    if len(hull) <= 2:
        # all candidates aligned: the sail is the single edge from b to a
        return _expand_chain([b, a])

    ia, ib = hull.index(a), hull.index(b)
    m = len(hull)
    arc1 = [hull[(ib + k) % m] for k in range((ia - ib) % m + 1)]
    arc2 = [hull[(ia + k) % m] for k in range((ib - ia) % m + 1)]
    arc2.reverse()

    side = orient(a, b, v)
    assert side != 0

    def faces_apex(arc):
        inner = arc[1:-1]
        return bool(inner) and all((orient(a, b, w) > 0) == (side > 0) for w in inner)

    if faces_apex(arc1):
        chain = arc1
    elif faces_apex(arc2):
        chain = arc2
    else:
        chain = [b, a]
    return _expand_chain(chain)


def _oracle_radius(cone: Cone) -> int:
    env = os.environ.get(ORACLE_RADIUS_ENV)
    if env is not None:
        return max(1, int(env))
    maxcoord = max(abs(c) for ray in (cone.left, cone.right) for c in ray)
    return ORACLE_RADIUS_FACTOR * maxcoord


def sail_bruteforce(cone: Cone, radius: int | None = None) -> Sail:
    """Truncated-hull oracle for `sail`, for differential testing.

    Enumerates the cone's lattice points with both coordinates bounded
    by the truncation radius (default: 64 times the largest ray
    coordinate, overridable via SEIFERT_ORACLE_RADIUS), hulls them, and
    reads the sail off the hull between the two infinite-edge lines.
    If the extraction cannot certify that truncation artifacts were
    confined to the frontier, the radius is doubled and the enumeration
    retried.
    """
    if cone.left == cone.right:
        if not (cone.left_included or cone.right_included):
            raise DomainError("degenerate-cone", "equal excluded rays contain no lattice point")
        return Sail((cone.left,), (), (cone.left,))
    if intersection(cone.left, cone.right) == 0:
        raise DomainError("degenerate-cone", "opposite rays bound a half-plane, which has no sail")
    base = radius if radius is not None else _oracle_radius(cone)
    for attempt in range(12):
        result = _oracle_attempt(cone, base << attempt)
        if result is not None:
            return result
    raise RuntimeError("sail oracle failed to stabilize; radius override may help")


def _oracle_attempt(cone: Cone, radius: int) -> Sail | None:
    ls, lf = cone.left
    rs, rf = cone.right
    e_l = _excluded_degree(cone.left_included)
    e_r = _excluded_degree(cone.right_included)
    pts: list[LatticeVector] = []
    for s in range(-radius, radius + 1):
        # ls*f - lf*s <= -e_l  and  s*rf - f*rs <= -e_r, f within the box
        lo, hi = -radius, radius
        rhs = -e_l + lf * s
        if ls > 0:
            hi = min(hi, floor_div(rhs, ls))
        elif ls < 0:
            lo = max(lo, ceil_div(rhs, ls))
        elif rhs < 0:
            continue
        rhs = -e_r - s * rf
        if -rs > 0:
            hi = min(hi, floor_div(rhs, -rs))
        elif -rs < 0:
            lo = max(lo, ceil_div(rhs, -rs))
        elif rhs < 0:
            continue
        if lo > hi:
            continue
        if s == 0:
            if lo == 0:
                lo += 1
            if hi == 0:
                hi -= 1
            if lo > hi:
                continue
        pts.append((s, lo))
        if hi != lo:
            pts.append((s, hi))
    if len(pts) < 2:
        return None

    hull = convex_hull(pts)

    def line_value_left(w):
        return ls * w[1] - lf * w[0]

    def line_value_right(w):
        return w[0] * rf - w[1] * rs

    on_left = [w for w in hull if line_value_left(w) == -e_l]
    on_right = [w for w in hull if line_value_right(w) == -e_r]
    if not on_left or not on_right:
        return None
    # order along the ray direction; the sail anchor is the innermost
    a = min(on_left, key=lambda w: w[0] * ls + w[1] * lf)
    b = min(on_right, key=lambda w: w[0] * rs + w[1] * rf)
    far = {max(on_left, key=lambda w: w[0] * ls + w[1] * lf),
           max(on_right, key=lambda w: w[0] * rs + w[1] * rf)}
    if a in far or b in far:
        return None

    if a == b:
        chain = [a]
    elif len(hull) == 2:
        chain = [b, a]
    else:
        m = len(hull)
        ia, ib = hull.index(a), hull.index(b)
        chains = []
        for start, stop in ((ib, ia), (ia, ib)):
            arc = [hull[(start + k) % m] for k in range((stop - start) % m + 1)]
            if not any(w in far for w in arc):
                chains.append(arc if arc[0] == b else list(reversed(arc)))
        if len(chains) != 1:
            return None
        chain = chains[0]
    # certification: the true sail sits well inside the box
    margin = radius // 2
    if any(max(abs(w[0]), abs(w[1])) > margin for w in chain):
        return None
    return _expand_chain(chain)


@dataclass(frozen=True)
class SolidTorusCounts:
    tight: int
    universally_tight: int


def solid_torus_counts(meridian: LatticeVector, boundary_class: LatticeVector) -> SolidTorusCounts:
    """Counts of tight structures on a solid torus with ruled boundary.

    The boundary torus is divided by two curves of class
    boundary_class, oriented to intersect both the meridian and the
    fiber class positively.  Tight structures number the product of the
    sail edge cardinalities for the cone from the meridian ray
    (excluded: meridian foliations have no dividing set) to the
    boundary ray (included); a single-point sail gives the empty
    product 1.  Universally tight ones number one when the boundary
    class and meridian pair to 1, and two otherwise.
    """
    if not is_primitive(meridian):
        raise DomainError("invalid-argument", f"meridian {meridian} must be primitive")
    if not is_primitive(boundary_class):
        raise DomainError("invalid-argument", f"boundary class {boundary_class} must be primitive")
    pairing = intersection(boundary_class, meridian)
    if pairing <= 0:
        raise DomainError("invalid-argument", "boundary class must intersect the meridian positively")
    if boundary_class[0] <= 0:
        raise DomainError("invalid-argument", "boundary class must intersect the fiber class positively")
    sl = sail(Cone(meridian, boundary_class, left_included=False, right_included=True))
    tight = 1
    for e in sl.edges:
        tight *= e.cardinality
    return SolidTorusCounts(tight, 1 if pairing == 1 else 2)


@dataclass(frozen=True)
class CoverThresholds:
    """Covering degrees beyond which a lifted interior flip class goes overtwisted."""

    a: tuple[Fraction, Fraction]
    b: tuple[Fraction, Fraction]
    l_h: Fraction
    l_v: Fraction
    n0: int
    m0: int


def cover_thresholds(cone: Cone, d: LatticeVector) -> CoverThresholds:
    """Thresholds (n0, m0) for fibered covers over a class d inside the cone.

    a is the crossing of the horizontal line through d with a boundary
    ray and b the crossing of the vertical line, chosen so the line
    through a and b strictly separates the origin from d; l_h and l_v
    are the (horizontal resp. vertical) distances from d, and
    n0 = floor(1/l_h) + 1, m0 = floor(1/l_v) + 1.
    """
    if d == (0, 0):
        raise DomainError("invalid-argument", "class must be nonzero")
    for ray in (cone.left, cone.right):
        if ray[0] == 0 or ray[1] == 0:
            raise DomainError("axis-parallel-ray", f"boundary ray {ray} is parallel to a coordinate axis")
    if intersection(cone.left, d) == 0 or intersection(d, cone.right) == 0:
        raise DomainError("boundary-class-on-ray", f"{d} lies on a boundary ray")
    if intersection(cone.left, d) > 0 or intersection(d, cone.right) > 0:
        raise DomainError("invalid-argument", f"{d} is not inside the cone")

    def ray_hits(fixed_index: int, value: int):
        hits = []
        for ray in (cone.left, cone.right):
            t = Fraction(value, ray[fixed_index])
            if t > 0:
                hits.append((t * ray[0], t * ray[1]))
        return hits

    a_candidates = ray_hits(1, d[1])  # horizontal line f = d.f
    b_candidates = ray_hits(0, d[0])  # vertical line s = d.s
    df = (Fraction(d[0]), Fraction(d[1]))
    for a in a_candidates:
        for b in b_candidates:
            # strict separation of 0 and d by the line through a and b
            def side(p):
                return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])

            s0, sd = side((0, 0)), side(df)
            if s0 != 0 and sd != 0 and (s0 > 0) != (sd > 0):
                l_h = abs(df[0] - a[0])
                l_v = abs(df[1] - b[1])
                inv_h = 1 / l_h
                inv_v = 1 / l_v
                n0 = inv_h.numerator // inv_h.denominator + 1
                m0 = inv_v.numerator // inv_v.denominator + 1
                return CoverThresholds((a[0], a[1]), (b[0], b[1]), l_h, l_v, n0, m0)
    raise DomainError("no-separating-line", "no boundary crossings separate the origin from the class")


def cover_witnesses(thresholds: CoverThresholds, d: LatticeVector, n: int, m: int):
    """Integer points on the rescaled crossing segments of an (m, n)-cover.

    The cover rescales a class (p, q) to (n*p, m*q).  Returns the
    integer points on the images of the segments from a to d and from b
    to d, excluding the image of d itself; these witness that the
    lifted class leaves the sail once n, m reach the thresholds.
    """
    ax = n * thresholds.a[0]
    dx = n * d[0]
    y = m * d[1]
    lo, hi = min(ax, dx), max(ax, dx)
    xs = range(ceil_div(lo.numerator, lo.denominator), floor_div(hi.numerator, hi.denominator) + 1)
    horiz = [(x, y) for x in xs if x != dx]

    by = m * thresholds.b[1]
    dy = m * d[1]
    x = n * d[0]
    lo, hi = min(by, dy), max(by, dy)
    ys = range(ceil_div(lo.numerator, lo.denominator), floor_div(hi.numerator, hi.denominator) + 1)
    vert = [(x, yy) for yy in ys if yy != dy]
    return horiz, vert


def sail_svg(cone: Cone, sl: Sail) -> str:
    """Small SVG dump: cone rays as lines, lattice points as circles,
    one polyline per sail edge."""
    pts = list(sl.points) + [cone.left, cone.right, (0, 0)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = 2
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    scale = 24

    def cx(x):
        return (x - x0) * scale

    def cy(y):
        return (y1 - y) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{cx(x1)}" height="{cy(y0)}" '
        f'viewBox="0 0 {cx(x1)} {cy(y0)}">',
    ]
    reach = max(x1 - x0, y1 - y0)
    for ray in (cone.left, cone.right):
        k = max(1, (reach // max(abs(ray[0]), abs(ray[1]))) + 1)
        lines.append(
            f'<line x1="{cx(0)}" y1="{cy(0)}" x2="{cx(k * ray[0])}" y2="{cy(k * ray[1])}" '
            'stroke="#888" stroke-dasharray="4 3"/>'
        )
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            lines.append(f'<circle cx="{cx(x)}" cy="{cy(y)}" r="1.5" fill="#bbb"/>')
    for edge in sl.edges:
        path = " ".join(f"{cx(p[0])},{cy(p[1])}" for p in edge.points)
        lines.append(f'<polyline points="{path}" fill="none" stroke="#c22" stroke-width="2"/>')
    for p in sl.points:
        lines.append(f'<circle cx="{cx(p[0])}" cy="{cy(p[1])}" r="3" fill="#c22"/>')
    lines.append("</svg>")
    return "\n".join(lines)
