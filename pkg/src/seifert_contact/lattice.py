"""Planar integer lattice geometry.

Vectors are plain (s, f) integer tuples: s is the coefficient of the
section class, f the coefficient of the fiber class on a boundary
torus.  The intersection form is the standard determinant pairing,
normalized so that intersection((1,0), (0,1)) = +1.

Everything here is exact integer (or Fraction) arithmetic; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError

LatticeVector = tuple[int, int]
LatticeTriangle = tuple[LatticeVector, LatticeVector, LatticeVector]


def intersection(u: LatticeVector, v: LatticeVector) -> int:
    """Intersection pairing u.s*v.f - u.f*v.s (bilinear, antisymmetric)."""
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(v: LatticeVector) -> bool:
    return v != (0, 0) and gcd(abs(v[0]), abs(v[1])) == 1


def vadd(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    return (u[0] + v[0], u[1] + v[1])


def vsub(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    return (u[0] - v[0], u[1] - v[1])


def vscale(k: int, v: LatticeVector) -> LatticeVector:
    return (k * v[0], k * v[1])


def orient(a, b, c) -> int:
    """Twice the signed area of the triangle abc (positive = ccw)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def ceil_div(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    return -((-p) // q)


def floor_div(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    return p // q


def segment_points(p: LatticeVector, q: LatticeVector) -> list[LatticeVector]:
    """All lattice points on the closed segment from p to q, in order."""
    if p == q:
        return [p]
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = gcd(abs(dx), abs(dy))
    sx, sy = dx // g, dy // g
    return [(p[0] + k * sx, p[1] + k * sy) for k in range(g + 1)]


def _on_segment(p, a, b) -> bool:
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def triangle_lattice_points(tri: LatticeTriangle) -> list[LatticeVector]:
    """All integer points of the closed triangle, in lexicographic order.

    Degenerate (collinear) triangles are legal and yield the points of
    the hull segment.  Enumeration runs over the integer bounding box
    with exact sign tests.
    """
    a, b, c = tri
    if orient(a, b, c) == 0:
        lo, hi = min(tri), max(tri)
        return segment_points(lo, hi)
    xs = [a[0], b[0], c[0]]
    ys = [a[1], b[1], c[1]]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            d1 = orient(a, b, p)
            d2 = orient(b, c, p)
            d3 = orient(c, a, p)
            has_pos = d1 > 0 or d2 > 0 or d3 > 0
            has_neg = d1 < 0 or d2 < 0 or d3 < 0
            if not (has_pos and has_neg):
                out.append(p)
    return out


def triangle_area2(tri: LatticeTriangle) -> int:
    """Twice the (unsigned) area."""
    a, b, c = tri
    return abs(orient(a, b, c))


def triangle_boundary_count(tri: LatticeTriangle) -> int:
    """Number of lattice points on the boundary of the triangle."""
    a, b, c = tri
    if orient(a, b, c) == 0:
        return len(triangle_lattice_points(tri))
    pts = set()
    for p, q in ((a, b), (b, c), (c, a)):
        pts.update(segment_points(p, q))
    return len(pts)


def _halfplanes(vertices) -> list[tuple[int, int, int]]:
    """Closed triangle as inequalities a*x + b*y <= c with integer a,b,c.

    Vertices may have Fraction coordinates; coefficients are cleared to
    integers.  Requires a non-degenerate triangle.
    """
    planes = []
    v = list(vertices)
    for i in range(3):
        p, q, r = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        a = -(Fraction(q[1]) - Fraction(p[1]))
        b = Fraction(q[0]) - Fraction(p[0])
        c = a * Fraction(p[0]) + b * Fraction(p[1])
        if a * Fraction(r[0]) + b * Fraction(r[1]) > c:
            a, b, c = -a, -b, -c
        lcm = 1
        for f in (a, b, c):
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        planes.append((int(a * lcm), int(b * lcm), int(c * lcm)))
    return planes


def _column_span(planes, x: int) -> tuple[int, int] | None:
    """Integer y-range of the clipped column {x} * Z, or None if empty."""
    lo, hi = None, None
    for a, b, c in planes:
        rhs = c - a * x
        if b == 0:
            if rhs < 0:
                return None
        elif b > 0:
            bound = floor_div(rhs, b)
            hi = bound if hi is None else min(hi, bound)
        else:
            bound = ceil_div(rhs, b)
            lo = bound if lo is None else max(lo, bound)
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def triangle_condition(alpha: int, beta: int, n: int, x: int) -> bool:
    """Empty-triangle test for the local twisting-number criterion.

    True iff (x-1)/n < beta/alpha and the closed triangle with vertices
    (0,0), (alpha,beta), (n,x-1) contains no integer point of abscissa
    less than n besides (0,0) and, when alpha < n, (alpha,beta).

    A true answer forces gcd(n, x-1) = 1 (the dividing class is twice a
    simple class); this is asserted on return.
    """
    if alpha <= 0 or n <= 0:
        raise DomainError("invalid-argument", "alpha and n must be positive")
    if gcd(alpha, abs(beta)) != 1:
        raise DomainError("invalid-argument", f"gcd({alpha}, {beta}) != 1")
    if (x - 1) * alpha >= n * beta:
        return False
    # The slope inequality makes (alpha,beta) and (n,x-1) non-parallel,
    # so the triangle is never degenerate here.
    planes = _halfplanes(((0, 0), (alpha, beta), (n, x - 1)))
    for s in range(0, n):
        span = _column_span(planes, s)
        if span is None:
            continue
        lo, hi = span
        count = hi - lo + 1
        if s == 0 and lo <= 0 <= hi:
            count -= 1
        if s == alpha and lo <= beta <= hi:
            count -= 1
        if count > 0:
            return False
    assert gcd(n, abs(x - 1)) == 1
    return True


def convex_hull(points) -> list[LatticeVector]:
    """Convex hull, counterclockwise, collinear points dropped.

    Returns the sorted point(s) themselves when the input has fewer
    than three extreme points (all collinear).
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    hull = half(pts)[:-1] + half(reversed(pts))[:-1]
    if len(hull) <= 2:
        return [pts[0], pts[-1]]
    return hull
