import random
from math import gcd

import pytest

from seifert_contact import DomainError, intersection, triangle_condition, triangle_lattice_points
from seifert_contact.criteria import slot_maximum
from seifert_contact.lattice import (
    convex_hull,
    orient,
    segment_points,
    triangle_area2,
)


def test_intersection_examples():
    assert intersection((1, 0), (0, 1)) == 1
    assert intersection((2, 1), (5, 2)) == -1
    assert intersection((3, 2), (6, 4)) == 0


def test_intersection_antisymmetric():
    rng = random.Random(2)
    for _ in range(300):
        u = (rng.randint(-40, 40), rng.randint(-40, 40))
        v = (rng.randint(-40, 40), rng.randint(-40, 40))
        assert intersection(u, v) == -intersection(v, u)


def test_triangle_lattice_points_examples():
    assert triangle_lattice_points(((0, 0), (2, 1), (5, 2))) == [(0, 0), (2, 1), (5, 2)]
    assert triangle_lattice_points(((0, 0), (2, 1), (2, 0))) == [(0, 0), (1, 0), (2, 0), (2, 1)]
    assert triangle_lattice_points(((0, 0), (1, 1), (3, 3))) == [(0, 0), (1, 1), (2, 2), (3, 3)]


def test_pick_identity_random():
    rng = random.Random(4)
    done = 0
    while done < 100:
        tri = tuple((rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(3))
        if orient(*tri) == 0:
            continue
        pts = triangle_lattice_points(tri)
        boundary = set()
        for p, q in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            boundary.update(segment_points(p, q))
        n_bd = len(boundary)
        n_int = len(pts) - n_bd
        assert triangle_area2(tri) == 2 * n_int + n_bd - 2
        done += 1


def test_triangle_condition_examples():
    assert triangle_condition(2, 1, 5, 3) is True
    assert triangle_condition(2, 1, 2, 1) is False
    assert triangle_condition(3, 2, 2, 2) is True


def test_triangle_condition_rejects_bad_arguments():
    with pytest.raises(DomainError):
        triangle_condition(0, 1, 2, 1)
    with pytest.raises(DomainError):
        triangle_condition(2, 1, 0, 1)
    with pytest.raises(DomainError):
        triangle_condition(4, 2, 3, 1)


def _naive_triangle_condition(alpha, beta, n, x):
    # same contract, straight off the box enumerator
    if (x - 1) * alpha >= n * beta:
        return False
    allowed = {(0, 0), (alpha, beta)}
    for p in triangle_lattice_points(((0, 0), (alpha, beta), (n, x - 1))):
        if p[0] < n and p not in allowed:
            return False
    return True


def test_triangle_condition_matches_box_enumeration():
    for alpha in range(1, 9):
        for beta in range(1, alpha + 1 if alpha == 1 else alpha):
            if alpha > 1 and gcd(alpha, beta) != 1:
                continue
            for n in range(1, 9):
                top = slot_maximum(alpha, beta, n)
                for x in range(top - 5, top + 3):
                    assert triangle_condition(alpha, beta, n, x) == _naive_triangle_condition(
                        alpha, beta, n, x
                    ), (alpha, beta, n, x)


def test_triangle_condition_forces_maximal_x():
    # at n > 1 an admissible x is the largest one below the slope
    for alpha in range(2, 12):
        for beta in range(1, alpha):
            if gcd(alpha, beta) != 1:
                continue
            for n in range(2, 12):
                top = slot_maximum(alpha, beta, n)
                for x in range(top - 3, top + 1):
                    if triangle_condition(alpha, beta, n, x):
                        assert x == top


def test_convex_hull_basics():
    square = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 0), (1, 1), (0, 1), (2, 1)]
    hull = convex_hull(square)
    assert sorted(hull) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    # counterclockwise orientation
    m = len(hull)
    assert all(orient(hull[i], hull[(i + 1) % m], hull[(i + 2) % m]) > 0 for i in range(m))
    assert convex_hull([(0, 0), (1, 1), (2, 2), (3, 3)]) == [(0, 0), (3, 3)]
    assert convex_hull([(5, 5)]) == [(5, 5)]
