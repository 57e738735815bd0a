import random
from fractions import Fraction
from math import gcd

import pytest

from seifert_contact import (
    Cone,
    DomainError,
    cone_contains,
    cover_thresholds,
    cover_witnesses,
    intersection,
    sail,
    sail_bruteforce,
    solid_torus_counts,
)
from seifert_contact.lattice import is_primitive, vsub
from seifert_contact.sails import sail_svg


def test_cone_validation():
    with pytest.raises(DomainError):
        Cone((2, 4), (1, 0))  # not primitive
    with pytest.raises(DomainError):
        Cone((0, 0), (1, 0))
    with pytest.raises(DomainError):
        Cone((3, 1), (1, 3))  # counterclockwise pair


def test_sail_examples():
    s = sail(Cone((1, 3), (3, 1), True, True))
    assert s.points == ((3, 1), (2, 1), (1, 1), (1, 2), (1, 3))
    assert [e.points for e in s.edges] == [((3, 1), (2, 1), (1, 1)), ((1, 1), (1, 2), (1, 3))]
    assert [e.cardinality for e in s.edges] == [3, 3]
    assert set(s.extremal) == {(1, 3), (3, 1)}

    assert sail(Cone((1, 0), (2, -1), False, True)).points == ((2, -1),)
    assert sail(Cone((2, 1), (5, 2), False, True)).points == ((5, 2),)


def test_sail_degenerate_cones():
    s = sail(Cone((2, 1), (2, 1), True, False))
    assert s.points == ((2, 1),) and s.edges == ()
    with pytest.raises(DomainError):
        sail(Cone((2, 1), (2, 1), False, False))
    with pytest.raises(DomainError):
        sail(Cone((1, 2), (-1, -2), True, True))  # half-plane


def test_cone_membership():
    cone = Cone((1, 3), (3, 1), True, False)
    assert cone_contains(cone, (1, 1))
    assert cone_contains(cone, (1, 3))  # included boundary ray
    assert cone_contains(cone, (2, 6))
    assert not cone_contains(cone, (3, 1))  # excluded boundary ray
    assert not cone_contains(cone, (0, 0))
    assert not cone_contains(cone, (-1, -1))
    assert not cone_contains(cone, (1, 4))


def _random_primitive(rng, bound):
    while True:
        v = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if is_primitive(v):
            return v


def _random_cone(rng, bound):
    while True:
        left = _random_primitive(rng, bound)
        right = _random_primitive(rng, bound)
        if intersection(left, right) < 0:
            return Cone(left, right, rng.random() < 0.5, rng.random() < 0.5)


def test_sail_invariants_random():
    rng = random.Random(31)
    for _ in range(80):
        cone = _random_cone(rng, 30)
        s = sail(cone)
        # every point lies in the cone
        assert all(cone_contains(cone, p) for p in s.points)
        # ordered right to left by the intersection form
        assert all(intersection(p, q) >= 0 for p, q in zip(s.points, s.points[1:]))
        # edge cardinalities match the endpoint gcd
        for e in s.edges:
            d = vsub(e.points[-1], e.points[0])
            assert e.cardinality == gcd(abs(d[0]), abs(d[1])) + 1
        # consecutive edges turn consistently
        dirs = [vsub(e.points[-1], e.points[0]) for e in s.edges]
        crosses = [intersection(u, v) for u, v in zip(dirs, dirs[1:])]
        assert all(c > 0 for c in crosses) or all(c < 0 for c in crosses) or not crosses


def test_sail_matches_bruteforce_oracle():
    rng = random.Random(32)
    for _ in range(60):
        cone = _random_cone(rng, 35)
        assert sail(cone) == sail_bruteforce(cone)


def test_oracle_radius_override(monkeypatch):
    monkeypatch.setenv("SEIFERT_ORACLE_RADIUS", "16")
    cone = Cone((1, 3), (3, 1), True, True)
    assert sail_bruteforce(cone) == sail(cone)


def test_solid_torus_examples():
    c = solid_torus_counts((1, 3), (1, -3))
    assert (c.tight, c.universally_tight) == (6, 2)
    c = solid_torus_counts((2, 1), (5, 2))
    assert (c.tight, c.universally_tight) == (1, 1)
    c = solid_torus_counts((1, 0), (2, -1))
    assert (c.tight, c.universally_tight) == (1, 1)


def test_solid_torus_preconditions():
    with pytest.raises(DomainError):
        solid_torus_counts((2, 4), (1, 0))
    with pytest.raises(DomainError):
        solid_torus_counts((3, 1), (1, 3))  # boundary pairs negatively with the meridian
    with pytest.raises(DomainError):
        solid_torus_counts((1, 0), (-2, 1))  # boundary must pair positively with the fiber


def test_tight_count_dichotomy_small():
    prims = [(s, f) for s in range(-8, 9) for f in range(-8, 9) if is_primitive((s, f))]
    for meridian in prims:
        for boundary in prims:
            if boundary[0] <= 0:
                continue
            pairing = intersection(boundary, meridian)
            if pairing <= 0:
                continue
            counts = solid_torus_counts(meridian, boundary)
            assert (counts.tight == 1) == (pairing == 1), (meridian, boundary)


def test_cover_thresholds_examples():
    t = cover_thresholds(Cone((1, 2), (2, 1), True, True), (1, 1))
    assert (t.a, t.b) == ((Fraction(1, 2), Fraction(1)), (Fraction(1), Fraction(1, 2)))
    assert (t.l_h, t.l_v, t.n0, t.m0) == (Fraction(1, 2), Fraction(1, 2), 3, 3)

    t = cover_thresholds(Cone((1, 3), (3, 1), True, True), (1, 1))
    assert (t.l_h, t.l_v, t.n0, t.m0) == (Fraction(2, 3), Fraction(2, 3), 2, 2)

    with pytest.raises(DomainError) as err:
        cover_thresholds(Cone((1, 2), (2, 1), True, True), (1, 2))
    assert err.value.tag == "boundary-class-on-ray"
    with pytest.raises(DomainError) as err:
        cover_thresholds(Cone((1, 0), (2, -1), True, True), (3, -1))
    assert err.value.tag == "axis-parallel-ray"


def test_cover_threshold_witnesses_sample():
    rng = random.Random(33)
    done = 0
    while done < 20:
        left = _random_primitive(rng, 12)
        right = _random_primitive(rng, 12)
        if 0 in left or 0 in right or intersection(left, right) >= 0:
            continue
        cone = Cone(left, right, True, True)
        d = (left[0] + right[0], left[1] + right[1])
        try:
            t = cover_thresholds(cone, d)
        except DomainError:
            continue
        for n in range(t.n0, t.n0 + 4):
            for m in range(t.m0, t.m0 + 4):
                horiz, vert = cover_witnesses(t, d, n, m)
                assert horiz and vert
        done += 1


def test_svg_emission():
    cone = Cone((1, 3), (3, 1), True, True)
    text = sail_svg(cone, sail(cone))
    assert text.startswith("<svg")
    assert "<polyline" in text and "<circle" in text
