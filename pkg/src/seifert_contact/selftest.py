"""Built-in acceptance sweeps.

Each criterion is an independent check of the library against hand
values, brute-force oracles or exhaustive arithmetic sweeps.  The CLI
`selftest` subcommand and the pytest acceptance module both run these;
a criterion returns (passed, detail).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .criteria import (
    case_b_level,
    count_isotopy_classes,
    exists_transverse,
    feasible_multi_index,
    local_twisting_admissible,
    local_twisting_arithmetic,
    realizable,
    slot_maximum,
    tangent_levels,
    twisting_spectrum,
)
from .errors import DomainError
from .lattice import (
    intersection,
    is_primitive,
    orient,
    segment_points,
    triangle_area2,
    triangle_lattice_points,
)
from .rationals import best_lower_approximations, cf_expand, even_order_approximants
from .sails import (
    Cone,
    cover_thresholds,
    cover_witnesses,
    sail,
    sail_bruteforce,
    solid_torus_counts,
)
from .seifert import SeifertInvariants, euler_data, normalize, st_contact_elements


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


def _random_primitive(rng: random.Random, bound: int):
    while True:
        v = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if is_primitive(v):
            return v


def _random_cone(rng: random.Random, bound: int) -> Cone:
    while True:
        left = _random_primitive(rng, bound)
        right = _random_primitive(rng, bound)
        if intersection(left, right) < 0:
            return Cone(left, right, rng.random() < 0.5, rng.random() < 0.5)


def brieskorn_spectra() -> tuple[bool, str]:
    """Spectra of the (2, 3, 6k-1) Brieskorn family, k = 2..6."""
    start = time.perf_counter()
    for k in range(2, 7):
        v = normalize(0, -2, [(2, 1), (3, 2), (6 * k - 1, 5 * k - 1)])
        report = twisting_spectrum(v, 6 * k)
        expected = tuple(6 * l + 5 for l in range(k - 1))
        if report.levels() != expected:
            return False, f"k={k}: got levels {report.levels()}, expected {expected}"
        if report.exactness != "necessary-only":
            return False, f"k={k}: exactness {report.exactness!r}"
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        return False, f"took {elapsed:.2f}s (budget 5s)"
    return True, f"k=2..6 levels 6l+5, necessary-only, {elapsed:.2f}s"


def kim_spectra() -> tuple[bool, str]:
    """Spectra of the (6k-1, 6k-3) family, k = 2..6: always exactly {5}."""
    for k in range(2, 7):
        v = normalize(0, -2, [(2, 1), (3, 2), (6 * k - 1, 6 * k - 3)])
        report = twisting_spectrum(v, 6 * k)
        if report.levels() != (5,):
            return False, f"k={k}: got levels {report.levels()}, expected (5,)"
    return True, "k=2..6 all have spectrum {5}"


def st_bundle_identity() -> tuple[bool, str]:
    """Contact-element bundles: e = -chi and tangent level 1, 200 random orbifolds."""
    rng = random.Random(1903)
    for i in range(200):
        g = rng.randint(0, 3)
        r = rng.randint(0, 4)
        alphas = [rng.randint(2, 20) for _ in range(r)]
        v = st_contact_elements(g, alphas)
        data = euler_data(v)
        if data.e != -data.chi_orbifold:
            return False, f"instance {i}: e != -chi for g={g}, alphas={alphas}"
        if 1 not in tangent_levels(v, 3).levels:
            return False, f"instance {i}: level 1 not tangent for g={g}, alphas={alphas}"
    return True, "200 orbifolds: e = -chi exactly and level 1 is tangent"


_SMALL_PAIRS = [(a, b) for a in range(2, 7) for b in range(1, a) if gcd(a, b) == 1]


def _small_family():
    from itertools import combinations_with_replacement

    for g in range(3):
        for b in range(-6, 7):
            for r in range(4):
                for pairs in combinations_with_replacement(_SMALL_PAIRS, r):
                    yield SeifertInvariants(g, b, pairs)


def arithmetic_existence_sweep() -> tuple[bool, str]:
    """Existence disjunction vs feasibility scan, exhaustively on small invariants."""
    checked = 0
    for v in _small_family():
        data = euler_data(v)
        g, r = v.g, v.r
        c1 = data.e0 <= 2 * g - 2
        c2 = g == 0 and r <= 2 and data.e < 0
        c3 = False
        probe = [8]
        if c1:
            probe.append(1)
        if data.e < 0:
            probe.append(case_b_level(data.e))
        if g == 0 and r >= 3 and data.e0 == -1:
            witness = realizable(data.gamma)
            if witness is not None:
                c3 = True
                probe.append(witness[1])
        feasible = any(feasible_multi_index(v, n) is not None for n in range(1, max(probe) + 1))
        if feasible != (c1 or c2 or c3):
            return False, f"disagreement at {v}"
        if exists_transverse(v).answer != feasible:
            return False, f"exists_transverse disagrees at {v}"
        if (feasible_multi_index(v, 1) is not None) != (data.e0 <= 2 * g - 2):
            return False, f"n=1 characterization fails at {v}"
        checked += 1
    return True, f"{checked} instances, zero disagreements"


def local_index_equivalence() -> tuple[bool, str]:
    """Triangle test vs arithmetic test, exhaustively for alpha <= 25, n <= 25."""
    checked = 0
    for alpha in range(2, 26):
        for beta in range(1, alpha):
            if gcd(alpha, beta) != 1:
                continue
            for n in range(1, 26):
                top = slot_maximum(alpha, beta, n)
                for x in range(top - 3, top + 1):
                    t = local_twisting_admissible(alpha, beta, n, x)
                    a = local_twisting_arithmetic(alpha, beta, n, x)
                    if t != a:
                        return False, f"disagreement at alpha={alpha} beta={beta} n={n} x={x}"
                    checked += 1
    return True, f"{checked} instances, zero disagreements"


def sail_oracle() -> tuple[bool, str]:
    """Exact sail vs truncated-hull oracle on 300 seeded random cones."""
    rng = random.Random(1906)
    for i in range(300):
        cone = _random_cone(rng, 50)
        exact = sail(cone)
        brute = sail_bruteforce(cone)
        if exact != brute:
            return False, f"instance {i}: cone {cone} sail mismatch"
    return True, "300 cones, exact sail equals oracle"


def pick_identity() -> tuple[bool, str]:
    """Pick's identity on 300 seeded random non-degenerate triangles."""
    rng = random.Random(1899)
    done = 0
    while done < 300:
        tri = tuple((rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(3))
        if orient(*tri) == 0:
            continue
        pts = triangle_lattice_points(tri)
        boundary = set()
        for p, q in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            boundary.update(segment_points(p, q))
        n_bd = len(boundary)
        n_int = len(pts) - n_bd
        if triangle_area2(tri) != 2 * n_int + n_bd - 2:
            return False, f"Pick fails on {tri}"
        done += 1
    return True, "300 triangles satisfy Pick's identity exactly"


def uniqueness_dichotomy() -> tuple[bool, str]:
    """tight = 1 iff boundary.meridian = 1, all primitive pairs with coords <= 12."""
    prims = [
        (s, f)
        for s in range(-12, 13)
        for f in range(-12, 13)
        if is_primitive((s, f))
    ]
    checked = 0
    for meridian in prims:
        for boundary in prims:
            if boundary[0] <= 0:
                continue
            pairing = intersection(boundary, meridian)
            if pairing <= 0:
                continue
            counts = solid_torus_counts(meridian, boundary)
            if (counts.tight == 1) != (pairing == 1):
                return False, f"dichotomy fails at meridian={meridian} boundary={boundary}"
            checked += 1
    return True, f"{checked} solid tori, tight=1 iff pairing=1"


def best_lower_agreement() -> tuple[bool, str]:
    """Definitional scan equals even-order enumeration below the denominator."""
    checked = 0
    for q in range(2, 41):
        for p in range(-q, 2 * q):
            if gcd(abs(p), q) != 1:
                continue
            x = Fraction(p, q)
            approximants = [v for v, self_flag in even_order_approximants(cf_expand(x)) if not self_flag]
            for d_max in range(1, q):
                expected = [v for v in approximants if v.denominator <= d_max]
                if best_lower_approximations(x, d_max) != expected:
                    return False, f"disagreement at x={x}, D={d_max}"
                checked += 1
    return True, f"{checked} (x, D) pairs agree"


def cover_threshold_soundness() -> tuple[bool, str]:
    """Computed thresholds admit cover witnesses on 100 seeded instances."""
    rng = random.Random(1910)
    done = 0
    while done < 100:
        left = _random_primitive(rng, 20)
        right = _random_primitive(rng, 20)
        if 0 in left or 0 in right or intersection(left, right) >= 0:
            continue
        cone = Cone(left, right, True, True)
        c1, c2 = rng.randint(1, 3), rng.randint(1, 3)
        d = (c1 * left[0] + c2 * right[0], c1 * left[1] + c2 * right[1])
        try:
            thresholds = cover_thresholds(cone, d)
        except DomainError:
            continue
        for n in range(thresholds.n0, thresholds.n0 + 4):
            for m in range(thresholds.m0, thresholds.m0 + 4):
                horiz, vert = cover_witnesses(thresholds, d, n, m)
                if not horiz or not vert:
                    return False, f"no witness for cone {cone}, d={d}, cover ({n},{m})"
        done += 1
    return True, "100 instances admit witnesses up to (n0+3, m0+3)"


def known_spectra_and_counts() -> tuple[bool, str]:
    """Hand-checked spectra and the flexible count on a genus-2 bundle."""
    t3 = SeifertInvariants(1, 0, ())
    report = twisting_spectrum(t3, 10)
    if report.levels() != tuple(range(1, 11)) or report.exactness != "exact":
        return False, f"3-torus spectrum wrong: {report.levels()}, {report.exactness}"
    v = SeifertInvariants(1, -1, ((2, 1),))
    report = twisting_spectrum(v, 10)
    if report.levels() != (1,) or report.exactness != "exact":
        return False, f"SFS[g=1; b=-1; 2/1] spectrum wrong: {report.levels()}"
    count = count_isotopy_classes(SeifertInvariants(2, 3, ()), 1)
    if (count.regime, count.total, count.transverse_oriented, count.transverse_unoriented) != (
        "flexible",
        6,
        2,
        1,
    ):
        return False, f"flexible count wrong: {count}"
    return True, "3-torus 1..10 exact; g=1 example {1}; flexible count 6 with 2/1 transverse"


CRITERIA: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "brieskorn-spectra", brieskorn_spectra),
    (2, "kim-spectra", kim_spectra),
    (3, "contact-element-bundles", st_bundle_identity),
    (4, "arithmetic-existence-sweep", arithmetic_existence_sweep),
    (5, "local-index-equivalence", local_index_equivalence),
    (6, "sail-oracle", sail_oracle),
    (7, "pick-identity", pick_identity),
    (8, "uniqueness-dichotomy", uniqueness_dichotomy),
    (9, "best-lower-agreement", best_lower_agreement),
    (10, "cover-thresholds", cover_threshold_soundness),
    (11, "known-spectra-and-counts", known_spectra_and_counts),
)


def run_selftest(only=None) -> list[CriterionResult]:
    results = []
    for number, name, func in CRITERIA:
        if only is not None and number not in only:
            continue
        passed, detail = func()
        results.append(CriterionResult(number, name, passed, detail))
    return results
