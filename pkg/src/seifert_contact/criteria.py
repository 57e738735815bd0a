"""Decision procedures for contact structures on Seifert manifolds.

Everything here reduces to exact arithmetic on the invariants:

* existence of transverse contact structures and the candidate
  twisting-number spectrum, via integer multi-index certificates
  (x_0, ..., x_r) with sum 2 - 2g and (x_i - 1)/n < beta_i/alpha_i;
* the per-slot admissibility test at twisting level -n, in two
  independently computed forms (an empty-lattice-triangle test, which
  is authoritative, and an arithmetic test via ceilings, congruences
  and best lower approximations);
* canonical multi-indices and isotopy-class counts in the flexible
  (n = 1, e_0 < 2g - 2) and rigid (g > 0, e_0 = 2g - 2 or n > 1)
  regimes, with tangent-type levels singled out by n*e = -chi and
  n*beta_i = 1 mod alpha_i;
* the necessary condition for transverse foliations, and the
  trace criterion for geodesible contact structures on torus bundles.

Genus-zero outputs that the classification leaves open are labelled
"necessary-only" or "forced" and never claimed to be realized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import DomainError
from .lattice import triangle_condition
from .rationals import best_lower_approximations
from .sails import solid_torus_counts
from .seifert import SeifertInvariants, euler_data


@dataclass(frozen=True)
class MultiIndex:
    """Indices of a defining 1-form along boundary circles; twisting -n."""

    n: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class SpectrumReport:
    entries: tuple[MultiIndex, ...]
    exactness: str  # "exact" | "necessary-only"

    def levels(self) -> tuple[int, ...]:
        return tuple(mi.n for mi in self.entries)


@dataclass(frozen=True)
class ExistenceReport:
    answer: bool
    case: str | None = None  # "A" | "B" | "C"
    multi_index: MultiIndex | None = None
    witness: tuple[int, int] | None = None  # (a, m) in case C


@dataclass(frozen=True)
class TangentReport:
    levels: tuple[int, ...]
    infinite_family: bool


@dataclass(frozen=True)
class ClassCount:
    regime: str  # "flexible" | "rigid"
    total: int | None = None
    per_r_class: int | None = None
    transverse_oriented: int = 0
    transverse_unoriented: int = 0
    no_structures: bool = False


@dataclass(frozen=True)
class TorusBundleReport:
    answer: bool
    isotopy_classes: int


def slot_maximum(alpha: int, beta: int, n: int) -> int:
    """Largest x with (x-1)/n < beta/alpha, i.e. ceil(n*beta/alpha)."""
    return -((-n * beta) // alpha)


def local_twisting_admissible(alpha: int, beta: int, n: int, x: int) -> bool:
    """Can a tight solid torus with meridian (alpha, beta) have boundary
    dividing class (n, x-1) at twisting number exactly -n?

    Authoritative form: the closed triangle (0,0), (alpha,beta),
    (n,x-1) must contain no integer point of abscissa < n besides the
    allowed vertices, together with (x-1)/n < beta/alpha.
    """
    _check_local_args(alpha, beta, n)
    return triangle_condition(alpha, beta, n, x)


def local_twisting_arithmetic(alpha: int, beta: int, n: int, x: int) -> bool:
    """Arithmetic form of `local_twisting_admissible`.

    Either n = 1 and x - 1 < beta/alpha, or x = ceil(n*beta/alpha) and
    (n*beta = 1 mod alpha, or (x-1)/n is -- as a reduced fraction of
    denominator n -- a best lower approximation of beta/alpha).  The
    two forms are required to agree; the equivalence sweep in the
    acceptance suite fails on any disagreement.
    """
    _check_local_args(alpha, beta, n)
    if n == 1 and (x - 1) * alpha < beta:
        return True
    if x != slot_maximum(alpha, beta, n):
        return False
    if (n * beta - 1) % alpha == 0:
        return True
    if gcd(n, abs(x - 1)) != 1:
        # best lower approximations are fractions in lowest terms
        return False
    return best_lower_approximations(Fraction(beta, alpha), n)[-1] == Fraction(x - 1, n)


def _check_local_args(alpha: int, beta: int, n: int):
    if alpha <= 0 or n <= 0:
        raise DomainError("invalid-argument", "alpha and n must be positive")
    if gcd(alpha, abs(beta)) != 1:
        raise DomainError("invalid-argument", f"gcd({alpha}, {beta}) != 1")
    if alpha >= 2 and not 1 <= beta < alpha:
        raise DomainError("invalid-argument", "need 1 <= beta < alpha when alpha >= 2")


def feasible_multi_index(v: SeifertInvariants, n: int) -> MultiIndex | None:
    """A multi-index certificate at level n, or None.

    Slot i can take any x_i up to X_i(n) = ceil(n*beta_i/alpha_i)
    (n*b for slot 0), so a certificate with sum exactly 2 - 2g exists
    iff the slot maxima sum to at least 2 - 2g; slot 0 absorbs the
    slack.
    """
    if n < 1:
        raise DomainError("invalid-argument", "n must be positive")
    maxima = [slot_maximum(a, b, n) for a, b in v.slots()]
    target = 2 - 2 * v.g
    slack = sum(maxima) - target
    if slack < 0:
        return None
    maxima[0] -= slack
    return MultiIndex(n, tuple(maxima))


def realizable(gammas) -> tuple[int, int] | None:
    """Witness (a, m) that a tuple in (0,1) is realizable, or None.

    Coprime 0 < a < m such that, after sorting decreasingly,
    gamma_1 < a/m, gamma_2 < (m-a)/m and gamma_i < 1/m for i >= 3.
    Found by exhaustive search: the third constraint bounds m, and any
    value below 1/m is below both a/m and (m-a)/m, so sorting loses no
    witnesses.
    """
    gammas = [Fraction(t) for t in gammas]
    if any(not 0 < t < 1 for t in gammas):
        raise DomainError("invalid-argument", "realizability needs values strictly between 0 and 1")
    if len(gammas) < 3:
        return None
    gammas.sort(reverse=True)
    g1, g2, g3 = gammas[0], gammas[1], gammas[2]
    inv = 1 / g3
    m_max = inv.numerator // inv.denominator
    if inv.denominator == 1:
        m_max -= 1  # strict m < 1/gamma_3
    for m in range(2, m_max + 1):
        lo = g1 * m  # a > m*gamma_1
        hi = (1 - g2) * m  # a < m*(1 - gamma_2)
        a_min = lo.numerator // lo.denominator + 1
        a_max = -((-hi.numerator) // hi.denominator) - 1
        for a in range(max(a_min, 1), min(a_max, m - 1) + 1):
            if gcd(a, m) == 1:
                return a, m
    return None


def exists_transverse(v: SeifertInvariants) -> ExistenceReport:
    """Does the manifold carry a transverse contact structure?

    The three cases are checked in order: (A) e_0 <= 2g - 2, where a
    level-1 certificate always exists; (B) g = 0, r <= 2, e < 0, with
    the constructive level floor(1/(-e)) + 1; (C) g = 0, r >= 3,
    e_0 = -1 and gamma realizable with witness (a, m), feasible at
    level m.  Certificates are re-verified through
    `feasible_multi_index`.
    """
    data = euler_data(v)
    g = v.g
    if data.e0 <= 2 * g - 2:
        mi = feasible_multi_index(v, 1)
        assert mi is not None
        return ExistenceReport(True, "A", mi)
    if g == 0 and v.r <= 2 and data.e < 0:
        n = case_b_level(data.e)
        mi = feasible_multi_index(v, n)
        assert mi is not None
        return ExistenceReport(True, "B", mi)
    if g == 0 and v.r >= 3 and data.e0 == -1:
        witness = realizable(data.gamma)
        if witness is not None:
            mi = feasible_multi_index(v, witness[1])
            assert mi is not None
            return ExistenceReport(True, "C", mi, witness=witness)
    return ExistenceReport(False)


def case_b_level(e: Fraction) -> int:
    """Least n with n*(-e) > 1; feasible whenever g = 0, r <= 2, e < 0."""
    assert e < 0
    inv = 1 / (-e)
    return inv.numerator // inv.denominator + 1


def twisting_spectrum(v: SeifertInvariants, n_max: int) -> SpectrumReport:
    """Candidate twisting levels n in [1, n_max] (twisting number -n).

    Level 1 is admissible iff e_0 <= 2g - 2.  For n > 1 every slot is
    forced to its maximum X_i(n), so n is admissible iff the maxima sum
    to exactly 2 - 2g and each slot passes the local test.  The answer
    is exact for positive base genus and necessary-only over the
    sphere.
    """
    if n_max < 1:
        raise DomainError("invalid-argument", "n_max must be positive")
    data = euler_data(v)
    g = v.g
    entries = []
    if data.e0 <= 2 * g - 2:
        mi = feasible_multi_index(v, 1)
        assert mi is not None
        entries.append(mi)
    slots = v.slots()
    target = 2 - 2 * g
    for n in range(2, n_max + 1):
        xs = tuple(slot_maximum(a, b, n) for a, b in slots)
        if sum(xs) != target:
            continue
        if all(local_twisting_admissible(a, b, n, x) for (a, b), x in zip(slots, xs)):
            entries.append(MultiIndex(n, xs))
    return SpectrumReport(tuple(entries), "exact" if g > 0 else "necessary-only")


def canonical_multi_index(v: SeifertInvariants, n: int) -> tuple[str, MultiIndex]:
    """Regime and canonical multi-index at level n.

    Flexible (n = 1, e_0 < 2g - 2): (2 - 2g - r, 1, ..., 1).  Rigid
    (g > 0, e_0 = 2g - 2 or n > 1): the forced tuple
    (n*b, ceil(n*beta_i/alpha_i), ...).  For g = 0 the same forced
    tuple is returned with regime "forced": the multi-index is pinned
    by the local analysis but the classification is open there.
    """
    if n < 1:
        raise DomainError("invalid-argument", "n must be positive")
    data = euler_data(v)
    g, r = v.g, v.r
    if n == 1 and data.e0 < 2 * g - 2:
        return "flexible", MultiIndex(1, (2 - 2 * g - r,) + (1,) * r)
    if data.e0 == 2 * g - 2 or n > 1:
        regime = "rigid" if g > 0 else "forced"
        xs = (n * v.b,) + tuple(slot_maximum(a, b, n) for a, b in v.pairs)
        return regime, MultiIndex(n, xs)
    raise DomainError("regime-undefined", "no canonical multi-index at n = 1 when e_0 > 2g - 2")


def tangent_levels(v: SeifertInvariants, n_max: int) -> TangentReport:
    """Levels n in [1, n_max] carrying tangent-type contact structures.

    A level qualifies iff n*e = -chi exactly and n*beta_i = 1 mod
    alpha_i for every exceptional pair.  When chi = 0 and e = 0 and the
    congruence system is solvable, the qualifying levels recur
    periodically and the family is infinite.
    """
    if n_max < 1:
        raise DomainError("invalid-argument", "n_max must be positive")
    data = euler_data(v)
    levels = tuple(
        n
        for n in range(1, n_max + 1)
        if n * data.e == -data.chi_orbifold
        and all((n * b - 1) % a == 0 for a, b in v.pairs)
    )
    infinite = (
        data.chi_orbifold == 0
        and data.e == 0
        and _congruences_solvable(v.pairs)
    )
    return TangentReport(levels, infinite)


def _congruences_solvable(pairs) -> bool:
    """Is n*beta = 1 mod alpha simultaneously solvable over the pairs?"""
    residue, modulus = 0, 1
    for alpha, beta in pairs:
        target = pow(beta, -1, alpha)
        g = gcd(modulus, alpha)
        if (target - residue) % g != 0:
            return False
        step = alpha // g
        k = ((target - residue) // g * pow(modulus // g, -1, step)) % step if step > 1 else 0
        residue += modulus * k
        modulus = modulus // g * alpha
        residue %= modulus
    return True


def count_isotopy_classes(v: SeifertInvariants, n: int) -> ClassCount:
    """Isotopy-class counts at twisting level -n.

    Flexible regime: the total count is the product over all slots of
    the solid-torus counts with boundary class (1, x_i - 1) and the
    flexible multi-index; exactly two classes contain transverse
    structures (one unoriented).  Rigid regime: the count is per fixed
    homotopy class of the defining 1-form, with boundary classes
    (n, x_i - 1); one class contains transverse structures when every
    congruence n*beta_i = 1 mod alpha_i holds, two otherwise.  A rigid
    level outside the twisting spectrum carries no structures at all.
    """
    if n < 1:
        raise DomainError("invalid-argument", "n must be positive")
    data = euler_data(v)
    g = v.g
    if n == 1 and data.e0 < 2 * g - 2:
        _, mi = canonical_multi_index(v, 1)
        total = prod(
            solid_torus_counts((a, b), (1, x - 1)).tight
            for (a, b), x in zip(v.slots(), mi.values)
        )
        return ClassCount("flexible", total=total, transverse_oriented=2, transverse_unoriented=1)
    if g > 0 and (data.e0 == 2 * g - 2 or n > 1):
        if n not in twisting_spectrum(v, n).levels():
            return ClassCount("rigid", per_r_class=0, no_structures=True)
        _, mi = canonical_multi_index(v, n)
        per = prod(
            solid_torus_counts((a, b), (n, x - 1)).tight
            for (a, b), x in zip(v.slots(), mi.values)
        )
        oriented = 1 if all((n * b - 1) % a == 0 for a, b in v.pairs) else 2
        return ClassCount("rigid", per_r_class=per, transverse_oriented=oriented, transverse_unoriented=1)
    raise DomainError(
        "regime-undefined",
        "counts are only classified in the flexible regime (n = 1, e0 < 2g-2) "
        "and the rigid regime (g > 0 with e0 = 2g-2 or n > 1)",
    )


def foliation_necessary(v: SeifertInvariants) -> bool:
    """Necessary condition for a C^2 foliation transverse to the fibers."""
    from .seifert import reverse_orientation

    data = euler_data(v)
    rev = reverse_orientation(v)
    data_rev = euler_data(rev)
    g = v.g
    if data.e0 <= 2 * g - 2 and data_rev.e0 <= 2 * g - 2:
        return True
    if g != 0:
        return False
    if data.e == 0:
        return True
    if data.e0 == -1 and realizable(data.gamma) is not None:
        return True
    if data_rev.e0 == -1 and realizable(data_rev.gamma) is not None:
        return True
    return False


def torus_bundle_geodesible(matrix) -> TorusBundleReport:
    """Trace criterion for hyperbolic torus bundles.

    A torus bundle with monodromy in SL(2,Z) carries a geodesible
    contact structure iff the trace exceeds 2, and then exactly one
    isotopy class (universally tight, zero torsion).
    """
    (a, b), (c, d) = matrix
    if a * d - b * c != 1:
        raise DomainError("invalid-argument", "monodromy must have determinant 1")
    if a + d > 2:
        return TorusBundleReport(True, 1)
    return TorusBundleReport(False, 0)
