"""Seifert invariants of closed oriented Seifert fibered 3-manifolds.

A manifold is encoded as (g, b, (alpha_1, beta_1), ..., (alpha_r, beta_r))
with base genus g >= 0, integer b, and normalized exceptional pairs
1 <= beta_i < alpha_i, gcd(alpha_i, beta_i) = 1.  The implicit slot-0
pair is (alpha_0, beta_0) = (1, b).  The rational Euler number is
e = -b - sum(beta_i/alpha_i), the integer Euler number e_0 = -b - r,
and the orbifold Euler characteristic of the base is
chi = 2 - 2g - r + sum(1/alpha_i).

Conventions for Seifert invariants vary between sources; this package
fixes the one above everywhere and offers `from_slopes` as the single
bridge from slope notation, keyed on the identity e = sum of slopes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError


@dataclass(frozen=True)
class SeifertInvariants:
    g: int
    b: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.g < 0:
            raise DomainError("invalid-invariants", "base genus must be non-negative")
        for alpha, beta in self.pairs:
            if alpha < 2 or not 1 <= beta < alpha:
                raise DomainError(
                    "invalid-invariants",
                    f"pair ({alpha},{beta}) is not normalized (need 1 <= beta < alpha, alpha >= 2)",
                )
            if gcd(alpha, beta) != 1:
                raise DomainError("invalid-invariants", f"pair ({alpha},{beta}) is not coprime")

    @property
    def r(self) -> int:
        return len(self.pairs)

    def slots(self) -> tuple[tuple[int, int], ...]:
        """All gluing pairs including the implicit slot 0 pair (1, b)."""
        return ((1, self.b),) + self.pairs


@dataclass(frozen=True)
class EulerData:
    e: Fraction
    e0: int
    chi_orbifold: Fraction
    gamma: tuple[Fraction, ...]


def normalize(g: int, b: int, raw_pairs) -> SeifertInvariants:
    """Normalize raw gluing pairs, preserving the rational Euler number.

    Each beta is reduced into [1, alpha) with the integer part absorbed
    into b; pairs with alpha = 1 or reduced beta = 0 are dropped (their
    slope is an integer, absorbed likewise).
    """
    if g < 0:
        raise DomainError("invalid-invariants", "base genus must be non-negative")
    new_b = b
    pairs = []
    for alpha, beta in raw_pairs:
        if alpha <= 0:
            raise DomainError("invalid-invariants", f"alpha must be positive, got {alpha}")
        q, beta_red = divmod(beta, alpha)
        new_b += q
        if alpha == 1 or beta_red == 0:
            continue
        if gcd(alpha, beta_red) != 1:
            raise DomainError("invalid-invariants", f"pair ({alpha},{beta}) is not coprime")
        pairs.append((alpha, beta_red))
    return SeifertInvariants(g, new_b, tuple(pairs))


def euler_data(v: SeifertInvariants) -> EulerData:
    e = Fraction(-v.b) - sum((Fraction(beta, alpha) for alpha, beta in v.pairs), Fraction(0))
    e0 = -v.b - v.r
    chi = Fraction(2 - 2 * v.g - v.r) + sum((Fraction(1, alpha) for alpha, _ in v.pairs), Fraction(0))
    gamma = tuple(1 - Fraction(beta, alpha) for alpha, beta in v.pairs)
    return EulerData(e, e0, chi, gamma)


def reverse_orientation(v: SeifertInvariants) -> SeifertInvariants:
    """Invariants of the same manifold with reversed orientation.

    Satisfies e(-V) = -e(V) exactly and is an involution.
    """
    return SeifertInvariants(v.g, -v.b - v.r, tuple((a, a - b) for a, b in v.pairs))


def from_slopes(g: int, slopes) -> SeifertInvariants:
    """Build invariants from slope notation; e(result) = sum of slopes."""
    b = 0
    raw = []
    for s in slopes:
        s = Fraction(s)
        ceil_s = -((-s.numerator) // s.denominator)
        b -= ceil_s
        frac = Fraction(ceil_s) - s
        if frac != 0:
            raw.append((frac.denominator, frac.numerator))
    return normalize(g, b, raw)


def st_contact_elements(g: int, alphas) -> SeifertInvariants:
    """Cooriented contact-element bundle of the orbifold with the given
    genus and cone orders; e of the result equals minus the orbifold
    Euler characteristic."""
    alphas = tuple(alphas)
    if any(a < 2 for a in alphas):
        raise DomainError("invalid-argument", "cone orders must be >= 2")
    r = len(alphas)
    return SeifertInvariants(g, 2 - 2 * g - r, tuple((a, 1) for a in alphas))


_SFS_RE = re.compile(
    r"^\s*SFS\s*\[\s*g\s*=\s*(-?\d+)\s*;\s*b\s*=\s*(-?\d+)\s*(?:;(?P<pairs>[^\]]*))?\]\s*$"
)
_M_RE = re.compile(r"^\s*M\s*\[\s*g\s*=\s*(-?\d+)\s*;(?P<slopes>[^\]]*)\]\s*$")
_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*/\s*(-?\d+)\s*$")


def _parse_fraction_list(text: str, what: str) -> list[tuple[int, int]]:
    items = text.split(",")
    out = []
    for item in items:
        m = _FRACTION_RE.match(item)
        if not m:
            raise DomainError("parse-error", f"bad {what} {item.strip()!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return out


def parse_manifold(text: str) -> SeifertInvariants:
    """Parse SFS[g=..; b=..; a/b, ...] or slope form M[g=..; p/q, ...]."""
    m = _SFS_RE.match(text)
    if m:
        g, b = int(m.group(1)), int(m.group(2))
        pairs_text = m.group("pairs")
        if pairs_text is None:
            return normalize(g, b, [])
        if not pairs_text.strip():
            raise DomainError("parse-error", "empty pair list; drop the trailing ';' instead")
        return normalize(g, b, _parse_fraction_list(pairs_text, "pair"))
    m = _M_RE.match(text)
    if m:
        g = int(m.group(1))
        slopes_text = m.group("slopes")
        if not slopes_text.strip():
            raise DomainError("parse-error", "slope form needs at least one slope")
        slopes = []
        for p, q in _parse_fraction_list(slopes_text, "slope"):
            if q <= 0:
                raise DomainError("parse-error", f"slope denominator must be positive in {p}/{q}")
            slopes.append(Fraction(p, q))
        return from_slopes(g, slopes)
    raise DomainError("parse-error", f"cannot parse manifold {text!r}")


def format_manifold(v: SeifertInvariants) -> str:
    if not v.pairs:
        return f"SFS[g={v.g}; b={v.b}]"
    pairs = ", ".join(f"{a}/{b}" for a, b in v.pairs)
    return f"SFS[g={v.g}; b={v.b}; {pairs}]"
