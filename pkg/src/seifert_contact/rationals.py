"""Exact rational arithmetic helpers: continued fractions, even-order
approximants and best lower approximations.

All slopes and Euler numbers in this package are `fractions.Fraction`
values, which are always stored reduced with a positive denominator
(so zero is 0/1).  Continued fractions use floor-based partial
quotients: the leading quotient may be any integer, all later ones are
positive, and the last quotient of a multi-term expansion is greater
than 1.  This makes the expansion of every rational unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class ContinuedFraction:
    """A finite continued fraction [a0; a1, ..., ak]."""

    quotients: tuple[int, ...]

    def __post_init__(self):
        q = self.quotients
        if not q:
            raise DomainError("invalid-argument", "continued fraction needs at least one quotient")
        if any(a <= 0 for a in q[1:]):
            raise DomainError("invalid-argument", "partial quotients after the first must be positive")
        if len(q) > 1 and q[-1] <= 1:
            raise DomainError("invalid-argument", "last partial quotient must exceed 1")

    def value(self) -> Fraction:
        acc = Fraction(self.quotients[-1])
        for a in reversed(self.quotients[:-1]):
            acc = a + 1 / acc
        return acc


def cf_expand(q: Fraction | int) -> ContinuedFraction:
    """Expand a rational by the Euclidean algorithm with floor division.

    The result always satisfies the uniqueness convention (last quotient
    > 1 when there is more than one), because each complete quotient
    after the first is strictly greater than 1.
    """
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    quotients = []
    while True:
        a, rem = divmod(num, den)
        quotients.append(a)
        if rem == 0:
            break
        num, den = den, rem
    return ContinuedFraction(tuple(quotients))


def even_order_approximants(cf: ContinuedFraction) -> list[tuple[Fraction, bool]]:
    """Convergents and intermediate fractions of even order, increasing.

    Returns the convergents [a0; ..., a_k] for even k together with the
    intermediate fractions [a0; ..., a_{k-1}, a], 1 <= a < a_k, for even
    k >= 2, sorted increasingly.  The flag marks the entry (if any)
    whose value equals the expanded rational itself.
    """
    quotients = cf.quotients
    x = cf.value()
    out = []
    # standard convergent recurrence h_k = a_k h_{k-1} + h_{k-2}
    h1, k1, h2, k2 = 1, 0, 0, 1
    for k, a in enumerate(quotients):
        if k >= 2 and k % 2 == 0:
            for t in range(1, a):
                out.append(Fraction(t * h1 + h2, t * k1 + k2))
        h, kk = a * h1 + h2, a * k1 + k2
        if k % 2 == 0:
            out.append(Fraction(h, kk))
        h2, k2, h1, k1 = h1, k1, h, kk
    out.sort()
    return [(value, value == x) for value in out]


def best_lower_approximations(q: Fraction | int, max_denominator: int) -> list[Fraction]:
    """All best lower approximations of q with denominator <= max_denominator.

    A reduced fraction b/a is a best lower approximation of q when it is
    the maximum among rationals smaller than q whose denominator is at
    most a.  This is computed straight from the definition: scan the
    denominators in order and keep every strict improvement.  The output
    is increasing, with strictly increasing (reduced) denominators.
    """
    if max_denominator < 1:
        raise DomainError("invalid-argument", "max_denominator must be >= 1")
    q = Fraction(q)
    out: list[Fraction] = []
    best = None
    for d in range(1, max_denominator + 1):
        # largest numerator c with c/d < q, i.e. the strict floor of q*d
        c = (q.numerator * d - 1) // q.denominator
        cand = Fraction(c, d)
        if best is None or cand > best:
            best = cand
            out.append(cand)
    return out


def format_rational(q: Fraction | int) -> str:
    """Serialize as "p/q" with an explicit denominator (zero is "0/1")."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer, read as p/1)."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den <= 0:
                raise DomainError("invalid-argument", f"denominator must be positive in {text!r}")
            return Fraction(num, den)
    except ValueError:
        pass
    raise DomainError("invalid-argument", f"cannot parse rational {text!r}")
