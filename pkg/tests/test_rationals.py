import random
from fractions import Fraction

import pytest

from seifert_contact import (
    ContinuedFraction,
    DomainError,
    best_lower_approximations,
    cf_expand,
    even_order_approximants,
    format_rational,
    parse_rational,
)


def test_cf_expand_examples():
    assert cf_expand(Fraction(9, 11)).quotients == (0, 1, 4, 2)
    assert cf_expand(3).quotients == (3,)
    assert cf_expand(Fraction(-7, 3)).quotients == (-3, 1, 2)


def test_cf_round_trip_and_uniqueness():
    rng = random.Random(11)
    for _ in range(500):
        q = Fraction(rng.randint(-400, 400), rng.randint(1, 400))
        cf = cf_expand(q)
        assert cf.value() == q
        assert all(a > 0 for a in cf.quotients[1:])
        if len(cf.quotients) > 1:
            assert cf.quotients[-1] > 1


def test_cf_invariant_validation():
    with pytest.raises(DomainError):
        ContinuedFraction(())
    with pytest.raises(DomainError):
        ContinuedFraction((1, 0, 2))
    with pytest.raises(DomainError):
        ContinuedFraction((0, 2, 1))


def test_even_order_approximants_examples():
    got = even_order_approximants(cf_expand(Fraction(14, 17)))
    values = [Fraction(t) for t in ("0", "1/2", "2/3", "3/4", "4/5", "9/11", "14/17")]
    assert got == [(v, v == Fraction(14, 17)) for v in values]

    assert even_order_approximants(cf_expand(Fraction(1, 2))) == [(Fraction(0), False)]
    assert even_order_approximants(cf_expand(3)) == [(Fraction(3), True)]


def test_best_lower_approximations_examples():
    assert best_lower_approximations(Fraction(14, 17), 16) == [
        Fraction(t) for t in ("0", "1/2", "2/3", "3/4", "4/5", "9/11")
    ]
    assert best_lower_approximations(Fraction(1, 2), 1) == [Fraction(0)]
    assert best_lower_approximations(Fraction(5, 7), 6) == [Fraction(0), Fraction(1, 2), Fraction(2, 3)]


def test_best_lower_approximations_monotone():
    rng = random.Random(13)
    for _ in range(200):
        q = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        approx = best_lower_approximations(q, rng.randint(1, 60))
        assert all(a < b for a, b in zip(approx, approx[1:]))
        dens = [t.denominator for t in approx]
        assert all(a < b for a, b in zip(dens, dens[1:]))
        assert all(t < q for t in approx)


def test_best_lower_rejects_bad_bound():
    with pytest.raises(DomainError):
        best_lower_approximations(Fraction(1, 2), 0)


def test_agreement_with_even_order_below_denominator():
    # the full sweep up to q = 40 runs in the acceptance suite
    for q in range(2, 21):
        for p in range(1, q):
            if Fraction(p, q).denominator != q:
                continue
            x = Fraction(p, q)
            lower = [v for v, self_flag in even_order_approximants(cf_expand(x)) if not self_flag]
            for d in range(1, q):
                assert best_lower_approximations(x, d) == [v for v in lower if v.denominator <= d]


def test_beyond_denominator_admits_extra_approximations():
    # definition-driven scan keeps semiconvergents the even-order list omits
    assert Fraction(7, 10) in best_lower_approximations(Fraction(5, 7), 10)


def test_format_and_parse():
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(-7, 3)) == "-7/3"
    assert format_rational(3) == "3/1"
    assert parse_rational("14/17") == Fraction(14, 17)
    assert parse_rational("-3") == Fraction(-3)
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("x/y")
