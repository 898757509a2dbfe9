"""Tests for the commutative Laurent ring layer."""

import itertools
import random

import pytest

from kch.laurent import (LaurentPoly, UniPoly, divides, parse_poly, render,
                         resultant, sylvester_matrix, unit_normalize)

L = LaurentPoly.lam
M = LaurentPoly.mu
C = LaurentPoly.const


def test_canonical_form_drops_zeros():
    p = LaurentPoly({(0, 0): 1, (1, 2): 0})
    assert p.terms == {(0, 0): 1}
    assert LaurentPoly({(3, 1): 0}) == LaurentPoly.zero()
    assert not LaurentPoly.zero()


def test_ring_axioms_random():
    rng = random.Random(0)

    def rand_poly():
        return LaurentPoly({(rng.randint(-2, 2), rng.randint(-2, 2)):
                            rng.randint(-4, 4) for _ in range(rng.randint(0, 4))})

    for _ in range(200):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a - a == LaurentPoly.zero()


def test_int_coercion():
    assert C(3) + 2 == C(5)
    assert 2 + C(3) == C(5)
    assert C(3) * 2 == C(6)
    assert 1 - M() == C(1) - M()
    assert C(7) == 7


def test_pow_and_units():
    assert L() ** 3 == LaurentPoly({(3, 0): 1})
    assert (L() * M()) ** -2 == LaurentPoly({(-2, -2): 1})
    assert (-M(2)).is_ring_unit()
    assert not (1 + M()).is_ring_unit()
    assert (C(2) * M()).as_unit() == (2, 0, 1)
    assert not (C(2) * M()).is_ring_unit()
    u = LaurentPoly.unit(-1, 2, -3)
    assert u * u.inverse_unit() == C(1)
    with pytest.raises(ValueError):
        (1 + M()) ** -1


def test_evaluate_mod():
    p = 1 + L() - M(3) + L() * M(-1)
    # l=2, m=3 mod 5: 1 + 2 - 27 + 2*3^-1 = 1 + 2 - 2 + 2*2 = 5 = 0
    assert p.evaluate_mod(2, 3, 5) == 0
    assert C(7).evaluate_mod(1, 1, 7) == 0
    assert (L(-1)).evaluate_mod(3, 1, 7) == 5  # 3^-1 mod 7


def test_substitute_mu_neg_musq():
    p = 1 + M() - L() * M(3)
    q = p.substitute_mu_neg_musq()
    assert q == 1 - M(2) + L() * M(6)
    # cancellation: m + m^2 -> -m^2 + m^4
    assert (M() + M(2)).substitute_mu_neg_musq() == M(4) - M(2)


def test_render_examples():
    # terms sorted ascending by (l-exponent, m-exponent)
    assert render(C(-1) + L() - M(3) + L() * M(-1)) == "-1 - m^3 + l*m^-1 + l"
    assert render(LaurentPoly.zero()) == "0"
    assert render(C(2) * L(2) * M()) == "2*l^2*m"
    assert render(-L()) == "-l"


def test_parse_render_round_trip_random():
    rng = random.Random(1)
    for _ in range(100):
        p = LaurentPoly({(rng.randint(-3, 3), rng.randint(-3, 3)):
                         rng.randint(-9, 9) for _ in range(rng.randint(0, 5))})
        assert parse_poly(render(p)) == p


def test_parse_rejects_garbage():
    for bad in ["", "l +", "x^2", "l^", "(l-1)", "1 ++ 2"]:
        with pytest.raises(ValueError):
            parse_poly(bad)


def test_unit_normalize():
    p = -L(-1) * M(2) * (1 - L())
    q = unit_normalize(p)
    assert q.min_exponents() == (0, 0)
    assert q == 1 - L()
    # idempotent and unit-invariant
    assert unit_normalize(q) == q
    assert unit_normalize(p * LaurentPoly.unit(-1, 5, -2)) == q
    with pytest.raises(ValueError):
        unit_normalize(LaurentPoly.zero())


def test_divides_basic():
    a = 1 - L()
    b = (1 - L()) * (1 + M() + L() * M(2))
    assert divides(a, b)
    assert not divides(b, a)
    assert divides(a * LaurentPoly.unit(-1, -3, 2), b)  # unit factors ignored
    assert divides(a, LaurentPoly.zero())
    assert not divides(C(2), 1 + L())
    with pytest.raises(ValueError):
        divides(LaurentPoly.zero(), a)


def test_divides_random_products():
    rng = random.Random(2)

    def rand_poly():
        while True:
            p = LaurentPoly({(rng.randint(-2, 2), rng.randint(-2, 2)):
                             rng.randint(-3, 3)
                             for _ in range(rng.randint(1, 4))})
            if p:
                return p

    for _ in range(100):
        d, q = rand_poly(), rand_poly()
        assert divides(d, d * q)


def test_unipoly_normalizes_leading_zeros():
    u = UniPoly([C(1), C(0), LaurentPoly.zero()])
    assert u.degree == 0
    assert not UniPoly([])
    assert UniPoly([LaurentPoly.zero()]) == UniPoly([])


def _det_naive(matrix):
    """Permutation-expansion determinant; independent of the Bareiss code."""
    n = len(matrix)
    total = LaurentPoly.zero()
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if perm[i] > perm[j])
        prod = LaurentPoly.const(-1 if inv % 2 else 1)
        for i in range(n):
            prod = prod * matrix[i][perm[i]]
        total = total + prod
    return total


def test_resultant_against_naive_determinant():
    rng = random.Random(3)

    def rand_coeff():
        return LaurentPoly({(rng.randint(-1, 1), rng.randint(-1, 1)):
                            rng.randint(-2, 2)
                            for _ in range(rng.randint(0, 2))})

    checked = 0
    while checked < 100:
        p = UniPoly([rand_coeff() for _ in range(rng.randint(2, 4))])
        q = UniPoly([rand_coeff() for _ in range(rng.randint(2, 4))])
        if not p or not q or p.degree + q.degree == 0:
            continue
        expected = _det_naive(sylvester_matrix(p, q))
        assert resultant(p, q) == expected
        checked += 1


def test_resultant_of_common_root():
    # both vanish at x = 1 + m, so the resultant must be zero
    x_minus = UniPoly([-(1 + M()), C(1)])
    p = UniPoly([-(1 + M()) * L(), (L() - 1), C(1)])  # (x - (1+m))(x + l... )
    # build p as (x - (1+m)) * (x + l)
    p = UniPoly([-(1 + M()) * L(), L() - (1 + M()), C(1)])
    assert resultant(x_minus, p) == LaurentPoly.zero()


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        resultant(UniPoly([]), UniPoly([C(1), C(1)]))
