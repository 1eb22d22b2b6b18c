"""Inversion invariance: the reciprocal-stability set, its closed-form test,
and multiplicativity."""

import random
from fractions import Fraction

import pytest

from tolerant import (Factorization, Polynomial, factor_prime_field, in_T,
                      inversion_criterion, parse_polynomial, prime_field,
                      rationals, tol)
from tolerant.errors import ZeroConstantTermError

from conftest import linear_product


def test_in_T_examples(Q):
    assert in_T(parse_polynomial("x^2+1", Q)) is True          # palindromic
    assert in_T(parse_polynomial("(x-2)^2*(x-3)", Q)) is False
    assert in_T(parse_polynomial("x-1", Q)) is True            # tol = 1 both ways
    assert in_T(parse_polynomial("(x-1)^2*(x-2)^2", Q)) is False
    with pytest.raises(ZeroConstantTermError):
        in_T(parse_polynomial("x^2-x", Q))


def test_separable_with_nonzero_constant_term_always_in_T(Q, F7):
    rng = random.Random(0)
    for field in (Q, F7):
        span = 9 if field.characteristic == 0 else 6
        for _ in range(60):
            f = Polynomial(field, [field.from_int(rng.randint(-span, span))
                                   for _ in range(rng.randint(2, 6))])
            if f.is_zero() or f.degree < 1 or not f.constant_term():
                continue
            if not f.is_separable():
                continue
            assert in_T(f) is True


def test_palindromic_with_multiplicity_in_T(Q):
    base = parse_polynomial("x^2+3*x+1", Q)          # palindromic
    for m in range(1, 4):
        assert in_T(base ** m) is True
    assert in_T(parse_polynomial("(x-1)^6", Q)) is True


def test_in_T_multiplicative_on_coprime_pairs(Q):
    rng = random.Random(1)
    count = 0
    while count < 40:
        # generators: separable rational-rooted g, palindromic power h
        roots = rng.sample(range(1, 10), rng.randint(1, 3))
        g = linear_product(Q, [(r, 1) for r in roots])
        h = parse_polynomial("x^2+3*x+1", Q) ** rng.randint(1, 2)
        if not g.gcd(h).degree == 0:
            continue
        assert in_T(g) and in_T(h)
        assert in_T(g * h) is True
        count += 1


def test_criterion_matches_in_T_rational_roots(Q):
    rng = random.Random(2)
    checked = 0
    while checked < 80:
        pairs = []
        seen = set()
        for _ in range(rng.randint(1, 3)):
            r = Fraction(rng.randint(-6, 6), rng.randint(1, 2))
            if r == 0 or r in seen:
                continue
            seen.add(r)
            pairs.append((r, rng.randint(1, 3)))
        if not pairs:
            continue
        lc = rng.choice([1, 2, -3])
        f = linear_product(Q, pairs, lc=lc)
        fac = Factorization(
            Q.from_int(lc),
            tuple((linear_product(Q, [(r, 1)]), m) for r, m in pairs))
        assert inversion_criterion(fac) is in_T(f)
        checked += 1


def test_criterion_matches_in_T_prime_field():
    F = prime_field(101)
    rng = random.Random(3)
    checked = 0
    while checked < 60:
        f = Polynomial(F, [F.from_int(rng.randrange(101))
                           for _ in range(rng.randint(2, 7))])
        if f.is_zero() or f.degree < 1 or not f.constant_term():
            continue
        fac = factor_prime_field(f, seed=1)
        assert inversion_criterion(fac) is in_T(f)
        checked += 1


def test_criterion_inseparable_input():
    from tolerant import rational_function_field
    F5T = rational_function_field(5)
    fac = parse_polynomial("(x^5-t)*(x-1)", F5T, factored=True)
    assert inversion_criterion(fac) is in_T(fac.expand())


def test_criterion_rejects_zero_constant_term(Q):
    fac = parse_polynomial("(x)*(x-1)", Q, factored=True)
    with pytest.raises(ZeroConstantTermError):
        inversion_criterion(fac)


def test_tol_reciprocal_relation_on_non_members(Q):
    # outside T the two values still relate through the constant/leading ratio
    f = parse_polynomial("(x-2)^2*(x-3)", Q)
    assert tol(f).value == 1
    assert tol(f.reciprocal()).value == 16
