"""Squarefree decomposition, prime-field factorization, multiplicity profiles."""

import random

import pytest

from tolerant import (Factorization, Polynomial, factor_prime_field,
                      is_irreducible_prime_field, multiplicity_profile,
                      prime_field, rational_function_field, rationals,
                      squarefree_decomposition)
from tolerant.errors import (ConstantInputError, InvalidFactorizationError,
                             UnsupportedFieldError)

from conftest import linear_product


def test_factorization_validates_shape(Q):
    x = Polynomial.x(Q)
    one = Polynomial.one(Q)
    with pytest.raises(InvalidFactorizationError):
        Factorization(Q.zero(), ((x, 1),))          # zero unit
    with pytest.raises(InvalidFactorizationError):
        Factorization(Q.one(), ((x, 0),))           # multiplicity < 1
    with pytest.raises(InvalidFactorizationError):
        Factorization(Q.one(), ((x.scale(Q.from_int(2)), 1),))  # not monic
    with pytest.raises(InvalidFactorizationError):
        Factorization(Q.one(), ((one, 1),))         # constant factor


def test_expand_and_coprimality(Q):
    x = Polynomial.x(Q)
    two = Polynomial.constant(Q, Q.from_int(2))
    fac = Factorization(Q.from_int(3), ((x - two, 2), (x, 1)))
    assert fac.expand() == linear_product(Q, [(2, 2), (0, 1)], lc=3)
    assert fac.degree() == 3
    assert fac.pairwise_coprime()
    shared = Factorization(Q.one(), ((x - two, 1), ((x - two) * x, 1)))
    assert not shared.pairwise_coprime()


def test_squarefree_char0_yun(Q):
    f = linear_product(Q, [(1, 1), (2, 2), (3, 3)], lc=4)
    fac = squarefree_decomposition(f)
    assert fac.unit == Q.from_int(4)
    assert not fac.partial
    assert fac.expand() == f
    assert sorted((g.degree, m) for g, m in fac.factors) == [(1, 1), (1, 2), (1, 3)]
    for g, _ in fac.factors:
        assert g.is_monic() and g.is_separable()
    assert fac.pairwise_coprime()


def test_squarefree_char0_squarefree_input_is_single_part(Q):
    f = linear_product(Q, [(1, 1), (5, 1)])
    fac = squarefree_decomposition(f)
    assert len(fac.factors) == 1
    assert fac.factors[0] == (f, 1)


def test_squarefree_charp_multiplicity_divisible_by_p():
    F5 = prime_field(5)
    f = linear_product(F5, [(1, 5), (2, 1)])
    fac = squarefree_decomposition(f)
    assert fac.expand() == f
    assert sorted((g.degree, m) for g, m in fac.factors) == [(1, 1), (1, 5)]
    assert not fac.partial                       # F_5 is perfect


def test_squarefree_charp_pth_power():
    F5 = prime_field(5)
    f = linear_product(F5, [(1, 1), (3, 1)]) ** 5
    fac = squarefree_decomposition(f)
    assert fac.expand() == f
    assert all(m == 5 for _, m in fac.factors)


def test_squarefree_fpt_clean_case_flagged_partial():
    F5T = rational_function_field(5)
    t = Polynomial.constant(F5T, F5T.t())
    x = Polynomial.x(F5T)
    f = (x * x - t) * (x - Polynomial.one(F5T)) ** 2
    fac = squarefree_decomposition(f)
    assert fac.partial                           # imperfect field: conservative flag
    assert fac.expand() == f
    assert fac.pairwise_coprime()


def test_squarefree_fpt_pth_power_unsupported():
    F5T = rational_function_field(5)
    t = Polynomial.constant(F5T, F5T.t())
    f = Polynomial.x(F5T) ** 5 - t
    with pytest.raises(UnsupportedFieldError):
        squarefree_decomposition(f)
    with pytest.raises(UnsupportedFieldError):
        squarefree_decomposition(f ** 2)


def test_squarefree_rejects_constants(Q):
    with pytest.raises(ConstantInputError):
        squarefree_decomposition(Polynomial.one(Q))


def test_factor_prime_field_reconstructs_and_is_irreducible():
    rng = random.Random(0)
    F = prime_field(13)
    for _ in range(40):
        f = Polynomial(F, [F.from_int(rng.randrange(13))
                           for _ in range(rng.randint(2, 8))])
        if f.is_zero() or f.degree < 1:
            continue
        fac = factor_prime_field(f, seed=7)
        assert fac.expand() == f
        assert fac.pairwise_coprime()
        for g, m in fac.factors:
            assert g.is_monic() and m >= 1
            assert is_irreducible_prime_field(g)


def test_factor_prime_field_deterministic_under_seed():
    F = prime_field(101)
    rng = random.Random(1)
    f = Polynomial(F, [F.from_int(rng.randrange(101)) for _ in range(9)])
    a = factor_prime_field(f, seed=5)
    b = factor_prime_field(f, seed=5)
    assert a == b


def test_factor_prime_field_rejects_other_fields(Q):
    with pytest.raises(UnsupportedFieldError):
        factor_prime_field(Polynomial.x(Q))


@pytest.mark.parametrize("p,coeffs,expect", [
    (3, [1, 0, 1], True),     # x^2 + 1, -1 not a square mod 3
    (5, [1, 0, 1], False),    # 2^2 = -1 mod 5
    (2, [1, 1, 0, 1], True),  # x^3 + x + 1 has no roots over F_2
    (2, [1, 0, 1], False),    # (x+1)^2
    (7, [3, 1], True),        # linear
])
def test_is_irreducible_known_cases(p, coeffs, expect):
    F = prime_field(p)
    assert is_irreducible_prime_field(Polynomial.from_ints(F, coeffs)) is expect


def test_is_irreducible_agrees_with_factorization():
    rng = random.Random(2)
    F = prime_field(7)
    for _ in range(60):
        f = Polynomial(F, [F.from_int(rng.randrange(7))
                           for _ in range(rng.randint(2, 6))])
        if f.is_zero() or f.degree < 1:
            continue
        fac = factor_prime_field(f.monic(), seed=0)
        single = len(fac.factors) == 1 and fac.factors[0][1] == 1
        assert is_irreducible_prime_field(f.monic()) is single


def test_multiplicity_profile_char0(Q):
    f = linear_product(Q, [(2, 2), (3, 1)])
    assert multiplicity_profile(f) == [(2, 1), (1, 1)]
    g = linear_product(Q, [(1, 3), (2, 3), (4, 1)])
    assert multiplicity_profile(g) == [(3, 2), (1, 1)]


def test_multiplicity_profile_inseparable():
    F5T = rational_function_field(5)
    t = Polynomial.constant(F5T, F5T.t())
    x = Polynomial.x(F5T)
    f = x ** 10 - t                  # (x^2 - t) desubstituted, e = 1
    fac = Factorization(F5T.one(), ((f, 1),))
    assert multiplicity_profile(f, fac) == [(5, 2)]
    sq = Factorization(F5T.one(), ((f, 2),))
    assert multiplicity_profile(sq.expand(), sq) == [(10, 2)]


def test_multiplicity_profile_prime_field_via_internal_factorization():
    F = prime_field(7)
    f = linear_product(F, [(1, 2), (2, 2), (3, 1)])
    assert multiplicity_profile(f) == [(2, 2), (1, 1)]
