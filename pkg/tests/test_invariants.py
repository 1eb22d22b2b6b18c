"""Collision invariants: resultant route, root products, per-factor formulas,
scaling laws, and the aggregated report."""

import random
from fractions import Fraction

import pytest

from tolerant import (Factorization, FactorFormula, Polynomial, RootMultiset,
                      build_report, dupl, gdisc, homothety_exponent, in_T,
                      parse_polynomial, prime_field, rational_function_field,
                      rationals, tol, tol_from_factorization, tol_from_roots,
                      tol_irreducible)
from tolerant.errors import (DegreeMismatchError, DegreeTooSmallError,
                             InseparableInSeparableModeError,
                             InvalidFactorizationError, ZeroPolynomialError)
from tolerant.invariants import REPEATED_ROOT, UNAVAILABLE, UNDEFINED
from tolerant.resultant import discriminant

from conftest import fraction_tol, linear_product


def rand_root_pairs(rng, max_roots=4, max_mult=3):
    pairs = []
    seen = set()
    for _ in range(rng.randint(1, max_roots)):
        r = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
        if r in seen:
            continue
        seen.add(r)
        pairs.append((r, rng.randint(1, max_mult)))
    return pairs


def test_tol_matches_fraction_oracle_fuzz(Q):
    rng = random.Random(0)
    for _ in range(120):
        pairs = rand_root_pairs(rng)
        lc = rng.choice([1, 2, 3, -2, Fraction(1, 2)])
        f = linear_product(Q, pairs, lc=lc)
        n = f.degree
        expected = fraction_tol(pairs, lc, n)
        assert tol(f).value == expected
        rm = RootMultiset(
            tuple((Q.from_fraction(Fraction(r)), m) for r, m in pairs),
            Q.from_fraction(Fraction(lc)))
        assert tol_from_roots(rm, n).value == expected


def test_tol_never_zero_even_with_repeated_roots(Q):
    rng = random.Random(1)
    for _ in range(60):
        f = linear_product(Q, rand_root_pairs(rng))
        assert tol(f)
    assert not discriminant(linear_product(Q, [(2, 2), (3, 1)]))


def test_tol_of_constants_and_linears_is_one(Q, F7):
    for field in (Q, F7):
        assert tol(Polynomial.constant(field, field.from_int(5))).is_one()
        assert tol(Polynomial.x(field)).is_one()
        assert tol(linear_product(field, [(3, 1)], lc=4)).is_one()
    with pytest.raises(ZeroPolynomialError):
        tol(Polynomial.zero(Q))


def test_tol_equals_disc_for_separable(Q, F7):
    rng = random.Random(2)
    for field in (Q, F7):
        span = 9 if field.characteristic == 0 else 6
        for _ in range(60):
            f = Polynomial(field, [field.from_int(rng.randint(-span, span))
                                   for _ in range(rng.randint(3, 6))])
            if f.is_zero() or f.degree < 2 or not f.is_separable():
                continue
            assert tol(f) == discriminant(f)


def test_gdisc_sign_law(Q, F7):
    rng = random.Random(3)
    for field in (Q, F7):
        for _ in range(60):
            pairs = [(rng.randint(-6, 6), rng.randint(1, 3))]
            while len(pairs) < 3:
                r = rng.randint(-6, 6)
                if all(r != q for q, _ in pairs):
                    pairs.append((r, rng.randint(1, 3)))
            f = linear_product(field, pairs)
            n = f.degree
            sign = -1 if (n * (n - 1) // 2) % 2 else 1
            g = gdisc(f)
            t_ = tol(f)
            assert g == (t_ if sign > 0 else -t_)


def test_gdisc_examples(Q):
    assert gdisc(parse_polynomial("x^2-1", Q)).value == -4
    assert gdisc(parse_polynomial("(x-2)^2*(x-3)", Q)).value == -1
    F5T = rational_function_field(5)
    assert gdisc(parse_polynomial("x^5-t", F5T)).is_one()
    with pytest.raises(DegreeTooSmallError):
        gdisc(Polynomial.x(Q))


def test_dupl_is_lc_squared_times_tol(Q):
    rng = random.Random(4)
    for _ in range(100):
        pairs = rand_root_pairs(rng)
        lc = rng.choice([1, 2, 3, -2, Fraction(3, 4)])
        f = linear_product(Q, pairs, lc=lc)
        a = f.leading_coefficient()
        assert dupl(f) == a * a * tol(f)
    monic = linear_product(Q, [(2, 2), (3, 1)])
    assert dupl(monic) == tol(monic)


def test_tol_from_roots_validation(Q):
    rm = RootMultiset(((Q.from_int(1), 2),), Q.one())
    with pytest.raises(DegreeMismatchError):
        tol_from_roots(rm, 3)
    assert tol_from_roots(rm, 2).is_one()
    # single root, non-monic: lc^(2n-2)
    rm5 = RootMultiset(((Q.from_int(9), 3),), Q.from_int(2))
    assert tol_from_roots(rm5, 3).value == 16


def test_tol_irreducible_matches_resultant_route(F7):
    # any separable polynomial qualifies (irreducibility not required)
    rng = random.Random(5)
    for _ in range(40):
        f = Polynomial(F7, [F7.from_int(rng.randrange(7))
                            for _ in range(rng.randint(3, 6))])
        if f.is_zero() or f.degree < 1 or not f.is_separable():
            continue
        assert tol_irreducible(f) == tol(f)


def test_tol_irreducible_inseparable_cases():
    F5T = rational_function_field(5)
    for text, expect in [("x^5-t", "1"), ("x^10-t", "4*t^5")]:
        f = parse_polynomial(text, F5T)
        assert tol_irreducible(f).canonical_text() == expect
        assert tol(f).canonical_text() == expect


def test_tol_from_factorization_corrected_matches_resultant(F7):
    from tolerant import factor_prime_field
    rng = random.Random(6)
    for _ in range(50):
        f = Polynomial(F7, [F7.from_int(rng.randrange(7))
                            for _ in range(rng.randint(3, 7))])
        if f.is_zero() or f.degree < 1:
            continue
        fac = factor_prime_field(f, seed=3)
        assert tol_from_factorization(fac, FactorFormula.CORRECTED) == tol(f)


def test_separable_mode_agrees_when_all_factors_separable(Q):
    rng = random.Random(7)
    x = Polynomial.x(Q)
    irr = parse_polynomial("x^2+1", Q)
    for _ in range(40):
        parts = {}
        for r in rng.sample(range(-5, 6), rng.randint(1, 3)):
            parts[x - Polynomial.constant(Q, Q.from_int(r))] = rng.randint(1, 3)
        if rng.random() < 0.5:
            parts[irr] = rng.randint(1, 2)
        fac = Factorization(Q.from_int(rng.choice([1, 2, -3])),
                            tuple(parts.items()))
        sep = tol_from_factorization(fac, FactorFormula.PAPER_SEPARABLE)
        cor = tol_from_factorization(fac, FactorFormula.CORRECTED)
        gen = tol_from_factorization(fac, FactorFormula.PAPER_GENERAL)
        ref = tol(fac.expand())
        assert sep == cor == gen == ref


def test_separable_mode_rejects_inseparable_factor():
    F5T = rational_function_field(5)
    f = parse_polynomial("x^5-t", F5T)
    fac = Factorization(F5T.one(), ((f, 1),))
    with pytest.raises(InseparableInSeparableModeError):
        tol_from_factorization(fac, FactorFormula.PAPER_SEPARABLE)


def test_general_mode_disagrees_on_mixed_inseparability():
    # the uncorrected closed form overshoots the cross-term exponent
    F5T = rational_function_field(5)
    fac = parse_polynomial("(x^5-t)*(x-1)", F5T, factored=True)
    cor = tol_from_factorization(fac, FactorFormula.CORRECTED)
    gen = tol_from_factorization(fac, FactorFormula.PAPER_GENERAL)
    t = F5T.t()
    one = F5T.one()
    assert cor == (t - one) ** 2
    assert gen == (t - one) ** 10
    assert cor == tol(fac.expand())


def test_corrected_single_factor_reduces_to_shortcut():
    F5T = rational_function_field(5)
    f = parse_polynomial("x^10-t", F5T)
    fac = Factorization(F5T.one(), ((f, 1),))
    assert tol_from_factorization(fac, FactorFormula.CORRECTED) == \
        tol_irreducible(f) == tol(f)


def test_general_mode_at_single_factor():
    # even with one distinct factor the uncorrected form overshoots when
    # that factor is inseparable: its within-factor exponent comes out as
    # m^2 p^(2e) where the defining product needs m^2 p^e
    F5T = rational_function_field(5)
    t = F5T.t()
    four = F5T.from_int(4)
    f = parse_polynomial("x^10-t", F5T)
    fac = Factorization(F5T.one(), ((f, 1),))
    assert tol_from_factorization(fac, FactorFormula.CORRECTED) == \
        tol(f) == four * t ** 5
    assert tol_from_factorization(fac, FactorFormula.PAPER_GENERAL) == \
        four * t ** 25
    # a separable single factor agrees regardless of multiplicity
    g = parse_polynomial("x^2-t", F5T)
    fac3 = Factorization(F5T.one(), ((g, 3),))
    gen = tol_from_factorization(fac3, FactorFormula.PAPER_GENERAL)
    cor = tol_from_factorization(fac3, FactorFormula.CORRECTED)
    assert gen == cor == tol(fac3.expand()) == four * t ** 9


def test_factorization_coprimality_enforced(Q):
    x = Polynomial.x(Q)
    one = Polynomial.one(Q)
    fac = Factorization(Q.one(), ((x - one, 1), ((x - one) * x, 1)))
    with pytest.raises(InvalidFactorizationError):
        tol_from_factorization(fac)


def test_empty_factorization_is_one_like_constants(Q):
    # consistent with tol(f) = 1 for deg f <= 1
    fac = Factorization(Q.from_int(3), ())
    assert tol_from_factorization(fac).is_one()
    assert tol(fac.expand()).is_one()


def test_translation_invariance(Q, F101):
    rng = random.Random(8)
    for field in (Q, F101):
        span = 9 if field.characteristic == 0 else 100
        for _ in range(50):
            f = Polynomial(field, [field.from_int(rng.randint(-span, span))
                                   for _ in range(rng.randint(3, 6))])
            if f.is_zero() or f.degree < 2:
                continue
            a = field.from_int(rng.randint(-span, span))
            assert tol(f.taylor_shift(a)) == tol(f)


def test_homothety_law(Q):
    rng = random.Random(9)
    for _ in range(40):
        pairs = rand_root_pairs(rng)
        f = linear_product(Q, pairs, lc=rng.choice([1, 2, -1]))
        if f.degree < 1:
            continue
        a = Q.from_int(rng.choice([2, 3, -2, 5]))
        h = homothety_exponent(f)
        assert tol(f.homothety(a)) == a ** h * tol(f)


def test_homothety_exponent_values(Q):
    f = parse_polynomial("(x-2)^2*(x-3)", Q)
    assert homothety_exponent(f) == 8
    sep = parse_polynomial("(x-1)*(x-2)*(x-5)", Q)
    assert homothety_exponent(sep) == 6      # n(n-1) for separable cubics
    assert homothety_exponent(Polynomial.x(Q)) == 0
    assert homothety_exponent(linear_product(Q, [(1, 4)])) == 4 * 4 - 8 + 16


def test_homothety_exponent_inseparable_with_factorization():
    F5T = rational_function_field(5)
    f = parse_polynomial("x^10-t", F5T)
    fac = Factorization(F5T.one(), ((f, 1),))
    # n = 10, two closure roots of multiplicity 5: 100 - 20 + 2*25
    assert homothety_exponent(f, fac) == 130
    t0 = F5T.from_int(2)
    assert tol(f.homothety(t0)) == t0 ** 130 * tol(f)


def test_report_markers_and_paths(Q):
    rep = build_report(parse_polynomial("(x-2)^2*(x-3)", Q))
    assert rep.tol.is_one()
    assert rep.dupl.is_one()
    assert rep.gdisc.value == -1
    assert rep.disc == REPEATED_ROOT
    assert rep.separable is False
    assert rep.in_T is False
    assert rep.homothety_exponent == 8
    assert rep.paths_agree is True
    assert rep.trusted_input is False
    assert rep.errors == []


def test_report_undefined_in_T_when_constant_term_zero(Q):
    # the marker itself carries the precondition failure; no error record
    rep = build_report(parse_polynomial("x^2-x", Q))
    assert rep.in_T == UNDEFINED
    assert rep.errors == []


def test_report_separable_case(Q):
    rep = build_report(parse_polynomial("x^2+1", Q))
    assert rep.tol.value == -4
    assert rep.disc.value == -4
    assert rep.separable is True
    assert rep.in_T is True


def test_report_trusted_input_semantics(F7):
    # prime-field factorizations are verified, hence never "trusted"
    f = linear_product(F7, [(1, 2), (2, 1)])
    fac = Factorization(F7.one(), tuple(
        (Polynomial.x(F7) - Polynomial.constant(F7, F7.from_int(r)), m)
        for r, m in [(1, 2), (2, 1)]))
    rep = build_report(f, factorization=fac)
    assert rep.trusted_input is False
    assert rep.paths_agree is True

    # an unverifiable irreducibility assertion over F_p(t) is trusted
    F5T = rational_function_field(5)
    g = parse_polynomial("x^5-t", F5T)
    rep2 = build_report(g, assert_irreducible=True)
    assert rep2.trusted_input is True
    assert rep2.tol.is_one()


def test_report_invalid_factorization_recorded_not_raised(Q):
    # report never crashes: the bad claim becomes an error record and the
    # computation falls back to an internal factorization
    x = Polynomial.x(Q)
    one = Polynomial.one(Q)
    bad = Factorization(Q.one(), ((x - one, 1), (x, 1)))   # expands wrong
    rep = build_report(parse_polynomial("x^2+1", Q), factorization=bad)
    assert any(e.code == "INVALID_FACTORIZATION" for e in rep.errors)
    assert rep.trusted_input is False
    assert rep.paths_agree is True          # internal fallback still compared


def test_report_homothety_unavailable_without_factorization():
    F5T = rational_function_field(5)
    f = parse_polynomial("x^5-t", F5T)   # squarefree decomposition unsupported
    rep = build_report(f)
    assert rep.homothety_exponent == UNAVAILABLE
    assert rep.tol.is_one()              # resultant route still fine
