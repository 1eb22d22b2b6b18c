"""Root-collision invariants of univariate polynomials.

The reference quantity is computed resultant-first: eliminate x from f and
the weighted sum of its Hasse derivatives, take the lowest nonzero
u-coefficient, and normalize.  That route needs no factorization and works
uniformly over Q, F_p, and F_p(t), including inseparable inputs.

Alternative routes (root products, per-factor discriminant formulas, the
single-factor shortcut) are implemented independently so the paths can
cross-validate each other; `build_report` runs them side by side.

`FactorFormula.PAPER_GENERAL` evaluates the uncorrected per-factor closed
form, which disagrees with the defining root product on inputs mixing
different inseparability exponents; `CORRECTED` is the repaired form.
Keeping both makes the discrepancy checkable instead of silently patched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Optional, Union

from .errors import (DegreeMismatchError, DegreeTooSmallError,
                     InseparableInSeparableModeError,
                     InvalidFactorizationError, TolerantError,
                     UnsupportedFieldError, ZeroConstantTermError,
                     ZeroDiscriminantFactorError, ZeroPolynomialError)
from .factor import (Factorization, factor_prime_field,
                     is_irreducible_prime_field, multiplicity_profile,
                     squarefree_decomposition)
from .field import FieldDescriptor, FieldElement, FieldKind
from .poly import Polynomial, RootMultiset
from .resultant import UPolynomial, discriminant, resultant_in_u, sylvester_resultant

REPEATED_ROOT = "REPEATED_ROOT"
UNDEFINED = "UNDEFINED"
UNAVAILABLE = "UNAVAILABLE"


class FactorFormula(enum.Enum):
    """Which per-factor formula tol_from_factorization evaluates."""

    PAPER_SEPARABLE = "paper-separable"
    PAPER_GENERAL = "paper-general"
    CORRECTED = "corrected"


def _half_sign(n: int) -> int:
    """(-1)^C(n,2) as +1/-1."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def _u_resultant_data(f: Polynomial):
    """Eliminate x between f and G = sum_i u^(i-1) D^i f, then return
    (trailing coefficient, trailing u-valuation, x-degree of G).

    For a root of multiplicity m, G picks up u-valuation exactly m - 1
    with witness coefficient lc * prod (r - r')^(m'), so the resultant's
    trailing data encodes the collision product:

        tc = (-1)^(sum_{i<j} m_i m_j) * lc^(d + n) * prod_{i<j} (r_i - r_j)^(2 m_i m_j)

    with k = sum_i m_i (m_i - 1) (always even) and
    sum_{i<j} m_i m_j = C(n,2) - k/2.  tol and gdisc differ from tc only
    by a sign and a leading-coefficient power, both read off (k, d)."""
    n = f.degree
    G = UPolynomial(f.field, [f.hasse_derivative(i) for i in range(1, n + 1)])
    R = resultant_in_u(f, G)
    if R.is_zero():
        raise ArithmeticError("u-resultant vanished; this cannot happen")
    k, tc = next((i, c) for i, c in enumerate(R.coeffs) if c)
    return tc, k, G.x_degree


def gdisc(f: Polynomial) -> FieldElement:
    """Resultant-route collision invariant, normalized so that
    gdisc(f) = (-1)^C(n,2) * tol(f) holds identically.

    Equals the raw trailing u-coefficient over the leading coefficient
    whenever f is separable and G keeps x-degree n - 1; on repeated-root
    or inseparable inputs the trailing valuation k and the x-degree d of
    G shift the normalization to (-1)^(k/2) * lc^(n-2-d) * tc."""
    if f.is_zero():
        raise ZeroPolynomialError("gdisc of the zero polynomial")
    n = f.degree
    if n < 2:
        raise DegreeTooSmallError("gdisc needs degree >= 2")
    tc, k, d = _u_resultant_data(f)
    value = tc * f.leading_coefficient() ** (n - 2 - d)
    return -value if (k // 2) % 2 else value


def tol(f: Polynomial) -> FieldElement:
    """The never-vanishing collision product
    lc^(2n-2) * prod over distinct closure roots (r_i - r_j)^(2 m_i m_j),
    computed through the resultant route; 1 for degree <= 1 (empty product)."""
    if f.is_zero():
        raise ZeroPolynomialError("tol of the zero polynomial")
    n = f.degree
    if n <= 1:
        return f.field.one()
    tc, k, d = _u_resultant_data(f)
    value = tc * f.leading_coefficient() ** (n - 2 - d)
    return -value if (n * (n - 1) // 2 - k // 2) % 2 else value


def dupl(f: Polynomial) -> FieldElement:
    """lc^2 * tol(f); coincides with tol on monic inputs."""
    if f.is_zero():
        raise ZeroPolynomialError("dupl of the zero polynomial")
    lc = f.leading_coefficient()
    return lc * lc * tol(f)


def tol_from_roots(rm: RootMultiset, n: int) -> FieldElement:
    """Defining product, for inputs whose roots all lie in the base field;
    the independent oracle for the resultant route."""
    if rm.total_degree() != n:
        raise DegreeMismatchError(
            f"multiplicities sum to {rm.total_degree()}, degree says {n}")
    acc = rm.leading ** (2 * n - 2)
    entries = rm.entries
    for i in range(len(entries)):
        ri, mi = entries[i]
        for j in range(i + 1, len(entries)):
            rj, mj = entries[j]
            acc = acc * (ri - rj) ** (2 * mi * mj)
    return acc


def tol_irreducible(f: Polynomial) -> FieldElement:
    """Single-factor shortcut: with f = a * g(x^(p^e)) and g separable,
    tol(f) = a^(2n-2) * disc(g)^(p^e).  Valid whenever the desubstituted
    part is separable (irreducibility is sufficient but not necessary)."""
    if f.is_zero():
        raise ZeroPolynomialError("tol of the zero polynomial")
    n = f.degree
    if n < 1:
        return f.field.one()
    sep, e = f.desubstitute()
    d = discriminant(sep.monic())
    if not d:
        raise ZeroDiscriminantFactorError(
            "desubstituted part has repeated roots; the input is reducible")
    p = f.field.characteristic
    scale = f.leading_coefficient() ** (2 * n - 2)
    return scale * d ** (p ** e if p else 1)


def _split_parts(fac: Factorization):
    """(factor, separable part, inseparability exponent, multiplicity)."""
    p = fac.field.characteristic
    out = []
    for g, m in fac.factors:
        if p:
            sep, e = g.desubstitute()
        else:
            sep, e = g, 0
        out.append((g, sep, e, m))
    return out


def tol_from_factorization(
        fac: Factorization,
        mode: FactorFormula = FactorFormula.CORRECTED) -> FieldElement:
    """Per-factor evaluation over a pairwise-coprime monic factorization.

    PAPER_SEPARABLE: all factors separable, N = sum m_i,
        lc^(2n-2) * prod disc(f_i)^(m_i (2 m_i - N))
                  * prod_{i<j} disc(f_i f_j)^(m_i m_j).
    PAPER_GENERAL: uncorrected inseparable variant, N = sum m_i p^(e_i),
        with within-terms disc(sep_i)^(m_i p^(e_i) (2 m_i p^(e_i) - N)) and
        cross-terms disc(sep_i sep_j)^(m_i m_j p^(e_i + e_j)).  Overshoots
        the defining product whenever some e_i >= 1, already at a single
        distinct factor; kept unchanged so the disagreement stays
        observable.
    CORRECTED: lc^(2n-2) * prod disc(sep_i)^(m_i^2 p^(e_i))
        * prod_{i<j} res(twist(sep_i, E-e_i), twist(sep_j, E-e_j))
              ^(2 m_i m_j p^(min(e_i,e_j)))  with E = max(e_i, e_j);
        agrees with PAPER_SEPARABLE when every e_i = 0 and with
        tol_irreducible on single factors.
    """
    if not fac.pairwise_coprime():
        raise InvalidFactorizationError("factors are not pairwise coprime")
    field = fac.field
    if not fac.factors:
        return field.one()
    n = fac.degree()
    q = field.char_exponent
    parts = _split_parts(fac)
    acc = fac.unit ** (2 * n - 2)

    if mode is FactorFormula.PAPER_SEPARABLE:
        for g, sep, e, m in parts:
            if e > 0 or not g.is_separable():
                raise InseparableInSeparableModeError(
                    "separable-mode formula on an inseparable factor")
        big_n = sum(m for _, _, _, m in parts)
        for i, (g_i, _, _, m_i) in enumerate(parts):
            acc = acc * discriminant(g_i) ** (m_i * (2 * m_i - big_n))
            for g_j, _, _, m_j in parts[i + 1:]:
                acc = acc * discriminant(g_i * g_j) ** (m_i * m_j)
        return acc

    if mode is FactorFormula.PAPER_GENERAL:
        weights = [m * q ** e for _, _, e, m in parts]
        big_n = sum(weights)
        for i, (_, sep_i, e_i, m_i) in enumerate(parts):
            d = discriminant(sep_i)
            if not d:
                raise ZeroDiscriminantFactorError(
                    "zero discriminant of a desubstituted part")
            acc = acc * d ** (weights[i] * (2 * weights[i] - big_n))
            for j in range(i + 1, len(parts)):
                _, sep_j, e_j, m_j = parts[j]
                cross = discriminant(sep_i * sep_j)
                if not cross:
                    raise ZeroDiscriminantFactorError(
                        "zero cross discriminant (parts share a root after "
                        "desubstitution)")
                acc = acc * cross ** (m_i * m_j * q ** (e_i + e_j))
        return acc

    for i, (_, sep_i, e_i, m_i) in enumerate(parts):
        d = discriminant(sep_i)
        if not d:
            raise ZeroDiscriminantFactorError(
                "zero discriminant of a desubstituted part")
        acc = acc * d ** (m_i * m_i * q ** e_i)
        for j in range(i + 1, len(parts)):
            _, sep_j, e_j, m_j = parts[j]
            big_e = max(e_i, e_j)
            r = sylvester_resultant(sep_i.frobenius_twist(big_e - e_i),
                                    sep_j.frobenius_twist(big_e - e_j))
            if not r:
                raise ZeroDiscriminantFactorError(
                    "zero cross resultant; factors are not coprime over "
                    "the closure")
            acc = acc * r ** (2 * m_i * m_j * q ** min(e_i, e_j))
    return acc


def homothety_exponent(f: Polynomial,
                       factorization: Optional[Factorization] = None) -> int:
    """Exponent h with tol(f(ax)) = a^h tol(f): n^2 - 2n + sum of squared
    closure multiplicities."""
    if f.is_zero():
        raise ZeroPolynomialError("homothety exponent of the zero polynomial")
    n = f.degree
    if n < 1:
        return 0
    profile = multiplicity_profile(f, factorization)
    return n * n - 2 * n + sum(count * m * m for m, count in profile)


def in_T(f: Polynomial) -> bool:
    """Inversion invariance: tol is unchanged by coefficient reversal."""
    if f.is_zero() or not f.constant_term():
        raise ZeroConstantTermError("inversion invariance needs f(0) != 0")
    return tol(f) == tol(f.reciprocal())


def inversion_criterion(fac: Factorization) -> bool:
    """Root-free inversion test on a factorization of f:
    prod sep_i(0)^(2 m_i (n - m_i p^(e_i)))  ==  (a_0/a_n)^(2n-2),
    where a_0/a_n is the constant-coefficient ratio of the monic product."""
    if not fac.pairwise_coprime():
        raise InvalidFactorizationError("factors are not pairwise coprime")
    field = fac.field
    n = fac.degree()
    q = field.char_exponent
    lhs = field.one()
    ratio = field.one()
    for _, sep, e, m in _split_parts(fac):
        c0 = sep.constant_term()
        if not c0:
            raise ZeroConstantTermError("a factor vanishes at 0")
        lhs = lhs * c0 ** (2 * m * (n - m * q ** e))
        ratio = ratio * c0 ** m
    return lhs == ratio ** (2 * n - 2)


# -- aggregate report ---------------------------------------------------------


@dataclass(frozen=True)
class ErrorRecord:
    op: str
    code: str
    message: str


Marker = str
ReportValue = Union[FieldElement, Marker, bool, int, None]


@dataclass
class InvariantReport:
    input: Polynomial
    field: FieldDescriptor
    tol: Optional[FieldElement] = None
    dupl: Optional[FieldElement] = None
    gdisc: Optional[FieldElement] = None
    disc: ReportValue = None
    separable: Optional[bool] = None
    in_T: ReportValue = None
    homothety_exponent: ReportValue = None
    paths_agree: Optional[bool] = None
    trusted_input: bool = False
    errors: list[ErrorRecord] = dc_field(default_factory=list)


def _internal_factorization(f: Polynomial, seed: int):
    """Best factorization obtainable without caller help, or None."""
    if f.degree < 1:
        return None
    if f.field.kind is FieldKind.PRIME_FIELD:
        return factor_prime_field(f, seed)
    try:
        return squarefree_decomposition(f)
    except UnsupportedFieldError:
        return None


def _verify_caller_factorization(f: Polynomial, fac: Factorization) -> bool:
    """Reconstruction, coprimality, and separability of desubstituted parts;
    over F_p additionally an irreducibility test per factor.  Returns whether
    anything claimed by the caller remains unverified."""
    if fac.expand() != f:
        raise InvalidFactorizationError(
            "factorization does not re-expand to the input")
    if not fac.pairwise_coprime():
        raise InvalidFactorizationError("factors are not pairwise coprime")
    for _, sep, _, _ in _split_parts(fac):
        if sep.degree >= 1 and not sep.is_separable():
            raise InvalidFactorizationError(
                "a desubstituted part has repeated roots")
    if f.field.kind is FieldKind.PRIME_FIELD:
        for g, _ in fac.factors:
            if not is_irreducible_prime_field(g):
                raise InvalidFactorizationError(
                    f"factor of degree {g.degree} is reducible")
        return False
    # Q / F_p(t): the formulas only need what was just checked, but any
    # irreducibility claim itself stays unverified.
    return True


def build_report(f: Polynomial,
                 factorization: Optional[Factorization] = None,
                 assert_irreducible: bool = False,
                 seed: int = 0) -> InvariantReport:
    """Every computable invariant of f, with structured error records in
    place of exceptions and explicit markers for unmet preconditions."""
    report = InvariantReport(input=f, field=f.field)

    def attempt(op, fn):
        try:
            return fn()
        except TolerantError as exc:
            report.errors.append(ErrorRecord(op, exc.code, str(exc)))
            return None

    report.tol = attempt("tol", lambda: tol(f))
    report.dupl = attempt("dupl", lambda: dupl(f))
    report.gdisc = attempt("gdisc", lambda: gdisc(f))
    d = attempt("disc", lambda: discriminant(f))
    report.disc = REPEATED_ROOT if d is not None and not d else d
    report.separable = attempt("separable", lambda: f.is_separable())
    if f.is_zero() or not f.constant_term():
        report.in_T = UNDEFINED
    else:
        report.in_T = attempt("in_T", lambda: in_T(f))

    fac = factorization
    if fac is None and assert_irreducible and not f.is_zero() and f.degree >= 1:
        fac = Factorization(f.leading_coefficient(), ((f.monic(), 1),))
    if fac is not None:
        try:
            report.trusted_input = _verify_caller_factorization(f, fac)
        except TolerantError as exc:
            report.errors.append(ErrorRecord("factorization", exc.code, str(exc)))
            fac = None
    if fac is None and not f.is_zero():
        fac = _internal_factorization(f, seed)

    try:
        report.homothety_exponent = homothety_exponent(f, fac)
    except UnsupportedFieldError:
        report.homothety_exponent = UNAVAILABLE
    except TolerantError as exc:
        report.errors.append(ErrorRecord("homothety_exponent", exc.code, str(exc)))

    if fac is not None and report.tol is not None:
        alt = attempt("paths_agree",
                      lambda: tol_from_factorization(fac, FactorFormula.CORRECTED))
        if alt is not None:
            report.paths_agree = (alt == report.tol)
    return report
