"""Sylvester resultants over a field and over the ring of u-polynomials.

Both entry points reduce to one exact determinant (``bareiss_det``).  Matrix
entries never carry boxed field elements into the elimination loop: rows are
cleared to integers, residues, or F_p[t] tuples first and the determinant is
unscaled at the end.  Row convention: res(f, g) uses deg(g) rows of f above
deg(f) rows of g, so res(f, g) = lc(f)^deg(g) * prod g(r) over the roots of f.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

from ._rings import (bareiss_det, fp_poly_ring, int_poly_ring, int_ring,
                     mod_ring, pdivmod, plcm, pmul, tuple_poly_ring)
from .errors import ConstantInputError, FieldMismatchError, ZeroInputError
from .field import FieldDescriptor, FieldElement, FieldKind, _fpt_reduce
from .poly import Polynomial


class UPolynomial:
    """Polynomial in the auxiliary variable u with x-polynomial coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable[Polynomial]):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.field != field:
                raise FieldMismatchError("u-coefficient from a different field")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("UPolynomial is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def u_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def x_degree(self):
        """Exact x-degree; characteristic-p coefficient collapse is visible
        here because every x-coefficient is stored normalized."""
        return max((c.degree for c in self.coeffs), default=float("-inf"))

    def x_coefficient(self, j: int) -> tuple[FieldElement, ...]:
        """Coefficient of x^j, as a dense u-coefficient vector."""
        out = [c.coefficient(j) for c in self.coeffs]
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def evaluate(self, u0: FieldElement) -> Polynomial:
        """Specialize u to a field value, leaving a polynomial in x."""
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc.scale(u0) + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"<UPolynomial of u-degree {self.u_degree}, x-degree {self.x_degree}>"


# -- determinants with row-wise denominator clearing ------------------------


def _det_scalar(rows: list[list[FieldElement]], field: FieldDescriptor) -> FieldElement:
    """Determinant of a FieldElement matrix, exactly."""
    if field.kind is FieldKind.PRIME_FIELD:
        raw = [[c.value for c in row] for row in rows]
        return FieldElement(field, bareiss_det(raw, mod_ring(field.p)))
    if field.kind is FieldKind.RATIONALS:
        raw = []
        scale = 1
        for row in rows:
            den = 1
            for c in row:
                den = lcm(den, c.value.denominator)
            scale *= den
            raw.append([int(c.value * den) for c in row])
        det = bareiss_det(raw, int_ring())
        return field.from_fraction(Fraction(det, scale))
    p = field.p
    raw = []
    scale = (1,)
    for row in rows:
        den = (1,)
        for c in row:
            den = plcm(den, c.value[1], p)
        scale = pmul(scale, den, p)
        raw.append([pmul(c.value[0], pdivmod(den, c.value[1], p)[0], p)
                    for c in row])
    det = bareiss_det(raw, fp_poly_ring(p))
    return FieldElement(field, _fpt_reduce(det, scale, p))


def _det_upoly(rows: list[list[tuple[FieldElement, ...]]],
               field: FieldDescriptor) -> Polynomial:
    """Determinant of a matrix whose entries are u-coefficient vectors;
    the result is the determinant as a polynomial in u."""
    if field.kind is FieldKind.PRIME_FIELD:
        # u-polynomials over F_p share the dense-tuple layout of F_p[t], so
        # the determinant runs on the direct kernels.
        raw = [[tuple(c.value for c in e) for e in row] for row in rows]
        det = bareiss_det(raw, fp_poly_ring(field.p))
        return Polynomial(field, [FieldElement(field, c) for c in det])
    if field.kind is FieldKind.RATIONALS:
        raw = []
        scale = 1
        for row in rows:
            den = 1
            for e in row:
                for c in e:
                    den = lcm(den, c.value.denominator)
            scale *= den
            raw.append([tuple(int(c.value * den) for c in e) for e in row])
        det = bareiss_det(raw, int_poly_ring())
        return Polynomial(field,
                          [field.from_fraction(Fraction(c, scale)) for c in det])
    p = field.p
    raw = []
    scale = (1,)
    for row in rows:
        den = (1,)
        for e in row:
            for c in e:
                den = plcm(den, c.value[1], p)
        scale = pmul(scale, den, p)
        raw.append([tuple(pmul(c.value[0], pdivmod(den, c.value[1], p)[0], p)
                          for c in e) for e in row])
    det = bareiss_det(raw, tuple_poly_ring(fp_poly_ring(p)))
    return Polynomial(field,
                      [FieldElement(field, _fpt_reduce(c, scale, p)) for c in det])


# -- resultants --------------------------------------------------------------


def sylvester_resultant(f: Polynomial, g: Polynomial) -> FieldElement:
    """res(f, g) as the Sylvester determinant on exact degrees."""
    if f.field != g.field:
        raise FieldMismatchError("resultant arguments over different fields")
    if f.is_zero() or g.is_zero():
        raise ZeroInputError("resultant of the zero polynomial")
    field = f.field
    n, m = f.degree, g.degree
    if m == 0:
        return g.leading_coefficient() ** n
    if n == 0:
        return f.leading_coefficient() ** m
    size = n + m
    zero = field.zero()
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (size - i - n - 1))
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (size - i - m - 1))
    return _det_scalar(rows, field)


def resultant_in_u(f: Polynomial, G: UPolynomial) -> Polynomial:
    """res_x(f, G), eliminating x; the result is a polynomial in u.

    The x-degree of G is its exact degree after characteristic-p collapse.
    When G is constant in x the resultant is that constant raised to deg f.
    """
    if f.field != G.field:
        raise FieldMismatchError("resultant arguments over different fields")
    if f.is_zero() or G.is_zero():
        raise ZeroInputError("resultant of the zero input")
    if f.degree < 1:
        raise ConstantInputError("resultant in u needs deg f >= 1")
    field = f.field
    n = f.degree
    d = G.x_degree
    if d < 1:
        return Polynomial(field, G.x_coefficient(0)) ** n
    size = n + d
    empty: tuple[FieldElement, ...] = ()
    f_entries = [(c,) if c else empty for c in reversed(f.coeffs)]
    g_entries = [G.x_coefficient(j) for j in range(d, -1, -1)]
    rows = []
    for i in range(d):
        rows.append([empty] * i + f_entries + [empty] * (size - i - n - 1))
    for i in range(n):
        rows.append([empty] * i + g_entries + [empty] * (size - i - d - 1))
    return _det_upoly(rows, field)


def discriminant(f: Polynomial) -> FieldElement:
    """disc(f) = (-1)^C(n,2) res(f, f') / lc(f); zero when f' vanishes."""
    n = f.degree
    if n < 1:
        raise ConstantInputError("discriminant needs degree >= 1")
    df = f.derivative()
    if df.is_zero():
        return f.field.zero()
    res = sylvester_resultant(f, df)
    value = res / f.leading_coefficient()
    if (n * (n - 1) // 2) % 2:
        value = -value
    return value
