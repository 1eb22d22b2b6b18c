"""Coefficient fields: Q, F_p, and the rational function field F_p(t).

A :class:`FieldDescriptor` names one of the three supported fields; a
:class:`FieldElement` is an immutable exact value tagged with its descriptor.
Canonical forms make equality a plain value comparison:

* Q: ``fractions.Fraction`` (reduced, positive denominator),
* F_p: a residue in ``[0, p)``,
* F_p(t): a reduced fraction of dense F_p[t] tuples with monic denominator.

Mixing elements of different descriptors raises ``FieldMismatchError``;
Python ints coerce into any field, ``Fraction`` only into Q.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import _rings
from .errors import (DivisionByZeroError, FieldMismatchError,
                     UnsupportedFieldError)

MODULUS_CAP = 2 ** 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set is exact far beyond 2^31."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldKind(enum.Enum):
    RATIONALS = "q"
    PRIME_FIELD = "fp"
    RATIONAL_FUNCTION_FIELD = "fpt"


@dataclass(frozen=True)
class FieldDescriptor:
    """One of Q, F_p, F_p(t); immutable and hashable."""

    kind: FieldKind
    p: Union[int, None] = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.p is not None:
                raise ValueError("rationals take no modulus")
        else:
            if self.p is None:
                raise ValueError(f"{self.kind.value} needs a prime modulus")
            if not 2 <= self.p < MODULUS_CAP:
                raise ValueError(f"modulus must be in [2, 2^31): {self.p}")
            if not is_prime(self.p):
                raise ValueError(f"modulus is not prime: {self.p}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind is FieldKind.RATIONALS else self.p

    @property
    def char_exponent(self) -> int:
        """p in positive characteristic, 1 over Q."""
        return 1 if self.kind is FieldKind.RATIONALS else self.p

    @property
    def is_perfect(self) -> bool:
        return self.kind is not FieldKind.RATIONAL_FUNCTION_FIELD

    # -- element constructors -------------------------------------------

    def zero(self) -> "FieldElement":
        return self.from_int(0)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        if self.kind is FieldKind.RATIONALS:
            return FieldElement(self, Fraction(n))
        if self.kind is FieldKind.PRIME_FIELD:
            return FieldElement(self, n % self.p)
        n %= self.p
        return FieldElement(self, ((n,) if n else (), (1,)))

    def from_fraction(self, q: Fraction) -> "FieldElement":
        if self.kind is FieldKind.RATIONALS:
            return FieldElement(self, Fraction(q))
        num = self.from_int(q.numerator)
        return num / self.from_int(q.denominator)

    def t(self) -> "FieldElement":
        """The indeterminate t of F_p(t)."""
        if self.kind is not FieldKind.RATIONAL_FUNCTION_FIELD:
            raise UnsupportedFieldError("t exists only in F_p(t)")
        return FieldElement(self, ((0, 1), (1,)))

    def from_t_fraction(self, num, den=(1,)) -> "FieldElement":
        """Build an F_p(t) element from dense t-coefficient sequences."""
        if self.kind is not FieldKind.RATIONAL_FUNCTION_FIELD:
            raise UnsupportedFieldError("t-fractions exist only in F_p(t)")
        p = self.p
        n = _rings.pstrip([c % p for c in num])
        d = _rings.pstrip([c % p for c in den])
        return FieldElement(self, _fpt_reduce(n, d, p))

    def text(self) -> str:
        """CLI syntax: ``q``, ``fp:<p>``, ``fpt:<p>``."""
        if self.kind is FieldKind.RATIONALS:
            return "q"
        return f"{self.kind.value}:{self.p}"

    def __repr__(self) -> str:
        return f"FieldDescriptor({self.text()!r})"


def rationals() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONALS)


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME_FIELD, p)


def rational_function_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONAL_FUNCTION_FIELD, p)


def parse_field(text: str) -> FieldDescriptor:
    """Parse the CLI descriptor syntax ``q`` / ``fp:P`` / ``fpt:P``."""
    text = text.strip().lower()
    if text == "q":
        return rationals()
    for prefix, maker in (("fp:", prime_field), ("fpt:", rational_function_field)):
        if text.startswith(prefix):
            body = text[len(prefix):]
            if not body.isdigit():
                raise ValueError(f"bad modulus in field descriptor: {text!r}")
            return maker(int(body))
    raise ValueError(f"unknown field descriptor: {text!r} (use q, fp:P, fpt:P)")


def _fpt_reduce(num: tuple, den: tuple, p: int) -> tuple[tuple, tuple]:
    """Canonical F_p(t) fraction: reduced, monic denominator, 0 = ()/(1)."""
    if not den:
        raise DivisionByZeroError("zero denominator in F_p(t)")
    if not num:
        return (), (1,)
    g = _rings.pgcd(num, den, p)
    if len(g) > 1:
        num = _rings.pdivmod(num, g, p)[0]
        den = _rings.pdivmod(den, g, p)[0]
    if den[-1] != 1:
        inv = pow(den[-1], -1, p)
        num = _rings.pmul_ground(num, inv, p)
        den = _rings.pmul_ground(den, inv, p)
    return num, den


def t_poly_text(coeffs: tuple, p: int, var: str = "t") -> str:
    """Parseable text for a dense F_p polynomial, e.g. ``t^2 + 4*t + 3``."""
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(terms)


class FieldElement:
    """Immutable exact scalar; arithmetic via operators, always canonical."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    # -- plumbing --------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"{self.field.text()} vs {other.field.text()}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction) and self.field.kind is FieldKind.RATIONALS:
            return FieldElement(self.field, other)
        return NotImplemented

    def __bool__(self) -> bool:
        if self.field.kind is FieldKind.RATIONAL_FUNCTION_FIELD:
            return bool(self.value[0])
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self

    def is_one(self) -> bool:
        return self == self.field.one()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        kind = self.field.kind
        if kind is FieldKind.RATIONALS:
            return FieldElement(self.field, self.value + other.value)
        if kind is FieldKind.PRIME_FIELD:
            return FieldElement(self.field, (self.value + other.value) % self.field.p)
        p = self.field.p
        (an, ad), (bn, bd) = self.value, other.value
        num = _rings.padd(_rings.pmul(an, bd, p), _rings.pmul(bn, ad, p), p)
        return FieldElement(self.field, _fpt_reduce(num, _rings.pmul(ad, bd, p), p))

    __radd__ = __add__

    def __neg__(self):
        kind = self.field.kind
        if kind is FieldKind.RATIONALS:
            return FieldElement(self.field, -self.value)
        if kind is FieldKind.PRIME_FIELD:
            return FieldElement(self.field, (-self.value) % self.field.p)
        num, den = self.value
        return FieldElement(self.field, (_rings.pneg(num, self.field.p), den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        kind = self.field.kind
        if kind is FieldKind.RATIONALS:
            return FieldElement(self.field, self.value * other.value)
        if kind is FieldKind.PRIME_FIELD:
            return FieldElement(self.field, self.value * other.value % self.field.p)
        p = self.field.p
        (an, ad), (bn, bd) = self.value, other.value
        return FieldElement(self.field, _fpt_reduce(
            _rings.pmul(an, bn, p), _rings.pmul(ad, bd, p), p))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZeroError("inverse of zero")
        kind = self.field.kind
        if kind is FieldKind.RATIONALS:
            return FieldElement(self.field, 1 / self.value)
        if kind is FieldKind.PRIME_FIELD:
            return FieldElement(self.field, pow(self.value, -1, self.field.p))
        num, den = self.value
        return FieldElement(self.field, _fpt_reduce(den, num, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise DivisionByZeroError("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        return coerced / self

    def __pow__(self, e: int) -> "FieldElement":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- characteristic-p structure ---------------------------------------

    def frobenius_power(self, a: int) -> "FieldElement":
        """c^(p^a), by repeated p-th powering."""
        if a < 0:
            raise ValueError("negative Frobenius exponent")
        if a == 0:
            return self
        if self.field.characteristic == 0:
            raise UnsupportedFieldError("Frobenius needs characteristic p")
        p = self.field.p
        if self.field.kind is FieldKind.PRIME_FIELD:
            return self            # a^p = a in F_p
        # (sum c_i t^i)^p = sum c_i t^(ip): coefficients are Frobenius-fixed
        num, den = self.value
        for _ in range(a):
            num = _rings.pstretch(num, p)
            den = _rings.pstretch(den, p)
        return FieldElement(self.field, (num, den))

    def pth_root(self) -> "FieldElement":
        """The unique d with d^p = c; perfect fields only."""
        if self.field.characteristic == 0:
            raise UnsupportedFieldError("p-th root needs characteristic p")
        if not self.field.is_perfect:
            raise UnsupportedFieldError(
                "p-th roots need not exist in F_p(t)")
        return self                # Frobenius is the identity on F_p

    # -- text --------------------------------------------------------------

    def canonical_text(self) -> str:
        kind = self.field.kind
        if kind is FieldKind.RATIONALS:
            return str(self.value)
        if kind is FieldKind.PRIME_FIELD:
            return str(self.value)
        num, den = self.value
        p = self.field.p
        if den == (1,):
            return t_poly_text(num, p)
        return f"({t_poly_text(num, p)})/({t_poly_text(den, p)})"

    def __str__(self) -> str:
        return self.canonical_text()

    def __repr__(self) -> str:
        return f"<{self.canonical_text()} in {self.field.text()}>"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Named dispatch kept for symmetry with the operator API."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op: {op!r}")


def frobenius_power(c: FieldElement, a: int) -> FieldElement:
    return c.frobenius_power(a)


def pth_root(c: FieldElement) -> FieldElement:
    return c.pth_root()
