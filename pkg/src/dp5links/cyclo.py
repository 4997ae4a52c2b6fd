"""Exact arithmetic in the degree-8 cyclotomic field Q(zeta_20).

Every number used anywhere in this package is an element of K = Q(zeta_20),
the smallest field containing a primitive fifth root of unity, the imaginary
unit and sqrt(5) at once.  Elements are stored in the power basis
1, z, ..., z^7 with exact rational coefficients, fully reduced modulo

    Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1,

so equality of field elements is coefficient-wise equality of canonical
forms.  There is no floating-point code path; all comparisons are exact.

Values are immutable and hashable, hence freely shareable between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

DEGREE = 8

# Phi_20 coefficients for x^0..x^8 (monic).
MODULUS = (1, 0, -1, 0, 1, 0, -1, 0, 1)

Rat = Union[int, Fraction]
Coercible = Union["FieldElement", int, Fraction]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero element of K."""


class InvalidAutomorphism(ValueError):
    """Galois exponent not coprime to 20."""


def _reduce(coeffs: list[Fraction]) -> list[Fraction]:
    # x^(8+k) = x^(6+k) - x^(4+k) + x^(2+k) - x^k
    for d in range(len(coeffs) - 1, DEGREE - 1, -1):
        c = coeffs[d]
        if c:
            coeffs[d - 2] += c
            coeffs[d - 4] -= c
            coeffs[d - 6] += c
            coeffs[d - 8] -= c
        coeffs[d] = Fraction(0)
    return coeffs[:DEGREE]


class FieldElement:
    """An element of Q(zeta_20) in reduced power-basis form."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Rat]):
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > DEGREE:
            cs = _reduce(cs)
        elif len(cs) < DEGREE:
            cs = cs + [Fraction(0)] * (DEGREE - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q: Rat) -> "FieldElement":
        return FieldElement([Fraction(q)])

    @staticmethod
    def zeta_power(k: int) -> "FieldElement":
        """zeta_20^k, any integer k."""
        k %= 20
        cs = [Fraction(0)] * (k + 1)
        cs[k] = Fraction(1)
        return FieldElement(cs)

    # -- ring structure ------------------------------------------------

    @staticmethod
    def _coerce(x: Coercible) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElement.from_rational(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement([a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other: Coercible) -> "FieldElement":
        return self._coerce(other) - self

    def __neg__(self) -> "FieldElement":
        return FieldElement([-a for a in self.coeffs])

    def __mul__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * (2 * DEGREE - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        return FieldElement(_reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Coercible) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid against Phi_20."""
        if self.is_zero():
            raise DivisionByZero("inverse of the zero element")
        # Polynomials as coefficient lists (low degree first).
        r0 = [Fraction(c) for c in MODULUS]
        r1 = list(self.coeffs)
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant gcd (Phi_20 is irreducible over Q).
        lead = next(c for c in reversed(r0) if c)
        inv = [c / lead for c in s0]
        return FieldElement(_reduce(inv + [Fraction(0)] * max(0, DEGREE - len(inv))))

    # -- predicates and views -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational element: {self!r}")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"

    # -- serialization ---------------------------------------------------

    def serialize(self) -> list[str]:
        """Eight strings "num/den" in power-basis order (bit-exact)."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @staticmethod
    def deserialize(data: Sequence[str]) -> "FieldElement":
        if len(data) != DEGREE:
            raise ValueError(f"expected {DEGREE} coefficient strings, got {len(data)}")
        return FieldElement([Fraction(s) for s in data])


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Quotient and remainder of rational coefficient lists, low degree first."""
    a = list(a)
    db = max(i for i, c in enumerate(b) if c)
    lead = b[db]
    q = [Fraction(0)] * max(1, len(a))
    for da in range(len(a) - 1, db - 1, -1):
        if not a[da]:
            continue
        f = a[da] / lead
        q[da - db] = f
        for j in range(db + 1):
            a[da - db + j] -= f * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    while len(q) > 1 and not q[-1]:
        q.pop()
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def galois_apply(k: int, a: FieldElement) -> FieldElement:
    """The field automorphism zeta -> zeta^k; requires gcd(k, 20) = 1.

    k = 19 is complex conjugation.
    """
    from math import gcd

    if gcd(k, 20) != 1:
        raise InvalidAutomorphism(f"gcd({k}, 20) != 1")
    out = [Fraction(0)] * 20
    for j, c in enumerate(a.coeffs):
        if c:
            out[(j * k) % 20] += c
    return FieldElement(_reduce(out))


def field_arith(op: str, a: Coercible, b: Coercible) -> FieldElement:
    """Named dispatch over the four field operations."""
    a = FieldElement._coerce(a)
    b = FieldElement._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by the zero element")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def root_of_unity(n: int, j: int = 1) -> FieldElement:
    """zeta_n^j for n dividing 20."""
    if 20 % n != 0:
        raise InvalidAutomorphism(f"{n}-th roots of unity do not all lie in Q(zeta_20)")
    return FieldElement.zeta_power((20 // n) * j)


ZERO = FieldElement([0])
ONE = FieldElement([1])
ZETA = FieldElement.zeta_power(1)      # zeta_20
ZETA5 = FieldElement.zeta_power(4)     # primitive fifth root of unity
I_UNIT = FieldElement.zeta_power(5)    # imaginary unit
SQRT5 = ONE + 2 * (ZETA5 + ZETA5 ** 4)

MINUS_ONE = -ONE


def rational(q: Rat) -> FieldElement:
    return FieldElement.from_rational(q)
