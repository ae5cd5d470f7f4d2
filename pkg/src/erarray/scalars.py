"""Exact coefficient arithmetic: rationals, polynomials in z, and their fraction field.

Every value in the library bottoms out here.  A ``Scalar`` is an element of
Q(z), kept in canonical form (numerator and denominator coprime, denominator
monic), so equality is a structural comparison and no floating point is ever
involved.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _format_terms(pairs) -> str:
    """Render (coefficient, degree) pairs, descending degree, canonical form."""
    chunks = []
    for coeff, deg in pairs:
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if deg == 0:
            body = str(mag)
        else:
            var = "z" if deg == 1 else f"z^{deg}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)


class PolyZ:
    """Dense univariate polynomial in z over Q, ascending coefficients.

    Zero is the empty tuple; otherwise the last coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, value) -> PolyZ:
        return cls((_as_fraction(value),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, PolyZ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyZ((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZ(out)

    __radd__ = __add__

    def __neg__(self) -> PolyZ:
        return PolyZ(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyZ()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyZ(out)

    __rmul__ = __mul__

    def scale(self, factor) -> PolyZ:
        f = _as_fraction(factor)
        return PolyZ(tuple(c * f for c in self.coeffs))

    def __pow__(self, exponent: int) -> PolyZ:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power needs a nonnegative integer")
        result = PolyZ((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: PolyZ):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return PolyZ(), self
        quo = [Fraction(0)] * (dn - dd + 1)
        inv_lead = 1 / other.leading
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * inv_lead
            if c:
                quo[k] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return PolyZ(quo), PolyZ(rem)

    def __mod__(self, other: PolyZ) -> PolyZ:
        return divmod(self, other)[1]

    def exact_div(self, other: PolyZ) -> PolyZ:
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return quo

    def monic(self) -> PolyZ:
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    @staticmethod
    def gcd(a: PolyZ, b: PolyZ) -> PolyZ:
        while not b.is_zero:
            a, b = b, (a % b).monic()
        return a.monic()

    def evaluate(self, v) -> Fraction:
        v = _as_fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyZ", self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_zero:
            return "0"
        pairs = [(c, k) for k, c in sorted(enumerate(self.coeffs), reverse=True) if c]
        return _format_terms(pairs)

    def __repr__(self):
        return f"PolyZ({self})"


POLY_ZERO = PolyZ()
POLY_ONE = PolyZ((1,))
POLY_Z = PolyZ((0, 1))


class Scalar:
    """Element of the fraction field Q(z), always in reduced canonical form.

    The denominator is monic and coprime to the numerator; a pure rational
    has denominator 1.  Values are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        num = self._as_poly(num)
        den = POLY_ONE if den is None else self._as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        if num.is_zero:
            num, den = POLY_ZERO, POLY_ONE
        elif den.degree >= 1:
            g = PolyZ.gcd(num, den)
            if g.degree >= 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if den != POLY_ONE and den.degree == 0:
            num = num.scale(1 / den.coeffs[0])
            den = POLY_ONE
        elif not den.is_zero and den.degree >= 1 and den.leading != 1:
            inv = 1 / den.leading
            num = num.scale(inv)
            den = den.scale(inv)
        self.num: PolyZ = num
        self.den: PolyZ = den

    @staticmethod
    def _as_poly(value) -> PolyZ:
        if isinstance(value, PolyZ):
            return value
        if isinstance(value, (int, Fraction)):
            return PolyZ((value,))
        raise TypeError(f"cannot build Scalar from {type(value).__name__}")

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, PolyZ)):
            return cls(other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == POLY_ONE

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; raises when z actually occurs."""
        if not self.is_polynomial or self.num.degree > 0:
            raise ValueError(f"scalar {self} is not a plain rational")
        return self.num.coefficient(0)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial and other.is_polynomial:
            return Scalar(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        out = object.__new__(Scalar)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial and other.is_polynomial:
            return Scalar(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> Scalar:
        if not isinstance(exponent, int):
            raise ValueError("scalar power needs an integer exponent")
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError("scalar division by zero")
            return Scalar(self.den ** (-exponent), self.num ** (-exponent))
        return Scalar(self.num**exponent, self.den**exponent)

    def eval_z(self, v) -> Fraction:
        """Specialize z to a rational value; the denominator must not vanish."""
        v = _as_fraction(v)
        dv = self.den.evaluate(v)
        if dv == 0:
            raise ZeroDivisionError(f"pole at z = {v}")
        return self.num.evaluate(v) / dv

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("Scalar", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
Z = Scalar(POLY_Z)
