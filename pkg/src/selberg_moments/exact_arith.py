"""Exact scalar and univariate polynomial arithmetic.

Scalars are :class:`fractions.Fraction` throughout. :class:`Poly` is a dense,
immutable polynomial in a single indeterminate ``x`` with Fraction
coefficients stored in ascending degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ParameterSingular

Rational = Fraction

__all__ = [
    "Rational",
    "Poly",
    "as_rational",
    "poch",
    "binomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "poly_reflect",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and decimal/ratio strings to a Fraction.

    Floats are rejected: they would silently import binary rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def poch(x, tau, i: int) -> Fraction:
    """Step-``tau`` Pochhammer symbol ``x (x+tau) ... (x+(i-1)tau)``.

    For ``i < 0`` the reflected extension ``1/((x-tau)(x-2tau)...(x+i*tau))``
    is returned, so that ``poch(x, tau, i + j) == poch(x, tau, i) *
    poch(x + i*tau, tau, j)`` keeps holding.
    """
    x = as_rational(x)
    tau = as_rational(tau)
    out = Fraction(1)
    if i >= 0:
        for k in range(i):
            out *= x + k * tau
        return out
    for k in range(1, -i + 1):
        factor = x - k * tau
        if factor == 0:
            raise ParameterSingular(f"({x};{tau})_{i}", f"factor x-{k}*tau is zero")
        out *= factor
    return 1 / out


def binomial(n: int, k: int) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def _lcm_den(coeffs) -> int:
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return den


class Poly:
    """Dense univariate polynomial over the rationals.

    Supports ``+ - *`` and integer powers with other Polys and with scalars,
    evaluation by call, and structural equality (a constant Poly compares
    equal to the matching scalar).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees Fractions with a nonzero top coefficient
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def x(cls) -> Poly:
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def lift(cls, value) -> Poly:
        return value if isinstance(value, Poly) else cls.const(value)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(str(c) if k == 0 else f"{c}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            other = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == ((other,) if other else ())

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                s = as_rational(other)
            except TypeError:
                return NotImplemented
            if s == 0:
                return Poly._raw(())
            return Poly._raw(tuple(c * s for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        # integer convolution over a common denominator
        da, db = _lcm_den(a), _lcm_den(b)
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        out = [0] * (len(ia) + len(ib) - 1)
        for i, ci in enumerate(ia):
            if ci:
                for j, cj in enumerate(ib):
                    out[i + j] += ci * cj
        den = da * db
        return Poly._raw(tuple(Fraction(c, den) for c in out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = as_rational(other)
        if s == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Poly._raw(tuple(c / s for c in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, at):
        at = as_rational(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def compose_linear(self, a, b) -> Poly:
        """Substitute ``x -> a + b x``."""
        lin = Poly((a, b))
        acc = Poly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reflect(self) -> Poly:
        """Substitute ``x -> 1 - x``."""
        return self.compose_linear(1, -1)

    def is_monic(self) -> bool:
        return self.leading == 1


def poly_add(p: Poly, q) -> Poly:
    return Poly.lift(p) + q


def poly_mul(p: Poly, q) -> Poly:
    return Poly.lift(p) * q


def poly_scale(p: Poly, s) -> Poly:
    return Poly.lift(p) * as_rational(s)


def poly_eval(p: Poly, at) -> Fraction:
    return Poly.lift(p)(at)


def poly_reflect(p: Poly) -> Poly:
    return Poly.lift(p).reflect()
