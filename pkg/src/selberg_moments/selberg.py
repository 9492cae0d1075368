"""Selberg integral: exact parameter-shift ratios and a log-Gamma evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterSingular
from .exact_arith import as_rational

__all__ = [
    "SelbergParams",
    "selberg_ratio_alpha",
    "selberg_ratio_beta",
    "selberg_value_numeric",
]


@dataclass(frozen=True)
class SelbergParams:
    """Arguments of ``S_n(alpha, beta, tau)``.

    The default constructor enforces the convergence region ``alpha, beta,
    tau > 0``. Use :meth:`unchecked` to evaluate ratios by rational
    continuation outside it.
    """

    alpha: Fraction
    beta: Fraction
    tau: Fraction
    n: int

    def __post_init__(self):
        self._coerce()
        if self.alpha <= 0 or self.beta <= 0 or self.tau <= 0:
            raise ValueError(
                f"Selberg parameters must be positive, got alpha={self.alpha}, "
                f"beta={self.beta}, tau={self.tau}"
            )

    def _coerce(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "tau", as_rational(self.tau))
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def unchecked(cls, alpha, beta, tau, n) -> SelbergParams:
        obj = object.__new__(cls)
        object.__setattr__(obj, "alpha", alpha)
        object.__setattr__(obj, "beta", beta)
        object.__setattr__(obj, "tau", tau)
        object.__setattr__(obj, "n", n)
        obj._coerce()
        return obj

    def swapped(self) -> SelbergParams:
        return SelbergParams.unchecked(self.beta, self.alpha, self.tau, self.n)

    def shift_alpha(self, m) -> SelbergParams:
        return SelbergParams.unchecked(self.alpha + m, self.beta, self.tau, self.n)


def _one_step(alpha, beta, tau, n) -> Fraction:
    # S(alpha+1)/S(alpha) = prod_i (alpha+(n-i)tau) / (alpha+beta+(2n-i-1)tau)
    out = Fraction(1)
    for i in range(1, n + 1):
        den = alpha + beta + (2 * n - i - 1) * tau
        if den == 0:
            raise ParameterSingular(
                f"alpha+beta+{2 * n - i - 1}*tau", f"alpha={alpha}, beta={beta}, tau={tau}"
            )
        out *= (alpha + (n - i) * tau) / den
    return out


def selberg_ratio_alpha(p: SelbergParams, m: int) -> Fraction:
    """``S_n(alpha+m, beta, tau) / S_n(alpha, beta, tau)`` by iterating the
    one-step recurrence ``m`` times."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = Fraction(1)
    for s in range(m):
        out *= _one_step(p.alpha + s, p.beta, p.tau, p.n)
    return out


def selberg_ratio_beta(p: SelbergParams, m: int) -> Fraction:
    """``S_n(alpha, beta+m, tau) / S_n(alpha, beta, tau)``; the integral is
    symmetric under ``alpha <-> beta``."""
    return selberg_ratio_alpha(p.swapped(), m)


def selberg_value_numeric(p: SelbergParams) -> float:
    """Gamma-product value of ``S_n`` in double precision (via ``lgamma``)."""
    a, b, t, n = float(p.alpha), float(p.beta), float(p.tau), p.n
    log_s = 0.0
    for j in range(n):
        log_s += (
            math.lgamma(a + j * t)
            + math.lgamma(b + j * t)
            + math.lgamma(1 + (j + 1) * t)
            - math.lgamma(a + b + (n + j - 1) * t)
            - math.lgamma(1 + t)
        )
    return math.exp(log_s)

