"""Moment polynomials ``< prod_j (x - z_j)^mu >`` of the Jacobi beta-ensemble.

The average is over the normalised density proportional to

    prod_j z_j^(a-1) (1 - z_j)^(b-1) * prod_{j<k} |z_j - z_k|^(2 tau)

on ``[0, 1]^n`` and is a monic polynomial in ``x`` of degree ``n mu``. It is
computed by pushing the exactly known averages of the basis polynomials
through ``mu`` steps of the alpha1-shift difference system, specialised to
``x1 = x, x2 = 0, x3 = 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .difference_system import GenericParams, a_scalars, row_monomials
from .errors import ParameterSingular
from .exact_arith import Poly, as_rational, poch
from .selberg import SelbergParams, selberg_ratio_alpha, selberg_ratio_beta

__all__ = [
    "MomentRequest",
    "MomentResult",
    "initial_vector",
    "chain_step_params",
    "chain",
    "moment_polynomial",
    "closed_form_mu1",
    "gauss_2f1_terminating",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentRequest:
    n: int
    tau: Fraction
    a: Fraction
    b: Fraction
    mu: int

    def __post_init__(self):
        for name in ("tau", "a", "b"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        for name in ("n", "mu"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.tau <= 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if self.a <= 0 or self.b <= 0:
            raise ValueError(f"weight exponents must be positive, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class MomentResult:
    poly: Poly
    request: MomentRequest
    endpoint0: Fraction = field(init=False)
    endpoint1: Fraction = field(init=False)

    def __post_init__(self):
        r = self.request
        sp = SelbergParams(r.a, r.b, r.tau, r.n)
        sign = (-1) ** (r.n * r.mu)
        object.__setattr__(self, "endpoint0", sign * selberg_ratio_alpha(sp, r.mu))
        object.__setattr__(self, "endpoint1", selberg_ratio_beta(sp, r.mu))

    @property
    def checks(self) -> dict:
        r = self.request
        return {
            "endpoint0": self.poly(0) == self.endpoint0,
            "endpoint1": self.poly(1) == self.endpoint1,
            "monic": self.poly.degree == r.n * r.mu and self.poly.is_monic(),
        }


def initial_vector(n: int, alpha, beta, tau) -> list:
    """Normalised averages ``<phi_k>`` for ``k = 0..n`` under the weight
    ``z^(alpha-1) (1-z)^(beta-1)``, with ``phi_k = (-z)^(n-k) (1-z)^k``
    distributed over distinct coordinates."""
    alpha, beta, tau = as_rational(alpha), as_rational(beta), as_rational(tau)
    num = poch(alpha, tau, n)
    den = poch(alpha + beta + (n - 1) * tau, tau, n)
    if den == 0:
        raise ParameterSingular("(alpha+beta+(n-1)tau;tau)_n", f"alpha={alpha}, beta={beta}")
    head = (-1) ** n * num / den
    out = []
    for k in range(n + 1):
        dk = poch(alpha, tau, k)
        if dk == 0:
            raise ParameterSingular("(alpha;tau)_k", f"k={k}, alpha={alpha}, tau={tau}")
        out.append(head * poch(-beta - (n - 1) * tau, tau, k) / dk)
    return out


def chain_step_params(k: int, alpha, beta, tau) -> GenericParams:
    """Parameters of ``A_k``: ``alpha1 = k`` at ``(x1, x2, x3) = (x, 0, 1)``."""
    return GenericParams(k, alpha, beta, tau, Poly.x(), 0, 1)


def chain(n: int, alpha, beta, tau, mu: int) -> list:
    """``initial_vector(n, alpha, beta, tau) @ A_1 @ ... @ A_mu`` as Polys.

    Each step is one row-vector/matrix product. Row ``i`` of ``A_k`` carries
    the common factor ``(-x)^i (1-x)^(n-i)``, so the vector is scaled by
    those monomials first and then combined with the scalar part of ``A_k``.
    """
    vec = [Poly.const(c) for c in initial_vector(n, alpha, beta, tau)]
    for k in range(1, mu + 1):
        p = chain_step_params(k, alpha, beta, tau)
        try:
            s = a_scalars(p, n)
        except ParameterSingular as exc:
            raise ParameterSingular(exc.factor, f"chain step k={k}; {exc.detail}") from exc
        mono = row_monomials(p, n)
        w = [v * m for v, m in zip(vec, mono)]
        vec = []
        for j in range(n + 1):
            acc = Poly()
            for i in range(n + 1):
                sij = s[i, j]
                if sij and w[i]:
                    acc = acc + w[i] * sij
            vec.append(acc)
    return vec


def _moment_via_chain(req: MomentRequest) -> Poly:
    n, mu, tau = req.n, req.mu, req.tau
    alpha, beta = req.a - 1, req.b
    first = chain(n, alpha, beta, tau, mu)[0]
    ratio = poch(alpha, tau, n) / poch(alpha + beta + (n - 1) * tau, tau, n)
    if ratio == 0:
        raise ParameterSingular("(alpha;tau)_n", f"alpha=a-1={alpha}")
    return first / ((-1) ** (n * (mu - 1)) * ratio)


def moment_polynomial(req: MomentRequest) -> MomentResult:
    """Exact ``< prod_j (x - z_j)^mu >`` at weight exponents ``(a, b)``.

    The chain runs at the internal exponent ``alpha = a - 1`` because each
    shift raises the ``z`` exponent by one. When ``a - 1`` hits a pole of
    the initial vector the request is rejected, except for ``mu = 1`` where
    the Jacobi closed form covers it.
    """
    try:
        poly = _moment_via_chain(req)
    except ParameterSingular:
        if req.mu != 1:
            raise
        log.debug("chain singular at a=%s; using the mu=1 closed form", req.a)
        poly = closed_form_mu1(req.n, req.a, req.b, req.tau)
    return MomentResult(poly, req)


def gauss_2f1_terminating(neg_n: int, b, c) -> Poly:
    """``2F1(neg_n, b; c; x)`` for a non-positive integer ``neg_n``."""
    if neg_n > 0:
        raise ValueError("first parameter must be a non-positive integer")
    b, c = as_rational(b), as_rational(c)
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(-neg_n):
        den = (c + k) * (k + 1)
        if den == 0:
            raise ParameterSingular("(c)_k", f"c={c}, k={k + 1}")
        term = term * (neg_n + k) * (b + k) / den
        coeffs.append(term)
    return Poly(coeffs)


def closed_form_mu1(n: int, a, b, tau) -> Poly:
    """Monic Jacobi-type closed form of ``< prod_j (x - z_j) >``."""
    a, b, tau = as_rational(a), as_rational(b), as_rational(tau)
    den = poch(a + b + (n - 1) * tau, tau, n)
    if den == 0:
        raise ParameterSingular("(a+b+(n-1)tau;tau)_n", f"a={a}, b={b}")
    c_tilde = (-1) ** n * poch(a, tau, n) / den
    series = gauss_2f1_terminating(-n, (a + b) / tau + n - 1, a / tau)
    return series * c_tilde

