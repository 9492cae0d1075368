"""Brute-force evaluation of Selberg-type averages at small ``n``.

For a positive integer ``tau`` the interaction ``prod_{j<k} |z_j - z_k|^(2tau)``
is the polynomial ``prod (z_j - z_k)^(2tau)``. Expanding it together with the
test function into monomials ``z^c`` reduces every average to products of
one-dimensional Beta moments, which are rational. This path shares no code
with the difference-system matrices and is used to certify them.

Conventions: ``x2 = 0`` and ``x3 = 1`` are fixed, so the weight is
``prod_l (x1 - z_l)^(alpha1-1) z_l^(alpha2-1) (1-z_l)^(alpha3-1)`` times the
interaction. ``alpha1`` is a positive integer, and either ``x1`` lies outside
``(0, 1)`` or ``alpha1`` is odd, so the ``x1`` factor has a fixed sign and
equals ``|x1 - z|^(alpha1-1)`` up to that sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivergentIntegral, ExpansionTooLarge
from .exact_arith import Poly, as_rational, binomial, poch
from .moments import initial_vector
from .selberg import SelbergParams, selberg_ratio_alpha

__all__ = [
    "MAX_TERMS",
    "SymmetricExpansion",
    "OracleParams",
    "PhiIndex",
    "expand_vandermonde_power",
    "monomial_average",
    "oracle_average",
    "phi_ij",
    "orbit_sum",
    "build_H",
    "three_term_holds_for",
    "check_three_term_up",
    "check_three_term_down",
    "check_corollary",
    "check_H_vanishing",
    "oracle_moment_polynomial",
    "elementary_ratio_expansion",
    "check_W2",
]

MAX_TERMS = 10**6


class SymmetricExpansion:
    """Finite map from exponent vectors (length ``n``) to coefficients.

    Coefficients are Fractions, or Polys in ``x`` where an average is wanted
    as a polynomial. Exponents may be negative. Despite the name the stored
    polynomial need not be symmetric; the averaging is.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        for c, v in (terms or {}).items():
            if len(c) != n:
                raise ValueError(f"exponent vector {c} does not have length {n}")
            if v:
                self.terms[tuple(c)] = v

    @classmethod
    def constant(cls, n: int, value=1) -> SymmetricExpansion:
        return cls(n, {(0,) * n: as_rational(value) if not isinstance(value, Poly) else value})

    @classmethod
    def linear(cls, n: int, const, var: int, slope) -> SymmetricExpansion:
        """``const + slope * z_var``."""
        e = [0] * n
        e[var] = 1
        return cls(n, {(0,) * n: const, tuple(e): slope})

    @classmethod
    def monomial(cls, n: int, exps, coeff=1) -> SymmetricExpansion:
        return cls(n, {tuple(exps): coeff})

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymmetricExpansion):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"SymmetricExpansion(n={self.n}, terms={self.terms!r})"

    def copy(self) -> SymmetricExpansion:
        out = SymmetricExpansion(self.n)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other):
        if not isinstance(other, SymmetricExpansion):
            other = SymmetricExpansion.constant(self.n, other)
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for c, v in other.terms.items():
            s = out.get(c, 0) + v
            if s:
                out[c] = s
            else:
                out.pop(c, None)
        res = SymmetricExpansion(self.n)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = SymmetricExpansion(self.n)
        res.terms = {c: -v for c, v in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymmetricExpansion):
            res = SymmetricExpansion(self.n)
            res.terms = {c: v * other for c, v in self.terms.items() if v * other}
            return res
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        out = {}
        for c1, v1 in self.terms.items():
            for c2, v2 in other.terms.items():
                c = tuple(a + b for a, b in zip(c1, c2))
                out[c] = out.get(c, 0) + v1 * v2
                if len(out) > MAX_TERMS:
                    raise ExpansionTooLarge(len(out), MAX_TERMS)
        res = SymmetricExpansion(self.n)
        res.terms = {c: v for c, v in out.items() if v}
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SymmetricExpansion.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def permuted(self, perm) -> SymmetricExpansion:
        """Relabel variables: variable ``l`` becomes variable ``perm[l]``."""
        out = SymmetricExpansion(self.n)
        for c, v in self.terms.items():
            new = [0] * self.n
            for l, e in enumerate(c):
                new[perm[l]] = e
            key = tuple(new)
            s = out.terms.get(key, 0) + v
            if s:
                out.terms[key] = s
            else:
                out.terms.pop(key, None)
        return out

    def embedded(self, at: int) -> SymmetricExpansion:
        """Read as a polynomial in ``n+1`` variables that omits variable
        ``at``: ``f(z_hat_at)``."""
        out = SymmetricExpansion(self.n + 1)
        out.terms = {c[:at] + (0,) + c[at:]: v for c, v in self.terms.items()}
        return out

    def divided_by_difference(self, k: int, l: int) -> SymmetricExpansion:
        """Exact quotient by ``z_k - z_l``.

        Uses ``(z_k^e - z_l^e)/(z_k - z_l) = sum_t z_k^t z_l^(e-1-t)``, valid
        because the polynomial vanishes on ``z_k = z_l`` (checked).
        """
        if k == l:
            raise ValueError("k and l must differ")
        rest = SymmetricExpansion(self.n)
        quot = {}
        for c, v in self.terms.items():
            e = c[k]
            if e < 0:
                raise ValueError("division needs non-negative exponents in z_k")
            base = list(c)
            base[k] = 0
            # z_k^e = z_l^e (remainder) + (z_k - z_l) * quotient
            rem = list(base)
            rem[l] += e
            key = tuple(rem)
            rest.terms[key] = rest.terms.get(key, 0) + v
            for t in range(e):
                q = list(base)
                q[k] += t
                q[l] += e - 1 - t
                qk = tuple(q)
                quot[qk] = quot.get(qk, 0) + v
        if any(rest.terms.values()):
            raise ArithmeticError(f"polynomial is not divisible by z_{k} - z_{l}")
        out = SymmetricExpansion(self.n)
        out.terms = {c: v for c, v in quot.items() if v}
        return out

    def degree(self) -> int:
        return max((sum(c) for c in self.terms), default=-1)


@dataclass(frozen=True)
class OracleParams:
    n: int
    tau: int
    alpha1: int
    alpha2: Fraction
    alpha3: Fraction
    x1: Fraction

    x2 = Fraction(0)
    x3 = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "alpha2", as_rational(self.alpha2))
        object.__setattr__(self, "alpha3", as_rational(self.alpha3))
        object.__setattr__(self, "x1", as_rational(self.x1))
        if not 1 <= self.n <= 3:
            raise ValueError("oracle supports 1 <= n <= 3")
        if int(self.tau) != self.tau or not 1 <= self.tau <= 3:
            raise ValueError("oracle needs an integer tau in 1..3")
        if int(self.alpha1) != self.alpha1 or self.alpha1 < 1:
            raise ValueError("oracle needs a positive integer alpha1")
        object.__setattr__(self, "tau", int(self.tau))
        object.__setattr__(self, "alpha1", int(self.alpha1))
        if self.alpha2 <= 0 or self.alpha3 <= 0:
            raise ValueError("alpha2 and alpha3 must be positive")
        if 0 < self.x1 < 1 and self.alpha1 % 2 == 0:
            raise ValueError("x1 inside (0,1) needs odd alpha1 for a sign-definite weight")

    @classmethod
    def normalized(cls, n, tau, a, b) -> OracleParams:
        """The ``alpha1 = 1`` weight ``z^(a-1) (1-z)^(b-1)``."""
        return cls(n, tau, 1, a, b, Fraction(2))


@dataclass(frozen=True)
class PhiIndex:
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not (0 <= self.i <= self.n and 0 <= self.j <= self.n):
            raise ValueError(f"phi index ({self.i}, {self.j}) out of range for n={self.n}")


@lru_cache(maxsize=None)
def _vandermonde(n: int, tau: int) -> SymmetricExpansion:
    out = SymmetricExpansion.constant(n, 1)
    for j in range(n):
        for k in range(j + 1, n):
            diff = SymmetricExpansion.linear(n, 0, j, 1) - SymmetricExpansion.linear(n, 0, k, 1)
            out = out * diff ** (2 * tau)
    return out


def expand_vandermonde_power(n: int, tau: int) -> SymmetricExpansion:
    """``prod_{j<k} (z_j - z_k)^(2 tau)`` expanded into monomials."""
    if int(tau) != tau or tau < 1:
        raise ValueError("tau must be a positive integer")
    return _vandermonde(n, int(tau)).copy()


def _beta_ratio(e: int, alpha2: Fraction, alpha3: Fraction) -> Fraction:
    if alpha2 + e <= 0:
        raise DivergentIntegral(f"z^{e} moment diverges at alpha2={alpha2}")
    return poch(alpha2, 1, e) / poch(alpha2 + alpha3, 1, e)


def monomial_average(c, alpha2, alpha3) -> Fraction:
    """``int z^c w / int w`` for ``w = prod z_l^(alpha2-1) (1-z_l)^(alpha3-1)``."""
    alpha2, alpha3 = as_rational(alpha2), as_rational(alpha3)
    out = Fraction(1)
    for e in c:
        out *= _beta_ratio(e, alpha2, alpha3)
    return out


def _x1_factor(p: OracleParams) -> SymmetricExpansion:
    n = p.n
    out = SymmetricExpansion.constant(n, 1)
    for l in range(n):
        out = out * SymmetricExpansion.linear(n, p.x1, l, -1) ** (p.alpha1 - 1)
    return out


class _MomentTable:
    """Memoised ``<z^c>`` (over ``B(alpha2, alpha3)^n``) for one weight.

    The weight is symmetric, so the moment only depends on the multiset of
    exponents and is keyed by the sorted vector.
    """

    def __init__(self, n, tau, alpha2, alpha3):
        self.vdm = list(_vandermonde(n, tau).terms.items())
        self.alpha2, self.alpha3 = alpha2, alpha3
        self.ratios = {}
        self.moments = {}

    def ratio(self, e):
        r = self.ratios.get(e)
        if r is None:
            r = self.ratios[e] = _beta_ratio(e, self.alpha2, self.alpha3)
        return r

    def __call__(self, c):
        key = tuple(sorted(c))
        m = self.moments.get(key)
        if m is None:
            m = Fraction(0)
            for v, vc in self.vdm:
                term = vc
                for a, b in zip(key, v):
                    term *= self.ratio(a + b)
                m += term
            self.moments[key] = m
        return m


@lru_cache(maxsize=64)
def _moment_table(n, tau, alpha2, alpha3) -> _MomentTable:
    return _MomentTable(n, tau, alpha2, alpha3)


def _raw_average(f: SymmetricExpansion, p: OracleParams):
    """``int f * weight`` divided by ``B(alpha2, alpha3)^n`` (not by <1>)."""
    table = _moment_table(p.n, p.tau, p.alpha2, p.alpha3)
    acc = Fraction(0)
    for c, coeff in f.terms.items():
        inner = table(c)
        if inner:
            acc = acc + coeff * inner
    return acc


def oracle_average(phi: SymmetricExpansion, p: OracleParams):
    """Normalised average ``<phi> / <1>`` under the ``p`` weight; a Fraction,
    or a Poly when ``phi`` has Poly coefficients."""
    if phi.n != p.n:
        raise ValueError("variable count mismatch")
    w1 = _x1_factor(p)
    norm = _raw_average(w1, p)
    return _raw_average(phi * w1, p) / norm


def phi_ij(n: int, i: int, j: int, x1, x2=0, x3=1) -> SymmetricExpansion:
    """``prod_{l<j} (z_l - x1) * prod_{l<n-i} (x2 - z_l) * prod_{l>=n-i} (x3 - z_l)``
    with variables numbered from 0."""
    PhiIndex(i, j, n)
    x1, x2, x3 = as_rational(x1), as_rational(x2), as_rational(x3)
    out = SymmetricExpansion.constant(n, 1)
    for l in range(j):
        out = out * SymmetricExpansion.linear(n, -x1, l, 1)
    for l in range(n):
        out = out * SymmetricExpansion.linear(n, x2 if l < n - i else x3, l, -1)
    return out


def _avg_phi(p: OracleParams):
    memo = {}

    def avg(i, j):
        key = (i, j)
        if key not in memo:
            memo[key] = oracle_average(phi_ij(p.n, i, j, p.x1, p.x2, p.x3), p)
        return memo[key]

    return avg


def _three_term_sides(i: int, j: int, p: OracleParams, which: str):
    n, t = p.n, p.tau
    a1, a2, a3 = p.alpha1, p.alpha2, p.alpha3
    d21, d31 = p.x2 - p.x1, p.x3 - p.x1
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise ValueError(f"(i, j) = ({i}, {j}) outside 0..n-1")
    avg = _avg_phi(p)
    if which == "up":
        lhs = (a1 + (n - j - 1) * t) * d21 * avg(i + 1, j)
        rhs = (a3 + (n - i - 1) * t) * avg(i, j + 1) + (a1 + a2 + (n + i - j - 1) * t) * avg(
            i + 1, j + 1
        )
    else:
        lhs = (a1 + a2 + a3 + (2 * n - j - 2) * t) * avg(i, j + 1)
        rhs = (a1 + a2 + (n + i - j - 1) * t) * d31 * avg(i, j) - (a2 + i * t) * d21 * avg(
            i + 1, j
        )
    return lhs, rhs


def three_term_holds_for(kind: str, i: int, j: int, n: int) -> bool:
    """Index range on which each relation is an identity.

    Exact evaluation (confirmed by quadrature) shows the "up" relation
    failing for ``i + j < n - 1`` and the "down" relation failing for
    ``i + j > n - 1``; both hold on the diagonal ``i + j = n - 1``.
    """
    if kind == "up":
        return i + j >= n - 1
    if kind == "down":
        return i + j <= n - 1
    raise ValueError(f"unknown relation {kind!r}")


def check_three_term_up(i: int, j: int, p: OracleParams) -> bool:
    lhs, rhs = _three_term_sides(i, j, p, "up")
    return lhs == rhs


def check_three_term_down(i: int, j: int, p: OracleParams) -> bool:
    lhs, rhs = _three_term_sides(i, j, p, "down")
    return lhs == rhs


def corollary_sides(j: int, k: int, p: OracleParams) -> dict:
    """Both sides of the two summed identities for ``0 <= j <= k <= n``."""
    n, t = p.n, p.tau
    a1, a2, a3 = p.alpha1, p.alpha2, p.alpha3
    d21, d31 = p.x2 - p.x1, p.x3 - p.x1
    if not 0 <= j <= k <= n:
        raise ValueError(f"need 0 <= j <= k <= n, got j={j}, k={k}")
    avg = _avg_phi(p)

    up_lhs = poch(a1 + (k - j) * t, t, j) * d21**j * avg(k, n - k)
    up_rhs = sum(
        (
            binomial(j, i)
            * poch(a3 + (n - k) * t, t, j - i)
            * poch(a1 + a2 + (2 * k - j - 1) * t, t, i)
            * avg(i + k - j, n - k + j)
            for i in range(j + 1)
        ),
        Fraction(0),
    )
    down_lhs = poch(a1 + a2 + a3 + (n + j - 1) * t, t, n - k) * avg(j, n - j)
    down_rhs = sum(
        (
            (-1) ** (i - k)
            * binomial(n - k, n - i)
            * poch(a1 + a2 + (i + 2 * j - k) * t, t, n - i)
            * poch(a2 + j * t, t, i - k)
            * d31 ** (n - i)
            * d21 ** (i - k)
            * avg(i - k + j, k - j)
            for i in range(k, n + 1)
        ),
        Fraction(0),
    )
    return {"up": (up_lhs, up_rhs), "down": (down_lhs, down_rhs)}


def check_corollary(j: int, k: int, p: OracleParams) -> bool:
    sides = corollary_sides(j, k, p)
    return all(lhs == rhs for lhs, rhs in sides.values())


def orbit_sum(n: int, i: int, j: int, x1, x2=0, x3=1) -> SymmetricExpansion:
    """``sum over all permutations sigma of sigma . phi_ij`` in ``n`` variables."""
    if n == 0:
        return SymmetricExpansion.constant(0, 1)
    base = phi_ij(n, i, j, x1, x2, x3)
    out = SymmetricExpansion(n)
    for perm in itertools.permutations(range(n)):
        out = out + base.permuted(perm)
    return out


def build_H(i: int, j: int, p: OracleParams) -> SymmetricExpansion:
    """The symmetric polynomial ``H1 + H2`` built from the ``(n-1)``-variable
    orbit sum ``s_ij`` with one coordinate deleted at a time."""
    n, t = p.n, p.tau
    x1, x2, x3 = p.x1, p.x2, p.x3
    a1, a2, a3 = p.alpha1, p.alpha2, p.alpha3
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise ValueError(f"(i, j) = ({i}, {j}) outside 0..n-1")
    s = orbit_sum(n - 1, i, j, x1, x2, x3)
    hat = [s.embedded(k) for k in range(n)]

    def lin(c, k):
        return SymmetricExpansion.linear(n, c, k, -1)

    h1 = SymmetricExpansion(n)
    for k in range(n):
        bracket = (
            lin(x2, k) * lin(x3, k) * a1
            + lin(x1, k) * lin(x3, k) * a2
            + lin(x1, k) * lin(x2, k) * a3
        )
        h1 = h1 - bracket * hat[k]
    cubic = [lin(x1, k) * lin(x2, k) * lin(x3, k) * hat[k] for k in range(n)]
    h2 = SymmetricExpansion(n)
    for k in range(n):
        for l in range(k + 1, n):
            h2 = h2 + (cubic[k] - cubic[l]).divided_by_difference(k, l) * (2 * t)
    return h1 + h2


def check_H_vanishing(i: int, j: int, p: OracleParams) -> bool:
    return oracle_average(build_H(i, j, p), p) == 0


def oracle_moment_polynomial(n: int, a, b, tau: int, mu: int) -> Poly:
    """``< prod_l (x - z_l)^mu >`` by full expansion (small ``n``, ``mu``)."""
    if n > 3 or tau > 2 or mu > 4:
        raise ValueError("oracle moment polynomial is limited to n <= 3, tau <= 2, mu <= 4")
    p = OracleParams.normalized(n, tau, a, b)
    x = Poly.x()
    f = SymmetricExpansion.constant(n, Poly.const(1))
    for l in range(n):
        f = f * SymmetricExpansion.linear(n, x, l, Poly.const(-1)) ** mu
    return Poly.lift(oracle_average(f, p))


def elementary_ratio_expansion(n: int, k: int) -> SymmetricExpansion:
    """``e_k((1-z_1)/z_1, ..., (1-z_n)/z_n)`` with negative exponents."""
    out = SymmetricExpansion(n)
    for subset in itertools.combinations(range(n), k):
        term = SymmetricExpansion.constant(n, 1)
        for l in subset:
            e_neg = [0] * n
            e_neg[l] = -1
            # (1 - z)/z = z^-1 - 1
            term = term * SymmetricExpansion(n, {tuple(e_neg): Fraction(1), (0,) * n: Fraction(-1)})
        out = out + term
    return out


def w2_closed_form(k: int, a, b, tau, n: int) -> Fraction:
    a, b, tau = as_rational(a), as_rational(b), as_rational(tau)
    return binomial(n, k) * (-1) ** k * poch(-b - (n - 1) * tau, tau, k) / poch(a - 1, tau, k)


def check_W2(k: int, a, b, tau: int, n: int) -> bool:
    """Elementary-symmetric average against its closed form, plus the link
    back to the basis averages ``<phi_k>`` at ``a - 1`` when that is
    convergent."""
    a, b = as_rational(a), as_rational(b)
    p = OracleParams.normalized(n, tau, a, b)
    ek = oracle_average(elementary_ratio_expansion(n, k), p)
    ok = ek == w2_closed_form(k, a, b, tau, n)
    if a > 1:
        q = OracleParams.normalized(n, tau, a - 1, b)
        phik = oracle_average(phi_ij(n, k, 0, 0), q)
        shift = selberg_ratio_alpha(SelbergParams(a - 1, b, tau, n), 1)
        linked = (-1) ** (n - k) / binomial(n, k) * shift * ek
        ok = ok and phik == linked and phik == initial_vector(n, a - 1, b, tau)[k]
    return ok

