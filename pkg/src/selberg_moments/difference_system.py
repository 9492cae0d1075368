"""Closed-form matrices of the alpha1-shift difference system.

With basis polynomials

    phi_i(z) = prod_{l <= n-i} (x2 - z_l) * prod_{l > n-i} (x3 - z_l),

the shift ``T`` (multiply the integrand by ``prod_l (z_l - x1)``) acts on the
row vector ``v = (<phi_0>, ..., <phi_n>)`` as ``T v = v A`` with ``A = L D U``.
All matrices are indexed from 0 to n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParameterSingular
from .exact_arith import Poly, as_rational, binomial, poch

__all__ = [
    "GenericParams",
    "Matrix",
    "MatrixR",
    "MatrixP",
    "build_L",
    "build_D",
    "build_U",
    "build_A",
    "a_scalars",
    "build_U_inverse",
    "build_primed",
    "build_tilde",
    "check_tilde_consistency",
    "check_gauss_forms",
    "check_u_inverse",
    "check_ul_interchange",
    "tilde_column_sums",
]


@dataclass(frozen=True)
class Matrix:
    """Square matrix with exact entries (Fractions or Polys)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, order: int) -> Matrix:
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(order))
                for i in range(order)
            )
        )

    @classmethod
    def from_function(cls, order: int, f) -> Matrix:
        return cls(tuple(tuple(f(i, j) for j in range(order)) for i in range(order)))

    def __matmul__(self, other: Matrix) -> Matrix:
        m = self.order
        if other.order != m:
            raise ValueError("order mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append(
                tuple(
                    sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                    for c in cols
                )
            )
        return Matrix(tuple(out))

    def row_times(self, vec: Sequence) -> list:
        """Row vector times matrix: ``(vec @ self)_j = sum_i vec_i M_ij``."""
        m = self.order
        if len(vec) != m:
            raise ValueError("length mismatch")
        out = []
        for j in range(m):
            acc = Fraction(0)
            for i in range(m):
                a, b = vec[i], self.rows[i][j]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def flip(self) -> Matrix:
        """``J M J`` with ``J`` the anti-diagonal permutation."""
        m = self.order
        return Matrix.from_function(m, lambda i, j: self.rows[m - 1 - i][m - 1 - j])

    def is_lower(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.order) for j in range(i + 1, self.order))

    def is_upper(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.order) for j in range(i))


MatrixR = Matrix
MatrixP = Matrix


def _coord(value):
    if isinstance(value, Poly):
        if value.degree > 1:
            raise ValueError("coordinates must have degree <= 1 in x")
        return value.coeff(0) if value.is_constant() else value
    return as_rational(value)


@dataclass(frozen=True)
class GenericParams:
    """Exponents ``alpha1..3``, ``tau`` and points ``x1..3`` of the weight

        prod_l |x1 - z_l|^(alpha1-1) |x2 - z_l|^(alpha2-1) |x3 - z_l|^(alpha3-1)
        * prod_{j<k} |z_j - z_k|^(2 tau).

    Each ``x`` is a Fraction or a degree-one :class:`Poly` in the
    indeterminate; at most one of them may be non-constant.
    """

    alpha1: Fraction
    alpha2: Fraction
    alpha3: Fraction
    tau: Fraction
    x1: object = Fraction(0)
    x2: object = Fraction(0)
    x3: object = Fraction(1)

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3", "tau"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        for name in ("x1", "x2", "x3"):
            object.__setattr__(self, name, _coord(getattr(self, name)))
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if sum(isinstance(v, Poly) for v in (self.x1, self.x2, self.x3)) > 1:
            raise ValueError("at most one of x1, x2, x3 may be the indeterminate")
        if not (self.x3 - self.x1):
            raise ValueError("x3 - x1 must not vanish")

    @property
    def symbolic(self) -> bool:
        return any(isinstance(v, Poly) for v in (self.x1, self.x2, self.x3))

    def interchanged(self) -> GenericParams:
        """Swap ``(x2, alpha2) <-> (x3, alpha3)``."""
        return GenericParams(
            self.alpha1, self.alpha3, self.alpha2, self.tau, self.x1, self.x3, self.x2
        )


def _require_constant(p: GenericParams):
    if p.symbolic:
        raise ValueError("this matrix is not polynomial in x; use constant coordinates")


def _den(value: Fraction, label: str, **where) -> Fraction:
    if value == 0:
        detail = ", ".join(f"{k}={v}" for k, v in where.items())
        raise ParameterSingular(label, detail)
    return value


def _l_hat(p: GenericParams, n, i, j) -> Fraction:
    # l_ij without the ((x2-x1)/(x3-x1))^(i-j) factor
    a1, a2, t = p.alpha1, p.alpha2, p.tau
    den = _den(poch(a1 + a2 + 2 * j * t, t, i - j), "(alpha1+alpha2+2j*tau;tau)_{i-j}", i=i, j=j)
    return (-1) ** (i - j) * binomial(n - j, n - i) * poch(a2 + j * t, t, i - j) / den


def _d_hat(p: GenericParams, n, j) -> Fraction:
    # d_j without the (x2-x1)^j (x3-x1)^(n-j) factor
    a1, a2, a3, t = p.alpha1, p.alpha2, p.alpha3, p.tau
    den1 = _den(poch(a1 + a2 + (j - 1) * t, t, j), "(alpha1+alpha2+(j-1)tau;tau)_j", j=j)
    den2 = _den(
        poch(a1 + a2 + a3 + (n + j - 1) * t, t, n - j),
        "(alpha1+alpha2+alpha3+(n+j-1)tau;tau)_{n-j}",
        j=j,
    )
    return poch(a1, t, j) * poch(a1 + a2 + 2 * j * t, t, n - j) / (den1 * den2)


def _u(p: GenericParams, n, i, j) -> Fraction:
    a1, a2, a3, t = p.alpha1, p.alpha2, p.alpha3, p.tau
    den = _den(poch(a1 + a2 + 2 * i * t, t, j - i), "(alpha1+alpha2+2i*tau;tau)_{j-i}", i=i, j=j)
    return (-1) ** (j - i) * binomial(j, i) * poch(a3 + (n - j) * t, t, j - i) / den


def build_L(p: GenericParams, n: int) -> Matrix:
    _require_constant(p)
    ratio = Fraction(p.x2 - p.x1) / Fraction(p.x3 - p.x1)

    def entry(i, j):
        if j > i:
            return Fraction(0)
        return _l_hat(p, n, i, j) * ratio ** (i - j)

    return Matrix.from_function(n + 1, entry)


def build_D(p: GenericParams, n: int) -> Matrix:
    _require_constant(p)
    dx2, dx3 = p.x2 - p.x1, p.x3 - p.x1

    def entry(i, j):
        if i != j:
            return Fraction(0)
        return _d_hat(p, n, j) * dx2**j * dx3 ** (n - j)

    return Matrix.from_function(n + 1, entry)


def build_U(p: GenericParams, n: int) -> Matrix:
    _require_constant(p)
    return Matrix.from_function(
        n + 1, lambda i, j: _u(p, n, i, j) if j >= i else Fraction(0)
    )


def a_scalars(p: GenericParams, n: int) -> Matrix:
    """Scalar part ``s`` of ``A_ij = (x2-x1)^i (x3-x1)^(n-i) s_ij``.

    In ``l_ik d_k`` the ratio power ``((x2-x1)/(x3-x1))^(i-k)`` combines with
    ``(x2-x1)^k (x3-x1)^(n-k)`` into a factor depending on ``i`` alone, so
    ``s_ij = sum_{k <= min(i,j)} l^_ik d^_k u_kj``.
    """
    m = n + 1
    lh = [[_l_hat(p, n, i, k) if k <= i else None for k in range(m)] for i in range(m)]
    dh = [_d_hat(p, n, k) for k in range(m)]
    uu = [[_u(p, n, k, j) if j >= k else None for j in range(m)] for k in range(m)]

    def entry(i, j):
        return sum(
            (lh[i][k] * dh[k] * uu[k][j] for k in range(min(i, j) + 1)), Fraction(0)
        )

    return Matrix.from_function(m, entry)


def row_monomials(p: GenericParams, n: int) -> list:
    """``[(x2-x1)^i (x3-x1)^(n-i) for i in 0..n]`` as Polys."""
    dx2 = Poly.lift(p.x2) - p.x1
    dx3 = Poly.lift(p.x3) - p.x1
    return [dx2**i * dx3 ** (n - i) for i in range(n + 1)]


def build_A(p: GenericParams, n: int) -> Matrix:
    """The shift matrix ``A`` with Poly entries (valid for symbolic x)."""
    s = a_scalars(p, n)
    mono = row_monomials(p, n)
    return Matrix.from_function(n + 1, lambda i, j: mono[i] * s[i, j])


def build_U_inverse(p: GenericParams, n: int) -> Matrix:
    a1, a2, a3, t = p.alpha1, p.alpha2, p.alpha3, p.tau

    def entry(i, j):
        if j < i:
            return Fraction(0)
        den = _den(
            poch(a1 + a2 + (j + i - 1) * t, t, j - i),
            "(alpha1+alpha2+(j+i-1)tau;tau)_{j-i}",
            i=i,
            j=j,
        )
        return binomial(j, i) * poch(a3 + (n - j) * t, t, j - i) / den

    return Matrix.from_function(n + 1, entry)


def build_primed(p: GenericParams, n: int) -> tuple:
    """UL-order factors ``(U', D', L')`` with ``U' D' L' = L D U``."""
    _require_constant(p)
    a1, a2, a3, t = p.alpha1, p.alpha2, p.alpha3, p.tau
    dx2, dx3 = Fraction(p.x2 - p.x1), Fraction(p.x3 - p.x1)
    if dx2 == 0:
        raise ParameterSingular("x2-x1")
    ratio = dx3 / dx2

    def u_p(i, j):
        if j < i:
            return Fraction(0)
        den = _den(
            poch(a1 + a3 + 2 * (n - j) * t, t, j - i),
            "(alpha1+alpha3+2(n-j)tau;tau)_{j-i}",
            i=i,
            j=j,
        )
        return (
            (-1) ** (j - i)
            * binomial(j, i)
            * poch(a3 + (n - j) * t, t, j - i)
            / den
            * ratio ** (j - i)
        )

    def d_p(i, j):
        if i != j:
            return Fraction(0)
        den1 = _den(
            poch(a1 + a3 + (n - j - 1) * t, t, n - j),
            "(alpha1+alpha3+(n-j-1)tau;tau)_{n-j}",
            j=j,
        )
        den2 = _den(
            poch(a1 + a2 + a3 + (2 * n - j - 1) * t, t, j),
            "(alpha1+alpha2+alpha3+(2n-j-1)tau;tau)_j",
            j=j,
        )
        num = poch(a1, t, n - j) * poch(a1 + a3 + 2 * (n - j) * t, t, j)
        return num * dx2**j * dx3 ** (n - j) / (den1 * den2)

    def l_p(i, j):
        if j > i:
            return Fraction(0)
        den = _den(
            poch(a1 + a3 + 2 * (n - i) * t, t, i - j),
            "(alpha1+alpha3+2(n-i)tau;tau)_{i-j}",
            i=i,
            j=j,
        )
        return (-1) ** (i - j) * binomial(n - j, n - i) * poch(a2 + j * t, t, i - j) / den

    m = n + 1
    return (
        Matrix.from_function(m, u_p),
        Matrix.from_function(m, d_p),
        Matrix.from_function(m, l_p),
    )


def build_tilde(p: GenericParams, n: int) -> tuple:
    """Denominator-free form ``(U~, L~)`` with ``T v U~ = v L~``."""
    _require_constant(p)
    a1, a2, a3, t = p.alpha1, p.alpha2, p.alpha3, p.tau
    dx2, dx3 = Fraction(p.x2 - p.x1), Fraction(p.x3 - p.x1)

    def ut(i, j):
        if j < i:
            return Fraction(0)
        return (
            binomial(j, i)
            * poch(a1 + a2 + a3 + (n + j - 1) * t, t, n - j)
            * poch(a3 + (n - j) * t, t, j - i)
            * poch(a1 + a2 + (j - 1) * t, t, i)
        )

    def lt(i, j):
        if j > i:
            return Fraction(0)
        return (
            (-1) ** (i - j)
            * binomial(n - j, n - i)
            * poch(a1, t, j)
            * poch(a2 + j * t, t, i - j)
            * poch(a1 + a2 + (i + j) * t, t, n - i)
            * dx3 ** (n - i)
            * dx2**i
        )

    m = n + 1
    return Matrix.from_function(m, ut), Matrix.from_function(m, lt)


def _constant(mat: Matrix) -> Matrix:
    return Matrix.from_function(
        mat.order, lambda i, j: Poly.lift(mat[i, j]).coeff(0)
    )


def check_tilde_consistency(p: GenericParams, n: int) -> bool:
    """Whether ``A @ U~ == L~`` exactly (row-vector convention)."""
    a = _constant(build_A(p, n))
    ut, lt = build_tilde(p, n)
    return a @ ut == lt


def check_gauss_forms(p: GenericParams, n: int) -> bool:
    """Whether ``L D U == U' D' L'`` and both equal the closed-form ``A``."""
    ldu = build_L(p, n) @ build_D(p, n) @ build_U(p, n)
    up, dp, lp = build_primed(p, n)
    return ldu == up @ dp @ lp and ldu == _constant(build_A(p, n))


def check_u_inverse(p: GenericParams, n: int) -> bool:
    eye = Matrix.identity(n + 1)
    u, ui = build_U(p, n), build_U_inverse(p, n)
    return u @ ui == eye and ui @ u == eye


def check_ul_interchange(p: GenericParams, n: int) -> bool:
    """``U' = J Lbar J``, ``D' = J Dbar J``, ``L' = J Ubar J`` where bars
    denote the ``(x2, alpha2) <-> (x3, alpha3)`` interchange."""
    q = p.interchanged()
    up, dp, lp = build_primed(p, n)
    return (
        up == build_L(q, n).flip()
        and dp == build_D(q, n).flip()
        and lp == build_U(q, n).flip()
    )


def tilde_column_sums(p: GenericParams, n: int) -> tuple:
    """Column sums ``(sum_i U~_ij, sum_i L~_ij)`` for ``j = 0..n``."""
    ut, lt = build_tilde(p, n)
    m = n + 1
    us = [sum((ut[i, j] for i in range(m)), Fraction(0)) for j in range(m)]
    ls = [sum((lt[i, j] for i in range(m)), Fraction(0)) for j in range(m)]
    return us, ls
