"""Oracle examples are checked against hand integrals and, where noted,
against numerical quadrature."""

from fractions import Fraction as F

import pytest

from selberg_moments.errors import DivergentIntegral, ExpansionTooLarge
from selberg_moments.exact_arith import Poly
from selberg_moments.oracle import (
    OracleParams,
    SymmetricExpansion,
    build_H,
    check_corollary,
    check_H_vanishing,
    check_three_term_down,
    check_three_term_up,
    check_W2,
    corollary_sides,
    expand_vandermonde_power,
    monomial_average,
    oracle_average,
    oracle_moment_polynomial,
    phi_ij,
    three_term_holds_for,
    w2_closed_form,
)

x = Poly.x()


def test_vandermonde():
    assert expand_vandermonde_power(2, 1).terms == {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    assert expand_vandermonde_power(1, 3) == SymmetricExpansion.constant(1, 1)
    assert expand_vandermonde_power(2, 2).terms[(2, 2)] == 6


def test_monomial_averages():
    assert monomial_average((1,), 1, 1) == F(1, 2)
    assert monomial_average((2,), 2, 2) == F(3, 10)
    assert monomial_average((-1,), 2, 1) == 2
    with pytest.raises(DivergentIntegral):
        monomial_average((-1,), 1, 1)


def test_phi_averages():
    p = OracleParams(2, 1, 1, 1, 1, F(2))
    assert oracle_average(SymmetricExpansion.constant(2, 1), p) == 1
    assert oracle_average(SymmetricExpansion.monomial(2, (1, 1)), p) == F(1, 6)
    # weight (z + 1) z (1 - z): <1> = 1/4 and int (1 - z) w dz = B(2,3) + B(3,3) = 7/60
    q = OracleParams(1, 1, 2, 2, 2, F(-1))
    assert oracle_average(phi_ij(1, 1, 0, F(-1)), q) == F(7, 60) / F(1, 4)


def test_moment_polynomials():
    assert oracle_moment_polynomial(1, 2, 2, 1, 2) == x * x - x + F(3, 10)
    # <z1 z2> = S2(2,1,1)/S2(1,1,1) = 1/6 under (z1 - z2)^2
    assert oracle_moment_polynomial(2, 1, 1, 1, 1) == x * x - x + F(1, 6)
    with pytest.raises(ValueError):
        oracle_moment_polynomial(4, 2, 2, 1, 1)


def test_three_term_regime():
    assert three_term_holds_for("up", 1, 0, 2) and three_term_holds_for("down", 1, 0, 2)
    assert not three_term_holds_for("up", 0, 0, 2)
    assert not three_term_holds_for("down", 1, 1, 2)


def test_three_term_examples():
    p = OracleParams(2, 1, 2, 2, 2, F(-1))
    for i in range(2):
        for j in range(2):
            if three_term_holds_for("up", i, j, 2):
                assert check_three_term_up(i, j, p)
            if three_term_holds_for("down", i, j, 2):
                assert check_three_term_down(i, j, p)
    q = OracleParams(2, 2, 3, F(5, 2), F(7, 2), F(2))
    assert check_three_term_up(1, 1, q) and check_three_term_down(0, 0, q)


def test_three_term_outside_regime_fails():
    # recorded behaviour: these index pairs are not identities
    p = OracleParams(2, 1, 2, 2, 2, F(-1))
    assert not check_three_term_up(0, 0, p)
    assert not check_three_term_down(1, 1, p)


def test_three_term_outside_regime_quadrature():
    scipy_integrate = pytest.importorskip("scipy.integrate")
    p = OracleParams(2, 1, 2, 2, 2, F(-1))

    def avg(phi):
        terms = phi.terms

        def f(z2, z1):
            val = sum(float(c) * z1 ** e[0] * z2 ** e[1] for e, c in terms.items())
            w = (z1 + 1) * (z2 + 1) * z1 * (1 - z1) * z2 * (1 - z2) * (z1 - z2) ** 2
            return val * w

        return scipy_integrate.dblquad(f, 0, 1, 0, 1, epsabs=1e-13, epsrel=1e-13)[0]

    norm = avg(SymmetricExpansion.constant(2, 1))
    for i in range(3):
        for j in range(3):
            phi = phi_ij(2, i, j, F(-1))
            assert abs(avg(phi) / norm - float(oracle_average(phi, p))) < 1e-9


def test_corollary_examples():
    p = OracleParams(2, 1, 2, 2, 2, F(-1))
    assert all(check_corollary(j, k, p) for j in range(3) for k in range(j, 3))
    assert check_corollary(1, 2, OracleParams(3, 1, 2, 3, 2, F(-1)))
    sides = corollary_sides(0, 1, p)
    assert isinstance(sides, dict) and sides


def test_H_vanishing():
    assert check_H_vanishing(0, 0, OracleParams(2, 1, 2, 2, 2, F(-1)))
    p3 = OracleParams(3, 1, 2, 2, 2, F(-1))
    assert check_H_vanishing(1, 1, p3)
    assert len(build_H(1, 1, p3)) > 0


def test_W2_examples():
    assert w2_closed_form(0, 3, 2, 1, 2) == 1
    assert w2_closed_form(1, 3, 2, 1, 1) == 1
    assert check_W2(1, 3, 2, 1, 1)
    assert check_W2(1, 3, 2, 1, 2)
    assert check_W2(0, 3, 2, 1, 2)


def test_expansion_guard(monkeypatch):
    import selberg_moments.oracle as oracle

    monkeypatch.setattr(oracle, "MAX_TERMS", 10)
    e = SymmetricExpansion.linear(3, 1, 0, 1) + SymmetricExpansion.linear(3, 1, 1, 1)
    with pytest.raises(ExpansionTooLarge):
        (e + SymmetricExpansion.linear(3, 0, 2, 1)) ** 4


def test_param_validation():
    with pytest.raises(ValueError):
        OracleParams(4, 1, 1, 1, 1, 2)
    with pytest.raises(ValueError):
        OracleParams(2, F(1, 2), 1, 1, 1, 2)
    with pytest.raises(ValueError):
        OracleParams(2, 1, 2, 1, 1, F(1, 2))
