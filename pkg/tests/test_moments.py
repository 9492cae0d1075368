from fractions import Fraction as F

import pytest

from selberg_moments.errors import ParameterSingular
from selberg_moments.exact_arith import Poly
from selberg_moments.moments import (
    MomentRequest,
    chain,
    closed_form_mu1,
    gauss_2f1_terminating,
    initial_vector,
    moment_polynomial,
)

x = Poly.x()


def test_golden(golden_poly):
    res = moment_polynomial(MomentRequest(5, 5, 2, 2, 2))
    assert res.poly == golden_poly
    assert all(res.checks.values())
    assert res.endpoint0 == F(23, 5437500)


@pytest.mark.parametrize("tau", [1, F(1, 2), 7])
def test_one_variable(tau):
    assert moment_polynomial(MomentRequest(1, tau, 2, 2, 2)).poly == x * x - x + F(3, 10)
    assert moment_polynomial(MomentRequest(1, tau, 1, 1, 1)).poly == x - F(1, 2)


def test_one_step_chain():
    # internal alpha = beta = 1, n = 1: <(x - z)>_(a=2,b=1) up to the initial normalisation
    v0 = initial_vector(1, 1, 1, 1)
    assert v0 == [F(-1, 2), F(1, 2)]
    first = chain(1, 1, 1, 1, 1)[0]
    assert first == x / 2 - F(1, 3)


def test_zero_steps_is_initial_vector():
    v = initial_vector(3, F(3, 2), 2, F(1, 2))
    assert [p.coeff(0) for p in chain(3, F(3, 2), 2, F(1, 2), 0)] == v


def test_a_equal_one():
    # mu = 1 falls back to the closed form; higher mu is rejected
    assert moment_polynomial(MomentRequest(3, 1, 1, 2, 1)).poly == closed_form_mu1(3, 1, 2, 1)
    with pytest.raises(ParameterSingular):
        moment_polynomial(MomentRequest(2, 1, 1, 2, 2))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("mu", [1, 2, 3])
def test_reflection_symmetry(n, mu):
    p = moment_polynomial(MomentRequest(n, F(3, 2), F(5, 2), F(5, 2), mu)).poly
    assert p.reflect() == (-1) ** (n * mu) * p


@pytest.mark.parametrize("n,tau,a,b,mu", [(3, 1, 2, 3, 3), (4, F(1, 2), F(7, 2), F(3, 2), 2), (6, 2, 3, 5, 1)])
def test_endpoints_and_degree(n, tau, a, b, mu):
    res = moment_polynomial(MomentRequest(n, tau, a, b, mu))
    assert res.poly.degree == n * mu
    assert res.checks == {"endpoint0": True, "endpoint1": True, "monic": True}


def test_swap_a_b_reflects():
    p = moment_polynomial(MomentRequest(3, 2, 3, 5, 2)).poly
    q = moment_polynomial(MomentRequest(3, 2, 5, 3, 2)).poly
    assert p.reflect() == q


def test_gauss_examples():
    b, c = F(3, 4), F(5, 2)
    assert gauss_2f1_terminating(-1, b, c) == 1 - b / c * x
    assert gauss_2f1_terminating(0, b, c) == 1
    assert gauss_2f1_terminating(-2, 1, 1) == (1 - x) ** 2
    with pytest.raises(ValueError):
        gauss_2f1_terminating(1, 1, 1)


def test_closed_form_small():
    assert closed_form_mu1(1, 1, 1, 1) == x - F(1, 2)
    assert closed_form_mu1(2, 1, 1, 1) == x * x - x + F(1, 6)


@pytest.mark.parametrize(
    "args",
    [(0, 1, 2, 2, 1), (2, 0, 2, 2, 1), (2, 1, -1, 2, 1), (2, 1, 2, 2, 0), (2, 1, 2, 2, 1.5)],
)
def test_bad_requests(args):
    with pytest.raises((ValueError, TypeError)):
        MomentRequest(*args)
