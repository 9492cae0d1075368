import math
from fractions import Fraction as F

import pytest

from selberg_moments.selberg import (
    SelbergParams,
    selberg_ratio_alpha,
    selberg_ratio_beta,
    selberg_value_numeric,
)


@pytest.mark.parametrize("a,b,t", [(1, 1, 1), (F(5, 2), 3, F(1, 2)), (7, F(1, 3), 4)])
def test_one_variable_ratios(a, b, t):
    p = SelbergParams(a, b, t, 1)
    assert selberg_ratio_alpha(p, 1) == F(a) / (F(a) + b)
    assert selberg_ratio_beta(p, 1) == F(b) / (F(a) + b)


def test_two_variable_ratio():
    p = SelbergParams(1, 1, 1, 2)
    assert selberg_ratio_alpha(p, 1) == F(1, 6)
    assert selberg_ratio_beta(p, 1) == F(1, 6)


def test_zero_shift_is_one():
    p = SelbergParams(F(3, 2), 2, F(1, 2), 4)
    assert selberg_ratio_alpha(p, 0) == 1
    assert selberg_ratio_beta(p, 0) == 1


def test_numeric_values():
    assert abs(selberg_value_numeric(SelbergParams(1, 1, 1, 2)) - 1 / 6) < 1e-10
    assert selberg_value_numeric(SelbergParams(1, 1, F(3, 7), 1)) == 1.0


def test_telescoping_in_both_parameters():
    base = SelbergParams(1, 1, 1, 2)
    r = selberg_ratio_alpha(base, 1) * selberg_ratio_beta(base.shift_alpha(1), 1)
    direct = selberg_value_numeric(SelbergParams(2, 2, 1, 2))
    assert math.isclose(float(r) * selberg_value_numeric(base), direct, rel_tol=1e-12)
    assert math.isclose(direct, float(r) / 6, rel_tol=1e-12)


@pytest.mark.parametrize("n", [1, 3, 5])
@pytest.mark.parametrize("m", [1, 2, 4])
def test_exact_ratio_matches_gamma_form(n, m):
    p = SelbergParams(F(3, 2), F(5, 2), F(2, 3), n)
    exact = selberg_ratio_alpha(p, m)
    numeric = selberg_value_numeric(p.shift_alpha(m)) / selberg_value_numeric(p)
    assert math.isclose(float(exact), numeric, rel_tol=1e-8)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        SelbergParams(0, 1, 1, 2)
    with pytest.raises(ValueError):
        SelbergParams(1, 1, -1, 2)
    with pytest.raises(ValueError):
        selberg_ratio_alpha(SelbergParams(1, 1, 1, 2), -1)
