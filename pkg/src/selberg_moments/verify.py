"""Verification suites: exact pass/fail checks over documented parameter grids.

Each suite is a generator of :class:`Check` objects. A check is a thunk
returning ``bool`` plus a one-line Python reproducer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .difference_system import (
    GenericParams,
    check_gauss_forms,
    check_tilde_consistency,
    check_u_inverse,
    check_ul_interchange,
    tilde_column_sums,
)
from .errors import ParameterSingular
from .exact_arith import poch
from .moments import MomentRequest, closed_form_mu1, moment_polynomial
from .oracle import (
    OracleParams,
    check_corollary,
    check_H_vanishing,
    check_three_term_down,
    check_three_term_up,
    check_W2,
    oracle_moment_polynomial,
    three_term_holds_for,
)
from .selberg import SelbergParams, selberg_ratio_alpha

SUITES = ("matrices", "three-term", "corollary", "appendix-a", "oracle", "mu1", "w2")

ORACLE_TAUS = (1, 2)
ORACLE_ALPHA1 = (1, 2, 3)
ORACLE_ALPHA23 = ((Fraction(2), Fraction(2)), (Fraction(5, 2), Fraction(7, 2)), (Fraction(2), Fraction(3)))
ORACLE_X1 = (Fraction(-1), Fraction(2))

MATRIX_TUPLES_PER_N = 20


@dataclass(frozen=True)
class Check:
    suite: str
    label: str
    reproducer: str
    run: Callable[[], bool]


def _q(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"Fraction({v.numerator}, {v.denominator})"


def _gp_repr(p: GenericParams) -> str:
    return "GenericParams({})".format(
        ", ".join(_q(v) for v in (p.alpha1, p.alpha2, p.alpha3, p.tau, p.x1, p.x2, p.x3))
    )


def _op_repr(p: OracleParams) -> str:
    return (
        f"OracleParams(n={p.n}, tau={p.tau}, alpha1={p.alpha1}, alpha2={_q(p.alpha2)}, "
        f"alpha3={_q(p.alpha3)}, x1={_q(p.x1)})"
    )


def random_generic_params(rng: random.Random) -> GenericParams:
    """Random positive exponents and three distinct rational points."""

    def rq(lo=1, hi=40):
        return Fraction(rng.randint(lo, hi), rng.randint(1, 9))

    while True:
        xs = [Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(3)]
        if len(set(xs)) == 3:
            return GenericParams(rq(), rq(), rq(), rq(), *xs)


def degeneration_holds(p: GenericParams, n: int) -> bool:
    """With ``x2 = x3`` every basis polynomial coincides, and the column sums
    of the tilde system collapse it to the one-step Selberg recurrence."""
    q = GenericParams(p.alpha1, p.alpha2, p.alpha3, p.tau, p.x1, p.x3, p.x3)
    us, ls = tilde_column_sums(q, n)
    u00 = poch(p.alpha1 + p.alpha2 + p.alpha3 + (n - 1) * p.tau, p.tau, n)
    l_expected = poch(p.alpha1, p.tau, n) * (p.x3 - p.x1) ** n
    if any(u != u00 for u in us) or any(v != l_expected for v in ls):
        return False
    # x1 = 0, x2 = x3 = 1, merged exponent alpha2 + alpha3
    sp = SelbergParams(p.alpha1, p.alpha2 + p.alpha3, p.tau, n)
    return poch(p.alpha1, p.tau, n) / u00 == selberg_ratio_alpha(sp, 1)


def _matrices(max_n: int, seed: int) -> Iterator[Check]:
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        made = 0
        while made < MATRIX_TUPLES_PER_N:
            p = random_generic_params(rng)
            try:
                check_gauss_forms(p, n)
            except ParameterSingular:
                continue
            made += 1
            r = _gp_repr(p)
            for name, fn in (
                ("gauss_forms", check_gauss_forms),
                ("u_inverse", check_u_inverse),
                ("tilde", check_tilde_consistency),
                ("ul_interchange", check_ul_interchange),
                ("degeneration", degeneration_holds),
            ):
                yield Check(
                    "matrices",
                    f"{name} n={n} #{made}",
                    f"{fn.__name__}({r}, {n})",
                    lambda fn=fn, p=p, n=n: fn(p, n),
                )


def oracle_grid(max_n: int) -> Iterator[OracleParams]:
    for n in range(1, min(max_n, 3) + 1):
        for tau in ORACLE_TAUS:
            for a1 in ORACLE_ALPHA1:
                for a2, a3 in ORACLE_ALPHA23:
                    for x1 in ORACLE_X1:
                        yield OracleParams(n, tau, a1, a2, a3, x1)


def _three_term(max_n: int, seed: int) -> Iterator[Check]:
    for p in oracle_grid(max_n):
        for i in range(p.n):
            for j in range(p.n):
                for kind, fn in (("up", check_three_term_up), ("down", check_three_term_down)):
                    if not three_term_holds_for(kind, i, j, p.n):
                        continue
                    yield Check(
                        "three-term",
                        f"{kind} i={i} j={j} {_op_repr(p)}",
                        f"{fn.__name__}({i}, {j}, {_op_repr(p)})",
                        lambda fn=fn, i=i, j=j, p=p: fn(i, j, p),
                    )


def _corollary(max_n: int, seed: int) -> Iterator[Check]:
    for p in oracle_grid(max_n):
        for j in range(p.n + 1):
            for k in range(j, p.n + 1):
                yield Check(
                    "corollary",
                    f"j={j} k={k} {_op_repr(p)}",
                    f"check_corollary({j}, {k}, {_op_repr(p)})",
                    lambda j=j, k=k, p=p: check_corollary(j, k, p),
                )


def _h_vanishing(max_n: int, seed: int) -> Iterator[Check]:
    for p in oracle_grid(max_n):
        for i in range(p.n):
            for j in range(p.n):
                yield Check(
                    "appendix-a",
                    f"i={i} j={j} {_op_repr(p)}",
                    f"check_H_vanishing({i}, {j}, {_op_repr(p)})",
                    lambda i=i, j=j, p=p: check_H_vanishing(i, j, p),
                )


ORACLE_AB = ((Fraction(2), Fraction(2)), (Fraction(3), Fraction(2)))


def _oracle(max_n: int, seed: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 3) + 1):
        for tau in (1, 2):
            for mu in (1, 2, 3):
                for a, b in ORACLE_AB:
                    req = MomentRequest(n, tau, a, b, mu)
                    yield Check(
                        "oracle",
                        f"n={n} tau={tau} mu={mu} a={a} b={b}",
                        f"moment_polynomial(MomentRequest({n}, {tau}, {_q(a)}, {_q(b)}, {mu})).poly"
                        f" == oracle_moment_polynomial({n}, {_q(a)}, {_q(b)}, {tau}, {mu})",
                        lambda req=req: moment_polynomial(req).poly
                        == oracle_moment_polynomial(req.n, req.a, req.b, int(req.tau), req.mu),
                    )


MU1_AB = ((Fraction(2), Fraction(2)), (Fraction(3), Fraction(2)), (Fraction(5, 2), Fraction(7, 2)))


def _mu1(max_n: int, seed: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 6) + 1):
        for tau in (1, 2, 3):
            for a, b in MU1_AB:
                req = MomentRequest(n, tau, a, b, 1)
                yield Check(
                    "mu1",
                    f"n={n} tau={tau} a={a} b={b}",
                    f"moment_polynomial(MomentRequest({n}, {tau}, {_q(a)}, {_q(b)}, 1)).poly"
                    f" == closed_form_mu1({n}, {_q(a)}, {_q(b)}, {tau})",
                    lambda req=req: moment_polynomial(req).poly
                    == closed_form_mu1(req.n, req.a, req.b, req.tau),
                )


W2_AB = ((Fraction(3), Fraction(2)), (Fraction(4), Fraction(5, 2)), (Fraction(7, 2), Fraction(3)))


def _w2(max_n: int, seed: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 3) + 1):
        for tau in (1, 2):
            for a, b in W2_AB:
                for k in range(n + 1):
                    yield Check(
                        "w2",
                        f"k={k} n={n} tau={tau} a={a} b={b}",
                        f"check_W2({k}, {_q(a)}, {_q(b)}, {tau}, {n})",
                        lambda k=k, a=a, b=b, tau=tau, n=n: check_W2(k, a, b, tau, n),
                    )


_BUILDERS = {
    "matrices": _matrices,
    "three-term": _three_term,
    "corollary": _corollary,
    "appendix-a": _h_vanishing,
    "oracle": _oracle,
    "mu1": _mu1,
    "w2": _w2,
}


def suite_checks(suite: str, max_n: int = 8, seed: int = 0) -> Iterator[Check]:
    if suite == "all":
        for name in SUITES:
            yield from _BUILDERS[name](max_n, seed)
        return
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}")
    yield from _BUILDERS[suite](max_n, seed)


def run_suite(suite: str, max_n: int = 8, seed: int = 0) -> Iterator[tuple]:
    """Yield ``(check, passed)`` in order; exceptions count as failures."""
    for check in suite_checks(suite, max_n, seed):
        try:
            ok = bool(check.run())
        except (ArithmeticError, ValueError) as exc:
            ok = False
            check = Check(check.suite, f"{check.label} raised {exc!r}", check.reproducer, check.run)
        yield check, ok
