"""Acceptance gate: one check per shipped guarantee, one report line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import math
import random
import time
from fractions import Fraction
from itertools import product

from u21zeta.dscoef import riemann_p_residual, schmid_residual
from u21zeta.exactmath import binom_factorial_sum, binomial, vandermonde_sum
from u21zeta.fockweil import (bargmann_oracle, build_harmonic,
                              harmonicity_check, weight_check, weil_coeff)
from u21zeta.hypergeo import (contiguous_shift, derivative_2f1,
                              euler_integral_2f1, euler_transform, gauss_2f1,
                              gauss_value_at_1)
from u21zeta.repparams import (CASE_PARAM_NAMES, CASE_TAGS, DualPairCase,
                               KPoint, formal_degree)
from u21zeta.zetaeval import (QuadratureConfig, consistency_check,
                              zeta_closed_form, zeta_numeric)

CASE_PLAN = (
    ("A", {"mu1": 0, "mu2": 0, "nu": 0}), ("A", {"mu1": 2, "mu2": 1, "nu": 1}),
    ("B", {"nu1": 0, "nu2": 0, "alpha": 0}), ("B", {"nu1": 2, "nu2": 1, "alpha": 1}),
    ("C1", {"mu1": 0, "mu2": 0, "alpha": 4}), ("C1", {"mu1": 2, "mu2": 1, "alpha": 7}),
    ("C1", {"mu1": 2, "mu2": 2, "alpha": 0}), ("C1", {"mu1": 4, "mu2": 3, "alpha": 1}),
    ("C1", {"mu1": 2, "mu2": 0, "alpha": 2}), ("C1", {"mu1": 4, "mu2": 1, "alpha": 3}),
    ("C2", {"mu": 0, "nu": 0, "beta": 2}), ("C2", {"mu": 1, "nu": 1, "beta": 4}),
    ("C2", {"mu": 0, "nu": 2, "beta": 0}), ("C2", {"mu": 1, "nu": 3, "beta": 1}),
    ("D1", {"nu1": 2, "nu2": 2, "beta": 0}), ("D1", {"nu1": 4, "nu2": 3, "beta": 1}),
    ("D1", {"nu1": 0, "nu2": 0, "beta": 4}), ("D1", {"nu1": 2, "nu2": 1, "beta": 7}),
    ("D1", {"nu1": 2, "nu2": 0, "beta": 2}), ("D1", {"nu1": 4, "nu2": 1, "beta": 3}),
    ("D2", {"mu": 0, "nu": 0, "alpha": 2}), ("D2", {"mu": 1, "nu": 1, "alpha": 4}),
    ("D2", {"mu": 2, "nu": 0, "alpha": 0}), ("D2", {"mu": 3, "nu": 1, "alpha": 1}),
)

ALL_SUBCASES = {
    ("A", "II"), ("B", "I"),
    ("C1", "I"), ("C1", "II"), ("C1", "III"),
    ("C2", "II"), ("C2", "III"),
    ("D1", "I"), ("D1", "II"), ("D1", "III"),
    ("D2", "I"), ("D2", "III"),
}

ORACLE_PARAMS = {
    "A": (2, 1, 1), "B": (2, 1, 1), "C1": (2, 1, 2),
    "C2": (1, 2, 1), "D1": (2, 1, 2), "D2": (1, 2, 1),
}

T_CHECK = (0.3, 0.7, 1.5)


def _case_grid(tag, bound):
    names = CASE_PARAM_NAMES[tag]
    for vals in product(range(bound + 1), repeat=3):
        try:
            yield DualPairCase(tag, dict(zip(names, vals)))
        except ValueError:
            continue


def _rs_grid(chamber, bound=6):
    out = []
    for r in range(bound + 1):
        if chamber == "I":
            out.extend((r, s) for s in range(3, 4 + bound))
        elif chamber == "II":
            out.extend((r, -3 - r - k) for k in range(bound + 1))
        else:
            out.extend((r, s) for s in range(-bound - 2, 0) if r + s >= 1)
    return out


def _report(num, name, fn):
    start = time.perf_counter()
    try:
        detail = fn()
    except AssertionError as exc:
        print(f"criterion {num} ({name}): FAIL  {exc}")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {num} ({name}): PASS  {detail}  [{elapsed:.2f}s]")


def test_criterion_1_projection_consistency():
    def run():
        seen = set()
        n = 0
        for tag in CASE_TAGS:
            for case in _case_grid(tag, 8):
                if case.subcase is None:
                    continue
                lam = case.hc_param()
                assert consistency_check(lam), (case, lam)
                seen.add((case.tag, case.subcase))
                n += 1
        assert seen == ALL_SUBCASES, seen
        return f"n={n}, exact over all parameter patterns"

    _report(1, "degree times zeta equals projection constant", run)


def test_criterion_2_zeta_quadrature_vs_closed():
    def run():
        config = QuadratureConfig(64, 64)
        worst = 0.0
        for tag, params in CASE_PLAN:
            case = DualPairCase(tag, params)
            want = float(zeta_closed_form(case).ratio)
            rel = abs(zeta_numeric(case, config) - want) / want
            assert rel < 1e-8, (case, rel)
            worst = max(worst, rel)
        return f"n={len(CASE_PLAN)}, worst rel={worst:.3e} < 1e-8"

    _report(2, "quadrature reproduces closed forms", run)


def test_criterion_3_ode_residuals():
    def run():
        worst_s = 0.0
        n = 0
        for chamber in ("I", "II", "III"):
            for r, s in _rs_grid(chamber):
                for i in range(r + 1):
                    for t in T_CHECK:
                        res = max(map(abs, schmid_residual(chamber, r, s, i, t)))
                        assert res < 1e-9, (chamber, r, s, i, t, res)
                        worst_s = max(worst_s, res)
                        n += 1
        worst_p = 0.0
        for r, s in _rs_grid("III"):
            for i in range(r + 1):
                for t in T_CHECK:
                    res = abs(riemann_p_residual(r, s, i, t))
                    assert res < 1e-8, (r, s, i, t, res)
                    worst_p = max(worst_p, res)
        return (f"n={n}, worst recurrence={worst_s:.3e} < 1e-9, "
                f"worst second-order={worst_p:.3e} < 1e-8")

    _report(3, "radial coefficients satisfy their ODE systems", run)


def test_criterion_4_oracle_equivalence():
    def run():
        rng = random.Random(20260825)
        worst = 0.0
        for tag in CASE_TAGS:
            names = CASE_PARAM_NAMES[tag]
            case = DualPairCase(tag, dict(zip(names, ORACLE_PARAMS[tag])))
            for _ in range(20):
                t = rng.uniform(0.0, 2.0)
                k, kp = KPoint.random(rng), KPoint.random(rng)
                got = bargmann_oracle(case, t, k, kp)
                want = weil_coeff(case, t, k, kp)
                diff = abs(abs(got) - abs(want))
                assert diff < 1e-10, (case, t, diff)
                worst = max(worst, diff)
        return f"n={6 * 20}, worst modulus gap={worst:.3e} < 1e-10"

    _report(4, "independent kernel oracle matches closed coefficient", run)


def test_criterion_5_harmonicity_and_weights():
    def run():
        n = 0
        for tag in CASE_TAGS:
            for case in _case_grid(tag, 4):
                h = build_harmonic(case)
                assert harmonicity_check(h), case
                assert weight_check(h), case
                n += 1
        return f"n={n}, symbolic, zero tolerance"

    _report(5, "matched vectors are joint-harmonic with printed weights", run)


def test_criterion_6_combinatorial_identities():
    def run():
        n = 0
        for mu in range(31):
            for r in range(31):
                want = Fraction(math.factorial(mu + r + 1), r + 1)
                for i in range(r + 1):
                    assert binom_factorial_sum(mu, r, i) == want, (mu, r, i)
                    n += 1
        m = 0
        for r in range(41):
            for i in range(r + 1):
                assert vandermonde_sum(r, i) == binomial(r, i), (r, i)
                m += 1
        return f"n={n}+{m}, exact"

    _report(6, "factorial-sum and convolution identities", run)


def test_criterion_7_hypergeometric_suite():
    def run():
        worst_c = worst_e = 0.0
        n = 0
        for z in (0.1, 0.5, 0.9):
            for a in range(-3, 4):
                for b in range(-3, 4):
                    for c in range(1, 6):
                        lhs_e = gauss_2f1(a, b, c, z)
                        rhs_e = euler_transform(a, b, c, z)
                        gap = abs(lhs_e - rhs_e) / max(abs(lhs_e), abs(rhs_e), 1.0)
                        assert gap < 1e-10, ("euler", a, b, c, z, gap)
                        worst_e = max(worst_e, gap)
                        if b != 0:
                            lhs = z * gauss_2f1(a + 1, b + 1, c + 1, z)
                            rhs = contiguous_shift(a, b, c, z)
                            gap = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
                            assert gap < 1e-10, ("contiguous", a, b, c, z, gap)
                            worst_c = max(worst_c, gap)
                        n += 1
        h = 1e-6
        for a, b, c in ((0.5, 1.5, 2), (-2, 3, 4), (1, 1, 3)):
            for z in (0.1, 0.4, 0.7):
                want = (gauss_2f1(a, b, c, z + h) - gauss_2f1(a, b, c, z - h)) / (2 * h)
                got = derivative_2f1(a, b, c, z)
                assert abs(got - want) <= 1e-6 * abs(want) + 1e-8, (a, b, c, z)
        for a, b, c in ((-1, 0.5, 2), (0.5, 0.5, 3), (1, 1, 4), (-3, 1.5, 2)):
            series = gauss_2f1(a, b, c, 1 - 1e-7)
            assert abs(gauss_value_at_1(a, b, c) - series) <= 1e-4 * abs(series)
        for a, b, c in ((1, 3, 2), (0.5, 1, 1.5), (2, -2, 5), (1.5, 2.5, 4)):
            for z in (-0.5, 0.2, 0.8):
                want = gauss_2f1(a, b, c, z)
                got = euler_integral_2f1(a, b, c, z)
                assert abs(got - want) <= 1e-9 * abs(want), (a, b, c, z)
        return (f"grid n={n}, worst contiguous={worst_c:.3e}, "
                f"worst transform={worst_e:.3e}, plus derivative, "
                f"boundary-value, and integral oracles")

    _report(7, "hypergeometric identity suite", run)


def test_criterion_8_compact_schur_relation():
    def run():
        n = 0
        for tag in ("A", "B"):
            for case in _case_grid(tag, 8):
                lam = case.hc_param()
                product_value = formal_degree(lam) * zeta_closed_form(case).ratio
                assert product_value == 1, (case, product_value)
                n += 1
        return f"n={n}, exact"

    _report(8, "compact second member gives unit mass", run)
