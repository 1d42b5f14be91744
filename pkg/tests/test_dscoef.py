import cmath
import math
import random

import pytest

from u21zeta.dscoef import (
    c_coeff,
    ctilde,
    ctilde_iii_alt,
    ctilde_prime,
    psi_full,
    psi_phase_laurent,
    psi_radial,
    riemann_p_operator,
    riemann_p_residual,
    schmid_residual,
    schmid_residual_from_values,
)
from u21zeta.exactmath import HalfInt
from u21zeta.repparams import KPoint, compose_k, pair_angles

T_GRID = (0.3, 0.7, 1.5)


def _rs_grid(chamber, bound=4):
    out = []
    for r in range(bound + 1):
        if chamber == "I":
            out.extend((r, s) for s in range(3, 3 + bound + 1))
        elif chamber == "II":
            out.extend((r, -3 - r - k) for k in range(bound + 1))
        else:
            out.extend((r, s) for s in range(-bound - 2, 0) if r + s >= 1)
    return out


class TestCtilde:
    def test_normalization_at_zero(self):
        for chamber in ("I", "II", "III"):
            for r, s in _rs_grid(chamber, 3):
                for i in range(r + 1):
                    assert ctilde(chamber, r, s, i, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_chamber_one_power(self):
        # cosh t = 2, s = 2, i = 1 -> 2^-3
        t = math.acosh(2.0)
        assert ctilde("I", 2, 2, 1, t) == pytest.approx(1 / 8, rel=1e-13)

    def test_chamber_two_power(self):
        t = math.acosh(2.0)
        assert ctilde("II", 2, -4, 1, t) == pytest.approx(1 / 8, rel=1e-13)

    def test_chamber_three_forms_agree(self):
        for r, s in _rs_grid("III", 5):
            for i in range(r + 1):
                for t in T_GRID:
                    a = ctilde("III", r, s, i, t)
                    b = ctilde_iii_alt(r, s, i, t)
                    assert a == pytest.approx(b, rel=1e-10), (r, s, i, t)

    def test_index_range(self):
        with pytest.raises(ValueError):
            ctilde("I", 2, 3, 3, 0.5)
        with pytest.raises(ValueError):
            ctilde("IV", 2, 3, 1, 0.5)

    def test_derivative_matches_difference(self):
        h = 1e-6
        for chamber, r, s in (("I", 2, 4), ("II", 3, -7), ("III", 3, -2)):
            for i in range(r + 1):
                for t in (0.4, 1.1):
                    want = (ctilde(chamber, r, s, i, t + h)
                            - ctilde(chamber, r, s, i, t - h)) / (2 * h)
                    got = ctilde_prime(chamber, r, s, i, t)
                    assert got == pytest.approx(want, rel=1e-7, abs=1e-9)


class TestPsiRadial:
    def test_dimension_at_zero(self):
        for chamber in ("I", "II", "III"):
            for r, s in _rs_grid(chamber, 3):
                assert psi_radial(chamber, r, s, 0.0) == pytest.approx(r + 1, abs=1e-12)

    def test_power_sum_example(self):
        # cosh t = 2, r = 2, s = 1: 1/2 + 1/4 + 1/8
        t = math.acosh(2.0)
        assert psi_radial("I", 2, 1, t) == pytest.approx(7 / 8, rel=1e-13)

    def test_decay(self):
        vals = [psi_radial("III", 2, -1, t) for t in (0.0, 0.4, 0.9, 1.6)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


class TestSchmid:
    @pytest.mark.parametrize("chamber", ["I", "II", "III"])
    def test_residuals_vanish(self, chamber):
        for r, s in _rs_grid(chamber, 4):
            for i in range(r + 1):
                for t in T_GRID:
                    res = schmid_residual(chamber, r, s, i, t)
                    assert max(abs(x) for x in res) < 1e-9, (chamber, r, s, i, t)

    def test_wrong_chamber_form_fails(self):
        # chamber-I coefficients against the chamber-II system
        r, s = 2, 4
        res = schmid_residual_from_values(
            "II", r, s, 1, 0.7,
            lambda j: c_coeff("I", r, s, j, 0.7),
            lambda j: (0.0 if j < 0 or j > r else
                       (-1) ** j * math.comb(r, j) * ctilde_prime("I", r, s, j, 0.7)))
        assert max(abs(x) for x in res) > 1e-3

    def test_perturbed_coefficients_fail(self):
        r, s = 3, 4
        res = schmid_residual_from_values(
            "I", r, s, 1, 0.7,
            lambda j: c_coeff("I", r, s, j, 0.7) + (0.01 if j == 1 else 0.0),
            lambda j: (0.0 if j < 0 or j > r else
                       (-1) ** j * math.comb(r, j) * ctilde_prime("I", r, s, j, 0.7)))
        assert max(abs(x) for x in res) > 1e-4

    def test_requires_positive_t(self):
        with pytest.raises(ValueError):
            schmid_residual("I", 1, 3, 0, 0.0)


class TestRiemannP:
    def test_residual_vanishes(self):
        for r, s in _rs_grid("III", 5):
            for i in range(r + 1):
                for t in T_GRID:
                    res = riemann_p_residual(r, s, i, t)
                    assert abs(res) < 1e-8, (r, s, i, t)

    def test_operator_linear(self):
        z = 0.4
        args = (3, -2, 1)
        v1 = riemann_p_operator(*args, z, 1.0, 2.0, 3.0)
        v2 = riemann_p_operator(*args, z, 5.0, 10.0, 15.0)
        assert v2 == pytest.approx(5 * v1, rel=1e-12)

    def test_constant_probe_fails(self):
        # u = 1 is not annihilated unless q vanishes
        res = riemann_p_operator(2, -1, 0, 0.5, 1.0, 0.0, 0.0)
        assert abs(res) > 1e-3

    def test_z_domain(self):
        with pytest.raises(ValueError):
            riemann_p_operator(2, -1, 0, 1.5, 1.0, 0.0, 0.0)


def _lambda_for(chamber, r, s):
    # any dominant Lambda with the prescribed gaps and genuine entries
    l3 = HalfInt(1)
    l2 = l3 + s
    l1 = l2 + r
    return (l1, l2, l3)


class TestPsiFull:
    def test_value_at_identity(self):
        rng = random.Random(2)
        for chamber in ("I", "II", "III"):
            for r, s in [(0, 3), (2, 4)] if chamber == "I" else (
                    [(0, -3), (2, -7)] if chamber == "II" else [(2, -1), (3, -2)]):
                L = _lambda_for(chamber, r, s)
                k = KPoint.random(rng)
                val = psi_full(L, chamber, 0.0, k, k)
                assert val == pytest.approx(r + 1, abs=1e-10), (chamber, r, s)

    def test_phase_laurent_chamber_mismatch(self):
        L = _lambda_for("I", 1, 3)
        with pytest.raises(ValueError):
            psi_phase_laurent(L, "II")

    def test_genuine_exponents_are_half_integral(self):
        L = _lambda_for("I", 1, 3)
        pl = psi_phase_laurent(L, "I")
        assert all(any(x % 2 for x in tw) for tw in pl.terms)

    def test_centralizer_insertion_invariance(self):
        """Right translation of both arguments by the same compact point
        preserves every pair angle, so the trace is unchanged up to the
        double-cover sign. compose_k only returns an angle representative,
        which can land on the other sheet, hence the +/- in the assertion."""
        rng = random.Random(23)
        for chamber, r, s in (("I", 2, 3), ("II", 1, -5), ("III", 3, -2)):
            L = _lambda_for(chamber, r, s)
            for t in (0.4, 1.0):
                k, kp = KPoint.random(rng), KPoint.random(rng)
                phi, chi = rng.uniform(-3, 3), rng.uniform(-3, 3)
                m = KPoint(0.0, 0.0, phi, chi, phi)
                base = psi_full(L, chamber, t, k, kp)
                moved = psi_full(L, chamber, t, compose_k(k, m), compose_k(kp, m))
                close = min(abs(moved - base), abs(moved + base))
                assert close < 1e-10, (chamber, t, moved, base)

    def test_reduces_to_radial_on_diagonal(self):
        e = KPoint(0.0, 0.0, 0.0, 0.0, 0.0)
        for chamber, r, s in (("I", 2, 3), ("II", 1, -5), ("III", 3, -2)):
            L = _lambda_for(chamber, r, s)
            for t in (0.0, 0.5, 1.3):
                got = psi_full(L, chamber, t, e, e)
                assert got == pytest.approx(psi_radial(chamber, r, s, t), abs=1e-12)

    def test_zero_rotation_phase_sum(self):
        """At theta = theta' = 0 only the a and d factors survive, so the
        trace collapses to an explicit sum of phases."""
        rng = random.Random(23)
        chamber, r, s = "I", 2, 3
        L = _lambda_for(chamber, r, s)
        t = 0.8
        for _ in range(5):
            k = KPoint(rng.uniform(-3, 3), 0.0, rng.uniform(-3, 3),
                       rng.uniform(-3, 3), rng.uniform(-3, 3))
            kp = KPoint(rng.uniform(-3, 3), 0.0, rng.uniform(-3, 3),
                        rng.uniform(-3, 3), rng.uniform(-3, 3))
            u = pair_angles(k, kp)
            want = sum(
                ctilde(chamber, r, s, i, t) * cmath.exp(1j * (
                    float(L[0] - i) * u[0] + float(L[1] + i) * u[1]
                    + float(L[1] + (r - i)) * u[2] + float(L[2]) * u[3]))
                for i in range(r + 1))
            got = psi_full(L, chamber, t, k, kp)
            assert got == pytest.approx(want, rel=1e-12)

    def test_crossed_rotation_parity(self):
        """With theta = 0 against theta' = pi/2 only the bc products can
        contribute, which forces r even and picks the single i = r/2 term."""
        t = 0.6
        k = KPoint(0.4, 0.0, 1.1, -0.7, 0.3)
        kp = KPoint(-0.2, math.pi / 2, 0.5, 0.9, -1.4)
        L_odd = _lambda_for("I", 3, 3)
        assert abs(psi_full(L_odd, "I", t, k, kp)) < 1e-14
        r, s = 2, 3
        L = _lambda_for("I", r, s)
        u = pair_angles(k, kp)
        want = -ctilde("I", r, s, 1, t) * cmath.exp(1j * (
            float(L[0] - 1) * u[0] + float(L[1] + 1) * u[1]
            + float(L[1] + 1) * u[2] + float(L[2]) * u[3]))
        assert psi_full(L, "I", t, k, kp) == pytest.approx(want, rel=1e-12)

    def test_genuine_sign_flip(self):
        """Shifting zeta by 2*pi fixes the group point but flips the trace,
        the hallmark of a genuine (double cover) weight."""
        rng = random.Random(31)
        L = _lambda_for("III", 2, -1)
        k, kp = KPoint.random(rng), KPoint.random(rng)
        shifted = KPoint(k.zeta + 2 * math.pi, k.theta, k.xi, k.eta, k.gamma)
        a = psi_full(L, "III", 0.7, k, kp)
        b = psi_full(L, "III", 0.7, shifted, kp)
        assert b == pytest.approx(-a, abs=1e-12)

    def test_hermitian_symmetry(self):
        rng = random.Random(29)
        chamber, r, s = "III", 2, -1
        L = _lambda_for(chamber, r, s)
        k, kp = KPoint.random(rng), KPoint.random(rng)
        a = psi_full(L, chamber, 0.8, k, kp)
        b = psi_full(L, chamber, 0.8, kp, k)
        assert a == pytest.approx(b.conjugate(), abs=1e-10)
