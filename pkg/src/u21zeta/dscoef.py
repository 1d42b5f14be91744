"""Radial coefficients of holomorphic-type discrete-series matrix coefficients.

The normalized coefficients ctilde_i(t) per chamber, the first-order ODE
system residuals that certify them, a second-order residual in the
algebraic variable for the hypergeometric chamber, and the expansion of the
K-bi-equivariant trace as a PhaseLaurent with tagged radial handles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactmath import HalfInt, PhaseLaurent, binomial
from .hypergeo import derivative_2f1, gauss_2f1_node
from .repparams import chamber_of_rs

CHAMBER_FORMS = ("I", "II", "III")


def _check_args(chamber, r, i):
    if chamber not in CHAMBER_FORMS:
        raise ValueError(f"unknown chamber {chamber!r}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if not 0 <= i <= r:
        raise ValueError(f"i = {i} outside 0..{r}")


def ctilde(chamber, r, s, i, t):
    """Normalized radial coefficient ctilde_i(t), with ctilde_i(0) = 1.

    Chamber I: (cosh t)^(-i-s); chamber II: (cosh t)^(i+s); chamber III:
    (cosh t)^(s-i-2) 2F1(1+i, 1-s; r+2; tanh^2 t). The (r, s) range is not
    validated here, the formulas are total in s.

    Parameters
    ----------
    chamber : str
    r, s : int
    i : int
        Index in 0..r.
    t : float

    Returns
    -------
    float
    """
    _check_args(chamber, r, i)
    ch = math.cosh(t)
    if chamber == "I":
        return ch ** (-i - s)
    if chamber == "II":
        return ch ** (i + s)
    z = math.tanh(t) ** 2
    return ch ** (s - i - 2) * gauss_2f1_node(1 + i, 1 - s, r + 2, z)


def ctilde_iii_alt(r, s, i, t):
    """Second printed form for chamber III, used only as a cross-check."""
    _check_args("III", r, i)
    ch = math.cosh(t)
    z = math.tanh(t) ** 2
    return ch ** (i - s - 2 * r - 2) * gauss_2f1_node(1 + r - i, 1 + r + s, r + 2, z)


def ctilde_prime(chamber, r, s, i, t):
    """Derivative d/dt of ctilde_i, from the analytic formulas."""
    _check_args(chamber, r, i)
    th = math.tanh(t)
    if chamber == "I":
        return -(i + s) * th * ctilde(chamber, r, s, i, t)
    if chamber == "II":
        return (i + s) * th * ctilde(chamber, r, s, i, t)
    ch = math.cosh(t)
    z = th ** 2
    dz_dt = 2.0 * th / ch ** 2
    f = gauss_2f1_node(1 + i, 1 - s, r + 2, z)
    fp = derivative_2f1(1 + i, 1 - s, r + 2, z)
    return ((s - i - 2) * th * ch ** (s - i - 2) * f
            + ch ** (s - i - 2) * fp * dz_dt)


def c_coeff(chamber, r, s, i, t):
    """Unnormalized coefficient c_i = (-1)^i C(r, i) ctilde_i."""
    if i < 0 or i > r:
        return 0.0
    return (-1) ** i * float(binomial(r, i)) * ctilde(chamber, r, s, i, t)


def c_coeff_prime(chamber, r, s, i, t):
    if i < 0 or i > r:
        return 0.0
    return (-1) ** i * float(binomial(r, i)) * ctilde_prime(chamber, r, s, i, t)


def psi_radial(chamber, r, s, t):
    """Value of the trace at a_t, the sum of the ctilde_i."""
    return sum(ctilde(chamber, r, s, i, t) for i in range(r + 1))


# First-order ODE system. Each recurrence couples c_i to one neighbor; a
# chamber satisfies two of the four. Out-of-range coefficients are zero.


def _schmid_pair_names(chamber):
    if chamber == "I":
        return ("lower+", "lower-")
    if chamber == "II":
        return ("raise+", "raise-")
    if chamber == "III":
        return ("lower-", "raise-")
    raise ValueError(f"unknown chamber {chamber!r}")


def schmid_residual_from_values(chamber, r, s, i, t, c_at, dc_at):
    """Residuals of the chamber's two recurrences for user-supplied values.

    Parameters
    ----------
    chamber : str
    r, s : int
    i : int
    t : float
    c_at : callable
        c_at(j) -> float, the unnormalized coefficient c_j(t); must return
        0.0 outside 0..r.
    dc_at : callable
        dc_at(j) -> float, the t-derivative of c_j.

    Returns
    -------
    tuple of two floats
    """
    _check_args(chamber, r, i)
    th = math.tanh(t)
    co = 1.0 / math.tanh(t)
    sh = math.sinh(t)
    c = c_at(i)
    dc = dc_at(i)

    def lower_plus():
        return (-0.5 * dc - 0.5 * (i + s) * th * c + i * co * c
                + (r - i + 1) / sh * c_at(i - 1))

    def lower_minus():
        return (i * (0.5 * dc + 0.5 * (i + s) * th * c + (r + 1 - i) * co * c)
                + (r + 1 - i) ** 2 / sh * c_at(i - 1))

    def raise_plus():
        return (-0.5 * dc + 0.5 * (i + s) * th * c + (r - i) * co * c
                + (i + 1) / sh * c_at(i + 1))

    def raise_minus():
        return ((r - i) * (0.5 * dc - 0.5 * (i + s) * th * c + (i + 1) * co * c)
                + (i + 1) ** 2 / sh * c_at(i + 1))

    table = {"lower+": lower_plus, "lower-": lower_minus,
             "raise+": raise_plus, "raise-": raise_minus}
    names = _schmid_pair_names(chamber)
    return tuple(table[name]() for name in names)


def schmid_residual(chamber, r, s, i, t):
    """Residuals of the two chamber recurrences at the closed-form coefficients.

    Both should vanish to rounding for (r, s) in the chamber's region.

    Returns
    -------
    tuple of two floats
    """
    if t <= 0:
        raise ValueError("t must be positive")
    return schmid_residual_from_values(
        chamber, r, s, i, t,
        lambda j: c_coeff(chamber, r, s, j, t),
        lambda j: c_coeff_prime(chamber, r, s, j, t))


def riemann_p_operator(r, s, i, z, u, du, d2u):
    """Second-order operator of the chamber-III coefficient in z = sech^2 t.

    Evaluates u'' + p(z) u' + q(z) u for caller-supplied values of u and its
    z-derivatives, where the singular exponents are {1+(i-s)/2, r+1-(i-s)/2}
    at 0, {0, -r-1} at 1, and {(i+s)/2, -(i+s)/2} at infinity.
    """
    if not 0 < z < 1:
        raise ValueError("z must be in (0, 1)")
    kappa = 1 + Fraction(i - s, 2)
    aa = float(kappa * (r + 2 - kappa))
    bb = -((i + s) / 2.0) ** 2
    p = (-r - 1.0) / z + (r + 2.0) / (z - 1.0)
    q = (-aa / z + bb) / (z * (z - 1.0))
    return d2u + p * du + q * u


def riemann_p_residual(r, s, i, t):
    """Residual of the closed-form chamber-III coefficient in the z variable.

    Writes u(z) = z^kappa 2F1(1+i, 1-s; r+2; 1-z) with z = sech^2 t and
    kappa = 1+(i-s)/2, and plugs it into riemann_p_operator.

    Returns
    -------
    float
    """
    _check_args("III", r, i)
    if t <= 0:
        raise ValueError("t must be positive")
    z = 1.0 / math.cosh(t) ** 2
    w = 1.0 - z
    kappa = float(1 + Fraction(i - s, 2))
    a, b, c = 1 + i, 1 - s, r + 2
    f = gauss_2f1_node(a, b, c, w)
    # z-derivatives: d/dz = -d/dw
    f1 = -derivative_2f1(a, b, c, w)
    f2 = (float(a) * float(b) / float(c)) * derivative_2f1(a + 1, b + 1, c + 1, w)
    u = z ** kappa * f
    du = kappa * z ** (kappa - 1) * f + z ** kappa * f1
    d2u = (kappa * (kappa - 1) * z ** (kappa - 2) * f
           + 2 * kappa * z ** (kappa - 1) * f1 + z ** kappa * f2)
    return riemann_p_operator(r, s, i, z, u, du, d2u)


# Trace expansion. The angular dependence enters through four bilinear
# combinations of the two 2x2 blocks; their powers expand into the
# PhaseLaurent algebra with the radial handle tagged by the index i.


def _abcd_factors():
    """The four bilinear angular factors a, b, c, d as PhaseLaurents."""
    a = (PhaseLaurent.term((0, 2, 0, 0), {(0, 0, 1, 0, 1, None): Fraction(1)})
         + PhaseLaurent.term((0, 0, 2, 0), {(0, 1, 0, 1, 0, None): Fraction(1)}))
    b = (PhaseLaurent.term((0, 2, 0, 0), {(0, 0, 1, 1, 0, None): Fraction(-1)})
         + PhaseLaurent.term((0, 0, 2, 0), {(0, 1, 0, 0, 1, None): Fraction(1)}))
    c = (PhaseLaurent.term((0, 2, 0, 0), {(0, 1, 0, 0, 1, None): Fraction(-1)})
         + PhaseLaurent.term((0, 0, 2, 0), {(0, 0, 1, 1, 0, None): Fraction(1)}))
    d = (PhaseLaurent.term((0, 2, 0, 0), {(0, 1, 0, 1, 0, None): Fraction(1)})
         + PhaseLaurent.term((0, 0, 2, 0), {(0, 0, 1, 0, 1, None): Fraction(1)}))
    return a, b, c, d


def psi_phase_laurent(Lambda, chamber, r=None, s=None):
    """Trace along k'^(-1) a_t k as a PhaseLaurent with tagged radial handles.

    The atom tagged i stands for the radial factor ctilde_i(t); the phase
    and angle dependence is exact.

    Parameters
    ----------
    Lambda : sequence of three HalfInt (or coercible)
        Highest weight of the minimal K-type, dominant (L1 >= L2).
    chamber : str
        Radial form the tags refer to; must match (r, s) when they lie in a
        chamber region.
    r, s : int, optional
        Derived from Lambda when omitted.

    Returns
    -------
    PhaseLaurent
    """
    L = tuple(HalfInt.of(x) for x in Lambda)
    if r is None:
        r = (L[0] - L[1]).twice // 2
    if s is None:
        s = (L[1] - L[2]).twice // 2
    if r < 0:
        raise ValueError("Lambda must be dominant")
    region = chamber_of_rs(r, s)
    if region is not None and region != chamber:
        raise ValueError(f"(r, s) = ({r}, {s}) lies in chamber {region}, not {chamber}")
    a, b, cf, d = _abcd_factors()
    bc = b * cf
    out = PhaseLaurent.zero()
    for i in range(r + 1):
        pre = PhaseLaurent.term(
            (L[0].twice - 2 * i, L[1].twice, L[1].twice, L[2].twice),
            {(0, 0, 0, 0, 0, i): Fraction(1)})
        ang = PhaseLaurent.zero()
        for l in range(i + 1):
            if i - l > r - i:
                continue
            coef = binomial(i, l) * binomial(r - i, i - l)
            if coef == 0:
                continue
            term = (a ** l) * (bc ** (i - l)) * (d ** (r - 2 * i + l))
            ang = ang + term * coef
        out = out + pre * ang
    return out


def psi_full(Lambda, chamber, t, k, kp):
    """Numerical trace value at k'^(-1) a_t k.

    Combines psi_phase_laurent with the chamber's radial coefficients.

    Returns
    -------
    complex
    """
    from .repparams import pair_angles

    L = tuple(HalfInt.of(x) for x in Lambda)
    r = (L[0] - L[1]).twice // 2
    s = (L[1] - L[2]).twice // 2
    pl = psi_phase_laurent(L, chamber, r, s)
    return pl.evaluate(t, k.theta, kp.theta, pair_angles(k, kp),
                       radial=lambda i: ctilde(chamber, r, s, i, t))
