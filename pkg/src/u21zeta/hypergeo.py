"""Gauss hypergeometric evaluator and identities.

Hand-rolled series evaluation of 2F1 with exact summation for terminating
series, the value at z=1, the derivative and contiguous relations, and a
Gauss-Jacobi quadrature oracle for the Euler integral representation.
"""

from __future__ import annotations

import math
from fractions import Fraction

SERIES_TOL = 1e-14
MAX_TERMS = 10 ** 6
_NODE_SERIES_CUTOFF = 0.95
_NODE_DPS = 30


class InvalidC(Exception):
    """c is a nonpositive integer not rescued by earlier termination."""


class NonConvergent(Exception):
    """The series did not converge inside the term budget."""


class PoleAtOne(Exception):
    """The value at z=1 diverges because c-a-b <= 0."""


class InvalidParams(Exception):
    """Parameters outside the validity region of the chosen representation."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not x.is_integer():
            return None
        return Fraction(int(x))
    return None


def _termination_index(a):
    """Smallest m with (a)_{m+1} = 0, i.e. -a for nonpositive integer a."""
    f = _as_fraction(a)
    if f is None or f.denominator != 1 or f > 0:
        return None
    return -int(f)


def _series_plan(a, b, c):
    """Return (n_terms, exact) for the series, validating c.

    n_terms is the number of terms to sum for a terminating series, or None
    for an infinite series. exact says whether exact summation is possible.
    """
    na = _termination_index(a)
    nb = _termination_index(b)
    n_term = None
    if na is not None or nb is not None:
        n_term = min(x for x in (na, nb) if x is not None)
    fc = _as_fraction(c)
    if fc is not None and fc.denominator == 1 and fc <= 0:
        # (c)_n hits zero at n = 1 - c; all terms up to n_term must avoid it.
        if n_term is None or n_term > -int(fc):
            raise InvalidC(f"c = {c} is a nonpositive integer")
    exact = (n_term is not None
             and _as_fraction(a) is not None
             and _as_fraction(b) is not None
             and fc is not None)
    return n_term, exact


def gauss_2f1_exact(a, b, c, z):
    """Terminating 2F1 summed exactly over Fractions.

    Parameters
    ----------
    a, b, c : int or Fraction
        At least one of a, b must be a nonpositive integer.
    z : int or Fraction

    Returns
    -------
    Fraction
    """
    n_term, exact = _series_plan(a, b, c)
    if n_term is None or not exact:
        raise InvalidParams("exact summation needs rational data and a terminating series")
    a, b, c, z = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    term = Fraction(1)
    total = Fraction(1)
    for n in range(n_term):
        term *= (a + n) * (b + n) * z / ((c + n) * (n + 1))
        total += term
    return total


def gauss_2f1(a, b, c, z):
    """Gauss hypergeometric series 2F1(a, b; c; z).

    Terminating series are summed exactly when the data is rational; otherwise
    a float series is summed to relative tolerance SERIES_TOL. z must satisfy
    |z| < 1 unless the series terminates.

    Parameters
    ----------
    a, b, c : number
    z : number

    Returns
    -------
    float

    Raises
    ------
    InvalidC
        When c is a nonpositive integer and the series does not terminate
        before the zero of (c)_n.
    NonConvergent
        When |z| >= 1 without termination, or the term budget is exhausted.
    """
    n_term, exact = _series_plan(a, b, c)
    if exact:
        return float(gauss_2f1_exact(a, b, c, z if isinstance(z, (int, Fraction)) else Fraction(z)))
    if n_term is not None:
        term = 1.0
        total = 1.0
        af, bf, cf, zf = float(a), float(b), float(c), float(z)
        for n in range(n_term):
            term *= (af + n) * (bf + n) * zf / ((cf + n) * (n + 1))
            total += term
        return total
    if abs(z) >= 1:
        raise NonConvergent(f"|z| = {abs(z)} >= 1 and the series does not terminate")
    af, bf, cf, zf = float(a), float(b), float(c), float(z)
    term = 1.0
    total = 1.0
    for n in range(MAX_TERMS):
        term *= (af + n) * (bf + n) * zf / ((cf + n) * (n + 1))
        total += term
        if abs(term) <= SERIES_TOL * max(abs(total), 1e-300):
            return total
    raise NonConvergent(f"series exceeded {MAX_TERMS} terms at z = {z}")


def _gamma_half(x):
    """Exact Gamma at integer or half-integer x.

    Returns (q, p) meaning q * pi^(p/2) with q a Fraction, or None at a pole
    (x a nonpositive integer).
    """
    f = Fraction(x)
    if f.denominator == 1:
        n = int(f)
        if n <= 0:
            return None
        return Fraction(math.factorial(n - 1)), 0
    if f.denominator != 2:
        raise InvalidParams(f"{x} is not an integer or half-integer")
    # Gamma(1/2) = sqrt(pi); climb with Gamma(y+1) = y Gamma(y).
    q = Fraction(1)
    y = f
    while y > Fraction(1, 2):
        y -= 1
        q *= y
    while y < Fraction(1, 2):
        q /= y
        y += 1
    return q, 1


def gauss_value_at_1(a, b, c):
    """2F1(a, b; c; 1) by the Gamma-ratio formula, exact for half-integer data.

    Parameters
    ----------
    a, b, c : int, Fraction, or half-integral float
        Must satisfy c - a - b > 0 and c not a nonpositive integer.

    Returns
    -------
    float

    Raises
    ------
    PoleAtOne
        When c - a - b <= 0.
    """
    fa, fb, fc = (_as_fraction_strict(x) for x in (a, b, c))
    s = fc - fa - fb
    if s <= 0:
        raise PoleAtOne(f"c-a-b = {s} <= 0")
    g_c = _gamma_half(fc)
    g_s = _gamma_half(s)
    if g_c is None or g_s is None:
        raise InvalidC(f"c = {c} gives a Gamma pole in the numerator")
    g_ca = _gamma_half(fc - fa)
    g_cb = _gamma_half(fc - fb)
    if g_ca is None or g_cb is None:
        # 1/Gamma at a pole is zero, and the other factors are finite.
        return 0.0
    q = g_c[0] * g_s[0] / (g_ca[0] * g_cb[0])
    p = g_c[1] + g_s[1] - g_ca[1] - g_cb[1]
    return float(q) * math.sqrt(math.pi) ** p


def _as_fraction_strict(x):
    f = _as_fraction(x)
    if f is not None:
        return f
    if isinstance(x, float):
        f2 = Fraction(x) * 2
        if f2.denominator == 1:
            return Fraction(x)
    raise InvalidParams(f"{x!r} is not integral or half-integral")


def derivative_2f1(a, b, c, z):
    """d/dz 2F1(a,b;c;z) = (a b / c) 2F1(a+1, b+1; c+1; z).

    Returns
    -------
    float
    """
    if a == 0 or b == 0:
        return 0.0
    return float(a) * float(b) / float(c) * gauss_2f1(a + 1, b + 1, c + 1, z)


def contiguous_shift(a, b, c, z):
    """Right side of z 2F1(a+1,b+1;c+1;z) = (c/b)(2F1(a+1,b;c;z) - 2F1(a,b;c;z)).

    Requires b != 0.

    Returns
    -------
    float
    """
    if b == 0:
        raise InvalidParams("the contiguous relation needs b != 0")
    return float(c) / float(b) * (gauss_2f1(a + 1, b, c, z) - gauss_2f1(a, b, c, z))


def euler_transform(a, b, c, z):
    """Right side of 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a, c-b; c; z).

    Returns
    -------
    float
    """
    return (1.0 - float(z)) ** (float(c) - float(a) - float(b)) * gauss_2f1(c - a, c - b, c, z)


def euler_integral_2f1(a, b, c, z, quadrature_order=80):
    """Euler integral representation evaluated by Gauss-Jacobi quadrature.

    B(a, c-a) 2F1(a,b;c;z) = int_0^1 x^(a-1) (1-x)^(c-a-1) (1-zx)^(-b) dx,
    valid for c > a > 0. The endpoint weights are absorbed into the Jacobi
    weight, so the quadrature sees only the analytic factor.

    Parameters
    ----------
    a, b, c : number
        Must satisfy c > a > 0.
    z : float
        z < 1.
    quadrature_order : int

    Returns
    -------
    float

    Raises
    ------
    InvalidParams
        When c > a > 0 fails or z >= 1.
    """
    from scipy.special import beta as _beta
    from scipy.special import roots_jacobi

    af, bf, cf, zf = float(a), float(b), float(c), float(z)
    if not (cf > af > 0):
        raise InvalidParams("Euler integral needs c > a > 0")
    if zf >= 1:
        raise InvalidParams("Euler integral needs z < 1")
    # Map [0,1] to [-1,1]: weight x^(a-1)(1-x)^(c-a-1) dx becomes
    # 2^(1-c) (1+u)^(a-1) (1-u)^(c-a-1) du, Jacobi weight (alpha, beta) =
    # (c-a-1, a-1).
    nodes, weights = roots_jacobi(quadrature_order, cf - af - 1.0, af - 1.0)
    total = 0.0
    for u, w in zip(nodes, weights):
        x = 0.5 * (1.0 + u)
        total += w * (1.0 - zf * x) ** (-bf)
    total *= 2.0 ** (1.0 - cf)
    return total / _beta(af, cf - af)


def gauss_2f1_node(a, b, c, z):
    """2F1 for quadrature nodes in [0, 1): series when fast, mpmath near 1.

    The series converges too slowly near z = 1 with the parameter patterns
    this package needs (no nonpositive integer among a, b), so past the
    cutoff this defers to mpmath's evaluation, which applies the z -> 1-z
    connection formulas, including the integer-difference log cases.

    Returns
    -------
    float
    """
    if z < 0 or z >= 1:
        raise InvalidParams("node evaluation expects 0 <= z < 1")
    if z <= _NODE_SERIES_CUTOFF:
        return gauss_2f1(a, b, c, z)
    import mpmath

    with mpmath.workdps(_NODE_DPS):
        return float(mpmath.hyp2f1(float(a), float(b), float(c), z))
