"""Doubling zeta values: quadrature route, closed forms, projection constants.

The numerical route integrates the product of the oscillator coefficient and
the discrete-series trace over the group in polar coordinates. The torus
directions are integrated exactly (only the constant phase survives), the
two rotation angles and the radial direction by Gauss-Legendre rules. The
closed-form route is a table of printed denominators. The projection
constant c^2 is a table of eleven exact rational patterns in the
Harish-Chandra parameter, tied to the zeta table through the formal degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .dscoef import psi_phase_laurent
from .exactmath import HalfInt
from .fockweil import weil_closed_form
from .hypergeo import gauss_2f1_node
from .repparams import BoundaryParameter, DualPairCase, HCParam, case_from_hc_param, formal_degree

N_T_DEFAULT = 64
N_THETA_DEFAULT = 64
REL_TOL_DEFAULT = 1e-8


class NoPatternMatch(Exception):
    """The parameter fits none of the projection-constant patterns."""


class InvalidN(Exception):
    """The radial moment diverges for this exponent."""


@dataclass(frozen=True)
class QuadratureConfig:
    """Node counts and target tolerance for the quadrature rules."""

    n_t: int = N_T_DEFAULT
    n_theta: int = N_THETA_DEFAULT
    tol: float = REL_TOL_DEFAULT

    def __post_init__(self):
        if self.n_t < 2 or self.n_theta < 2:
            raise ValueError("need at least 2 nodes per direction")


@dataclass(frozen=True)
class ZetaValue:
    """Normalized zeta value Z/|phi|^2 of a case, as an exact ratio."""

    ratio: Fraction
    case: DualPairCase

    def __post_init__(self):
        if self.ratio <= 0:
            raise ValueError(f"zeta ratio must be positive, got {self.ratio}")


@lru_cache(maxsize=None)
def _gl_unit(n):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return (x + 1.0) / 2.0, w / 2.0


@lru_cache(maxsize=None)
def _theta_integral(a, b, n):
    """Rotation-angle moment against the sin(2 theta) measure.

    Integrates sin^a cos^b sin(2 theta) over [0, pi/2] with an n-point
    rule; the measure normalizes the a = b = 0 moment to 1.
    """
    x, w = _gl_unit(n)
    th = x * (math.pi / 2)
    vals = np.sin(th) ** a * np.cos(th) ** b * np.sin(2 * th)
    return float((math.pi / 2) * np.dot(w, vals))


@lru_cache(maxsize=None)
def _hyp_at_nodes(a, b, c, n):
    """2F1(a, b; c; 1 - x^4) at the radial nodes, as an array."""
    x, _ = _gl_unit(n)
    return np.array([gauss_2f1_node(a, b, c, 1.0 - xx ** 4) for xx in x])


@lru_cache(maxsize=None)
def _radial_integral(chamber, r, s, i, e0, n):
    """Integral of cosh^e0 ctilde_i against the radial density.

    The density is 2 sinh^3 t cosh t dt. In the variable u = sech t the
    integral becomes 2 int_0^1 u^(m) (1 - u^2) g(u) du where g carries the
    chamber-III hypergeometric factor; the rule substitutes u = x^2 to
    cluster nodes at the endpoint where that factor can be singular.
    """
    if chamber == "I":
        m = i + s - e0 - 5
        decay = m
    elif chamber == "II":
        m = -(i + s) - e0 - 5
        decay = m
    elif chamber == "III":
        m = i - s - e0 - 3
        decay = m + 2 * min(0, r + s - i)
    else:
        raise ValueError(f"unknown chamber {chamber!r}")
    if decay < 1:
        raise ValueError(
            f"radial integral diverges: chamber {chamber}, i = {i}, e0 = {e0}")
    x, w = _gl_unit(n)
    vals = x ** (2 * m + 1) * (1.0 - x ** 4)
    if chamber == "III":
        vals = vals * _hyp_at_nodes(1 + i, 1 - s, r + 2, n)
    return float(4.0 * np.dot(w, vals))


def radial_moment(n):
    """Exact value of the pure radial moment with cosh^(-2n).

    Integrates (cosh t)^(-2n) against 2 sinh^3 t cosh t dt, which equals
    1/((n - 2)(n - 1)) and needs n >= 3 to converge.
    """
    if n < 3:
        raise InvalidN(f"moment diverges for n = {n}")
    return Fraction(1, (n - 2) * (n - 1))


def radial_moment_quad(n, n_nodes=N_T_DEFAULT):
    """Quadrature route to radial_moment, through the same radial rule."""
    if n < 3:
        raise InvalidN(f"moment diverges for n = {n}")
    return _radial_integral("I", 0, 0, 0, -2 * n, n_nodes)


def _zeta_from_phase_laurents(weil, psi, chamber, r, s, config):
    """Quadrature value of the zeta integrand given its two phase factors."""
    atoms = (weil * psi).constant_term()
    total = 0.0
    for (e0, e1, e2, e3, e4, tag), q in atoms.items():
        if not q:
            continue
        assert tag is not None, "every surviving term carries a radial handle"
        total += (float(q)
                  * _theta_integral(e1, e2, config.n_theta)
                  * _theta_integral(e3, e4, config.n_theta)
                  * _radial_integral(chamber, r, s, tag, e0, config.n_t))
    return total


def zeta_numeric(case, config=None):
    """Zeta value by quadrature in polar coordinates, normalized by |phi|^2.

    Parameters
    ----------
    case : DualPairCase
        Must lie in a discrete-series regime.
    config : QuadratureConfig, optional

    Returns
    -------
    float
    """
    cfg = config if config is not None else QuadratureConfig()
    if case.subcase is None:
        raise BoundaryParameter(f"{case!r} has no discrete-series subcase")
    chamber = case.subcase
    r, s = case.rs
    weil = weil_closed_form(case)
    psi = psi_phase_laurent(case.blattner_Lambda, chamber, r, s)
    return _zeta_from_phase_laurents(weil, psi, chamber, r, s, cfg)


def zeta_closed_form(case):
    """Closed form of the normalized zeta value, as an exact ZetaValue.

    The chamber-II row of case C1 is the telescoped radial sum with the
    case's own gap s = alpha - mu1 - 1; the alpha-shifted denominator
    sometimes quoted for it belongs to a different gap and fails both the
    quadrature route and the duality with case D1 chamber I.
    """
    if case.subcase is None:
        raise BoundaryParameter(f"{case!r} has no discrete-series subcase")
    p, tag, sub = case.params, case.tag, case.subcase
    if tag == "A":
        den = ((p["mu1"] - p["mu2"] + 1) * (p["mu1"] + p["nu"] + 2)
               * (p["mu2"] + p["nu"] + 1))
    elif tag == "B":
        den = ((p["nu1"] - p["nu2"] + 1) * (p["nu1"] + p["alpha"] + 2)
               * (p["nu2"] + p["alpha"] + 1))
    elif tag == "C1":
        gap = p["mu1"] - p["mu2"] + 1
        if sub == "I":
            den = gap * (p["alpha"] - 1) * p["alpha"]
        elif sub == "II":
            den = gap * p["mu2"] * (p["mu1"] + 1)
        else:
            den = gap * (p["mu1"] + 1) * p["alpha"]
    elif tag == "C2":
        if sub == "II":
            den = (p["nu"] + p["mu"] + 1) * (p["beta"] + p["mu"] + 1) * p["beta"]
        elif sub == "III":
            den = p["nu"] * (p["nu"] + p["mu"] + 1) * (p["beta"] + p["mu"] + 1)
        else:
            raise ValueError("case C2 has no chamber-I regime")
    elif tag == "D1":
        gap = p["nu1"] - p["nu2"] + 1
        if sub == "I":
            den = gap * p["nu2"] * (p["nu1"] + 1)
        elif sub == "II":
            den = gap * (p["beta"] - 1) * p["beta"]
        else:
            den = gap * (p["nu1"] + 1) * p["beta"]
    else:
        if sub == "I":
            den = (p["mu"] + p["nu"] + 1) * (p["alpha"] + p["nu"] + 1) * p["alpha"]
        elif sub == "III":
            den = p["mu"] * (p["mu"] + p["nu"] + 1) * (p["alpha"] + p["nu"] + 1)
        else:
            raise ValueError("case D2 has no chamber-II regime")
    return ZetaValue(Fraction(1, den), case)


_HALF = Fraction(1, 2)
_THREE_HALF = Fraction(3, 2)


def _nonneg_int(x):
    """The Fraction as a nonnegative int, or None."""
    if x.denominator != 1 or x < 0:
        return None
    return int(x)


def _pat_a(l1, l2, l3):
    mu2, mu1, nu = _nonneg_int(-l1 - _HALF), _nonneg_int(-l2 - _THREE_HALF), _nonneg_int(l3 - _HALF)
    if None in (mu1, mu2, nu) or mu1 < mu2:
        return None
    return Fraction(1)


def _pat_b(l1, l2, l3):
    nu1, nu2, al = _nonneg_int(l1 - _THREE_HALF), _nonneg_int(l2 - _HALF), _nonneg_int(-l3 - _HALF)
    if None in (nu1, nu2, al) or nu1 < nu2:
        return None
    return Fraction(1)


def _pat_c1_i(l1, l2, l3):
    mu2, mu1, al = _nonneg_int(-l1 - _HALF), _nonneg_int(-l2 - _THREE_HALF), _nonneg_int(_THREE_HALF - l3)
    if None in (mu1, mu2, al) or not al - 4 >= mu1 >= mu2:
        return None
    return Fraction((al - mu1 - 3) * (al - mu2 - 2), (al - 1) * al)


def _pat_c1_ii(l1, l2, l3):
    # denominator telescoped from the same radial sum as the zeta row,
    # mirroring the D1 chamber-I pattern under duality
    mu2, mu1, al = _nonneg_int(_HALF - l1), _nonneg_int(-l2 - _HALF), _nonneg_int(-l3 - _HALF)
    if None in (mu1, mu2, al) or not mu1 >= mu2 >= al + 2:
        return None
    return Fraction((mu2 - al - 1) * (mu1 - al), mu2 * (mu1 + 1))


def _pat_c1_iii(l1, l2, l3):
    mu2, mu1, al = _nonneg_int(-l1 - _HALF), _nonneg_int(-l2 - _HALF), _nonneg_int(_HALF - l3)
    if None in (mu1, mu2, al) or not mu1 >= al >= mu2 + 2:
        return None
    return Fraction((mu1 - mu2) * (mu1 - al + 1) * (al - mu2 - 1),
                    (mu1 - mu2 + 1) * (mu1 + 1) * al)


def _pat_c2_ii(l1, l2, l3):
    nu, mu, be = _nonneg_int(l1 - _HALF), _nonneg_int(-l2 - _HALF), _nonneg_int(l3 + _HALF)
    if None in (nu, mu, be) or not be >= nu + 2:
        return None
    return Fraction((be + mu) * (be - nu - 1), (be + mu + 1) * be)


def _pat_c2_iii(l1, l2, l3):
    nu, mu, be = _nonneg_int(l1 + _HALF), _nonneg_int(-l2 - _HALF), _nonneg_int(l3 - _HALF)
    if None in (nu, mu, be) or not nu >= be + 2:
        return None
    return Fraction((nu - be - 1) * (nu + mu), nu * (nu + mu + 1))


def _pat_d1_i(l1, l2, l3):
    nu1, nu2, be = _nonneg_int(l1 - _HALF), _nonneg_int(l2 + _HALF), _nonneg_int(l3 - _HALF)
    if None in (nu1, nu2, be) or not nu1 >= nu2 >= be + 2:
        return None
    return Fraction((nu1 - be) * (nu2 - be - 1), (nu1 + 1) * nu2)


def _pat_d1_ii(l1, l2, l3):
    nu1, nu2, be = _nonneg_int(l1 - _THREE_HALF), _nonneg_int(l2 - _HALF), _nonneg_int(l3 + _THREE_HALF)
    if None in (nu1, nu2, be) or not be - 4 >= nu1 >= nu2:
        return None
    return Fraction((be - nu1 - 3) * (be - nu2 - 2), (be - 1) * be)


def _pat_d1_iii(l1, l2, l3):
    nu1, nu2, be = _nonneg_int(l1 - _HALF), _nonneg_int(l2 - _HALF), _nonneg_int(l3 + _HALF)
    if None in (nu1, nu2, be) or not nu1 >= be >= nu2 + 2:
        return None
    return Fraction((nu1 - nu2) * (nu1 - be + 1) * (be - nu2 - 1),
                    (nu1 - nu2 + 1) * (nu1 + 1) * be)


def _pat_d2_i(l1, l2, l3):
    nu, mu, al = _nonneg_int(l1 - _HALF), _nonneg_int(-l2 - _HALF), _nonneg_int(_HALF - l3)
    if None in (nu, mu, al) or not al >= mu + 2:
        return None
    return Fraction((al + nu) * (al - mu - 1), (al + nu + 1) * al)


def _pat_d2_iii(l1, l2, l3):
    nu, mu, al = _nonneg_int(l1 - _HALF), _nonneg_int(_HALF - l2), _nonneg_int(-l3 - _HALF)
    if None in (nu, mu, al) or not mu >= al + 2:
        return None
    return Fraction((mu - al - 1) * (mu + nu), mu * (mu + nu + 1))


_C2_PATTERNS = (
    ("A", _pat_a),
    ("B", _pat_b),
    ("C1-I", _pat_c1_i),
    ("C1-II", _pat_c1_ii),
    ("C1-III", _pat_c1_iii),
    ("C2-II", _pat_c2_ii),
    ("C2-III", _pat_c2_iii),
    ("D1-I", _pat_d1_i),
    ("D1-II", _pat_d1_ii),
    ("D1-III", _pat_d1_iii),
    ("D2-I", _pat_d2_i),
    ("D2-III", _pat_d2_iii),
)


def _as_hc_param(lam):
    return lam if isinstance(lam, HCParam) else HCParam(*lam)


def c_squared_projection(lam):
    """Projection constant c^2 for the parameter, an exact Fraction.

    Tries the twelve printed patterns; the two compact ones both give 1.

    Raises
    ------
    NoPatternMatch
        When no pattern applies.
    """
    lam = _as_hc_param(lam)
    l1, l2, l3 = (x.as_fraction() for x in lam.entries())
    hits = [(name, f(l1, l2, l3)) for name, f in _C2_PATTERNS]
    hits = [(name, v) for name, v in hits if v is not None]
    if not hits:
        raise NoPatternMatch(f"no projection pattern matches {lam}")
    values = {v for _, v in hits}
    if len(values) > 1:
        raise RuntimeError(f"patterns disagree at {lam}: {hits}")
    return hits[0][1]


def consistency_check(lam):
    """Exact check that c^2 equals the formal degree times the zeta ratio."""
    lam = _as_hc_param(lam)
    case = case_from_hc_param(lam)
    c2 = c_squared_projection(lam)
    return c2 == formal_degree(lam) * zeta_closed_form(case).ratio
