"""Oscillator-model vectors and their torus matrix coefficients.

Builds the joint-harmonic polynomial attached to each dual-pair case, checks
harmonicity and weights exactly, evaluates the printed closed forms for the
matrix coefficient along k'^(-1) a_t k, and cross-checks them with an
independent oracle that computes the kernel action term by term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import FockPolynomial, GaussianRational, PhaseLaurent, binomial, vindex
from .repparams import CASE_SIGNATURE, DualPairCase, pair_angles

DEGREE_CAP_DEFAULT = 12


class DegreeCap(Exception):
    """The vector's degree exceeds the oracle's expansion budget."""


@dataclass(frozen=True)
class PiRational:
    """Exact value q * pi^(-d)."""

    q: Fraction
    d: int

    def __float__(self):
        return float(self.q) * math.pi ** (-self.d)

    def __mul__(self, other):
        return PiRational(self.q * Fraction(other), self.d)

    __rmul__ = __mul__


def _z(i, j):
    return FockPolynomial.variable(i, j)


def build_phi(case):
    """The matched joint-harmonic polynomial of a dual-pair case."""
    p = case.params
    if case.tag == "A":
        r = p["mu1"] - p["mu2"]
        det = _z(1, 1) * _z(2, 2) - _z(2, 1) * _z(1, 2)
        return (_z(1, 1) ** r) * (det ** p["mu2"]) * (_z(3, 3) ** p["nu"])
    if case.tag == "B":
        r = p["nu1"] - p["nu2"]
        det = _z(1, 2) * _z(2, 3) - _z(2, 2) * _z(1, 3)
        return (_z(2, 3) ** r) * (det ** p["nu2"]) * (_z(3, 1) ** p["alpha"])
    if case.tag == "C1":
        r = p["mu1"] - p["mu2"]
        det = _z(1, 1) * _z(2, 2) - _z(2, 1) * _z(1, 2)
        return (_z(1, 1) ** r) * (det ** p["mu2"]) * (_z(3, 3) ** p["alpha"])
    if case.tag == "C2":
        return (_z(1, 1) ** p["mu"]) * (_z(2, 3) ** p["nu"]) * (_z(3, 2) ** p["beta"])
    if case.tag == "D1":
        r = p["nu1"] - p["nu2"]
        det = _z(1, 2) * _z(2, 3) - _z(2, 2) * _z(1, 3)
        return (_z(2, 3) ** r) * (det ** p["nu2"]) * (_z(3, 1) ** p["beta"])
    if case.tag == "D2":
        return (_z(1, 1) ** p["mu"]) * (_z(2, 3) ** p["nu"]) * (_z(3, 2) ** p["alpha"])
    raise ValueError(f"unknown case tag {case.tag!r}")


@dataclass
class HarmonicVector:
    """A dual-pair case together with its matched polynomial."""

    case: DualPairCase
    phi: FockPolynomial

    @property
    def norm_sq(self):
        return poly_norm_sq(self.phi)


def build_harmonic(case):
    return HarmonicVector(case=case, phi=build_phi(case))


def fock_inner_product(p, q):
    """Fock pairing sum_a p_a conj(q_a) a! / pi^|a|.

    Returns
    -------
    dict
        pi-power |a| -> GaussianRational coefficient.
    """
    out = {}
    for exps, c1 in p.terms.items():
        c2 = q.terms.get(exps)
        if c2 is None:
            continue
        fact = 1
        for e in exps:
            fact *= math.factorial(e)
        d = sum(exps)
        contrib = c1 * c2.conjugate() * fact
        acc = out.get(d)
        s = contrib if acc is None else acc + contrib
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def poly_norm_sq(phi):
    """Squared Fock norm of a homogeneous polynomial as a PiRational."""
    if phi.is_zero():
        return PiRational(Fraction(0), 0)
    ip = fock_inner_product(phi, phi)
    if len(ip) != 1:
        raise ValueError("norm of a non-homogeneous polynomial")
    (d, val), = ip.items()
    if val.im != 0:
        raise ValueError("norm must be real")
    return PiRational(val.re, d)


def phi_norm_sq(case):
    """Squared norm of the case's matched vector."""
    return poly_norm_sq(build_phi(case))


def norm_sq_det_shape(a, n, b):
    """Squared norm of a det-shape vector x^r det^n y^b with r = a - n.

    Cases A, B, C1, D1 have this shape with (a, n, b) = (mu1, mu2, nu),
    (nu1, nu2, alpha), (mu1, mu2, alpha), (nu1, nu2, beta). The value is
    n! b! (a+1)! / (r+1) times pi^-(a+n+b).
    """
    r = a - n
    if r < 0:
        raise ValueError("need a >= n")
    q = Fraction(math.factorial(n) * math.factorial(b) * math.factorial(a + 1), r + 1)
    return PiRational(q, a + n + b)


# Annihilation operators certifying joint harmonicity. Each operator is a
# list of ((i1,j1),(i2,j2)) pairs, meaning the sum of the corresponding
# second-order mixed partials. The two families correspond to the two
# members of the dual pair.

_FAMILY = {"A": "A", "B": "A", "C1": "C", "C2": "C", "D1": "D", "D2": "D"}

_M_OPS = {
    "A": [
        [((1, 1), (3, 1)), ((1, 2), (3, 2)), ((1, 3), (3, 3))],
        [((2, 1), (3, 1)), ((2, 2), (3, 2)), ((2, 3), (3, 3))],
    ],
    "C": [
        [((1, 1), (3, 1)), ((1, 2), (3, 2))],
        [((1, 3), (3, 3))],
        [((2, 1), (3, 1)), ((2, 2), (3, 2))],
        [((2, 3), (3, 3))],
    ],
    "D": [
        [((1, 1), (3, 1))],
        [((1, 2), (3, 2)), ((1, 3), (3, 3))],
        [((2, 1), (3, 1))],
        [((2, 2), (3, 2)), ((2, 3), (3, 3))],
    ],
}

_M_PRIME_OPS = {
    "A": [],
    "C": [
        [((1, 1), (1, 3)), ((2, 1), (2, 3))],
        [((1, 2), (1, 3)), ((2, 2), (2, 3))],
        [((3, 1), (3, 3))],
        [((3, 2), (3, 3))],
    ],
    "D": [
        [((1, 1), (1, 2)), ((2, 1), (2, 2))],
        [((1, 1), (1, 3)), ((2, 1), (2, 3))],
        [((3, 1), (3, 2))],
        [((3, 1), (3, 3))],
    ],
}

_EPS = (1, 1, -1)

_EPS_PRIME = {"A": (1, 1, 1), "B": (-1, -1, -1), "C": (1, 1, -1), "D": (1, -1, -1)}


def _eps_prime(tag):
    return _EPS_PRIME[tag if tag in ("A", "B") else _FAMILY[tag]]


def apply_operator(op, phi):
    """Apply a sum of second-order mixed partials to phi."""
    out = FockPolynomial.zero()
    for (i1, j1), (i2, j2) in op:
        out = out + phi.diff(i1, j1).diff(i2, j2)
    return out


def harmonicity_check(h):
    """True when every annihilation operator of both families kills phi."""
    fam = _FAMILY[h.case.tag]
    for op in _M_OPS[fam] + _M_PRIME_OPS[fam]:
        if not apply_operator(op, h.phi).is_zero():
            return False
    return True


def weight_check(h):
    """True when phi has the case's exact torus weights on both sides.

    Checks every monomial against sigma_dual (first member) and sigma_prime
    (second member); a single mismatched exponent fails the check.
    """
    case = h.case
    eps_p = _eps_prime(case.tag)
    rp, sp = CASE_SIGNATURE[case.tag]
    half_shift = Fraction(rp - sp, 2)
    sd = [x.as_fraction() for x in case.sigma_dual]
    spr = [x.as_fraction() for x in case.sigma_prime]
    for exps in h.phi.terms:
        for i in range(3):
            acc = sum(eps_p[j] * exps[vindex(i + 1, j + 1)] for j in range(3))
            if _EPS[i] * (acc + half_shift) != sd[i]:
                return False
        for j in range(3):
            acc = sum(_EPS[i] * exps[vindex(i + 1, j + 1)] for i in range(3))
            if eps_p[j] * (acc + Fraction(1, 2)) != spr[j]:
                return False
    return True


# Closed forms for the normalized matrix coefficient along k'^(-1) a_t k.
# Pair-variable order: (zeta, xi, eta, gamma). Trig atoms live in the
# exponent tuple (e1, e2, e3, e4) = (sin th, cos th, sin th', cos th').

_CC = (0, 1, 0, 1)
_SS = (1, 0, 1, 0)


def _expand_pair_binomial(n, part_a, part_b):
    """(cosh^a0 trig_a + p_zeta^(atw/2) ... )^n as a PhaseLaurent.

    Each part is (cosh exponent, trig tuple, twice-exponent of the zeta pair).
    """
    (a0, at, atw), (b0, bt, btw) = part_a, part_b
    out = PhaseLaurent.zero()
    for k in range(n + 1):
        j = n - k
        tw = (atw * j + btw * k, 0, 0, 0)
        atom = (a0 * j + b0 * k,
                at[0] * j + bt[0] * k, at[1] * j + bt[1] * k,
                at[2] * j + bt[2] * k, at[3] * j + bt[3] * k, None)
        out = out + PhaseLaurent.term(tw, {atom: binomial(n, k)})
    return out


def weil_closed_form(case):
    """Printed closed form of the normalized coefficient as a PhaseLaurent."""
    p = case.params
    tag = case.tag
    if tag == "A":
        r = p["mu1"] - p["mu2"]
        pre = PhaseLaurent.term(
            (2 * p["mu2"] + 3, 2 * p["mu1"] + 3, 2 * p["mu2"] + 3, -(2 * p["nu"] + 3)),
            {(-(p["mu2"] + p["nu"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        return pre * _expand_pair_binomial(r, (-1, _CC, 0), (0, _SS, 2))
    if tag == "B":
        r = p["nu1"] - p["nu2"]
        pre = PhaseLaurent.term(
            (-(2 * p["nu1"] + 3), -(2 * p["nu2"] + 3), -(2 * p["nu1"] + 3), 2 * p["alpha"] + 3),
            {(-(p["nu2"] + p["alpha"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        return pre * _expand_pair_binomial(r, (0, _CC, 0), (-1, _SS, 2))
    if tag == "C1":
        r = p["mu1"] - p["mu2"]
        pre = PhaseLaurent.term(
            (2 * p["mu2"] + 1, 2 * p["mu1"] + 1, 2 * p["mu2"] + 1, 2 * p["alpha"] - 1),
            {(-(p["mu2"] + p["alpha"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        return pre * _expand_pair_binomial(r, (-1, _CC, 0), (0, _SS, 2))
    if tag == "C2":
        pre = PhaseLaurent.term(
            (1, 2 * p["mu"] + 1, -(2 * p["nu"] - 1), -(2 * p["beta"] + 1)),
            {(-(p["beta"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        first = _expand_pair_binomial(p["mu"], (-1, _CC, 0), (0, _SS, 2))
        second = _expand_pair_binomial(p["nu"], (-1, _SS, 0), (0, _CC, -2))
        return pre * first * second
    if tag == "D1":
        r = p["nu1"] - p["nu2"]
        pre = PhaseLaurent.term(
            (-(2 * p["nu1"] + 1), -(2 * p["nu2"] + 1), -(2 * p["nu1"] + 1), -(2 * p["beta"] - 1)),
            {(-(p["nu2"] + p["beta"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        return pre * _expand_pair_binomial(r, (0, _CC, 0), (-1, _SS, 2))
    if tag == "D2":
        pre = PhaseLaurent.term(
            (-1, 2 * p["mu"] - 1, -(2 * p["nu"] + 1), 2 * p["alpha"] + 1),
            {(-(p["alpha"] + 3), 0, 0, 0, 0, None): Fraction(1)})
        first = _expand_pair_binomial(p["mu"], (-1, _CC, 0), (0, _SS, 2))
        second = _expand_pair_binomial(p["nu"], (-1, _SS, 0), (0, _CC, -2))
        return pre * first * second
    raise ValueError(f"unknown case tag {tag!r}")


def weil_coeff(case, t, k, kp):
    """Normalized matrix coefficient at k'^(-1) a_t k from the closed form."""
    return weil_closed_form(case).evaluate(t, k.theta, kp.theta, pair_angles(k, kp))


# Independent oracle: act on phi with the compact substitution, then with the
# kernel expansion of a_t, and pair in the Fock model. Works with complex
# float coefficients on the same sparse-exponent layout.

_ZERO9 = (0,) * 9

# Columns on which the second member acts by the first block (per family).
_POS_COLS = {"A": (1, 2, 3), "B": (), "C": (1, 2), "D": (1,)}


def _pos_cols(tag):
    return _POS_COLS[tag if tag in ("A", "B") else _FAMILY[tag]]


def _cp_mul(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0j) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _cp_linear_power(lin, n):
    """(sum_i c_i z_{w_i})^n for a short linear form given as [(c, w), ...]."""
    out = {_ZERO9: 1 + 0j}
    for _ in range(n):
        nxt = {}
        for e, c in out.items():
            for coef, w in lin:
                e2 = list(e)
                e2[w] += 1
                e2 = tuple(e2)
                nxt[e2] = nxt.get(e2, 0j) + c * coef
        out = nxt
    return out


def _cp_substitute(poly, table):
    """Linear substitution z_v -> sum (c, w) from table[v]."""
    out = {}
    for exps, coeff in poly.items():
        cur = {_ZERO9: coeff}
        for v, e in enumerate(exps):
            if e == 0:
                continue
            cur = _cp_mul(cur, _cp_linear_power(table[v], e))
        for e2, c2 in cur.items():
            out[e2] = out.get(e2, 0j) + c2
    return {e: c for e, c in out.items() if c != 0}


def _compact_action(case, k, phi_c):
    """omega(k) phi as a complex sparse polynomial."""
    tag = case.tag
    rp, sp = CASE_SIGNATURE[tag]
    half = (rp - sp) / 2.0
    block = k.block()
    pos = set(_pos_cols(tag))
    table = []
    eg = cmath.exp(1j * k.gamma)
    for i in range(1, 4):
        for j in range(1, 4):
            if i <= 2:
                if j in pos:
                    table.append([(block[l][i - 1], vindex(l + 1, j)) for l in range(2)])
                else:
                    table.append([(block[l][i - 1].conjugate(), vindex(l + 1, j)) for l in range(2)])
            else:
                table.append([(eg.conjugate() if j in pos else eg, vindex(3, j))])
    det_phase = cmath.exp(1j * ((k.zeta + k.xi + k.eta) * half - k.gamma * half))
    out = _cp_substitute(phi_c, table)
    return {e: c * det_phase for e, c in out.items()}


def _d_operator(poly):
    """D = sum_j d/dz_1j d/dz_3j applied to a complex sparse polynomial."""
    out = {}
    for exps, coeff in poly.items():
        for j in range(1, 4):
            v1, v3 = vindex(1, j), vindex(3, j)
            a, b = exps[v1], exps[v3]
            if a == 0 or b == 0:
                continue
            e = list(exps)
            e[v1] -= 1
            e[v3] -= 1
            e = tuple(e)
            out[e] = out.get(e, 0j) + coeff * a * b
    return out


def _l_multiply(poly):
    """Multiply by L = sum_j z_1j z_3j."""
    out = {}
    for exps, coeff in poly.items():
        for j in range(1, 4):
            e = list(exps)
            e[vindex(1, j)] += 1
            e[vindex(3, j)] += 1
            e = tuple(e)
            out[e] = out.get(e, 0j) + coeff
    return out


def _row_scale(poly, sech):
    """Scale rows 1 and 3 of the argument by sech t."""
    out = {}
    for exps, coeff in poly.items():
        deg13 = sum(exps[vindex(1, j)] + exps[vindex(3, j)] for j in range(1, 4))
        out[exps] = coeff * sech ** deg13
    return out


def bargmann_oracle(case, t, k, kp, degree_cap=DEGREE_CAP_DEFAULT):
    """Normalized matrix coefficient at k'^(-1) a_t k from the kernel action.

    Expands the kernel of the radial element order by order against the
    compact actions on both sides and pairs in the Fock model; no printed
    coefficient formula is used. Intended as an independent oracle for
    weil_coeff at small parameters.

    Parameters
    ----------
    case : DualPairCase
    t : float
    k, kp : KPoint
    degree_cap : int
        Upper bound on the vector's degree; DegreeCap is raised beyond it.

    Returns
    -------
    complex
    """
    phi = build_phi(case)
    d = phi.degree()
    if d > degree_cap:
        raise DegreeCap(f"degree {d} exceeds cap {degree_cap}")
    phi_c = {e: complex(c) for e, c in phi.terms.items()}
    f1 = _compact_action(case, k, phi_c)
    f3 = _compact_action(case, kp, phi_c)

    tau = math.tanh(t)
    sech = 1.0 / math.cosh(t)
    f2 = {}
    dm = dict(f1)
    for m in range(d // 2 + 1):
        if not dm and m > 0:
            break
        contrib = _row_scale(dm, sech)
        for _ in range(m):
            contrib = _l_multiply(contrib)
        scale = (-1.0) ** m * tau ** (2 * m) / math.factorial(m) ** 2
        for e, c in contrib.items():
            f2[e] = f2.get(e, 0j) + c * scale
        dm = _d_operator(dm)
    pref = math.cosh(t) ** -3

    total = 0j
    for exps, c2 in f2.items():
        c3 = f3.get(exps)
        if c3 is None:
            continue
        fact = 1
        for e in exps:
            fact *= math.factorial(e)
        total += c2 * c3.conjugate() * fact * math.pi ** (-sum(exps))
    return pref * total / float(phi_norm_sq(case))
