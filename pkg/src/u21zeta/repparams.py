"""Parameter bookkeeping for holomorphic-type discrete series on U(2,1).

Harish-Chandra parameters, chamber classification, lowest-K-type data, the
contragredient map, formal degrees, the six dual-pair weight patterns with
their subcase regimes, and the maximal-compact parameterization used by the
numeric evaluators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import HalfInt

CHAMBERS = ("I", "II", "III")

# Lambda = lam + delta(chamber), delta = rho(chamber) - 2 rho_c.
_DELTA = {"I": (0, 1, -1), "II": (-1, 0, 1), "III": (0, 0, 0)}
_RHO = {"I": (1, 0, -1), "II": (0, -1, 1), "III": (1, -1, 0)}
RHO_C = (Fraction(1, 2), Fraction(-1, 2), Fraction(0))

CASE_TAGS = ("A", "B", "C1", "C2", "D1", "D2")

CASE_PARAM_NAMES = {
    "A": ("mu1", "mu2", "nu"),
    "B": ("nu1", "nu2", "alpha"),
    "C1": ("mu1", "mu2", "alpha"),
    "C2": ("mu", "nu", "beta"),
    "D1": ("nu1", "nu2", "beta"),
    "D2": ("mu", "nu", "alpha"),
}

# Signature (p', q') of the second member of the dual pair.
CASE_SIGNATURE = {
    "A": (3, 0), "B": (0, 3), "C1": (2, 1), "C2": (2, 1), "D1": (1, 2), "D2": (1, 2),
}


class NotRegular(Exception):
    """The parameter has a repeated entry."""


class NotCompactDominant(Exception):
    """The parameter violates lam1 > lam2."""


class NoCaseMatch(Exception):
    """The weight fits none of the six dual-pair patterns."""


class BoundaryParameter(Exception):
    """The weight fits a pattern but falls in a gap between subcase regimes."""


def _half_triple(entries):
    out = tuple(HalfInt.of(x) for x in entries)
    if len(out) != 3:
        raise ValueError("expected three entries")
    return out


@dataclass(frozen=True)
class HCParam:
    """Harish-Chandra parameter (lam1, lam2, lam3), genuine and compact dominant.

    Entries live in 1/2 + Z, must be pairwise distinct, and satisfy
    lam1 > lam2.
    """

    lam1: HalfInt
    lam2: HalfInt
    lam3: HalfInt

    def __init__(self, lam1, lam2, lam3):
        l1, l2, l3 = _half_triple((lam1, lam2, lam3))
        for x in (l1, l2, l3):
            if x.twice % 2 == 0:
                raise ValueError(f"entry {x} is not in 1/2 + Z")
        if len({l1.twice, l2.twice, l3.twice}) != 3:
            raise NotRegular(f"repeated entry in ({l1}, {l2}, {l3})")
        if not l1 > l2:
            raise NotCompactDominant(f"need lam1 > lam2, got ({l1}, {l2})")
        object.__setattr__(self, "lam1", l1)
        object.__setattr__(self, "lam2", l2)
        object.__setattr__(self, "lam3", l3)

    @classmethod
    def parse(cls, text):
        """Parse three space-separated half-integers, e.g. '-1/2 -5/2 -3/2'."""
        parts = text.split()
        if len(parts) != 3:
            raise ValueError(f"expected three entries, got {len(parts)} in {text!r}")
        return cls(*(HalfInt.parse(p) for p in parts))

    def entries(self):
        return (self.lam1, self.lam2, self.lam3)

    def __str__(self):
        return f"{self.lam1} {self.lam2} {self.lam3}"


def classify_chamber(lam):
    """Chamber of a Harish-Chandra parameter.

    I when lam1 > lam2 > lam3, II when lam3 > lam1 > lam2, III when
    lam1 > lam3 > lam2.
    """
    l1, l2, l3 = lam.entries()
    if l1 > l2 > l3:
        return "I"
    if l3 > l1 > l2:
        return "II"
    if l1 > l3 > l2:
        return "III"
    raise NotCompactDominant(f"({l1}, {l2}, {l3}) is not compact dominant")


@dataclass(frozen=True)
class BlattnerParam:
    """Lowest-K-type data: Lambda triple plus the derived (r, s) and chamber."""

    Lambda: tuple
    r: int
    s: int
    chamber: str


def blattner(lam):
    """Lowest-K-type parameter Lambda = lam + delta(chamber) with (r, s).

    r = Lambda1 - Lambda2 (a nonnegative integer) and s = Lambda2 - Lambda3.
    """
    chamber = classify_chamber(lam)
    d = _DELTA[chamber]
    L = tuple(x + dx for x, dx in zip(lam.entries(), d))
    r = (L[0] - L[1]).twice // 2
    s = (L[1] - L[2]).twice // 2
    if r < 0:
        raise NotCompactDominant(f"Lambda not dominant for lam = {lam}")
    return BlattnerParam(Lambda=L, r=r, s=s, chamber=chamber)


def chamber_of_rs(r, s):
    """Chamber determined by the lowest-K-type gaps (r, s).

    Returns None when (r, s) lies outside the three regions (no discrete
    series with these gaps).
    """
    if r < 0:
        return None
    if s >= 3:
        return "I"
    if r + s <= -3:
        return "II"
    if s <= -1 and r + s >= 1:
        return "III"
    return None


def dual_param(lam):
    """Harish-Chandra parameter of the contragredient: (-lam2, -lam1, -lam3)."""
    return HCParam(-lam.lam2, -lam.lam1, -lam.lam3)


def sigma_dual_of(lam):
    """Weight sigma-dual = (-Lambda2, -Lambda1, -Lambda3) of the dual's lowest K-type."""
    b = blattner(lam)
    return (-b.Lambda[1], -b.Lambda[0], -b.Lambda[2])


def formal_degree(lam):
    """|(lam1-lam2)(lam2-lam3)(lam1-lam3)| as an exact Fraction."""
    l1, l2, l3 = (x.as_fraction() for x in lam.entries())
    return abs((l1 - l2) * (l2 - l3) * (l1 - l3))


def rho_vectors(chamber):
    """(rho(chamber), rho_c) as Fraction triples."""
    if chamber not in CHAMBERS:
        raise ValueError(f"unknown chamber {chamber!r}")
    return tuple(Fraction(x) for x in _RHO[chamber]), RHO_C


# Sigma-dual patterns: for each case, coefficients such that
# sigma_dual[k] = sign[k] * (param[pos[k]] + offset[k]) with offset in
# half-integers. Stored as functions param dict -> HalfInt triple.

def _sd_A(p):
    return (HalfInt(2 * p["mu1"] + 3), HalfInt(2 * p["mu2"] + 3), HalfInt(-2 * p["nu"] - 3))


def _sd_B(p):
    return (HalfInt(-2 * p["nu2"] - 3), HalfInt(-2 * p["nu1"] - 3), HalfInt(2 * p["alpha"] + 3))


def _sd_C1(p):
    return (HalfInt(2 * p["mu1"] + 1), HalfInt(2 * p["mu2"] + 1), HalfInt(2 * p["alpha"] - 1))


def _sd_C2(p):
    return (HalfInt(2 * p["mu"] + 1), HalfInt(-2 * p["nu"] + 1), HalfInt(-2 * p["beta"] - 1))


def _sd_D1(p):
    return (HalfInt(-2 * p["nu2"] - 1), HalfInt(-2 * p["nu1"] - 1), HalfInt(-2 * p["beta"] + 1))


def _sd_D2(p):
    return (HalfInt(2 * p["mu"] - 1), HalfInt(-2 * p["nu"] - 1), HalfInt(2 * p["alpha"] + 1))


_SIGMA_DUAL = {"A": _sd_A, "B": _sd_B, "C1": _sd_C1, "C2": _sd_C2, "D1": _sd_D1, "D2": _sd_D2}

# G'-side weight patterns (the second member's torus eigenvalues).


def _sp_A(p):
    return (HalfInt(2 * p["mu1"] + 1), HalfInt(2 * p["mu2"] + 1), HalfInt(-2 * p["nu"] + 1))


def _sp_B(p):
    return (HalfInt(2 * p["alpha"] - 1), HalfInt(-2 * p["nu2"] - 1), HalfInt(-2 * p["nu1"] - 1))


def _sp_C1(p):
    return (HalfInt(2 * p["mu1"] + 1), HalfInt(2 * p["mu2"] + 1), HalfInt(2 * p["alpha"] - 1))


def _sp_C2(p):
    return (HalfInt(2 * p["mu"] + 1), HalfInt(-2 * p["beta"] + 1), HalfInt(-2 * p["nu"] - 1))


def _sp_D1(p):
    return (HalfInt(-2 * p["beta"] + 1), HalfInt(-2 * p["nu2"] - 1), HalfInt(-2 * p["nu1"] - 1))


def _sp_D2(p):
    return (HalfInt(2 * p["mu"] + 1), HalfInt(2 * p["alpha"] - 1), HalfInt(-2 * p["nu"] - 1))


_SIGMA_PRIME = {"A": _sp_A, "B": _sp_B, "C1": _sp_C1, "C2": _sp_C2, "D1": _sp_D1, "D2": _sp_D2}


def _extract(tag, sd):
    """Invert the sigma-dual pattern; returns the param dict or None."""
    t0, t1, t2 = (x.twice for x in sd)
    if tag == "A":
        p = {"mu1": (t0 - 3) // 2, "mu2": (t1 - 3) // 2, "nu": (-t2 - 3) // 2}
        ok = (t0 - 3) % 2 == 0 and (t1 - 3) % 2 == 0 and (-t2 - 3) % 2 == 0 \
            and p["mu1"] >= p["mu2"] >= 0 and p["nu"] >= 0
    elif tag == "B":
        p = {"nu2": (-t0 - 3) // 2, "nu1": (-t1 - 3) // 2, "alpha": (t2 - 3) // 2}
        ok = (-t0 - 3) % 2 == 0 and (-t1 - 3) % 2 == 0 and (t2 - 3) % 2 == 0 \
            and p["nu1"] >= p["nu2"] >= 0 and p["alpha"] >= 0
    elif tag == "C1":
        p = {"mu1": (t0 - 1) // 2, "mu2": (t1 - 1) // 2, "alpha": (t2 + 1) // 2}
        ok = (t0 - 1) % 2 == 0 and (t1 - 1) % 2 == 0 and (t2 + 1) % 2 == 0 \
            and p["mu1"] >= p["mu2"] >= 0 and p["alpha"] >= 0
    elif tag == "C2":
        p = {"mu": (t0 - 1) // 2, "nu": (1 - t1) // 2, "beta": (-t2 - 1) // 2}
        ok = (t0 - 1) % 2 == 0 and (1 - t1) % 2 == 0 and (-t2 - 1) % 2 == 0 \
            and p["mu"] >= 0 and p["nu"] >= 0 and p["beta"] >= 0
    elif tag == "D1":
        p = {"nu2": (-t0 - 1) // 2, "nu1": (-t1 - 1) // 2, "beta": (1 - t2) // 2}
        ok = (-t0 - 1) % 2 == 0 and (-t1 - 1) % 2 == 0 and (1 - t2) % 2 == 0 \
            and p["nu1"] >= p["nu2"] >= 0 and p["beta"] >= 0
    elif tag == "D2":
        p = {"mu": (t0 + 1) // 2, "nu": (-t1 - 1) // 2, "alpha": (t2 - 1) // 2}
        ok = (t0 + 1) % 2 == 0 and (-t1 - 1) % 2 == 0 and (t2 - 1) % 2 == 0 \
            and p["mu"] >= 0 and p["nu"] >= 0 and p["alpha"] >= 0
    else:
        raise ValueError(f"unknown case tag {tag!r}")
    return p if ok else None


def _subcase(tag, p):
    """Subcase chamber for a pattern match, or None in a regime gap."""
    if tag == "A":
        return "II"
    if tag == "B":
        return "I"
    if tag == "C1":
        if p["alpha"] >= p["mu1"] + 4:
            return "I"
        if p["mu2"] >= p["alpha"] + 2:
            return "II"
        if p["mu1"] >= p["alpha"] >= p["mu2"] + 2:
            return "III"
        return None
    if tag == "C2":
        if p["beta"] >= p["nu"] + 2:
            return "II"
        if p["nu"] >= p["beta"] + 2:
            return "III"
        return None
    if tag == "D1":
        if p["nu2"] >= p["beta"] + 2:
            return "I"
        if p["beta"] >= p["nu1"] + 4:
            return "II"
        if p["nu1"] >= p["beta"] >= p["nu2"] + 2:
            return "III"
        return None
    if tag == "D2":
        if p["alpha"] >= p["mu"] + 2:
            return "I"
        if p["mu"] >= p["alpha"] + 2:
            return "III"
        return None
    raise ValueError(f"unknown case tag {tag!r}")


class DualPairCase:
    """One of the six dual-pair weight patterns with its parameters.

    Parameters
    ----------
    tag : str
        One of A, B, C1, C2, D1, D2.
    params : dict
        The named nonnegative integers of the case.
    subcase : str or None
        The chamber of the matched discrete series, or None on a regime
        boundary (cases A and B fill it in automatically).
    """

    __slots__ = ("tag", "params", "subcase")

    def __init__(self, tag, params, subcase=None):
        if tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {tag!r}")
        names = CASE_PARAM_NAMES[tag]
        if set(params) != set(names):
            raise ValueError(f"case {tag} needs parameters {names}, got {sorted(params)}")
        clean = {k: int(params[k]) for k in names}
        for k, v in clean.items():
            if v < 0:
                raise ValueError(f"parameter {k} = {v} must be nonnegative")
        if tag == "A" and clean["mu1"] < clean["mu2"]:
            raise ValueError("case A needs mu1 >= mu2")
        if tag in ("B", "D1") and clean["nu1"] < clean["nu2"]:
            raise ValueError(f"case {tag} needs nu1 >= nu2")
        if tag == "C1" and clean["mu1"] < clean["mu2"]:
            raise ValueError("case C1 needs mu1 >= mu2")
        auto = _subcase(tag, clean)
        if subcase is None:
            subcase = auto
        elif auto is not None and subcase != auto:
            raise ValueError(f"case {tag} {clean} lies in subcase {auto}, not {subcase}")
        if subcase is not None and subcase not in CHAMBERS:
            raise ValueError(f"unknown subcase {subcase!r}")
        self.tag = tag
        self.params = clean
        self.subcase = subcase

    def __eq__(self, other):
        if not isinstance(other, DualPairCase):
            return NotImplemented
        return (self.tag, self.params, self.subcase) == (other.tag, other.params, other.subcase)

    def __repr__(self):
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"DualPairCase({self.tag}, {ps}, subcase={self.subcase})"

    @property
    def sigma_dual(self):
        """Fock-side K-weight of the matched vector."""
        return _SIGMA_DUAL[self.tag](self.params)

    @property
    def sigma_prime(self):
        """Second-member torus weight of the matched vector."""
        return _SIGMA_PRIME[self.tag](self.params)

    @property
    def blattner_Lambda(self):
        """Lowest-K-type triple Lambda = (-sd2, -sd1, -sd3)."""
        sd = self.sigma_dual
        return (-sd[1], -sd[0], -sd[2])

    @property
    def rs(self):
        """(r, s) gaps of the lowest K-type."""
        L = self.blattner_Lambda
        return ((L[0] - L[1]).twice // 2, (L[1] - L[2]).twice // 2)

    def hc_param(self):
        """Harish-Chandra parameter lam = Lambda - delta(subcase).

        Raises BoundaryParameter when the case has no subcase.
        """
        if self.subcase is None:
            raise BoundaryParameter(f"{self!r} has no discrete-series subcase")
        d = _DELTA[self.subcase]
        L = self.blattner_Lambda
        return HCParam(*(x - dx for x, dx in zip(L, d)))


def case_classify(sigma_dual):
    """Match a Fock-side weight against the six dual-pair patterns.

    Parameters
    ----------
    sigma_dual : sequence of three half-integers

    Returns
    -------
    DualPairCase

    Raises
    ------
    NoCaseMatch
        No pattern fits structurally.
    BoundaryParameter
        At least one pattern fits but all matches fall in regime gaps.
    """
    sd = _half_triple(sigma_dual)
    matches = []
    valid = []
    for tag in CASE_TAGS:
        p = _extract(tag, sd)
        if p is None:
            continue
        matches.append((tag, p))
        sub = _subcase(tag, p)
        if sub is not None:
            valid.append(DualPairCase(tag, p, sub))
    if len(valid) == 1:
        return valid[0]
    if len(valid) > 1:
        raise RuntimeError(f"ambiguous classification for {tuple(str(x) for x in sd)}: {valid}")
    if matches:
        raise BoundaryParameter(
            f"weight ({sd[0]}, {sd[1]}, {sd[2]}) matches "
            f"{[t for t, _ in matches]} only on regime boundaries")
    raise NoCaseMatch(f"weight ({sd[0]}, {sd[1]}, {sd[2]}) fits no dual-pair pattern")


def case_from_hc_param(lam):
    """Classify the dual-pair case whose matched discrete series is pi_lam."""
    return case_classify(sigma_dual_of(lam))


# Maximal-compact parameterization. Phases are stored as angles so that
# half-integral powers of them are single-valued on the double cover.


@dataclass(frozen=True)
class KPoint:
    """Point of the maximal compact group.

    k = diag(1, e^(i zeta), 1) rot(theta) diag(e^(i xi), e^(i eta), e^(i gamma))
    with rot(theta) the rotation by theta in the first two coordinates and
    theta in [0, pi/2].
    """

    zeta: float = 0.0
    theta: float = 0.0
    xi: float = 0.0
    eta: float = 0.0
    gamma: float = 0.0

    def block(self):
        """The 2x2 unitary block as nested lists (rows)."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        ez = cmath.exp(1j * self.zeta)
        ex = cmath.exp(1j * self.xi)
        ee = cmath.exp(1j * self.eta)
        return [[c * ex, s * ee], [-ez * s * ex, ez * c * ee]]

    def matrix(self):
        """The full 3x3 unitary as nested lists (rows)."""
        b = self.block()
        eg = cmath.exp(1j * self.gamma)
        return [[b[0][0], b[0][1], 0], [b[1][0], b[1][1], 0], [0, 0, eg]]

    @classmethod
    def random(cls, rng):
        """Haar-ish sample for tests; rng is a random.Random."""
        return cls(zeta=rng.uniform(0, 2 * math.pi),
                   theta=math.asin(math.sqrt(rng.uniform(0, 1))),
                   xi=rng.uniform(0, 2 * math.pi),
                   eta=rng.uniform(0, 2 * math.pi),
                   gamma=rng.uniform(0, 2 * math.pi))


def compose_k(a, b):
    """KPoint of the product matrix(a) @ matrix(b).

    The 2x2 block of the product is re-expressed in the standard form; at
    theta in {0, pi/2} the zeta angle is gauged to 0.
    """
    ba, bb = a.block(), b.block()
    u = [[ba[0][0] * bb[0][0] + ba[0][1] * bb[1][0], ba[0][0] * bb[0][1] + ba[0][1] * bb[1][1]],
         [ba[1][0] * bb[0][0] + ba[1][1] * bb[1][0], ba[1][0] * bb[0][1] + ba[1][1] * bb[1][1]]]
    gamma = a.gamma + b.gamma
    c = abs(u[0][0])
    s = abs(u[0][1])
    theta = math.atan2(s, c)
    tol = 1e-12
    if s < tol:
        return KPoint(zeta=0.0, theta=0.0, xi=cmath.phase(u[0][0]),
                      eta=cmath.phase(u[1][1]), gamma=gamma)
    if c < tol:
        return KPoint(zeta=0.0, theta=math.pi / 2, xi=cmath.phase(-u[1][0]),
                      eta=cmath.phase(u[0][1]), gamma=gamma)
    xi = cmath.phase(u[0][0])
    eta = cmath.phase(u[0][1])
    zeta = cmath.phase(-u[1][0]) - xi
    return KPoint(zeta=zeta, theta=theta, xi=xi, eta=eta, gamma=gamma)


def pair_angles(k, kp):
    """Angle differences of the four phase pairs (zeta, xi, eta, gamma)."""
    return (k.zeta - kp.zeta, k.xi - kp.xi, k.eta - kp.eta, k.gamma - kp.gamma)
