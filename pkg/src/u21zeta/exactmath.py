"""Exact arithmetic substrate.

Half-integers, Gaussian rationals, sparse polynomials in the nine matrix
entries z_ij, Laurent polynomials in four unit-phase pair variables, and the
small combinatorial sums the rest of the package certifies against.

Everything here is exact: coefficients are ``fractions.Fraction`` (or pairs of
them), exponents are integers or half-integers stored as twice their value.
Floating point enters only in the ``evaluate`` helpers.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

Rational = Fraction

_EVAL_TOL = 1e-15


class NonIntegralExponent(Exception):
    """A phase exponent that should have cancelled to an integer did not."""


class TagCollision(Exception):
    """Two tagged atoms were multiplied; radial handles do not compose."""


def binomial(n, k):
    """Binomial coefficient C(n, k) as a Fraction, zero outside 0 <= k <= n.

    Parameters
    ----------
    n, k : int
        ``n`` must be nonnegative; ``k`` may be any integer.

    Returns
    -------
    Fraction
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def binom_factorial_sum(mu, r, i):
    """C(r,i) * sum_j C(mu,j) (j+r-i)! (mu-j+i)! for j in 0..mu.

    The value equals (mu+r+1)!/(r+1) for every i in 0..r, which is what the
    verification suite pins down.

    Parameters
    ----------
    mu, r : int
        Nonnegative.
    i : int
        Index in 0..r.

    Returns
    -------
    Fraction
    """
    if mu < 0 or r < 0:
        raise ValueError("mu and r must be nonnegative")
    if not 0 <= i <= r:
        raise ValueError("i must satisfy 0 <= i <= r")
    total = 0
    for j in range(mu + 1):
        total += math.comb(mu, j) * math.factorial(j + r - i) * math.factorial(mu - j + i)
    return Fraction(math.comb(r, i) * total)


def vandermonde_sum(r, i):
    """sum_l C(i,l) C(r-i, i-l), which collapses to C(r,i).

    Parameters
    ----------
    r : int
        Nonnegative.
    i : int
        Index in 0..r.

    Returns
    -------
    Fraction
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if not 0 <= i <= r:
        raise ValueError("i must satisfy 0 <= i <= r")
    total = Fraction(0)
    for l in range(i + 1):
        total += binomial(i, l) * binomial(r - i, i - l)
    return total


class HalfInt:
    """A half-integer stored exactly as twice its value.

    Parameters
    ----------
    twice : int
        Twice the represented value, so ``HalfInt(3)`` is 3/2.
    """

    __slots__ = ("twice",)

    def __init__(self, twice):
        if not isinstance(twice, int):
            raise TypeError("twice must be an int")
        self.twice = twice

    @classmethod
    def of(cls, value):
        """Coerce an int, a Fraction with denominator 1 or 2, or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            return cls(int(value * 2))
        raise TypeError(f"cannot coerce {value!r} to HalfInt")

    @classmethod
    def parse(cls, text):
        """Parse 'n' or a reduced 'p/2' with p odd. Anything else is rejected."""
        t = text.strip()
        if "/" in t:
            num, _, den = t.partition("/")
            if den.strip() != "2":
                raise ValueError(f"half-integer must look like 'n' or 'p/2': {text!r}")
            try:
                p = int(num)
            except ValueError:
                raise ValueError(f"bad half-integer numerator in {text!r}") from None
            if p % 2 == 0:
                raise ValueError(f"{text!r} is not reduced, write {p // 2}")
            return cls(p)
        try:
            n = int(t)
        except ValueError:
            raise ValueError(f"half-integer must look like 'n' or 'p/2': {text!r}") from None
        return cls(2 * n)

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def as_fraction(self):
        return Fraction(self.twice, 2)

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == HalfInt.of(other).twice
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __le__(self, other):
        return self.twice <= HalfInt.of(other).twice

    def __gt__(self, other):
        return self.twice > HalfInt.of(other).twice

    def __ge__(self, other):
        return self.twice >= HalfInt.of(other).twice

    def __hash__(self):
        return hash(self.as_fraction())

    def __float__(self):
        return self.twice / 2.0

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self.twice})"


def _coerce_gr(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value), Fraction(0))
    raise TypeError(f"cannot coerce {value!r} to GaussianRational")


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        o = _coerce_gr(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_gr(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return _coerce_gr(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = _coerce_gr(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = _coerce_gr(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


_NVARS = 9


def vindex(i, j):
    """Flat index of the matrix entry z_ij, rows and columns in 1..3."""
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError("matrix indices must be in 1..3")
    return 3 * (i - 1) + (j - 1)


class FockPolynomial:
    """Sparse polynomial in the nine entries z_ij with GaussianRational coefficients.

    Terms are stored as a dict mapping 9-tuples of nonnegative exponents
    (flat order z_11, z_12, ..., z_33) to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                c = _coerce_gr(coeff)
                if c.is_zero():
                    continue
                if len(exps) != _NVARS or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent tuple {exps!r}")
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, c):
        return cls({(0,) * _NVARS: _coerce_gr(c)})

    @classmethod
    def variable(cls, i, j):
        exps = [0] * _NVARS
        exps[vindex(i, j)] = 1
        return cls({tuple(exps): GaussianRational(1)})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        if not isinstance(other, FockPolynomial):
            other = FockPolynomial.constant(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            s = coeff if acc is None else acc + coeff
            if s.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = s
        res = FockPolynomial.__new__(FockPolynomial)
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, FockPolynomial) else -_coerce_gr(other))

    def __neg__(self):
        res = FockPolynomial.__new__(FockPolynomial)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, FockPolynomial):
            c = _coerce_gr(other)
            if c.is_zero():
                return FockPolynomial.zero()
            res = FockPolynomial.__new__(FockPolynomial)
            res.terms = {e: co * c for e, co in self.terms.items()}
            return res
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(e)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        res = FockPolynomial.__new__(FockPolynomial)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = FockPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def diff(self, i, j):
        """Partial derivative with respect to z_ij."""
        v = vindex(i, j)
        out = {}
        for exps, coeff in self.terms.items():
            k = exps[v]
            if k == 0:
                continue
            e = list(exps)
            e[v] = k - 1
            out[tuple(e)] = coeff * k
        res = FockPolynomial.__new__(FockPolynomial)
        res.terms = out
        return res

    def __eq__(self, other):
        if not isinstance(other, FockPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FockPolynomial(0)"
        return f"FockPolynomial({len(self.terms)} terms, degree {self.degree()})"


# Atom key inside a PhaseLaurent coefficient:
# (e0, e1, e2, e3, e4, tag) for
# (cosh t)^e0 * sin(th)^e1 cos(th)^e2 sin(th')^e3 cos(th')^e4, tag None or an
# integer handle naming an external radial function factor.


def _atom_mul(a1, a2):
    t1, t2 = a1[5], a2[5]
    if t1 is not None and t2 is not None:
        raise TagCollision("cannot multiply two tagged atoms")
    return (a1[0] + a2[0], a1[1] + a2[1], a1[2] + a2[2],
            a1[3] + a2[3], a1[4] + a2[4], t1 if t1 is not None else t2)


def _atoms_add(dst, atoms):
    for key, q in atoms.items():
        acc = dst.get(key)
        s = q if acc is None else acc + q
        if s == 0:
            dst.pop(key, None)
        else:
            dst[key] = s


class PhaseLaurent:
    """Laurent polynomial in four unit-phase pair variables.

    Term exponents are half-integers stored as twice-values (4-tuples of
    ints). Each coefficient is a finite sum of atoms, a rational constant
    times (cosh t)^e0 sin(th)^e1 cos(th)^e2 sin(th')^e3 cos(th')^e4, with an
    optional integer tag naming a radial function factor of t.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for tw, atoms in terms.items():
                if len(tw) != 4 or any(not isinstance(x, int) for x in tw):
                    raise ValueError(f"bad twice-exponent tuple {tw!r}")
                merged = {}
                for key, q in atoms.items():
                    qf = Fraction(q)
                    if qf == 0:
                        continue
                    if len(key) != 6:
                        raise ValueError(f"bad atom key {key!r}")
                    _atoms_add(merged, {key: qf})
                if merged:
                    clean[tuple(tw)] = merged
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.term((0, 0, 0, 0), {(0, 0, 0, 0, 0, None): Fraction(1)})

    @classmethod
    def term(cls, twice_exps, atoms):
        """Single Laurent term with the given twice-exponents and atom dict."""
        return cls({tuple(twice_exps): dict(atoms)})

    @classmethod
    def atom(cls, q=1, e0=0, e1=0, e2=0, e3=0, e4=0, tag=None, twice_exps=(0, 0, 0, 0)):
        """Convenience constructor for a one-atom term."""
        return cls.term(twice_exps, {(e0, e1, e2, e3, e4, tag): Fraction(q)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, PhaseLaurent):
            return NotImplemented
        out = {tw: dict(atoms) for tw, atoms in self.terms.items()}
        for tw, atoms in other.terms.items():
            dst = out.setdefault(tw, {})
            _atoms_add(dst, atoms)
            if not dst:
                del out[tw]
        res = PhaseLaurent.__new__(PhaseLaurent)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return PhaseLaurent.zero()
            res = PhaseLaurent.__new__(PhaseLaurent)
            res.terms = {tw: {k: c * q for k, c in atoms.items()}
                         for tw, atoms in self.terms.items()}
            return res
        if not isinstance(other, PhaseLaurent):
            return NotImplemented
        out = {}
        for tw1, atoms1 in self.terms.items():
            for tw2, atoms2 in other.terms.items():
                tw = (tw1[0] + tw2[0], tw1[1] + tw2[1], tw1[2] + tw2[2], tw1[3] + tw2[3])
                dst = out.setdefault(tw, {})
                for a1, q1 in atoms1.items():
                    for a2, q2 in atoms2.items():
                        _atoms_add(dst, {_atom_mul(a1, a2): q1 * q2})
                if not dst:
                    del out[tw]
        res = PhaseLaurent.__new__(PhaseLaurent)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = PhaseLaurent.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, PhaseLaurent):
            return NotImplemented
        return self.terms == other.terms

    def constant_term(self):
        """Atoms of the exponent-zero term, the integral over the phase torus.

        Every term whose exponents are not all zero integrates to zero, but a
        surviving half-integral exponent means the two factors were not
        genuinely matched, so that raises NonIntegralExponent instead of being
        dropped silently.

        Returns
        -------
        dict
            Atom key -> Fraction. Empty when the constant term vanishes.

        Raises
        ------
        NonIntegralExponent
            If any term with a nonzero coefficient has an odd twice-exponent.
        """
        for tw, atoms in self.terms.items():
            if atoms and any(x % 2 != 0 for x in tw):
                raise NonIntegralExponent(
                    f"half-integral phase exponent survives: {tw}")
        return dict(self.terms.get((0, 0, 0, 0), {}))

    def evaluate(self, t, theta, theta_prime, pair_angles, radial=None):
        """Numerical value at a group point.

        Parameters
        ----------
        t : float
            Radial coordinate for the cosh powers and radial handles.
        theta, theta_prime : float
            Angles for the sin/cos powers.
        pair_angles : sequence of 4 floats
            Phase differences; pair variable v evaluates to exp(1j*angle_v).
        radial : callable, optional
            Maps an integer tag to a float. Required when tagged atoms occur.

        Returns
        -------
        complex
        """
        ch = math.cosh(t)
        s1, c1 = math.sin(theta), math.cos(theta)
        s2, c2 = math.sin(theta_prime), math.cos(theta_prime)
        total = 0j
        for tw, atoms in self.terms.items():
            phase = cmath.exp(0.5j * sum(w * a for w, a in zip(tw, pair_angles)))
            coeff = 0.0
            for (e0, e1, e2, e3, e4, tag), q in atoms.items():
                v = float(q) * ch ** e0 * s1 ** e1 * c1 ** e2 * s2 ** e3 * c2 ** e4
                if tag is not None:
                    if radial is None:
                        raise ValueError("tagged atom needs a radial callback")
                    v *= radial(tag)
                coeff += v
            total += coeff * phase
        return total

    def __repr__(self):
        return f"PhaseLaurent({len(self.terms)} terms)"


def phase_constant_term(f):
    """Module-level alias for PhaseLaurent.constant_term."""
    return f.constant_term()
