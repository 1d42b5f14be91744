import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from u21zeta.exactmath import (
    FockPolynomial,
    GaussianRational,
    HalfInt,
    NonIntegralExponent,
    PhaseLaurent,
    TagCollision,
    binom_factorial_sum,
    binomial,
    phase_constant_term,
    vandermonde_sum,
    vindex,
)

F = Fraction


class TestBinomial:
    @pytest.mark.parametrize("n,k,want", [(5, 2, 10), (0, 0, 1), (3, -1, 0), (3, 4, 0), (7, 7, 1)])
    def test_values(self, n, k, want):
        assert binomial(n, k) == F(want)

    @given(st.integers(0, 60), st.integers(-5, 65))
    def test_matches_math_comb(self, n, k):
        want = math.comb(n, k) if 0 <= k <= n else 0
        assert binomial(n, k) == F(want)

    def test_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestBinomFactorialSum:
    def test_small_values(self):
        # mu=1, r=1: (1+1+1)!/(1+1) = 3
        assert binom_factorial_sum(1, 1, 0) == F(3)
        assert binom_factorial_sum(1, 1, 1) == F(3)
        assert binom_factorial_sum(0, 0, 0) == F(1)

    @pytest.mark.parametrize("mu", range(0, 13, 3))
    @pytest.mark.parametrize("r", range(0, 13, 3))
    def test_closed_form(self, mu, r):
        want = F(math.factorial(mu + r + 1), r + 1)
        for i in range(r + 1):
            assert binom_factorial_sum(mu, r, i) == want

    @given(st.integers(0, 25), st.integers(0, 25), st.data())
    @settings(max_examples=60)
    def test_independent_of_i(self, mu, r, data):
        i = data.draw(st.integers(0, r))
        assert binom_factorial_sum(mu, r, i) == F(math.factorial(mu + r + 1), r + 1)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            binom_factorial_sum(2, 2, 3)


class TestVandermondeSum:
    @given(st.integers(0, 40), st.data())
    @settings(max_examples=80)
    def test_collapses_to_binomial(self, r, data):
        i = data.draw(st.integers(0, r))
        assert vandermonde_sum(r, i) == binomial(r, i)

    def test_example(self):
        assert vandermonde_sum(4, 2) == F(6)


class TestHalfInt:
    @pytest.mark.parametrize("text,twice", [("3/2", 3), ("-1/2", -1), ("2", 4), ("0", 0), ("-7/2", -7)])
    def test_parse(self, text, twice):
        assert HalfInt.parse(text).twice == twice

    @pytest.mark.parametrize("text", ["1.5", "2/4", "4/2", "3/4", "x/2", "", "1/3"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            HalfInt.parse(text)

    def test_str_roundtrip(self):
        for twice in range(-9, 10):
            h = HalfInt(twice)
            assert HalfInt.parse(str(h)) == h

    def test_arithmetic(self):
        a = HalfInt.parse("3/2")
        b = HalfInt.parse("1/2")
        assert (a + b).twice == 4
        assert (a - b) == HalfInt(2)
        assert (-a).twice == -3
        assert (a * 3).twice == 9
        assert a + 1 == HalfInt(5)
        assert 2 - a == HalfInt(1)

    def test_ordering(self):
        assert HalfInt(3) > HalfInt(1)
        assert HalfInt(-1) <= HalfInt(0)

    def test_of(self):
        assert HalfInt.of(F(5, 2)).twice == 5
        assert HalfInt.of(2).twice == 4
        with pytest.raises(ValueError):
            HalfInt.of(F(1, 3))

    def test_as_fraction(self):
        assert HalfInt(5).as_fraction() == F(5, 2)
        assert HalfInt(4).is_integer
        assert not HalfInt(5).is_integer


class TestGaussianRational:
    def test_mul(self):
        a = GaussianRational(1, 2)
        b = GaussianRational(3, -1)
        assert a * b == GaussianRational(5, 5)

    def test_conjugate(self):
        assert GaussianRational(F(1, 2), F(3, 4)).conjugate() == GaussianRational(F(1, 2), F(-3, 4))

    def test_complex(self):
        assert complex(GaussianRational(1, -2)) == 1 - 2j

    def test_mixed_arithmetic(self):
        assert GaussianRational(1, 1) + 2 == GaussianRational(3, 1)
        assert 3 * GaussianRational(0, 1) == GaussianRational(0, 3)
        assert (2 - GaussianRational(1, 1)) == GaussianRational(1, -1)


def _z(i, j):
    return FockPolynomial.variable(i, j)


@st.composite
def small_fock_polys(draw):
    n_terms = draw(st.integers(1, 4))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, 2)) for _ in range(9))
        re = draw(st.integers(-3, 3))
        im = draw(st.integers(-3, 3))
        terms[exps] = GaussianRational(re, im)
    return FockPolynomial(terms)


class TestFockPolynomial:
    def test_vindex(self):
        assert vindex(1, 1) == 0
        assert vindex(3, 3) == 8
        with pytest.raises(ValueError):
            vindex(0, 1)

    def test_product(self):
        det = _z(1, 1) * _z(2, 2) - _z(2, 1) * _z(1, 2)
        assert det.degree() == 2
        assert len(det.terms) == 2
        sq = det * det
        assert sq.degree() == 4
        # (ad - bc)^2 = a^2 d^2 - 2 abcd + b^2 c^2
        assert len(sq.terms) == 3

    def test_pow(self):
        p = _z(1, 1) + _z(2, 2)
        assert p ** 3 == p * p * p
        assert p ** 0 == FockPolynomial.one()

    def test_diff_simple(self):
        p = (_z(1, 1) ** 3) * _z(3, 3)
        dp = p.diff(1, 1)
        assert dp == 3 * (_z(1, 1) ** 2) * _z(3, 3)
        assert p.diff(2, 2).is_zero()

    @given(small_fock_polys())
    @settings(max_examples=40)
    def test_diff_commutes(self, p):
        a = p.diff(1, 1).diff(3, 2)
        b = p.diff(3, 2).diff(1, 1)
        assert a == b

    @given(small_fock_polys(), small_fock_polys())
    @settings(max_examples=40)
    def test_leibniz(self, p, q):
        lhs = (p * q).diff(2, 3)
        rhs = p.diff(2, 3) * q + p * q.diff(2, 3)
        assert lhs == rhs

    def test_zero_handling(self):
        p = _z(1, 1) - _z(1, 1)
        assert p.is_zero()
        assert p.degree() == -1


def _pl_one_var(var, twice, **atom):
    tw = [0, 0, 0, 0]
    tw[var] = twice
    return PhaseLaurent.atom(twice_exps=tuple(tw), **atom)


@st.composite
def small_phase_laurents(draw):
    n_terms = draw(st.integers(1, 3))
    terms = {}
    for _ in range(n_terms):
        tw = tuple(draw(st.integers(-2, 2)) for _ in range(4))
        atoms = {}
        for _ in range(draw(st.integers(1, 2))):
            key = (draw(st.integers(-2, 2)), draw(st.integers(0, 2)), draw(st.integers(0, 2)),
                   draw(st.integers(0, 2)), draw(st.integers(0, 2)), None)
            atoms[key] = F(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
        terms[tw] = atoms
    return PhaseLaurent(terms)


class TestPhaseLaurent:
    def test_constant_term_plain(self):
        f = PhaseLaurent.atom(q=5) + _pl_one_var(0, 2, q=3)
        assert phase_constant_term(f) == {(0, 0, 0, 0, 0, None): F(5)}

    def test_half_exponents_cancel(self):
        h = _pl_one_var(0, 1, q=1)
        prod = h * h
        assert prod.terms.keys() == {(2, 0, 0, 0)}
        assert prod.constant_term() == {}

    def test_nonintegral_raises(self):
        f = _pl_one_var(2, 1, q=1)
        with pytest.raises(NonIntegralExponent):
            f.constant_term()

    def test_zero_coefficient_term_is_dropped(self):
        f = _pl_one_var(1, 1, q=1) - _pl_one_var(1, 1, q=1)
        assert f.is_zero()
        assert f.constant_term() == {}

    @given(small_phase_laurents(), small_phase_laurents())
    @settings(max_examples=30)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(small_phase_laurents(), small_phase_laurents(), small_phase_laurents())
    @settings(max_examples=20)
    def test_mul_associates(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(small_phase_laurents(), small_phase_laurents(), small_phase_laurents())
    @settings(max_examples=20)
    def test_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    def test_tag_collision(self):
        t0 = PhaseLaurent.atom(tag=0)
        t1 = PhaseLaurent.atom(tag=1)
        with pytest.raises(TagCollision):
            t0 * t1

    def test_tag_carries_through(self):
        tagged = PhaseLaurent.atom(q=2, tag=3)
        plain = PhaseLaurent.atom(q=F(1, 2), e0=-1)
        prod = tagged * plain
        assert prod.constant_term() == {(-1, 0, 0, 0, 0, 3): F(1)}

    def test_evaluate_phases(self):
        f = _pl_one_var(0, 3, q=2)  # 2 * p1^{3/2}
        val = f.evaluate(0.0, 0.0, 0.0, (0.4, 0.0, 0.0, 0.0))
        want = 2 * complex(math.cos(0.6), math.sin(0.6))
        assert abs(val - want) < 1e-14

    def test_evaluate_atoms(self):
        f = PhaseLaurent.atom(q=F(3, 2), e0=-2, e1=1, e2=0, e3=0, e4=2)
        t, th, tp = 0.7, 0.3, 1.1
        want = 1.5 * math.cosh(t) ** -2 * math.sin(th) * math.cos(tp) ** 2
        assert abs(f.evaluate(t, th, tp, (0, 0, 0, 0)) - want) < 1e-14

    def test_evaluate_radial(self):
        f = PhaseLaurent.atom(q=1, tag=2)
        val = f.evaluate(0.5, 0.0, 0.0, (0, 0, 0, 0), radial=lambda i: 10.0 * i)
        assert abs(val - 20.0) < 1e-14
        with pytest.raises(ValueError):
            f.evaluate(0.5, 0.0, 0.0, (0, 0, 0, 0))
