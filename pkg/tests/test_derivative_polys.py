from fractions import Fraction

import pytest

from derivpoly.derivative_polys import (
    RiccatiParams,
    ShiftedParams,
    build_A,
    build_E,
    build_M,
    build_P,
    build_Q,
    build_S,
    family_json_obj,
    family_poly,
    shifted,
)
from derivpoly.polyseries import Poly, X

BASE01 = RiccatiParams(1, 0, 1)
BASE_PM1 = RiccatiParams(-1, -1, 1)


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            RiccatiParams(0, 0, 1)
        with pytest.raises(ValueError):
            RiccatiParams(1, 2, 2)
        # d is unrestricted
        ShiftedParams(BASE01, Fraction(-7, 3))

    def test_coercion_and_accessors(self):
        sp = shifted(1, 0, 1, Fraction(1, 4))
        assert (sp.r, sp.a, sp.b, sp.d) == (1, 0, 1, Fraction(1, 4))
        assert isinstance(sp.d, Fraction)


class TestBuildP:
    def test_anchors(self):
        assert build_P(1, BASE01) == X
        assert build_P(2, BASE01) == Poly([0, -1, 1])
        assert build_P(3, BASE01) == Poly([0, 1, -3, 2])

    def test_general_parameters(self):
        p = RiccatiParams(5, Fraction(1, 2), -2)
        assert build_P(1, p) == X - Fraction(1, 2)
        assert build_P(2, p) == (X - Fraction(1, 2)) * (X + 2)

    def test_degree(self):
        for n in range(1, 21):
            assert build_P(n, BASE_PM1).degree == n

    def test_roots_at_a_and_b(self):
        p = RiccatiParams(1, Fraction(2, 3), Fraction(-1, 5))
        for n in range(1, 13):
            poly = build_P(n, p)
            assert poly.eval(p.a) == 0
            if n >= 2:
                assert poly.eval(p.b) == 0

    def test_rejects_nonpositive_index(self):
        with pytest.raises(ValueError):
            build_P(0, BASE01)


class TestBuildQ:
    def test_anchors(self):
        assert build_Q(0, BASE01) == Poly([1])
        assert build_Q(0, BASE_PM1) == Poly([1])
        assert build_Q(1, BASE01) == Poly([-1, 2])
        assert build_Q(2, BASE01) == Poly([1, -8, 8])

    def test_degree(self):
        for n in range(0, 21):
            assert build_Q(n, BASE01).degree == n

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            build_Q(-1, BASE01)


class TestBuildS:
    def test_zero_shift_is_q(self):
        sp = ShiftedParams(BASE01, 0)
        for n in range(0, 13):
            assert build_S(n, sp) == build_Q(n, BASE01)

    def test_anchors(self):
        assert build_S(0, shifted(1, 0, 1, Fraction(9, 4))) == Poly([1])
        assert build_S(1, shifted(1, 0, 1, Fraction(-1, 2))) == Poly([-2, 2])

    def test_degree(self):
        sp = shifted(1, 0, 1, Fraction(1, 3))
        for n in range(0, 21):
            assert build_S(n, sp).degree == n

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            build_S(-1, shifted(1, 0, 1, 0))


class TestCombinatorialPolynomials:
    def test_eulerian_anchors(self):
        assert build_E(0) == Poly([1])
        assert build_E(3) == Poly([0, 1, 4, 1])
        assert build_A(0) == Poly([1])
        assert build_A(1) == Poly([1])
        assert build_A(4) == Poly([1, 11, 11, 1])

    def test_e_is_x_times_a(self):
        for n in range(1, 13):
            assert build_E(n) == X * build_A(n)

    def test_macmahon_anchors(self):
        assert build_M(0) == Poly([1])
        assert build_M(2) == Poly([1, 6, 1])
        assert build_M(3) == Poly([1, 23, 23, 1])

    def test_reject_negative(self):
        for builder in (build_E, build_A, build_M):
            with pytest.raises(ValueError):
                builder(-1)


class TestSubstitutionRelations:
    SAMPLES = [Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3, 7),
               Fraction(-5, 3)]

    @pytest.mark.parametrize("params", [BASE01, RiccatiParams(1, Fraction(-2, 3), Fraction(3, 2))])
    def test_eulerian_substitution(self, params):
        for n in range(1, 13):
            e = build_E(n)
            p = build_P(n + 1, params)
            for u in self.SAMPLES:
                if u == params.b:
                    continue
                x = (u - params.a) / (u - params.b)
                assert e.eval(x) == p.eval(u) / (u - params.b) ** (n + 1)

    @pytest.mark.parametrize("params", [BASE01, RiccatiParams(1, Fraction(-2, 3), Fraction(3, 2))])
    def test_macmahon_substitution(self, params):
        for n in range(0, 13):
            m = build_M(n)
            q = build_Q(n, params)
            for u in self.SAMPLES:
                if u == params.b:
                    continue
                x = (u - params.a) / (u - params.b)
                assert m.eval(x) == q.eval(u) / (u - params.b) ** n


class TestHomogeneity:
    def test_scaling_law(self):
        params = RiccatiParams(1, Fraction(1, 2), 3)
        for lam in (Fraction(2), Fraction(-3), Fraction(1, 5)):
            scaled = RiccatiParams(1, lam * params.a, lam * params.b)
            for n in range(0, 11):
                q = build_Q(n, params)
                qs = build_Q(n, scaled)
                for u in (Fraction(2), Fraction(-1, 3), Fraction(7, 5)):
                    assert qs.eval(lam * u) == lam ** n * q.eval(u)


class TestIntegrality:
    def test_reduced_shifted_family_is_integral(self):
        sp = shifted(1, 0, 1, Fraction(-1, 2))
        for n in range(0, 21):
            quotient = build_P(n + 1, BASE01).exact_div(X)
            assert quotient is not None
            s = build_S(n, sp)
            assert s == 2 ** n * quotient
            reduced = s * Fraction(1, 2 ** n)
            assert all(c.denominator == 1 for c in reduced.coeffs)


class TestFamilyDispatch:
    def test_each_family(self):
        assert family_poly("P", 2, a=0, b=1) == Poly([0, -1, 1])
        assert family_poly("Q", 2, a=0, b=1) == Poly([1, -8, 8])
        assert family_poly("S", 1, a=0, b=1, d=Fraction(-1, 2)) == Poly([-2, 2])
        assert family_poly("E", 3) == Poly([0, 1, 4, 1])
        assert family_poly("A", 4) == Poly([1, 11, 11, 1])
        assert family_poly("M", 3) == Poly([1, 23, 23, 1])

    def test_missing_parameters_rejected(self):
        with pytest.raises(ValueError):
            family_poly("P", 2, a=0)
        with pytest.raises(ValueError):
            family_poly("S", 1, a=0, b=1)
        with pytest.raises(ValueError):
            family_poly("P", 2, a=1, b=1)
        with pytest.raises(ValueError):
            family_poly("Z", 1)

    def test_json_shape(self):
        poly = family_poly("P", 2, a=0, b=1)
        obj = family_json_obj("P", 2, poly, a=Fraction(0), b=Fraction(1))
        assert obj == {
            "family": "P",
            "n": 2,
            "params": {"r": None, "a": "0", "b": "1", "d": None},
            "coefficients": ["0", "-1", "1"],
        }
