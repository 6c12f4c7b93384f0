"""Family constructors: recurrences, cross-check routes, weights, added points."""

import math
from fractions import Fraction as F

import pytest

from interlace import families
from interlace.families import (
    ConstructionError,
    FamilySpec,
    InvalidParameterError,
    extra_point,
    hypergeometric_check,
    hypergeometric_poly,
    jacobi,
    krawtchouk,
    krawtchouk_edge_value,
    laguerre,
    meixner,
    monic_by_recurrence,
    narayana_christoffel,
    narayana_coeff,
    narayana_perturbed,
    narayana_reduced,
    narayana_rho,
    narayana_spec,
    pochhammer,
    recurrence_coeffs,
    weight_at,
)
from interlace.poly import Polynomial

JACOBI_GRID = [F(-1, 2), F(0), F(1), F(5, 2), F(14)]


class TestRecurrence:
    def test_laguerre_degree_one(self):
        assert monic_by_recurrence(laguerre(0, 1)) == Polynomial([-1, 1])

    def test_krawtchouk_degree_one(self):
        assert monic_by_recurrence(krawtchouk(F(1, 2), 4, 1)) == Polynomial([-2, 1])

    @pytest.mark.parametrize("alpha", [F(0), F(3, 2), F(-1, 2)])
    def test_jacobi_symmetric_degree_one(self, alpha):
        assert monic_by_recurrence(jacobi(alpha, alpha, 1)) == Polynomial([0, 1])

    def test_jacobi_chebyshev_case(self):
        # alpha = beta = -1/2 gives the monic Chebyshev member x^2 - 1/2;
        # exercises the cancelled off-diagonal form at the second step
        got = monic_by_recurrence(jacobi(F(-1, 2), F(-1, 2), 2))
        assert got == Polynomial([F(-1, 2), 0, 1])

    def test_laguerre_degree_two(self):
        # (x - 3)(x - 1) - 1 = x^2 - 4x + 2, by hand from c2 = 3, l2 = 1
        assert monic_by_recurrence(laguerre(0, 2)) == Polynomial([2, -4, 1])

    def test_meixner_degree_one(self):
        # x - t w / (1 - w) at t = 1, w = 1/2
        assert monic_by_recurrence(meixner(1, F(1, 2), 1)) == Polynomial([-1, 1])

    @pytest.mark.parametrize(
        "spec",
        [
            jacobi(F(5, 2), F(-1, 2), 8),
            laguerre(F(-1, 2), 8),
            krawtchouk(F(3, 4), 9, 8),
            meixner(F(1, 2), F(3, 4), 8),
        ],
    )
    def test_monic_everywhere(self, spec):
        for n in range(spec.n + 1):
            member = monic_by_recurrence(FamilySpec.make(spec.kind, n, **dict(spec.params)))
            if n == 0:
                assert member == Polynomial([1])
            assert member.is_monic
            assert member.degree == n

    def test_offdiagonal_positivity_on_grids(self):
        specs = [jacobi(a, b, 10) for a in JACOBI_GRID for b in JACOBI_GRID]
        specs += [laguerre(a, 10) for a in JACOBI_GRID]
        specs += [krawtchouk(p, 10, 10) for p in (F(1, 10), F(1, 2), F(9, 10))]
        specs += [meixner(t, w, 10) for t in (F(1, 2), 1, 3) for w in (F(1, 4), F(3, 4))]
        for spec in specs:
            rc = recurrence_coeffs(spec)
            assert all(l > 0 for l in rc.lam[1:]), spec

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError, match="0 < p < 1"):
            krawtchouk(F(3, 2), 4, 1)
        with pytest.raises(InvalidParameterError, match="n <= N"):
            krawtchouk(F(1, 2), 4, 5)
        with pytest.raises(InvalidParameterError, match="alpha > -1"):
            jacobi(-2, 0, 3)
        with pytest.raises(InvalidParameterError, match="t > 0"):
            meixner(0, F(1, 2), 3)
        with pytest.raises(InvalidParameterError, match="0 < w < 1"):
            meixner(1, 1, 3)


class TestNarayana:
    def test_coeff_values(self):
        assert narayana_coeff(3, 2) == 3
        assert narayana_coeff(1, 1) == 1
        assert narayana_coeff(4, 2) == 6

    def test_coeff_range(self):
        with pytest.raises(InvalidParameterError):
            narayana_coeff(3, 0)
        with pytest.raises(InvalidParameterError):
            narayana_coeff(3, 4)

    def test_reduced_small_members(self):
        assert narayana_reduced(1) == Polynomial([1])
        assert narayana_reduced(2) == Polynomial([1, 1])
        assert narayana_reduced(3) == Polynomial([1, 3, 1])

    def test_reduced_zero_at_minus_one_for_even(self):
        assert narayana_reduced(2).evaluate(F(-1)) == 0

    def test_raw_equals_x_times_reduced(self):
        x = Polynomial([0, 1])
        for n in range(1, 13):
            raw = monic_by_recurrence(narayana_spec("narayana", n))
            assert raw == x * narayana_reduced(n)

    def test_recurrence_matches_closed_form(self):
        for n in range(1, 16):
            assert monic_by_recurrence(narayana_spec("narayana-reduced", n)) == narayana_reduced(n)

    def test_palindromic_coefficients(self):
        # reciprocal identity: coefficient vector reads the same reversed
        for n in range(1, 16):
            coeffs = narayana_reduced(n).coeffs
            assert coeffs == tuple(reversed(coeffs))

    def test_minus_one_zero_iff_even(self):
        for n in range(1, 16):
            value = narayana_reduced(n).evaluate(F(-1))
            assert (value == 0) == (n % 2 == 0)

    def test_rho_closed_form(self):
        assert narayana_rho(2) == F(5, 2)
        for n in range(2, 13):
            narayana_rho(n)  # raises on disagreement with the definition

    def test_christoffel_small_members(self):
        assert narayana_christoffel(2) == Polynomial([F(3, 2), 1])
        # by hand from the coefficient scaling at index 3:
        # (9/5)*1, (7/5)*3, (5/5)*1
        assert narayana_christoffel(3) == Polynomial([F(9, 5), F(21, 5), 1])

    def test_christoffel_division_route_recomputed(self):
        # independent re-derivation: combination vanishing at 1, then
        # synthetic division, compared against the constructor output
        for n in range(2, 13):
            rho = F(2 * (2 * n + 1), n + 2)
            numer = narayana_reduced(n + 1) - narayana_reduced(n).scale(rho)
            assert numer.evaluate(F(1)) == 0
            quotient, remainder = numer.divide_linear(F(1))
            assert remainder == 0
            assert quotient == narayana_christoffel(n)

    def test_christoffel_is_monic_degree_n_minus_one(self):
        for n in range(2, 13):
            member = narayana_christoffel(n)
            assert member.is_monic and member.degree == n - 1

    def test_perturbed_small_members(self):
        assert narayana_perturbed(2) == Polynomial([1, 1])
        assert narayana_perturbed(3) == Polynomial([1, 5, 1])
        assert narayana_perturbed(4) == Polynomial([1, 12, 12, 1])

    def test_perturbed_matches_direct_binomials(self):
        def comb0(m, r):
            return math.comb(m, r) if 0 <= r <= m else 0

        for n in range(2, 13):
            expected = [
                F(comb0(n - 1, j) ** 2 + comb0(n - 1, j + 1) * comb0(n - 1, j - 1))
                for j in range(n)
            ]
            assert narayana_perturbed(n) == Polynomial(expected)

    def test_pre_rearrangement_identity(self):
        # n * reduced_n = perturbed_n + (1 + x)(n - 1) reduced_{n-1}, exactly
        for n in range(2, 13):
            lhs = narayana_reduced(n).scale(n)
            rhs = narayana_perturbed(n) + narayana_reduced(n - 1).mul_linear(-1).scale(n - 1)
            assert lhs == rhs


class TestHypergeometricRoute:
    def test_trivial_degree_zero(self):
        assert hypergeometric_poly(krawtchouk(F(1, 2), 4, 0)) == Polynomial([1])

    def test_degree_one(self):
        assert hypergeometric_poly(krawtchouk(F(1, 2), 4, 1)) == Polynomial([-2, 1])

    @pytest.mark.parametrize("p", [F(1, 4), F(1, 2), F(3, 4)])
    @pytest.mark.parametrize("N", [7, 10])
    def test_krawtchouk_grid(self, p, N):
        for n in range(min(N, 10) + 1):
            assert hypergeometric_check(krawtchouk(p, N, n)).is_monic

    @pytest.mark.parametrize("t", [F(1, 2), F(1), F(3)])
    @pytest.mark.parametrize("w", [F(1, 4), F(1, 2), F(3, 4)])
    def test_meixner_grid(self, t, w):
        for n in range(11):
            assert hypergeometric_check(meixner(t, w, n)).is_monic

    def test_non_applicable_family(self):
        with pytest.raises(InvalidParameterError):
            hypergeometric_poly(laguerre(0, 3))


class TestWeights:
    def test_krawtchouk_at_zero(self):
        assert weight_at(krawtchouk(F(1, 2), 2, 0), 0) == F(1, 4)

    def test_meixner_at_zero(self):
        assert weight_at(meixner(2, F(1, 2), 0), 0) == 1

    def test_meixner_shift_ratio(self):
        # t * rho(x; t+1, w) = (x + t) * rho(x; t, w) at x=3, t=2, w=1/2;
        # both sides equal 5/2 by direct evaluation
        lhs = 2 * weight_at(meixner(3, F(1, 2), 0), 3)
        rhs = (3 + 2) * weight_at(meixner(2, F(1, 2), 0), 3)
        assert lhs == rhs == F(5, 2)

    def test_out_of_support(self):
        with pytest.raises(InvalidParameterError):
            weight_at(krawtchouk(F(1, 2), 2, 0), 3)
        with pytest.raises(InvalidParameterError):
            weight_at(meixner(1, F(1, 2), 0), -1)

    def test_krawtchouk_edge_evaluation(self):
        # closed form k! C(M,k) (1-p)^k against direct evaluation at x = M
        for M in (3, 5, 8):
            for p in (F(1, 4), F(2, 3)):
                for k in range(M + 1):
                    member = monic_by_recurrence(krawtchouk(p, M, k))
                    assert member.evaluate(F(M)) == krawtchouk_edge_value(k, p, M)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(F(7, 3), 0) == 1

    def test_small_products(self):
        assert pochhammer(F(2), 3) == 24
        assert pochhammer(F(-4), 2) == 12


class TestExtraPoint:
    def test_jacobi_shift_values(self):
        assert extra_point(jacobi(2, 14, 6), "jacobi-3.6").value == F(-2, 5)
        assert extra_point(jacobi(14, 2, 7), "jacobi-3.6").value == F(3, 8)

    def test_laguerre_value(self):
        assert extra_point(laguerre(0, 5), "laguerre-3.7").value == 6

    def test_krawtchouk_value(self):
        assert extra_point(krawtchouk(F(1, 2), 4, 2), "krawtchouk-3.1").value == F(7, 2)

    def test_meixner_value(self):
        got = extra_point(meixner(1, F(1, 2), 0), "meixner-3.2").value
        assert got == 0

    def test_narayana_values(self):
        assert extra_point(narayana_spec("narayana-christoffel", 4), "narayana-3.3").value == 1
        assert extra_point(narayana_spec("narayana-perturbed", 4), "narayana-3.4").value == -1

    def test_wrong_pairing(self):
        with pytest.raises(InvalidParameterError):
            extra_point(laguerre(0, 5), "jacobi-3.6")
        with pytest.raises(InvalidParameterError):
            extra_point(laguerre(0, 5), "no-such-check")


class TestSpecSerialization:
    def test_roundtrip(self):
        spec = krawtchouk(F(1, 2), 4, 2)
        obj = spec.to_json()
        assert obj == {"kind": "krawtchouk", "params": {"p": "1/2", "N": "4"}, "n": 2}
        assert FamilySpec.from_json(obj) == spec

    def test_float_parameters_rejected(self):
        with pytest.raises(InvalidParameterError):
            FamilySpec.make("laguerre", 2, alpha=0.5)
