"""
Tests for the 1/π family: exact terms, the alternating hypotheses,
repeated averaging and certified evaluation.
"""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

from pi_forge.arith import PrecisionContext
from pi_forge.errors import NonDecreasingTerms, PrecisionExhausted
from pi_forge.family import (
    AveragedSum,
    FamilyParams,
    averaged_sum,
    central_cube,
    eval_family,
    f_k,
    family_prefactor,
    family_ratio,
    family_stream,
    family_term,
    leibniz_check,
    leibniz_violations,
    tail_completely_monotone,
)

# ============================================================================
# EXACT TERMS
# ============================================================================


class TestFamilyParams:
    """Tests for FamilyParams."""

    def test_defaults(self):
        """(m, k) defaults to (0, 2)."""
        params = FamilyParams()
        assert (params.m, params.k) == (0, 2)

    @pytest.mark.parametrize("k", [0, 1, -3])
    def test_k_below_two(self, k):
        """The family needs k ≥ 2."""
        with pytest.raises(ValidationError, match="k must be >= 2"):
            FamilyParams(m=0, k=k)

    def test_negative_m(self):
        """m must be non-negative."""
        with pytest.raises(ValidationError):
            FamilyParams(m=-1, k=2)


class TestFamilyTerms:
    """Tests for the exact family terms."""

    def test_prefactor(self):
        """P(0, 2) = 3/4 and P(1, 2) = 15/16."""
        assert family_prefactor(FamilyParams(m=0, k=2)) == Fraction(3, 4)
        assert family_prefactor(FamilyParams(m=1, k=2)) == Fraction(15, 16)

    def test_first_term(self):
        """term_0(0, 2) = 45/128 = f_2(0)."""
        assert family_term(FamilyParams(m=0, k=2), 0) == Fraction(45, 128)
        assert f_k(2, 0) == Fraction(45, 128)

    def test_f3_at_zero(self):
        """f_3(0) = (15/8)^2 (7/2) / 36 = 175/512."""
        assert f_k(3, 0) == Fraction(175, 512)

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_m0_factorization(self, k):
        """term_n(0, k) = (−1)^n [(1/2)_n / n!]^3 f_k(n)."""
        params = FamilyParams(m=0, k=k)
        for n in range(12):
            assert family_term(params, n) == central_cube(n) * f_k(k, n)

    @pytest.mark.parametrize("m, k", [(0, 2), (1, 2), (2, 3), (4, 6)])
    def test_stream_matches_closed_form(self, m, k):
        """The ratio recurrence reproduces every closed-form term."""
        params = FamilyParams(m=m, k=k)
        terms = family_stream(params).take(30)
        assert terms == [family_term(params, n) for n in range(30)]

    def test_ratio(self):
        """family_ratio is term_{n+1} / term_n."""
        params = FamilyParams(m=2, k=4)
        for n in range(10):
            assert family_ratio(params, n) == family_term(params, n + 1) / family_term(params, n)

    @pytest.mark.parametrize("m", [0, 1, 3])
    def test_sign_pattern(self, m):
        """Terms n ≤ m are positive, then the signs alternate."""
        params = FamilyParams(m=m, k=3)
        terms = family_stream(params).take(m + 10)
        assert all(t > 0 for t in terms[: m + 1])
        for n in range(m, m + 9):
            assert (terms[n] > 0) != (terms[n + 1] > 0)

    def test_negative_index(self):
        """n < 0 is rejected."""
        with pytest.raises(ValueError):
            family_term(FamilyParams(), -1)

    def test_f_k_arguments(self):
        """f_k needs k ≥ 2 and n ≥ 0."""
        with pytest.raises(ValueError):
            f_k(1, 0)
        with pytest.raises(ValueError):
            f_k(2, -1)

    def test_central_cube(self):
        """(−1)^n [(1/2)_n / n!]^3 for n = 0, 1, 2."""
        assert central_cube(0) == 1
        assert central_cube(1) == Fraction(-1, 8)
        assert central_cube(2) == Fraction(27, 512)


class TestLeibnizCheck:
    """Tests for the alternating-series hypotheses."""

    @pytest.mark.parametrize("m", range(11))
    def test_family_alternates_and_decreases(self, m):
        """No violations over (m, m + 200] for every k in [2, 20]."""
        for k in range(2, 21):
            assert leibniz_check(FamilyParams(m=m, k=k), m + 200) == [], (m, k)

    @pytest.mark.parametrize("m", range(11))
    def test_partial_sums_bracket_inverse_pi(self, ctx128, m):
        """Consecutive partial sums past n = m lie on either side of 1/π."""
        inverse_pi = 1 / ctx128.pi()
        for k in range(2, 21):
            terms = family_stream(FamilyParams(m=m, k=k)).take(m + 8)
            partial = sum(terms[: m + 1], Fraction(0))
            for n in range(m + 1, m + 7):
                before = ctx128.real(partial)
                partial += terms[n]
                after = ctx128.real(partial)
                assert min(before, after) < inverse_pi < max(before, after), (m, k, n)

    def test_violations_reported(self):
        """Non-alternating or growing pairs are listed by index."""
        terms = [Fraction(1), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 2), Fraction(-1, 5)]
        assert leibniz_violations(terms, 0) == [2, 3]

    def test_clean(self):
        """A genuine alternating decreasing run has no violations."""
        terms = [Fraction((-1) ** n, n + 1) for n in range(20)]
        assert leibniz_violations(terms, 0) == []


class TestTailMonotone:
    """Tests for tail_completely_monotone."""

    @pytest.mark.parametrize("k", range(2, 21))
    def test_m0_row(self, k):
        """Every m = 0 series has a completely monotone tail."""
        assert tail_completely_monotone(FamilyParams(m=0, k=k))

    @pytest.mark.parametrize("m, k", [(1, 2), (2, 2), (3, 3), (3, 7), (10, 10), (10, 20)])
    def test_k_at_least_m(self, m, k):
        """k ≥ m pairs every gamma ratio."""
        assert tail_completely_monotone(FamilyParams(m=m, k=k))

    @pytest.mark.parametrize("m, k", [(3, 2), (5, 2), (5, 4), (10, 9)])
    def test_k_below_m(self, m, k):
        """Γ(n+m+1/2) has no denominator to pair with when 2 ≤ k < m."""
        assert not tail_completely_monotone(FamilyParams(m=m, k=k))

    @pytest.mark.parametrize("m, k", [(0, 2), (0, 5), (1, 2), (3, 3), (2, 7)])
    def test_forward_differences_positive(self, m, k):
        """(−Δ)^j |term_n| > 0 past n = m for j ≤ 8, exactly."""
        params = FamilyParams(m=m, k=k)
        values = [abs(t) for t in family_stream(params).take(m + 41)[m + 1 :]]
        for j in range(9):
            assert all(v > 0 for v in values), (j, values.index(min(values)))
            values = [a - b for a, b in zip(values, values[1:], strict=False)]

    def test_certified_when_tail_proven(self, ctx128):
        """An averaged bound on a completely monotone tail is certified."""
        report = eval_family(FamilyParams(m=0, k=2), "1e-12", ctx128)
        assert report.method == "averaged"
        assert report.certified

    def test_estimate_when_tail_unproven(self, ctx128):
        """Only a level-0 bound is certified when k < m."""
        report = eval_family(FamilyParams(m=5, k=2), "1e-10", ctx128)
        assert report.converged
        assert report.certified == (report.method == "leibniz")


# ============================================================================
# AVERAGING
# ============================================================================


class TestAveragedSum:
    """Tests for averaged_sum."""

    @pytest.fixture
    def log2_terms(self):
        """Σ (−1)^n / (n+1) = ln 2."""
        return [Fraction((-1) ** n, n + 1) for n in range(60)]

    def test_certified_log2(self, log2_terms):
        """The averaged value lies within its bound of ln 2."""
        from mpmath import mp

        best = averaged_sum(log2_terms, 10, PrecisionContext(precision_bits=200))
        assert isinstance(best, AveragedSum)
        assert best.level > 0
        assert best.bound < 1e-10
        with mp.workprec(200):
            assert abs(best.value - mp.log(2)) <= best.bound

    def test_level_zero_is_leibniz(self):
        """With a two-term window only the plain bound is available."""
        terms = [Fraction((-1) ** n, n + 1) for n in range(4)]
        best = averaged_sum(terms, 1, PrecisionContext(precision_bits=100))
        assert best.level == 0
        assert best.bound == 0.25
        assert abs(best.value * 6 - 5) < 1e-25

    def test_rejects_bad_terms(self):
        """Terms that stop alternating raise NonDecreasingTerms."""
        terms = [Fraction(1), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 2), Fraction(1, 5)]
        with pytest.raises(NonDecreasingTerms, match="n = 2"):
            averaged_sum(terms, 0, PrecisionContext(precision_bits=100))

    def test_window_too_short(self):
        """At least two window terms are needed."""
        with pytest.raises(ValueError):
            averaged_sum([Fraction(1), Fraction(-1, 2)], 0, PrecisionContext(precision_bits=100))


# ============================================================================
# EVALUATION
# ============================================================================


class TestEvalFamily:
    """Tests for eval_family."""

    @pytest.mark.parametrize("m, k", [(0, 2), (0, 3), (1, 2), (2, 5)])
    def test_sums_to_inverse_pi(self, ctx128, m, k):
        """Every member sums to 1/π within its certified budget."""
        report = eval_family(FamilyParams(m=m, k=k), "1e-20", ctx128)
        assert report.converged
        error = abs(report.value - 1 / ctx128.pi())
        assert error <= report.remainder_bound + report.rounding_slack
        assert report.remainder_bound <= 1e-20 * abs(report.value)

    def test_averaging_is_used(self, ctx128):
        """The algebraic decay calls for averaging."""
        report = eval_family(FamilyParams(m=0, k=2), "1e-12", ctx128)
        assert report.method == "averaged"
        assert report.acceleration_level > 0
        assert report.terms_used < 1000

    def test_default_target(self, ctx256):
        """The settings target 1e-30 is met at 256 bits."""
        report = eval_family(FamilyParams(m=0, k=4), ctx=ctx256)
        assert report.converged
        assert report.remainder_bound <= 1e-30 * abs(report.value)

    def test_averaging_precision(self, ctx128):
        """Averaging runs log2(1/target) + 32 bits above the caller's precision."""
        from pi_forge.family.evaluate import _averaging_context

        wide = _averaging_context(ctx128.real("1e-20"), ctx128)
        assert wide.precision_bits == 128 + 67 + 32
        assert wide.guard_bits == ctx128.guard_bits

    def test_error_budget(self, ctx128):
        """error_budget is remainder_bound + rounding_slack."""
        report = eval_family(FamilyParams(), "1e-10", ctx128)
        assert report.error_budget == report.remainder_bound + report.rounding_slack

    @pytest.mark.parametrize("target", ["1e-15", 1e-15, Fraction(1, 10**15)])
    def test_target_types(self, ctx128, target):
        """Targets may be strings, floats or Fractions."""
        assert eval_family(FamilyParams(), target, ctx128).converged

    def test_target_below_precision(self, ctx64):
        """A target finer than 2^(−prec+16) cannot be certified."""
        with pytest.raises(PrecisionExhausted, match="prec-bits"):
            eval_family(FamilyParams(), "1e-30", ctx64)

    @pytest.mark.parametrize("target", ["0", "-1e-5"])
    def test_target_positive(self, ctx64, target):
        """Non-positive targets are rejected."""
        with pytest.raises(ValueError):
            eval_family(FamilyParams(), target, ctx64)

    def test_term_cap_reached(self, ctx128):
        """A tiny term cap returns an unconverged report on request."""
        report = eval_family(
            FamilyParams(), "1e-30", ctx128, max_terms=10, raise_on_failure=False
        )
        assert not report.converged
        assert report.terms_used == 10

    def test_term_cap_raises(self, ctx128):
        """By default an unconverged evaluation raises."""
        with pytest.raises(PrecisionExhausted, match="within 10 terms"):
            eval_family(FamilyParams(), "1e-30", ctx128, max_terms=10)

    def test_no_window(self, ctx128):
        """A cap that leaves no window after n = m raises."""
        with pytest.raises(PrecisionExhausted, match="no window"):
            eval_family(FamilyParams(m=2, k=2), "1e-10", ctx128, max_terms=4)

    def test_record(self, ctx128):
        """to_record has the documented keys."""
        record = eval_family(FamilyParams(), "1e-20", ctx128).to_record()
        assert set(record) == {
            "value",
            "remainder_bound",
            "rounding_slack",
            "terms_used",
            "precision_bits",
            "converged",
            "method",
            "acceleration_level",
            "certified",
        }
        assert record["value"].startswith("0.31830988618")
        assert record["precision_bits"] == 128

    def test_max_terms_from_settings(self, monkeypatch, ctx128):
        """max_terms defaults to evaluation.max_terms."""
        from pi_forge.config import reload_settings

        monkeypatch.setenv("PI_FORGE_EVALUATION_MAX_TERMS", "10")
        reload_settings()
        report = eval_family(FamilyParams(), "1e-30", ctx128, raise_on_failure=False)
        assert report.terms_used == 10


@pytest.mark.slow
class TestEvalFamilyHighPrecision:
    """Long evaluations at high precision."""

    def test_inverse_pi_to_60_digits(self):
        """k = 2 reaches 1e-60 with enough bits."""
        ctx = PrecisionContext(precision_bits=320)
        report = eval_family(FamilyParams(m=0, k=2), "1e-60", ctx)
        assert report.converged
        assert abs(report.value - 1 / ctx.pi()) <= report.error_budget
        assert math.isfinite(float(report.remainder_bound))

    @pytest.mark.parametrize("m", range(11))
    def test_grid_meets_target(self, ctx256, m):
        """Every (m, k) with m ≤ 10, 2 ≤ k ≤ 20 reaches 1e-30 at 256 bits."""
        inverse_pi = 1 / ctx256.pi()
        for k in range(2, 21):
            params = FamilyParams(m=m, k=k)
            report = eval_family(params, "1e-30", ctx256)
            assert report.converged, (m, k)
            assert report.remainder_bound <= 1e-30 * abs(report.value), (m, k)
            assert abs(report.value - inverse_pi) <= report.error_budget, (m, k)
            proven = tail_completely_monotone(params)
            assert proven == (m == 0 or k >= m), (m, k)
            assert report.certified == (proven or report.method == "leibniz"), (m, k)
