import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx

from meanbound import (
    H_INFO,
    DomainError,
    HFunctionId,
    bernoulli_table,
    csc_coefficients,
    cot_coefficients,
    csc_sq_coefficients,
    csc_series,
    cot_series,
    csc_sq_series,
    default_table,
    h1_coefficients,
    h3_coefficients,
    h_eval,
    h_limit,
)

H1, H2, H3, H4 = HFunctionId.H1, HFunctionId.H2, HFunctionId.H3, HFunctionId.H4

# 60-digit reference values at exact binary64 arguments.
CSC_01 = 10.016686131634776
COT_01 = 9.966644423259238
CSCSQ_01 = 100.33400105968445
H_SERIES_BRANCH = {H1: 0.8290132879180891, H2: 0.6656634427106257,
                   H3: 0.6747707722762277, H4: 0.24208198090209185}  # at x = 0.3
H_DIRECT_BRANCH = {(H1, 1.0): 0.7761121783407293, (H2, 1.0): 0.6551450720424306,
                   (H2, 4.0): 0.2808603928784096, (H3, 2.0): 1.4382792142431808,
                   (H4, 2.5): -0.5112992987721374}
H4_GAP_AT_PI_MINUS_1E4 = 6.366697665319936e-05  # h4(pi - 1e-4) + 1


def direct_formula(fn_id, x):
    """The defining trigonometric expressions, written out independently."""
    s, c = math.sin(x), math.cos(x)
    if fn_id is H1:
        return (s / x - c * c) / (s * s)
    if fn_id is H2:
        return (s - x * c) / (x * (1.0 - c))
    if fn_id is H3:
        return (x - s * c) / (x * s * s)
    return (x - s) * c / (x - s * c)


class TestReciprocalSineSeries:
    def test_csc_anchor(self):
        out = csc_series(0.1)
        assert out.value == approx(CSC_01, rel=1e-14)
        assert out.value == approx(1.0 / math.sin(0.1), rel=1e-13)

    def test_cot_anchor(self):
        assert cot_series(0.1).value == approx(COT_01, rel=1e-14)

    def test_csc_sq_anchor(self):
        assert csc_sq_series(0.1).value == approx(CSCSQ_01, rel=1e-14)

    def test_special_points(self):
        assert csc_series(math.pi / 2).value == approx(1.0, rel=1e-14)
        assert cot_series(math.pi / 4).value == approx(1.0, rel=1e-13)
        assert csc_sq_series(math.pi / 2).value == approx(1.0, rel=1e-14)

    def test_odd_even_symmetry(self):
        assert csc_series(-0.7).value == approx(-csc_series(0.7).value, rel=1e-15)
        assert cot_series(-0.7).value == approx(-cot_series(0.7).value, rel=1e-15)
        assert csc_sq_series(-0.7).value == approx(csc_sq_series(0.7).value, rel=1e-15)

    @pytest.mark.parametrize("bad", [0.0, math.pi, -math.pi, 3.2, 4.0, -3.5])
    def test_domain_errors(self, bad):
        for fn in (csc_series, cot_series, csc_sq_series):
            with pytest.raises(DomainError):
                fn(bad)

    def test_agreement_with_direct_up_to_half_pi(self):
        for i in range(1, 158):
            x = i / 100.0
            s = math.sin(x)
            assert csc_series(x).value == approx(1.0 / s, rel=1e-12)
            assert csc_sq_series(x).value == approx(1.0 / (s * s), rel=1e-12)
            if x <= 1.57:  # cot crosses zero at pi/2; relative tolerance is ill-posed there
                assert cot_series(x).value == approx(math.cos(x) / s, rel=1e-12)

    def test_csc_sq_is_negated_cot_derivative(self):
        # probe points stay >= 0.4: the h^2/6 * cot''' truncation of the
        # central difference grows like x^-4 and passes 1e-8 below that
        h = 1e-5
        for x in (0.4, 0.5, 0.9, 1.2):
            fd = (cot_series(x - h).value - cot_series(x + h).value) / (2.0 * h)
            assert abs(csc_sq_series(x).value - fd) <= 1e-8

    def test_truncation_metadata(self):
        out = csc_series(0.1)
        assert 1 <= out.terms_used <= 32
        assert 0.0 <= out.truncation_bound <= 1e-18 * abs(out.value)
        near_pi = csc_series(3.0)
        assert near_pi.terms_used <= 32
        assert near_pi.truncation_bound >= 0.0

    def test_explicit_table_argument(self):
        table = bernoulli_table(16)
        assert csc_series(0.1, table).value == approx(CSC_01, rel=1e-13)


class TestCoefficients:
    def test_h1_leading_terms(self):
        table = default_table()
        assert h1_coefficients(3, table) == [
            (0, Fraction(5, 6)),
            (2, Fraction(-17, 360)),
            (4, Fraction(-43, 5040)),
        ]

    def test_h3_leading_terms(self):
        table = default_table()
        assert h3_coefficients(3, table) == [
            (0, Fraction(2, 3)),
            (2, Fraction(4, 45)),
            (4, Fraction(4, 315)),
        ]

    def test_reciprocal_sine_leading_terms(self):
        table = default_table()
        assert csc_coefficients(2, table) == [(1, Fraction(1, 6)), (3, Fraction(7, 360))]
        assert cot_coefficients(2, table) == [(1, Fraction(-1, 3)), (3, Fraction(-1, 45))]
        assert csc_sq_coefficients(2, table) == [(0, Fraction(1, 3)), (2, Fraction(1, 15))]

    def test_sign_structure(self):
        # every raw h1 coefficient is negative, every h3 coefficient positive
        table = bernoulli_table(64)
        for n in range(1, 33):
            assert ((1 - n) * 2 ** (2 * n + 1) - 2) * table.abs_b2n(n) < 0
            assert n * 2 ** (2 * n + 1) * table.abs_b2n(n) > 0

    def test_order_validation(self):
        table = bernoulli_table(8)
        with pytest.raises(DomainError):
            h1_coefficients(0, table)
        with pytest.raises(DomainError):
            h1_coefficients(5, table)


class TestHEval:
    def test_endpoint_values(self):
        sqrt2 = math.sqrt(2.0)
        assert h_eval(H1, math.pi / 2) == approx(2 / math.pi, rel=1e-14)
        assert h_eval(H2, math.pi / 4) == approx((4 - math.pi) / ((sqrt2 - 1) * math.pi), rel=1e-14)
        assert h_eval(H2, math.pi / 2) == approx(2 / math.pi, rel=1e-14)
        assert h_eval(H3, math.pi / 4) == approx(2 - 4 / math.pi, rel=1e-14)
        assert h_eval(H4, math.pi / 4) == approx(
            (math.pi - 2 * sqrt2) / (sqrt2 * math.pi - 2 * sqrt2), rel=1e-14
        )

    def test_h2_continuity_point(self):
        assert h_eval(H2, math.pi) == approx(0.5, rel=1e-15)

    def test_h4_value_at_half_pi(self):
        assert h_eval(H4, math.pi / 2) == approx(0.0, abs=1e-16)

    def test_series_branch_anchors(self):
        for fn_id, expected in H_SERIES_BRANCH.items():
            assert h_eval(fn_id, 0.3) == approx(expected, rel=1e-13)

    def test_direct_branch_anchors(self):
        for (fn_id, x), expected in H_DIRECT_BRANCH.items():
            assert h_eval(fn_id, x) == approx(expected, rel=1e-13)

    def test_branch_agreement_on_overlap(self):
        # h_eval uses the series below 1/2; the defining formulas must agree
        for i in range(50, 500, 3):
            x = i / 1000.0
            for fn_id in HFunctionId:
                assert h_eval(fn_id, x) == approx(direct_formula(fn_id, x), rel=1e-10)

    @pytest.mark.parametrize(
        "fn_id,bad",
        [
            (H1, 0.0), (H1, math.pi), (H1, 3.2), (H1, -0.5),
            (H2, 0.0), (H2, math.tau), (H2, 7.0),
            (H3, math.pi), (H4, math.pi), (H4, -1.0),
        ],
    )
    def test_domain_errors(self, fn_id, bad):
        with pytest.raises(DomainError):
            h_eval(fn_id, bad)

    def test_h2_defined_beyond_pi(self):
        assert h_eval(H2, 5.0) == approx(direct_formula(H2, 5.0), rel=1e-13)

    @given(x=st.floats(min_value=1e-3, max_value=3.14))
    @settings(max_examples=200)
    def test_h1_below_its_limit(self, x):
        assert h_eval(H1, x) < 5.0 / 6.0

    @given(x=st.floats(min_value=1e-3, max_value=3.14))
    @settings(max_examples=200)
    def test_h3_above_its_limit(self, x):
        assert h_eval(H3, x) > 2.0 / 3.0

    def test_monotone_around_switch_point(self):
        # strictness must survive the series/direct handoff at 1/2
        for fn_id in HFunctionId:
            values = [h_eval(fn_id, 0.4 + i / 1000.0) for i in range(201)]
            diffs = [b - a for a, b in zip(values, values[1:])]
            if H_INFO[fn_id].increasing:
                assert all(d > 0 for d in diffs)
            else:
                assert all(d < 0 for d in diffs)


class TestHLimit:
    def test_left_limits(self):
        assert h_limit(H1, "left") == approx(5 / 6, rel=0)
        assert h_limit(H2, "left") == approx(2 / 3, rel=0)
        assert h_limit(H3, "left") == approx(2 / 3, rel=0)
        assert h_limit(H4, "left") == approx(1 / 4, rel=0)

    def test_right_limits(self):
        assert h_limit(H1, "right") == -math.inf
        assert h_limit(H2, "right") == -math.inf
        assert h_limit(H3, "right") == math.inf
        assert h_limit(H4, "right") == -1.0

    def test_bad_endpoint(self):
        with pytest.raises(DomainError):
            h_limit(H1, "middle")

    def test_left_probes_approach_limits(self):
        for fn_id in HFunctionId:
            assert abs(h_eval(fn_id, 1e-4) - h_limit(fn_id, "left")) <= 1e-6

    def test_h4_right_approach_rate(self):
        # h4(pi - eps) = -1 + 2 eps/pi + O(eps^2): first-order approach
        gap = h_eval(H4, math.pi - 1e-4) - h_limit(H4, "right")
        assert gap == approx(H4_GAP_AT_PI_MINUS_1E4, rel=1e-6)
        assert abs(h_eval(H4, math.pi - 1e-6) - h_limit(H4, "right")) <= 1e-6


class TestDefaultTable:
    def test_env_var_caps_table(self, monkeypatch):
        monkeypatch.setenv("MEANBOUND_BERNOULLI_MAX", "10")
        assert default_table().max_index == 10
        assert default_table().n_terms == 5

    def test_env_var_default(self, monkeypatch):
        monkeypatch.delenv("MEANBOUND_BERNOULLI_MAX", raising=False)
        assert default_table().max_index == 64

    @pytest.mark.parametrize("bad", ["ten", "3", "0", "66"])
    def test_env_var_invalid(self, monkeypatch, bad):
        monkeypatch.setenv("MEANBOUND_BERNOULLI_MAX", bad)
        with pytest.raises(DomainError):
            default_table()
