"""Tests for the critical-line engine: theta, Z, the scan, the counter."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

import rzs.zeta
from rzs import (
    AuditError,
    DomainError,
    PrecisionError,
    count_zeros,
    gamma_asymptotic,
    scan_zeros,
    theta,
    z_function,
    zero_table_to_csv,
)

import oracles

TWO_PI = 2.0 * math.pi


# ----------------------------------------------------------------------
# theta
# ----------------------------------------------------------------------

class TestTheta:
    def test_zero_at_origin(self):
        assert theta(0.0) == 0.0

    def test_parity_at_50(self):
        assert theta(-50.0) == -theta(50.0)

    def test_against_quadrature_oracle_at_100(self):
        assert abs(theta(100.0) - oracles.theta_oracle(100.0)) < 1.0e-10

    def test_against_quadrature_oracle_across_heights(self):
        for t in (0.5, 1.0, 14.134725, 30.0, 500.0, 5000.0, 9999.0):
            assert abs(theta(t) - oracles.theta_oracle(t)) < 1.0e-10

    def test_frozen_value_at_100(self):
        assert theta(100.0) == pytest.approx(87.97216523178722, rel=1.0e-12)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            theta(math.nan)
        with pytest.raises(DomainError):
            theta(math.inf)

    def test_beyond_supported_height(self):
        with pytest.raises(PrecisionError):
            theta(10001.0)


# ----------------------------------------------------------------------
# z_function
# ----------------------------------------------------------------------

class TestZFunction:
    def test_value_at_origin_is_zeta_half(self):
        sample = z_function(0.0, 1.0e-10)
        assert sample.z_value == pytest.approx(-1.4603545, abs=1.0e-6)
        assert sample.method == "euler_maclaurin"
        assert sample.est_abs_error <= 1.0e-10
        ref, bound = oracles.z_oracle(0.0)
        assert abs(sample.z_value - ref) <= sample.est_abs_error + bound

    def test_first_zero_is_bracketed(self):
        lo = z_function(14.0, 1.0e-6).z_value
        hi = z_function(14.2, 1.0e-6).z_value
        assert math.copysign(1.0, lo) != math.copysign(1.0, hi)

    def test_method_dispatch_at_crossover(self):
        assert z_function(29.999, 1.0e-2).method == "euler_maclaurin"
        assert z_function(30.0, 1.0e-2).method == "riemann_siegel"
        assert z_function(1000.0, 1.0e-2).method == "riemann_siegel"

    def test_parity_at_20_random_heights(self):
        rng = random.Random(20260817)
        for _ in range(20):
            t = rng.uniform(0.5, 80.0)
            plus = z_function(t, 1.0e-2)
            minus = z_function(-t, 1.0e-2)
            assert minus.z_value == plus.z_value
            assert minus.theta_value == -plus.theta_value
            assert theta(-t) == -theta(t)

    def test_consistency_with_independent_zeta(self):
        # |Z(t)| must equal |zeta(1/2+it)| within twice the requested
        # tolerance; the reference comes from the independently
        # truncated Euler-Maclaurin oracle.
        rng = random.Random(1859)
        for _ in range(50):
            t = rng.uniform(1.0, 80.0)
            tol = 1.0e-10 if t < rzs.zeta.CROSSOVER_T else 3.0e-3
            sample = z_function(t, tol)
            ref, bound = oracles.zeta_oracle(t)
            assert abs(abs(sample.z_value) - abs(ref)) <= 2.0 * tol
            # ... and within the per-sample estimate it reports.
            assert (
                abs(abs(sample.z_value) - abs(ref))
                <= sample.est_abs_error + bound + 1.0e-12
            )

    def test_error_estimate_covers_true_error(self):
        for t in (2.0, 14.0, 29.9, 31.0, 45.0, 60.0, 77.0):
            tol = 1.0e-9 if t < rzs.zeta.CROSSOVER_T else 1.0e-2
            sample = z_function(t, tol)
            ref, bound = oracles.z_oracle(t)
            assert abs(sample.z_value - ref) <= sample.est_abs_error + bound

    def test_unreachable_tolerance_raises(self):
        with pytest.raises(PrecisionError):
            z_function(50.0, 1.0e-8)
        with pytest.raises(PrecisionError):
            z_function(1000.0, 1.0e-9)

    def test_sample_fields(self):
        sample = z_function(40.0, 1.0e-2)
        assert sample.t == 40.0
        assert sample.theta_value == theta(40.0)
        assert sample.est_abs_error > 0.0

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            z_function(math.nan, 1.0e-6)
        with pytest.raises(DomainError):
            z_function(10.0, 0.0)
        with pytest.raises(DomainError):
            z_function(10.0, -1.0e-6)
        with pytest.raises(PrecisionError):
            z_function(10001.0, 1.0)


# ----------------------------------------------------------------------
# count_zeros
# ----------------------------------------------------------------------

class TestCountZeros:
    def test_main_term_at_two_pi(self):
        est = count_zeros(TWO_PI)
        assert est.n_main == -1.0

    def test_density_at_two_pi_e(self):
        est = count_zeros(TWO_PI * math.e)
        assert est.density == pytest.approx(1.0 / TWO_PI, rel=1.0e-15)

    def test_total_is_main_plus_correction(self):
        for t in (10.0, 100.0, 5000.0):
            est = count_zeros(t)
            assert est.n_estimate == est.n_main + est.n_correction

    def test_correction_is_configurable(self):
        bare = count_zeros(100.0, n_correction=0.0)
        assert bare.n_correction == 0.0
        assert bare.n_estimate == bare.n_main
        assert count_zeros(100.0).n_correction == 7.0 / 8.0

    def test_estimate_monotone_and_density_nonnegative(self):
        grid = np.linspace(TWO_PI, 1.0e4, 400)
        estimates = [count_zeros(float(t)) for t in grid]
        totals = [e.n_estimate for e in estimates]
        assert all(b >= a for a, b in zip(totals, totals[1:]))
        assert all(e.density >= 0.0 for e in estimates)

    def test_estimate_matches_scan_at_100(self):
        table = scan_zeros(0.0, 100.0, 1.0e-8)
        assert len(table.zeros) == 29
        assert abs(count_zeros(100.0).n_estimate - 29) <= 1.0

    def test_rejects_bad_heights(self):
        for bad in (0.0, -5.0, math.nan, math.inf):
            with pytest.raises(DomainError):
                count_zeros(bad)


# ----------------------------------------------------------------------
# gamma_asymptotic
# ----------------------------------------------------------------------

class TestGammaAsymptotic:
    def test_formula_at_17(self):
        value = gamma_asymptotic(17)
        assert value == pytest.approx(TWO_PI * 17 / math.log(17 / TWO_PI),
                                      rel=1.0e-15)
        assert 106.0 < value < 108.0

    def test_value_at_100(self):
        value = gamma_asymptotic(100)
        assert value == pytest.approx(TWO_PI * 100 / math.log(100 / TWO_PI),
                                      rel=1.0e-15)
        assert value == pytest.approx(227.05, abs=0.05)

    def test_smallest_legal_index(self):
        value = gamma_asymptotic(7)
        assert math.isfinite(value) and value > 0.0

    def test_rejects_small_and_non_integer(self):
        for bad in (6, 0, -3):
            with pytest.raises(DomainError):
                gamma_asymptotic(bad)
        with pytest.raises(DomainError):
            gamma_asymptotic(7.5)
        with pytest.raises(DomainError):
            gamma_asymptotic(True)


# ----------------------------------------------------------------------
# scan_zeros
# ----------------------------------------------------------------------

class TestScanZeros:
    def test_first_zero(self):
        table = scan_zeros(0.0, 15.0, 1.0e-8)
        assert len(table.zeros) == 1
        entry = table.zeros[0]
        assert entry.n == 1
        assert entry.gamma == pytest.approx(14.134725, abs=1.0e-6)
        assert entry.bracket_hi - entry.bracket_lo <= 1.0e-8
        assert entry.bracket_lo < entry.gamma < entry.bracket_hi
        assert entry.refined_tol == 1.0e-8

    def test_empty_interval(self):
        table = scan_zeros(1.0, 5.0, 1.0e-8)
        assert table.zeros == ()
        assert table.t_max == 5.0

    def test_completeness_against_counting_formula(self):
        for t_max in (50.0, 100.0, 250.0, 500.0):
            table = scan_zeros(0.0, t_max, 1.0e-8)
            expected = round(count_zeros(t_max).n_estimate)
            assert abs(len(table.zeros) - expected) <= 1

    def test_bracket_soundness(self, table_500):
        for entry in table_500.zeros:
            z_lo = z_function(entry.bracket_lo, 1.0).z_value
            z_hi = z_function(entry.bracket_hi, 1.0).z_value
            assert z_lo * z_hi < 0.0

    def test_indices_strictly_increasing(self, table_500):
        gammas = [e.gamma for e in table_500.zeros]
        assert gammas == sorted(gammas)
        assert all(b > a for a, b in zip(gammas, gammas[1:]))
        assert [e.n for e in table_500.zeros] == list(range(1, len(gammas) + 1))

    def test_half_stride_gives_identical_zero_set(self):
        coarse = scan_zeros(0.0, 250.0, 1.0e-8)
        fine = scan_zeros(0.0, 250.0, 1.0e-8, initial_stride=0.125)
        assert len(coarse.zeros) == len(fine.zeros)
        for a, b in zip(coarse.zeros, fine.zeros):
            assert a.n == b.n
            assert abs(a.gamma - b.gamma) <= 1.0e-8

    def test_window_keeps_global_indices(self):
        table = scan_zeros(20.0, 30.0, 1.0e-8)
        assert [e.n for e in table.zeros] == [2, 3]
        assert table.zeros[0].gamma == pytest.approx(21.022040, abs=1.0e-5)
        assert table.zeros[1].gamma == pytest.approx(25.010858, abs=1.0e-5)

    def test_determinism(self):
        a = scan_zeros(0.0, 100.0, 1.0e-8)
        b = scan_zeros(0.0, 100.0, 1.0e-8)
        assert a == b

    def test_worker_count_does_not_change_output(self):
        # 1100/0.25 > 4096 grid points, so two workers really do engage
        # the process pool; the table must come out bitwise identical.
        serial = scan_zeros(0.0, 1100.0, 1.0e-8)
        parallel = scan_zeros(0.0, 1100.0, 1.0e-8, workers=2)
        assert serial == parallel

    def test_audit_failure_raises_at_stride_floor(self, monkeypatch):
        real = count_zeros(50.0)

        def inflated(t, *, n_correction=7.0 / 8.0):
            class Fake:
                n_estimate = real.n_estimate + 10.0
            return Fake()

        monkeypatch.setattr(rzs.zeta, "count_zeros", inflated)
        with pytest.raises(AuditError):
            scan_zeros(0.0, 50.0, 1.0e-8)

    def test_rejects_bad_ranges_and_tolerances(self):
        with pytest.raises(DomainError):
            scan_zeros(-1.0, 10.0, 1.0e-8)
        with pytest.raises(DomainError):
            scan_zeros(10.0, 10.0, 1.0e-8)
        with pytest.raises(DomainError):
            scan_zeros(0.0, 10.0, 0.0)
        with pytest.raises(PrecisionError):
            scan_zeros(0.0, 10.0, 1.0e-9)
        with pytest.raises(PrecisionError):
            scan_zeros(0.0, 2.0e4, 1.0e-8)
        with pytest.raises(DomainError):
            scan_zeros(0.0, 10.0, 1.0e-8, initial_stride=0.0)
        with pytest.raises(DomainError):
            scan_zeros(0.0, 10.0, 1.0e-8, workers=0)


# ----------------------------------------------------------------------
# Asymptote sanity across the full scan
# ----------------------------------------------------------------------

class TestAsymptoteSanity:
    @pytest.mark.xfail(
        strict=True,
        reason="documented band gamma_n/gamma_asymptotic(n) in [0.8, 1.2] "
               "from n = 10 does not hold at small n: the measured ratio "
               "drops to 0.368 at n = 10 and stays outside through n = 25",
    )
    def test_ratio_within_band_from_10(self, full_table):
        for entry in full_table.zeros[9:5000]:
            ratio = entry.gamma / gamma_asymptotic(entry.n)
            assert 0.8 <= ratio <= 1.2

    def test_ratio_within_band_from_26(self, full_table):
        ratios = [e.gamma / gamma_asymptotic(e.n)
                  for e in full_table.zeros[25:5000]]
        assert 0.8 <= min(ratios) and max(ratios) <= 1.2


# ----------------------------------------------------------------------
# CSV serialization
# ----------------------------------------------------------------------

class TestZeroTableCsv:
    def test_header_and_shape(self, table_500):
        text = zero_table_to_csv(table_500)
        lines = text.splitlines()
        assert lines[0] == "n,gamma,bracket_lo,bracket_hi"
        assert len(lines) == len(table_500.zeros) + 1
        assert text.endswith("\n")

    def test_numbers_round_trip_at_full_precision(self, table_500):
        text = zero_table_to_csv(table_500)
        first = text.splitlines()[1].split(",")
        entry = table_500.zeros[0]
        assert int(first[0]) == entry.n
        assert float(first[1]) == entry.gamma
        assert float(first[2]) == entry.bracket_lo
        assert float(first[3]) == entry.bracket_hi

    def test_serialization_is_deterministic(self, table_500):
        assert zero_table_to_csv(table_500) == zero_table_to_csv(table_500)
