"""Monte Carlo single-shot estimation: reproducibility and statistical checks."""

import dataclasses
import math

import numpy as np
import pytest

from genfisher.estimation import TrialPlan, TrialReport, run_trials, unbiasedness_report
from genfisher.measures import mean_error_closed
from genfisher.numerics import DomainError
from genfisher.probe import ProbeDistribution


def plan(alpha=2.0, energy=1.0, shift=0.3, q=0.5, trials=1_000_000, seed=42, boots=200):
    return TrialPlan(
        distribution=ProbeDistribution.from_shape_energy(alpha, energy),
        true_shift=shift,
        q=q,
        trials=trials,
        master_seed=seed,
        bootstrap_resamples=boots,
    )


class TestValidation:
    def test_rejects_zero_trials(self):
        with pytest.raises(DomainError):
            plan(trials=0)

    def test_rejects_small_bootstrap(self):
        with pytest.raises(DomainError):
            plan(boots=50)

    def test_rejects_nonpositive_order(self):
        with pytest.raises(DomainError):
            plan(q=0.0)


class TestRunTrials:
    def test_gaussian_half_order_megatrial(self):
        # predicted error is the standard deviation gamma / 2 = 1/2
        report = run_trials(plan())
        assert abs(report.empirical_mean - 0.3) <= 3.0 * report.mean_std_error
        assert report.predicted_mean_error == mean_error_closed(
            ProbeDistribution.from_shape_energy(2.0, 1.0), 0.5
        ).value
        assert report.predicted_mean_error == pytest.approx(0.5, rel=1e-12)
        assert (
            report.generalized_error_ci_low
            <= report.predicted_mean_error
            <= report.generalized_error_ci_high
        )

    def test_two_sided_exponential_first_order(self):
        report = run_trials(plan(alpha=1.0, shift=0.0, q=1.0, seed=7))
        assert report.predicted_mean_error == pytest.approx(0.5, rel=1e-12)
        assert (
            report.generalized_error_ci_low
            <= report.predicted_mean_error
            <= report.generalized_error_ci_high
        )
        assert report.empirical_generalized_error == pytest.approx(0.5, rel=5e-3)

    def test_single_trial_degenerates_gracefully(self):
        report = run_trials(plan(trials=1, boots=100))
        assert report.trials == 1
        assert report.mean_std_error == 0.0
        assert report.generalized_error_ci_low == report.empirical_generalized_error
        assert report.generalized_error_ci_high == report.empirical_generalized_error

    def test_ci_brackets_point_estimate(self):
        report = run_trials(plan(trials=500, seed=3))
        assert (
            report.generalized_error_ci_low
            <= report.empirical_generalized_error
            <= report.generalized_error_ci_high
        )

    def test_heavy_moment_reports_sample_maximum(self):
        report = run_trials(plan(q=0.25, trials=10_000, seed=5))
        assert report.max_abs_deviation > 0.0
        assert math.isfinite(report.max_abs_deviation)

    def test_bitwise_reproducible(self):
        a = run_trials(plan(trials=300_000, seed=314))
        b = run_trials(plan(trials=300_000, seed=314))
        assert dataclasses.asdict(a) == dataclasses.asdict(b)

    def test_seed_changes_outcome(self):
        a = run_trials(plan(trials=10_000, seed=1))
        b = run_trials(plan(trials=10_000, seed=2))
        assert a.empirical_mean != b.empirical_mean

    def test_partition_boundary_consistency(self):
        # crossing the substream boundary must not break determinism
        a = run_trials(plan(trials=250_001, seed=6, boots=100))
        b = run_trials(plan(trials=250_001, seed=6, boots=100))
        assert a == b


class TestUnbiasedness:
    def test_gaussian_probe(self):
        rep = unbiasedness_report(plan(shift=1.5, seed=21))
        assert rep.passed
        assert abs(rep.bias) <= 3.0 * rep.std_error

    def test_heavy_tailed_probe(self):
        rep = unbiasedness_report(
            TrialPlan(
                distribution=ProbeDistribution.from_shape_scale(0.8, 1.0),
                true_shift=-0.2,
                q=0.5,
                trials=1_000_000,
                master_seed=22,
                bootstrap_resamples=100,
            )
        )
        assert rep.passed

    def test_three_sigma_rule_calibration(self):
        # with 10 trials per batch the 3-sigma criterion should pass for
        # nearly every seed (t_9 tails put ~1.5% outside)
        passes = 0
        for seed in range(200):
            rep = unbiasedness_report(plan(trials=10, seed=seed, boots=100))
            passes += rep.passed
        assert passes / 200 >= 0.97


class TestConvergence:
    def test_generalized_error_converges_with_trials(self):
        target = mean_error_closed(ProbeDistribution.from_shape_energy(2.0, 1.0), 0.5).value
        medians = []
        for trials in (10_000, 100_000, 1_000_000):
            gaps = []
            for seed in range(20):
                report = run_trials(plan(trials=trials, seed=1000 + seed, boots=100))
                gaps.append(abs(report.empirical_generalized_error - target))
            medians.append(float(np.median(gaps)))
        assert medians[0] > medians[1] > medians[2]


class TestReportShape:
    def test_fields_are_complete(self):
        report = run_trials(plan(trials=100, boots=100))
        names = {f.name for f in dataclasses.fields(TrialReport)}
        assert names == {
            "trials",
            "empirical_mean",
            "mean_std_error",
            "empirical_generalized_error",
            "generalized_error_ci_low",
            "generalized_error_ci_high",
            "predicted_mean_error",
            "max_abs_deviation",
            "seed",
        }
        assert report.seed == 42
