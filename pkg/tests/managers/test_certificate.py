# This file exists within 'subpop':
#
#   https://github.com/subpop-dev/subpop
#
# Copyright © 2026 The subpop authors.  All rights reserved.
#
# 'subpop' is free software: you can redistribute it and/or modify it under the terms
# of the GNU General Public License  as  published by the Free Software Foundation,
# either version 3  of the License,  or  (at your option)  any   later    version.
#
# 'subpop' is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY  or  FITNESS FOR A PARTICULAR
# PURPOSE.  See  the  GNU General Public License  for  more details.
#
# You can find the GNU General Public License reprinted in the file titled 'LICENSE',
# or visit <http://www.gnu.org/licenses/>.

import numpy as np
import pytest

from subpop.helpers.errors import ValidationError
from subpop.items.dataset import Dataset
from subpop.items.settings import CertifyParams, EvalConfig
from subpop.managers.certificate import (
    bisect_alpha,
    certificate_error_bound,
    certify,
    refine_alpha,
)
from subpop.managers.cvar_dual import CvarCurve
from subpop.managers.estimator import fit_folds, summarize


def _linear_scan(curve, threshold, alpha_lo, tol):
    """Smallest grid point at or above alpha_lo whose value is acceptable."""
    for alpha in np.arange(alpha_lo, 1.0 + tol, tol):
        alpha = min(float(alpha), 1.0)
        if curve(alpha) <= threshold:
            return alpha
    return 1.0


def _check_against_scan(rng, instances, tol):
    for _trial in range(instances):
        curve = CvarCurve(rng.exponential(size=int(rng.integers(5, 200))))
        threshold = float(rng.uniform(curve(1.0), curve.top))
        alpha_hat, feasible, boundary, _trace = bisect_alpha(curve, threshold, 0.01, tol)
        assert feasible
        assert curve(alpha_hat) <= threshold
        scanned = _linear_scan(curve, threshold, 0.01, tol)
        assert abs(alpha_hat - scanned) <= 2 * tol


class TestBisectAlpha(object):
    def test_staircase(self):
        curve = CvarCurve(np.arange(1.0, 101.0))
        alpha_hat, feasible, boundary, trace = bisect_alpha(curve, 88.0, 0.01, 1e-3)
        assert feasible
        assert not boundary
        assert alpha_hat == pytest.approx(0.25, abs=1e-3)
        assert curve(alpha_hat) <= 88.0
        assert trace[0] == (1.0, curve(1.0))
        assert trace[1][0] == 0.01

    def test_infeasible(self):
        alpha_hat, feasible, boundary, trace = bisect_alpha(
            CvarCurve([1.0, 2.0, 3.0]), 1.5, 0.01, 1e-3,
        )
        assert alpha_hat is None
        assert not feasible
        assert len(trace) == 1

    def test_boundary(self):
        alpha_hat, feasible, boundary, _trace = bisect_alpha(
            CvarCurve([1.0, 2.0, 3.0]), 5.0, 0.05, 1e-3,
        )
        assert alpha_hat == 0.05
        assert feasible
        assert boundary

    @pytest.mark.parametrize('threshold, alpha_lo, tol', [
        (float('nan'), 0.01, 1e-3),
        (1.0, 0.0, 1e-3),
        (1.0, 1.0, 1e-3),
        (1.0, 0.01, 0.0),
    ])
    def test_bad_bracket(self, threshold, alpha_lo, tol):
        with pytest.raises(ValidationError):
            bisect_alpha(CvarCurve([1.0, 2.0]), threshold, alpha_lo, tol)

    def test_agrees_with_linear_scan(self, rng):
        _check_against_scan(rng, 200, 1e-2)

    def test_higher_threshold_never_raises_alpha(self, rng):
        for _trial in range(200):
            curve = CvarCurve(rng.exponential(size=int(rng.integers(5, 200))))
            thresholds = np.sort(rng.uniform(curve(1.0), curve.top, size=5))
            alphas = [bisect_alpha(curve, float(t), 0.01, 1e-3)[0] for t in thresholds]
            assert all(later <= earlier for earlier, later in zip(alphas, alphas[1:]))

    @pytest.mark.slow
    def test_agrees_with_fine_linear_scan(self, rng):
        _check_against_scan(rng, 500, 1e-3)
        _check_against_scan(rng, 100, 1e-4)


class TestRefineAlpha(object):
    def test_widens_down_from_a_late_guess(self):
        curve = CvarCurve(np.arange(1.0, 101.0))
        trace = []
        alpha_hat = refine_alpha(curve, 88.0, 0.9, 0.01, 1e-3, trace)
        assert alpha_hat == pytest.approx(0.25, abs=1e-3)
        assert curve(alpha_hat) <= 88.0

    def test_widens_up_from_an_early_guess(self):
        curve = CvarCurve(np.arange(1.0, 101.0))
        trace = []
        alpha_hat = refine_alpha(curve, 88.0, 0.05, 0.01, 1e-3, trace)
        assert alpha_hat == pytest.approx(0.25, abs=1e-3)
        assert trace[0][0] == 0.05


class TestCertify(object):
    def test_constant_losses_boundary(self, constant_dataset, eval_config):
        params = CertifyParams(threshold=3.0, alpha_lo=0.1)
        result = certify(constant_dataset(n=100, c=2.0), eval_config, params)
        assert result.feasible
        assert result.boundary
        assert result.alpha_hat == 0.1
        assert result.notes

    def test_constant_losses_infeasible(self, constant_dataset, eval_config):
        params = CertifyParams(threshold=1.0)
        result = certify(constant_dataset(n=100, c=2.0), eval_config, params)
        assert not result.feasible
        assert result.alpha_hat is None
        assert result.as_dict()['alpha_hat'] == 'infeasible'

    def test_per_fold_mean(self, linear_dataset, eval_config):
        dataset = linear_dataset(n=300)
        fitted = fit_folds(dataset, eval_config)
        threshold = float(np.mean([fold.plug_in(0.5) for fold in fitted]))
        params = CertifyParams(threshold=threshold, alpha_lo=0.05, tol=1e-4)
        result = certify(dataset, eval_config, params)
        assert result.feasible
        assert len(result.per_fold_alpha) == eval_config.K
        assert result.alpha_hat == pytest.approx(np.mean(result.per_fold_alpha), abs=1e-12)
        for fold, alpha_k in zip(fitted, result.per_fold_alpha):
            assert fold.plug_in(alpha_k) <= threshold

    def test_debiased_curve_mode(self, linear_dataset, eval_config):
        dataset = linear_dataset(n=300)
        fitted = fit_folds(dataset, eval_config)
        threshold = summarize(fitted, 0.5, eval_config.delta, dataset.n).omega
        params = CertifyParams(
            threshold=threshold, alpha_lo=0.05, tol=1e-4, mode='debiased_curve',
        )
        result = certify(dataset, eval_config, params)
        assert result.feasible
        assert result.per_fold_alpha == []
        omega = summarize(fitted, result.alpha_hat, eval_config.delta, dataset.n).omega
        assert omega <= threshold

    def test_trace_is_recorded(self, linear_dataset, eval_config):
        params = CertifyParams(threshold=0.6, alpha_lo=0.05)
        result = certify(linear_dataset(), eval_config, params)
        assert result.trace[0][0] == 1.0
        assert all(len(probe) == 2 for probe in result.trace)

    def test_wrong_params(self, constant_dataset, eval_config):
        with pytest.raises(ValidationError):
            certify(constant_dataset(), eval_config, 3.0)

    def test_external_learner(self):
        losses = np.arange(1.0, 41.0)
        dataset = Dataset(losses, np.zeros(40), external_mu=losses)
        cfg = EvalConfig(K=2, learner='external', threads=1)
        result = certify(dataset, cfg, CertifyParams(threshold=30.0, alpha_lo=0.05))
        assert result.feasible
        assert 0.05 < result.alpha_hat < 1.0


class TestCertificateErrorBound(object):
    def test_radius(self):
        result = certificate_error_bound([0.0, 0.0, 2.0, 2.0], 0.5, 0.5, 1.0)
        assert not result.vacuous
        assert result.quantile == 0.0
        assert result.denominator == 1.0
        assert result.radius == 1.0

    def test_floor_caps_alpha(self):
        result = certificate_error_bound([0.0, 0.0, 2.0, 2.0], 0.9, 0.5, 1.0)
        assert result.alpha_used == 0.5

    def test_vacuous(self):
        result = certificate_error_bound([3.0, 3.0, 3.0], 0.5, 0.5, 1.0)
        assert result.vacuous
        assert result.radius is None

    @pytest.mark.parametrize('alpha_hat, alpha_floor, U_delta', [
        (0.0, 0.5, 1.0),
        (0.5, 0.0, 1.0),
        (0.5, 0.5, -1.0),
        (0.5, 0.5, float('inf')),
    ])
    def test_invalid(self, alpha_hat, alpha_floor, U_delta):
        with pytest.raises(ValidationError):
            certificate_error_bound([1.0, 2.0], alpha_hat, alpha_floor, U_delta)
