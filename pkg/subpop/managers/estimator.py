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

"""Cross-fitted, debiased estimation of the worst-case subpopulation loss.

For each fold k, μ̂_k is fitted on the other folds and its (1−α)-quantile
q̂_k is taken over those same auxiliary rows. On fold k itself,

    ω̂_k  = Ŵ_α(μ̂_k(Z))  +  mean[ τ̂_k(Z)·(loss − μ̂_k(Z)) ]
    σ̂²_k = (1/α²)·Var[(μ̂_k(Z) − q̂_k)₊]  +  Var[τ̂_k(Z)·(loss − μ̂_k(Z))]

with τ̂_k(z) = (1/α)·1{μ̂_k(z) ≥ q̂_k}. The estimate averages ω̂_k and σ̂²_k
over folds and reports ω̂ ± z_δ·σ̂/√n.

Fitting is the expensive part and does not depend on α, so
:func:`fit_folds` does it once and :class:`FittedFold` evaluates any α.
"""

from gettext import gettext as _

import math

import lazy_import
import numpy as np

from ..helpers.dev.profiling import timefunc
from ..helpers.errors import EstimationError, ValidationError
from ..helpers.logging import child_logger
from ..helpers.workers import ordered_map, resolve_workers
from ..items.results import FoldEstimate, WorstCaseEstimate
from .cvar_dual import CvarCurve, empirical_quantile
from .first_stage import external_model, fit_conditional_risk
from .folds import make_folds

stats = lazy_import.lazy_module('scipy.stats')

__all__ = (
    'FittedFold',
    'augmentation_terms',
    'aux_quantile',
    'critical_value',
    'debias_correction',
    'estimate',
    'estimate_curve',
    'estimate_plugin_only',
    'estimate_with_folds',
    'fit_folds',
    'fold_variance',
    'plug_in_cvar',
    'summarize',
    'tau_hat',
    'worst_case_members',
)

logger = child_logger(__name__)


def critical_value(delta):
    """z_δ, the standard normal (1 − δ/2)-quantile."""
    return float(stats.norm.ppf(1.0 - float(delta) / 2.0))


def aux_quantile(aux_predictions, alpha):
    """q̂: the lower (1−α)-quantile of μ̂ over the auxiliary rows.

    At α = 1 the quantile level is 0, where inf{t : F̂(t) ≥ 0} is −∞, so
    every row belongs to the worst-case subpopulation (the whole population).
    """
    if alpha >= 1.0:
        return -np.inf
    return empirical_quantile(aux_predictions, 1.0 - alpha, 'lower')


def _tau(mu, q_hat, alpha):
    return np.where(mu >= q_hat, 1.0 / alpha, 0.0)


def tau_hat(model, z, alpha):
    """τ̂(z) = 1/α when μ̂(z) ≥ q̂ (inclusive), else 0."""
    if model.q_hat is None:
        raise ValidationError(_("the model has no quantile q̂ attached"))
    return 1.0 / alpha if model.predict(z) >= model.q_hat else 0.0


def augmentation_terms(losses, mu, tau):
    """τ̂(Z_i)·(loss_i − μ̂(Z_i)), the per-row debiasing terms."""
    return np.asarray(tau, dtype=float) * (
        np.asarray(losses, dtype=float) - np.asarray(mu, dtype=float)
    )


def _positive_excess(mu, q_hat):
    # Var[(μ − q)₊] is shift-invariant once q ≤ min μ, and q̂ = −∞ at α = 1.
    return np.maximum(mu - max(q_hat, mu.min()), 0.0)


def _variance(mu, terms, q_hat, alpha):
    excess = _positive_excess(mu, q_hat)
    return float(np.var(excess) / (alpha * alpha) + np.var(terms))


def plug_in_cvar(model, fold, alpha):
    """Ŵ_α of μ̂ over the fold: the plug-in worst-case estimate."""
    return CvarCurve(model.predict_dataset(fold)).value(alpha)


def debias_correction(model, fold, alpha):
    """mean over the fold of τ̂(Z)·(loss − μ̂(Z))."""
    if model.q_hat is None:
        raise ValidationError(_("the model has no quantile q̂ attached"))
    mu = model.predict_dataset(fold)
    terms = augmentation_terms(fold.losses, mu, _tau(mu, model.q_hat, alpha))
    return float(np.mean(terms))


def fold_variance(model, fold, alpha):
    """σ̂²_k with population (divide-by-|I_k|) variances."""
    if fold.n < 2:
        raise EstimationError(
            _("a fold needs at least 2 rows for a variance, not {}").format(fold.n)
        )
    if model.q_hat is None:
        raise ValidationError(_("the model has no quantile q̂ attached"))
    mu = model.predict_dataset(fold)
    terms = augmentation_terms(fold.losses, mu, _tau(mu, model.q_hat, alpha))
    return _variance(mu, terms, model.q_hat, alpha)


# ***

def _canonical_order(dataset, indices):
    """Sort fold rows by content, so results ignore the original row order."""
    keys = [dataset.losses[indices]]
    keys.extend(dataset.z[indices, col] for col in range(dataset.d))
    if dataset.has_external_mu:
        keys.append(dataset.external_mu[indices])
    # np.lexsort treats the last key as primary.
    return indices[np.lexsort(keys[::-1])]


class FittedFold(object):
    """Fold k with μ̂_k fitted off-fold and predictions cached on both sides."""

    def __init__(self, k, rows, model, aux_predictions, main, main_predictions):
        self.k = k
        self.rows = rows
        self.model = model
        self.aux_predictions = aux_predictions
        self.main = main
        self.main_predictions = main_predictions
        self.curve = CvarCurve(main_predictions)
        self.residuals = main.losses - main_predictions

    @property
    def n_k(self):
        return self.main.n

    def model_at(self, alpha):
        """μ̂_k carrying the q̂_k for ``alpha``."""
        return self.model.with_quantile(aux_quantile(self.aux_predictions, alpha))

    def plug_in(self, alpha):
        return self.curve.value(alpha)

    def members(self, alpha):
        """Rows of this fold flagged as the worst-case subpopulation."""
        q_hat = aux_quantile(self.aux_predictions, alpha)
        return self.main_predictions >= q_hat

    def evaluate(self, alpha, debiased=True):
        if self.n_k < 2:
            raise EstimationError(
                _("fold {} has {} rows; at least 2 are needed").format(self.k, self.n_k)
            )
        q_hat = aux_quantile(self.aux_predictions, alpha)
        mu = self.main_predictions
        terms = _tau(mu, q_hat, alpha) * self.residuals
        plug_in = self.curve.value(alpha)
        correction = float(np.mean(terms)) if debiased else 0.0
        sigma2 = _variance(mu, terms, q_hat, alpha)
        estimate = FoldEstimate(
            k=self.k,
            n_k=self.n_k,
            omega_k=plug_in + correction,
            sigma2_k=sigma2,
            plug_in_k=plug_in,
            correction_k=correction,
            q_hat_k=q_hat,
        )
        logger.debug(
            'fold %d (n=%d) α=%g: q̂=%.6g plug-in=%.6g correction=%.6g σ̂²=%.6g',
            self.k, self.n_k, alpha, q_hat, plug_in, correction, sigma2,
        )
        return estimate


def _check_inputs(dataset, cfg):
    cfg.check_dataset(dataset)
    if dataset.n < 2 * cfg.K:
        raise ValidationError(
            _("need n ≥ 2K rows for K={} folds, not n={}").format(cfg.K, dataset.n)
        )


@timefunc
def fit_folds(dataset, cfg, folds=None):
    """Fit μ̂_k for every fold; folds may be fitted concurrently."""
    _check_inputs(dataset, cfg)
    if folds is None:
        folds = make_folds(dataset.n, cfg.K, cfg.seed)
    elif folds.n != dataset.n:
        raise ValidationError(
            _("fold partition covers {} rows, dataset has {}").format(folds.n, dataset.n)
        )

    def fit_one(k):
        rows = _canonical_order(dataset, folds.main_indices(k))
        aux = dataset.subset(_canonical_order(dataset, folds.aux_indices(k)))
        main = dataset.subset(rows)
        if cfg.learner == 'external':
            model = external_model(aux)
        else:
            model = fit_conditional_risk(aux, cfg.params, cfg.learner)
        return FittedFold(
            k=k,
            rows=rows,
            model=model,
            aux_predictions=model.predict_dataset(aux),
            main=main,
            main_predictions=model.predict_dataset(main),
        )

    workers = resolve_workers(cfg.threads, folds.K)
    fitted = ordered_map(fit_one, range(folds.K), workers=workers)
    logger.info(
        'fitted %d folds (%s, %d worker%s) on n=%d',
        folds.K, cfg.learner, workers, '' if workers == 1 else 's', dataset.n,
    )
    return fitted


def summarize(fitted, alpha, delta, n, debiased=True):
    """Aggregate per-fold terms, in fold order, into a :class:`WorstCaseEstimate`."""
    per_fold = [fold.evaluate(alpha, debiased=debiased) for fold in fitted]
    # Folds are weighted by size; with K dividing n this is the plain mean.
    omega = math.fsum(fold.n_k * fold.omega_k for fold in per_fold) / n
    sigma = math.sqrt(math.fsum(fold.n_k * fold.sigma2_k for fold in per_fold) / n)
    half_width = critical_value(delta) * sigma / math.sqrt(n)
    return WorstCaseEstimate(
        alpha=alpha,
        omega=omega,
        sigma=sigma,
        ci_low=omega - half_width,
        ci_high=omega + half_width,
        delta=delta,
        n=n,
        K=len(per_fold),
        debiased=debiased,
        folds=per_fold,
    )


def estimate_with_folds(dataset, cfg, folds, debiased=True):
    fitted = fit_folds(dataset, cfg, folds)
    return summarize(fitted, cfg.alpha, cfg.delta, dataset.n, debiased=debiased)


def estimate(dataset, cfg):
    """Cross-fitted debiased estimate ω̂_α with its confidence interval."""
    result = estimate_with_folds(dataset, cfg, None, debiased=True)
    logger.info(
        'α=%g: ω̂=%.6g σ̂=%.6g CI=[%.6g, %.6g]',
        result.alpha, result.omega, result.sigma, result.ci_low, result.ci_high,
    )
    return result


def estimate_plugin_only(dataset, cfg):
    """As :func:`estimate`, with every fold's correction forced to 0."""
    return estimate_with_folds(dataset, cfg, None, debiased=False)


def estimate_curve(dataset, cfg, alphas, debiased=True):
    """Estimates at several α from one set of fitted folds."""
    alphas = [float(alpha) for alpha in alphas]
    if not alphas:
        raise ValidationError(_("no α values given"))
    for alpha in alphas:
        if not (0.0 < alpha <= 1.0):
            raise ValidationError(_("alpha must be in (0, 1], not {}").format(alpha))
    fitted = fit_folds(dataset, cfg)
    return [
        summarize(fitted, alpha, cfg.delta, dataset.n, debiased=debiased)
        for alpha in alphas
    ]


def worst_case_members(dataset, cfg):
    """Per row: its fold, its cross-fitted μ̂, and whether μ̂ ≥ q̂ of that fold."""
    fitted = fit_folds(dataset, cfg)
    fold_of = np.empty(dataset.n, dtype=np.int64)
    mu_hat = np.empty(dataset.n)
    member = np.zeros(dataset.n, dtype=bool)
    for fold in fitted:
        fold_of[fold.rows] = fold.k
        mu_hat[fold.rows] = fold.main_predictions
        member[fold.rows] = fold.members(cfg.alpha)
    return fold_of, mu_hat, member
