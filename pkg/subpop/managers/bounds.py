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

"""A data-dependent, dimension-free upper confidence bound on W_α.

Per fold k the bound adds to ω̂_{α,k}

    (2/α)·( √[Δ_{I_k}(μ̂_k) − Δ̂_min]₊ + misspec_budget + C·M·(2K·log(2/δ)/n)^{1/4} )

where Δ is the mean squared error of μ̂ on the fold and Δ̂_min that of the
same learner refitted on the fold. C is a heuristic constant (default 1),
and misspec_budget stands in for the unidentifiable distance between the
model class and μ*; with 0 this is a well-specified-case bound.
"""

from gettext import gettext as _

import math

import numpy as np

from ..helpers.errors import ValidationError
from ..helpers.logging import child_logger
from ..helpers.workers import ordered_map, resolve_workers
from ..items.results import DimFreeBound
from .estimator import fit_folds
from .first_stage import min_class_mse, mse_on

__all__ = (
    'concentration_term',
    'dim_free_ucb',
)

logger = child_logger(__name__)


def concentration_term(C, M, K, n, delta):
    """C·M·(2K·log(2/δ)/n)^{1/4}."""
    return C * M * (2.0 * K * math.log(2.0 / delta) / n) ** 0.25


def _check_constants(dataset, C, M, misspec_budget):
    C, M, misspec_budget = float(C), float(M), float(misspec_budget)
    if not (C > 0.0) or not math.isfinite(C):
        raise ValidationError(_("C must be > 0, not {}").format(C))
    if not (misspec_budget >= 0.0) or not math.isfinite(misspec_budget):
        raise ValidationError(
            _("misspec_budget must be ≥ 0, not {}").format(misspec_budget)
        )
    max_loss = float(np.max(dataset.losses))
    if not math.isfinite(M) or M < max_loss:
        raise ValidationError(
            _("M = {} is below the largest observed loss {}").format(M, max_loss)
        )
    return C, M, misspec_budget


def dim_free_ucb(dataset, cfg, C=1.0, M=None, misspec_budget=0.0):
    """One :class:`DimFreeBound` per fold. ``M`` defaults to the largest loss."""
    if M is None:
        M = float(np.max(dataset.losses))
    C, M, misspec_budget = _check_constants(dataset, C, M, misspec_budget)
    fitted = fit_folds(dataset, cfg)
    alpha = cfg.alpha
    concentration = concentration_term(C, M, len(fitted), dataset.n, cfg.delta)

    def refit_mse(fold):
        # Nothing can be refitted for an external μ̂; 0 keeps the bound an upper bound.
        if cfg.learner == 'external':
            return 0.0
        return min_class_mse(fold.main, cfg.params, cfg.learner)

    workers = resolve_workers(cfg.threads, len(fitted))
    mse_mins = ordered_map(refit_mse, fitted, workers=workers)

    bounds = []
    for fold, mse_min in zip(fitted, mse_mins):
        omega_k = fold.evaluate(alpha).omega_k
        mse_fit = mse_on(fold.model, fold.main)
        excess = math.sqrt(max(mse_fit - mse_min, 0.0))
        ucb = omega_k + (2.0 / alpha) * (excess + misspec_budget + concentration)
        logger.debug(
            'fold %d: Δ=%.6g Δmin=%.6g excess=%.6g ucb=%.6g',
            fold.k, mse_fit, mse_min, excess, ucb,
        )
        bounds.append(DimFreeBound(
            k=fold.k,
            omega_k=omega_k,
            mse_fit=mse_fit,
            mse_min=mse_min,
            excess_mse_term=excess,
            misspec_budget=misspec_budget,
            concentration_term=concentration,
            ucb=ucb,
            alpha=alpha,
            C=C,
            M=M,
            delta=cfg.delta,
        ))
    return bounds
