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

"""First stage: learn μ̂(z) ≈ E[loss | Z = z] by least squares.

:func:`fit_conditional_risk` fits on an auxiliary slice; :func:`mse_on` and
:func:`min_class_mse` supply the out-of-sample statistics the
dimension-free bound needs.
"""

from gettext import gettext as _

import numpy as np

from ...helpers.dev.profiling import timefunc
from ...helpers.errors import ValidationError
from ...helpers.logging import child_logger
from ...items.settings import LearnerParams
from .boosting import BoostedStumpsRiskModel
from .external import ExternalRiskModel
from .knn import KnnRiskModel
from .risk_model import RiskModel

__all__ = (
    'BoostedStumpsRiskModel',
    'ExternalRiskModel',
    'KnnRiskModel',
    'RiskModel',
    'external_model',
    'fit_conditional_risk',
    'min_class_mse',
    'mse_on',
    'predict',
)

logger = child_logger(__name__)


@timefunc
def fit_conditional_risk(aux, params=None, kind='boosted_stumps'):
    """Fit μ̂ on the rows of ``aux`` (a Dataset) with the chosen learner.

    Both learners are deterministic: the same slice and parameters always
    give bitwise-identical predictions.
    """
    params = params if params is not None else LearnerParams()
    if kind == 'external':
        raise ValidationError(
            _("external μ̂ is read from the ‘mu_hat’ column, not fitted")
        )
    if aux is None or aux.n < 1:
        raise ValidationError(_("cannot fit μ̂ on an empty auxiliary slice"))
    if kind == 'knn':
        k_neighbors = params.neighbors_for(aux.n)
        if k_neighbors > aux.n:
            raise ValidationError(
                _("k_neighbors = {} exceeds the {} auxiliary rows")
                .format(k_neighbors, aux.n)
            )
        model = KnnRiskModel(aux.z, aux.losses, k_neighbors)
    elif kind == 'boosted_stumps':
        model = BoostedStumpsRiskModel(
            aux.z,
            aux.losses,
            rounds=params.rounds,
            learning_rate=params.learning_rate,
            max_depth=params.max_depth,
            n_bins=params.n_bins,
        )
    else:
        raise ValidationError(_("unknown learner ‘{}’").format(kind))
    logger.debug('fitted %s μ̂ on %d rows', kind, aux.n)
    return model


def external_model(dataset):
    """Wrap ``dataset.external_mu`` as a model (nothing is fitted)."""
    return ExternalRiskModel(dataset)


def predict(model, z):
    """μ̂ at one attribute vector (or, for external models, one row index)."""
    return model.predict(z)


def mse_on(model, fold):
    """Δ_S(μ̂) = mean over the fold of (loss − μ̂(Z))²."""
    if fold is None or fold.n < 1:
        raise ValidationError(_("cannot compute an MSE on an empty fold"))
    resid = fold.losses - model.predict_dataset(fold)
    return float(np.dot(resid, resid) / resid.size)


def min_class_mse(fold, params=None, kind='boosted_stumps'):
    """Δ of the same learner refitted on ``fold`` itself.

    A computable stand-in for min over the model class of Δ_fold(h); the
    greedy learners only approximate that minimum.
    """
    model = fit_conditional_risk(fold, params, kind)
    return mse_on(model, fold)
