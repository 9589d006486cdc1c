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

"""μ̂ supplied by the user as a ``mu_hat`` column rather than fitted here."""

from gettext import gettext as _

import numpy as np

from ...helpers.errors import ValidationError
from .risk_model import RiskModel

__all__ = (
    'ExternalRiskModel',
)


class ExternalRiskModel(RiskModel):
    """Precomputed μ̂(Z_i), aligned with dataset rows by index.

    There is nothing to fit and no clamping: values come back exactly as
    given. Dataset slices carry their own ``external_mu``, so
    :meth:`predict_dataset` works on any fold.
    """

    kind = 'external'

    def __init__(self, dataset):
        if not dataset.has_external_mu:
            raise ValidationError(_("learner ‘external’ requires a ‘mu_hat’ column"))
        super(ExternalRiskModel, self).__init__(
            d=dataset.d,
            loss_range=(dataset.external_mu.min(), dataset.external_mu.max()),
        )
        self.mu = dataset.external_mu

    def predict_dataset(self, dataset):
        if not dataset.has_external_mu:
            raise ValidationError(_("learner ‘external’ requires a ‘mu_hat’ column"))
        return np.array(dataset.external_mu, dtype=float)

    def predict(self, index):
        """μ̂ of the row at ``index`` in the dataset this model was built from."""
        try:
            index = int(index)
        except (TypeError, ValueError):
            raise ValidationError(
                _("external models are queried by row index, not by attributes")
            )
        if not (0 <= index < self.mu.size):
            raise ValidationError(
                _("row {} is outside the external μ̂ alignment (n = {})")
                .format(index, self.mu.size)
            )
        return float(self.mu[index])

    def predict_z(self, z):
        raise ValidationError(
            _("external models are queried by row index, not by attributes")
        )
