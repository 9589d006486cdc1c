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

"""The fitted conditional-risk model μ̂ and what every kind of it shares."""

from gettext import gettext as _

import copy

import numpy as np

from ...helpers.errors import ValidationError
from ...items.item_base import BaseItem

__all__ = (
    'RiskModel',
)


class RiskModel(BaseItem):
    """A predictor μ̂: Z → ℝ of the loss, plus its auxiliary-fold quantile q̂.

    Subclasses implement :meth:`_predict_z`. Fitted learners clamp their
    output to the range of the training losses; ``q_hat`` is ``None`` until
    the estimator attaches one with :meth:`with_quantile`.
    """

    kind = None

    _fields = ('kind', 'd', 'loss_range', 'q_hat')

    def __init__(self, d, loss_range):
        self.d = int(d)
        self.loss_range = (float(loss_range[0]), float(loss_range[1]))
        self.q_hat = None

    def with_quantile(self, q_hat):
        """A copy of this model carrying ``q_hat``; fitted state is shared."""
        twin = copy.copy(self)
        twin.q_hat = float(q_hat)
        return twin

    # ***

    def _check_z(self, z):
        z = np.asarray(z, dtype=float)
        if z.ndim == 1:
            z = z.reshape(1, -1) if z.size == self.d else z.reshape(-1, 1)
        if z.ndim != 2 or z.shape[1] != self.d:
            raise ValidationError(
                _("attribute dimension {} does not match the model's {}")
                .format(z.shape[-1] if z.ndim else 0, self.d)
            )
        return z

    def _clamp(self, predictions):
        low, high = self.loss_range
        return np.clip(predictions, low, high)

    def _predict_z(self, z):
        raise NotImplementedError

    def predict_z(self, z):
        """Predictions for each row of ``z`` (shape (m, d) or a single vector)."""
        return self._clamp(self._predict_z(self._check_z(z)))

    def predict_dataset(self, dataset):
        """μ̂(Z_i) for every row of ``dataset``."""
        return self.predict_z(dataset.z)

    def predict(self, z):
        """μ̂(z) for one attribute vector."""
        z = np.asarray(z, dtype=float).reshape(-1)
        if z.size != self.d:
            raise ValidationError(
                _("attribute dimension {} does not match the model's {}")
                .format(z.size, self.d)
            )
        return float(self.predict_z(z.reshape(1, -1))[0])
