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

"""k-nearest-neighbor regression of the loss on standardized attributes."""

import lazy_import
import numpy as np

from .risk_model import RiskModel

neighbors = lazy_import.lazy_module('sklearn.neighbors')
preprocessing = lazy_import.lazy_module('sklearn.preprocessing')

__all__ = (
    'KnnRiskModel',
)


class KnnRiskModel(RiskModel):
    """Average loss of the k training rows nearest in standardized Z.

    Each attribute is scaled to unit variance (constant attributes are left
    unscaled), so no single coordinate dominates the Euclidean distance.
    """

    kind = 'knn'

    _fields = RiskModel._fields + ('k_neighbors',)

    def __init__(self, z, losses, k_neighbors):
        super(KnnRiskModel, self).__init__(
            d=z.shape[1], loss_range=(losses.min(), losses.max()),
        )
        self.k_neighbors = int(k_neighbors)
        self.scaler = preprocessing.StandardScaler()
        scaled = self.scaler.fit_transform(z)
        self.regressor = neighbors.KNeighborsRegressor(
            n_neighbors=self.k_neighbors, weights='uniform',
        )
        self.regressor.fit(scaled, np.asarray(losses, dtype=float))

    @property
    def scale(self):
        """Per-coordinate standardization (mean, std) learned at fit time."""
        return self.scaler.mean_, self.scaler.scale_

    def _predict_z(self, z):
        return self.regressor.predict(self.scaler.transform(z))
