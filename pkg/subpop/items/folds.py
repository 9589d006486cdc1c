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

"""Fold assignment for cross-fitting."""

from gettext import gettext as _

import numpy as np

from ..helpers.errors import FoldError
from .item_base import BaseItem, frozen_array

__all__ = (
    'FoldPartition',
)


class FoldPartition(BaseItem):
    """Which of the K folds each of the n rows belongs to.

    Build these with :func:`subpop.managers.folds.make_folds`; the
    constructor only checks the invariants.
    """

    _fields = ('K', 'assignment', 'seed')

    def __init__(self, K, assignment, seed):
        self.K = int(K)
        self.assignment = frozen_array(assignment, dtype=np.int64)
        self.seed = int(seed)
        n = self.assignment.size
        if self.K < 2 or self.K > n:
            raise FoldError(
                _("fold count K={} must satisfy 2 ≤ K ≤ n={}").format(self.K, n)
            )
        if np.any(self.assignment < 0) or np.any(self.assignment >= self.K):
            raise FoldError(_("fold indices must lie in [0, {})").format(self.K))
        sizes = self.sizes
        if sizes.min() < 1 or sizes.max() - sizes.min() > 1:
            raise FoldError(
                _("fold sizes must be nonempty and within 1 of each other: {}")
                .format(sizes.tolist())
            )

    @property
    def n(self):
        return self.assignment.size

    @property
    def sizes(self):
        return np.bincount(self.assignment, minlength=self.K)

    def main_indices(self, k):
        """Rows in fold k (I_k), in ascending order."""
        return np.flatnonzero(self.assignment == k)

    def aux_indices(self, k):
        """Rows outside fold k (the complement, used to fit nuisances)."""
        return np.flatnonzero(self.assignment != k)
