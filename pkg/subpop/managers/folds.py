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

"""Seeded K-fold partitions for cross-fitting."""

from gettext import gettext as _

import numpy as np

from ..helpers.errors import FoldError
from ..items.folds import FoldPartition

__all__ = (
    'make_folds',
)


def make_folds(n, K, seed):
    """Shuffle n rows into K folds whose sizes differ by at most one.

    The first ``n mod K`` folds receive the extra row before shuffling, so
    fold sizes are ⌈n/K⌉ or ⌊n/K⌋; the permutation comes from a generator
    seeded with ``seed`` alone, so the same (n, K, seed) always gives the
    same assignment.
    """
    n, K = int(n), int(K)
    if K < 2 or K > n:
        raise FoldError(_("fold count K={} must satisfy 2 ≤ K ≤ n={}").format(K, n))
    balanced = np.arange(n, dtype=np.int64) % K
    rng = np.random.default_rng(seed)
    assignment = rng.permutation(balanced)
    return FoldPartition(K=K, assignment=assignment, seed=seed)
