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

"""Least-squares gradient boosting of shallow trees on histogram bins.

Each attribute is cut into at most ``n_bins`` bins once, up front: at the
midpoints between distinct values when there are few of them, otherwise
at quantiles. Split search then works on per-bin residual sums built with
``np.bincount``. Every round fits one tree of depth ``max_depth`` (a stump
when 1) to the current residuals and adds ``learning_rate`` times its leaf
means to the running prediction.
"""

from collections import namedtuple

import numpy as np

from ...helpers.logging import child_logger
from .risk_model import RiskModel

__all__ = (
    'BoostedStumpsRiskModel',
    'Tree',
    'bin_edges',
)

logger = child_logger(__name__)

Tree = namedtuple('Tree', ('feature', 'threshold', 'left', 'right', 'value'))
Tree.__doc__ = """One fitted tree, node arrays in preorder.

Leaves have ``feature == -1``; ``value`` already includes the shrinkage.
A row goes left at an internal node when its attribute is ≤ ``threshold``.
"""

# A split must improve the squared error by more than this (relative).
_MIN_GAIN = 1e-12


def bin_edges(column, n_bins):
    """Split thresholds for one attribute: at most ``n_bins - 1`` of them."""
    distinct = np.unique(column)
    if distinct.size <= 1:
        return np.empty(0)
    if distinct.size <= n_bins:
        return (distinct[:-1] + distinct[1:]) / 2.0
    levels = np.linspace(0.0, 1.0, n_bins + 1)[1:-1]
    edges = np.unique(np.quantile(column, levels))
    # An edge at the maximum would leave its right side empty.
    return edges[edges < distinct[-1]]


class _TreeGrower(object):
    """Grows one depth-limited tree on binned attributes."""

    def __init__(self, binned, n_edges, max_depth):
        self.binned = binned
        self.n_edges = n_edges
        self.max_depth = max_depth

    def grow(self, residuals, shrinkage):
        self.residuals = residuals
        self.shrinkage = shrinkage
        self.nodes = []
        self.leaf_of_row = np.empty(residuals.size, dtype=np.intp)
        self._grow(np.arange(residuals.size), self.max_depth)
        feature, threshold_bin, left, right, value = (
            np.array(column) for column in zip(*self.nodes)
        )
        return feature, threshold_bin, left, right, value, self.leaf_of_row

    def _grow(self, rows, depth):
        node_id = len(self.nodes)
        self.nodes.append(None)
        resid = self.residuals[rows]
        leaf_value = self.shrinkage * resid.mean()
        split = self._best_split(rows, resid) if depth > 0 and rows.size > 1 else None
        if split is None:
            self.nodes[node_id] = (-1, -1, -1, -1, leaf_value)
            self.leaf_of_row[rows] = node_id
            return node_id
        feature, threshold_bin = split
        goes_left = self.binned[rows, feature] <= threshold_bin
        left = self._grow(rows[goes_left], depth - 1)
        right = self._grow(rows[~goes_left], depth - 1)
        self.nodes[node_id] = (feature, threshold_bin, left, right, 0.0)
        return node_id

    def _best_split(self, rows, resid):
        count = rows.size
        total = resid.sum()
        parent_score = total * total / count
        best_gain, best = _MIN_GAIN * max(np.dot(resid, resid), 1e-300), None
        for feature, n_edges in enumerate(self.n_edges):
            if n_edges == 0:
                continue
            bins = self.binned[rows, feature]
            n_bins = n_edges + 1
            sums = np.bincount(bins, weights=resid, minlength=n_bins)
            counts = np.bincount(bins, minlength=n_bins)
            left_sum = np.cumsum(sums)[:-1]
            left_count = np.cumsum(counts)[:-1]
            right_sum = total - left_sum
            right_count = count - left_count
            valid = (left_count > 0) & (right_count > 0)
            if not valid.any():
                continue
            with np.errstate(divide='ignore', invalid='ignore'):
                gain = (
                    left_sum ** 2 / left_count
                    + right_sum ** 2 / right_count
                    - parent_score
                )
            gain = np.where(valid, gain, -np.inf)
            threshold_bin = int(np.argmax(gain))
            if gain[threshold_bin] > best_gain:
                best_gain, best = gain[threshold_bin], (feature, threshold_bin)
        return best


class BoostedStumpsRiskModel(RiskModel):
    """Boosted shallow regression trees for μ̂ (stumps at ``max_depth=1``).

    Attributes after fitting:

    - ``base``: the training-loss mean every prediction starts from.
    - ``trees``: one :data:`Tree` per round.
    - ``train_mse_path``: unclamped in-sample MSE after each round; it
      never increases for a learning rate in (0, 1].
    """

    kind = 'boosted_stumps'

    _fields = RiskModel._fields + ('rounds', 'learning_rate', 'max_depth', 'n_bins')

    def __init__(self, z, losses, rounds, learning_rate, max_depth, n_bins):
        losses = np.asarray(losses, dtype=float)
        super(BoostedStumpsRiskModel, self).__init__(
            d=z.shape[1], loss_range=(losses.min(), losses.max()),
        )
        self.rounds = int(rounds)
        self.learning_rate = float(learning_rate)
        self.max_depth = int(max_depth)
        self.n_bins = int(n_bins)
        self._fit(np.asarray(z, dtype=float), losses)

    def _fit(self, z, losses):
        self.edges = [bin_edges(z[:, col], self.n_bins) for col in range(self.d)]
        binned = np.column_stack([
            np.searchsorted(edges, z[:, col], side='left')
            for col, edges in enumerate(self.edges)
        ])
        grower = _TreeGrower(
            binned, [edges.size for edges in self.edges], self.max_depth,
        )
        self.base = float(losses.mean())
        fitted = np.full(losses.size, self.base)
        self.trees = []
        self.train_mse_path = []
        for _round in range(self.rounds):
            feature, threshold_bin, left, right, value, leaf_of_row = grower.grow(
                losses - fitted, self.learning_rate,
            )
            threshold = np.array([
                self.edges[feat][tbin] if feat >= 0 else np.nan
                for feat, tbin in zip(feature, threshold_bin)
            ])
            self.trees.append(Tree(feature, threshold, left, right, value))
            fitted = fitted + value[leaf_of_row]
            resid = losses - fitted
            self.train_mse_path.append(float(np.dot(resid, resid) / resid.size))
        logger.debug(
            'boosted %d trees (depth %d) on %d rows: train MSE %.6g',
            self.rounds, self.max_depth, losses.size, self.train_mse_path[-1],
        )

    def _predict_z(self, z):
        out = np.full(z.shape[0], self.base)
        for tree in self.trees:
            node = np.zeros(z.shape[0], dtype=np.intp)
            for _level in range(self.max_depth):
                feature = tree.feature[node]
                internal = np.flatnonzero(feature >= 0)
                if internal.size == 0:
                    break
                at = node[internal]
                goes_left = z[internal, feature[internal]] <= tree.threshold[at]
                node[internal] = np.where(goes_left, tree.left[at], tree.right[at])
            out += tree.value[node]
        return out
