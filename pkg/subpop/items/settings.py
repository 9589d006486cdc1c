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

"""Run parameters: what to estimate, how to learn μ̂, what to simulate.

Each class can be built directly (library use) or from the decorated
config (``from_config``), which is how :class:`subpop.control.SubpopControl`
and the CLI build them.
"""

import math

from gettext import gettext as _

from ..config import CERTIFY_MODES, LEARNERS
from ..config.conformers import AUTO
from ..helpers.errors import ValidationError
from .item_base import BaseItem

__all__ = (
    'CertifyParams',
    'EvalConfig',
    'LearnerParams',
    'SimConfig',
)


def _require(condition, message, *args):
    if not condition:
        raise ValidationError(message.format(*args))


class LearnerParams(BaseItem):
    """Hyperparameters for both fitted first-stage learners."""

    _fields = ('k_neighbors', 'rounds', 'learning_rate', 'max_depth', 'n_bins')

    def __init__(
        self,
        k_neighbors=AUTO,
        rounds=200,
        learning_rate=0.1,
        max_depth=2,
        n_bins=64,
    ):
        if k_neighbors != AUTO:
            k_neighbors = int(k_neighbors)
            _require(k_neighbors >= 1, _("k_neighbors must be ≥ 1, not {}"), k_neighbors)
        self.k_neighbors = k_neighbors
        self.rounds = int(rounds)
        self.learning_rate = float(learning_rate)
        self.max_depth = int(max_depth)
        self.n_bins = int(n_bins)
        _require(self.rounds >= 1, _("rounds must be ≥ 1, not {}"), self.rounds)
        _require(
            0 < self.learning_rate <= 1,
            _("learning_rate must be in (0, 1], not {}"), self.learning_rate,
        )
        _require(
            self.max_depth in (1, 2, 3),
            _("max_depth must be 1, 2 or 3, not {}"), self.max_depth,
        )
        _require(self.n_bins >= 2, _("n_bins must be ≥ 2, not {}"), self.n_bins)

    def neighbors_for(self, n_train):
        """Resolve ``auto`` to ⌈√n⌉ for a training set of ``n_train`` rows."""
        if self.k_neighbors == AUTO:
            return max(1, int(math.ceil(math.sqrt(n_train))))
        return self.k_neighbors

    @classmethod
    def from_config(cls, config):
        return cls(
            k_neighbors=config['knn.k_neighbors'],
            rounds=config['boost.rounds'],
            learning_rate=config['boost.learning_rate'],
            max_depth=config['boost.max_depth'],
            n_bins=config['boost.n_bins'],
        )


class EvalConfig(BaseItem):
    """Everything the cross-fitted estimator needs besides the data."""

    _fields = ('alpha', 'K', 'delta', 'learner', 'params', 'seed', 'threads')

    def __init__(
        self,
        alpha=0.3,
        K=5,
        delta=0.1,
        learner='boosted_stumps',
        params=None,
        seed=0,
        threads=1,
    ):
        self.alpha = float(alpha)
        self.K = int(K)
        self.delta = float(delta)
        self.learner = learner
        self.params = params if params is not None else LearnerParams()
        self.seed = int(seed)
        self.threads = int(threads)
        _require(0 < self.alpha <= 1, _("alpha must be in (0, 1], not {}"), self.alpha)
        _require(0 < self.delta < 1, _("delta must be in (0, 1), not {}"), self.delta)
        _require(self.K >= 2, _("the fold count K must be ≥ 2, not {}"), self.K)
        _require(
            self.learner in LEARNERS,
            _("learner must be one of {}, not ‘{}’"), ', '.join(LEARNERS), learner,
        )

    def with_alpha(self, alpha):
        return EvalConfig(
            alpha=alpha,
            K=self.K,
            delta=self.delta,
            learner=self.learner,
            params=self.params,
            seed=self.seed,
            threads=self.threads,
        )

    def check_dataset(self, dataset):
        """Cross-check against a dataset (external μ̂ needs its column)."""
        _require(
            self.learner != 'external' or dataset.has_external_mu,
            _("learner ‘external’ requires a ‘mu_hat’ column"),
        )

    @classmethod
    def from_config(cls, config):
        return cls(
            alpha=config['eval.alpha'],
            K=config['eval.folds'],
            delta=config['eval.delta'],
            learner=config['eval.learner'],
            params=LearnerParams.from_config(config),
            seed=config['eval.seed'],
            threads=config['dev.threads'],
        )


class CertifyParams(BaseItem):
    """Bisection settings for the robustness certificate."""

    _fields = ('threshold', 'alpha_lo', 'tol', 'mode')

    def __init__(self, threshold, alpha_lo=AUTO, tol=1e-3, mode='plugin_per_fold'):
        self.threshold = float(threshold)
        self.alpha_lo = alpha_lo if alpha_lo == AUTO else float(alpha_lo)
        self.tol = float(tol)
        self.mode = mode
        _require(
            math.isfinite(self.threshold),
            _("threshold must be finite, not {}"), threshold,
        )
        _require(self.tol > 0, _("tol must be > 0, not {}"), self.tol)
        if self.alpha_lo != AUTO:
            _require(
                0 < self.alpha_lo < 1,
                _("alpha_lo must be in (0, 1), not {}"), self.alpha_lo,
            )
        _require(
            self.mode in CERTIFY_MODES,
            _("mode must be one of {}, not ‘{}’"), ', '.join(CERTIFY_MODES), mode,
        )

    def resolve_alpha_lo(self, n):
        """``auto`` means max(10/n, 0.01): below ~10 tail points W̃ is noise."""
        if self.alpha_lo == AUTO:
            return min(max(10.0 / n, 0.01), 0.5)
        return self.alpha_lo

    @classmethod
    def from_config(cls, config, threshold):
        return cls(
            threshold=threshold,
            alpha_lo=config['certify.alpha_lo'],
            tol=config['certify.tol'],
            mode=config['certify.mode'],
        )


class SimConfig(BaseItem):
    """The synthetic hinge-loss task and its Monte-Carlo oracle sizes."""

    _fields = ('d', 'n', 'seed', 'clip', 'alpha', 'outer', 'inner')

    def __init__(
        self, d=5, n=10000, seed=0, clip=1.645, alpha=0.3, outer=20000, inner=5000,
    ):
        self.d = int(d)
        self.n = int(n)
        self.seed = int(seed)
        self.clip = float(clip)
        self.alpha = float(alpha)
        self.outer = int(outer)
        self.inner = int(inner)
        _require(self.d >= 2, _("d must be ≥ 2, not {}"), self.d)
        _require(self.n >= 1, _("n must be ≥ 1, not {}"), self.n)
        _require(0 < self.alpha <= 1, _("alpha must be in (0, 1], not {}"), self.alpha)
        _require(
            self.outer >= 1 and self.inner >= 1,
            _("oracle sizes must be ≥ 1, not outer={} inner={}"),
            self.outer, self.inner,
        )

    def replace(self, **changes):
        kvals = {key: getattr(self, key) for key in self._fields}
        kvals.update(changes)
        return SimConfig(**kvals)

    @classmethod
    def from_config(cls, config):
        return cls(
            d=config['sim.d'],
            n=config['sim.n'],
            seed=config['eval.seed'],
            clip=config['sim.clip'],
            alpha=config['sim.alpha'],
            outer=config['sim.outer'],
            inner=config['sim.inner'],
        )
