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

"""A synthetic hinge-loss task with a known worst-case subpopulation.

Two unit vectors θ (the fixed model) and θ₀ (the truth) are drawn once per
seed. Rows are X ~ N(0, I_d) with label Y = sgn(X·θ₀), flipped for the
roughly 5% of rows whose first coordinate exceeds ``clip``. The loss is the
hinge [1 − Y·X·θ]₊ and the only attribute is Z = X¹, so the flipped rows
form a small, much worse subpopulation.

Random streams are keyed by counters: ``[seed, 0]`` for the directions,
``[seed, 1, replicate]`` for data rows and ``[seed, 2, chunk]`` for each
oracle chunk. Results therefore do not depend on how many threads run.
"""

from gettext import gettext as _

import math

import numpy as np

from ..helpers.dev.profiling import timefunc
from ..helpers.errors import ValidationError
from ..helpers.logging import child_logger
from ..helpers.workers import ordered_map, resolve_workers
from ..items.dataset import Dataset
from ..items.results import ConvergencePoint, OracleResult
from .cvar_dual import empirical_cvar
from .estimator import estimate

__all__ = (
    'convergence_study',
    'draw_directions',
    'hinge_losses',
    'oracle_true_w',
    'simulate_dataset',
)

logger = child_logger(__name__)

_DIRECTION_STREAM = 0
_DATA_STREAM = 1
_ORACLE_STREAM = 2

# Upper bound on outer×inner draws held in memory per oracle chunk.
ORACLE_CHUNK_DRAWS = 1 << 20


def draw_directions(seed, d):
    """The fixed (θ, θ₀) for ``seed``: normalized Gaussian draws."""
    rng = np.random.default_rng([seed, _DIRECTION_STREAM])
    theta = rng.standard_normal(d)
    theta0 = rng.standard_normal(d)
    return theta / np.linalg.norm(theta), theta0 / np.linalg.norm(theta0)


def _labels(first, score0, clip):
    # sgn with sgn(0) = +1, so Y is always ±1.
    y = np.where(score0 >= 0.0, 1.0, -1.0)
    return np.where(first <= clip, y, -y)


def hinge_losses(x, theta, theta0, clip):
    """Hinge losses of θ on rows ``x`` labelled by θ₀ with the clip flip."""
    x = np.asarray(x, dtype=float)
    y = _labels(x[:, 0], x @ theta0, clip)
    return np.maximum(1.0 - y * (x @ theta), 0.0)


@timefunc
def simulate_dataset(cfg, replicate=0):
    """n rows of the synthetic task; identical for identical (cfg, replicate)."""
    theta, theta0 = draw_directions(cfg.seed, cfg.d)
    rng = np.random.default_rng([cfg.seed, _DATA_STREAM, int(replicate)])
    x = rng.standard_normal((cfg.n, cfg.d))
    losses = hinge_losses(x, theta, theta0, cfg.clip)
    logger.debug(
        'simulated n=%d d=%d (replicate %d): %d rows past the clip',
        cfg.n, cfg.d, replicate, int(np.sum(x[:, 0] > cfg.clip)),
    )
    return Dataset(losses, x[:, :1])


def _oracle_chunk(cfg, theta, theta0, chunk, size):
    """μ*(X¹) and its inner-sample variance for ``size`` outer draws."""
    rng = np.random.default_rng([cfg.seed, _ORACLE_STREAM, chunk])
    first = rng.standard_normal(size)
    rest = rng.standard_normal((size, cfg.inner, cfg.d - 1))
    score = first[:, None] * theta[0] + rest @ theta[1:]
    score0 = first[:, None] * theta0[0] + rest @ theta0[1:]
    y = _labels(first[:, None], score0, cfg.clip)
    losses = np.maximum(1.0 - y * score, 0.0)
    return first, losses.mean(axis=1), losses.var(axis=1)


@timefunc
def oracle_true_w(cfg, threads=1):
    """Nested Monte-Carlo W_α: Ŵ_α over ``outer`` estimates of μ*(X¹).

    Each μ*(X¹) averages the hinge loss over ``inner`` draws of the other
    coordinates. ``stderr`` combines the outer sampling error of the tail
    average with the inner noise of the tail points.
    """
    theta, theta0 = draw_directions(cfg.seed, cfg.d)
    chunk_size = max(1, ORACLE_CHUNK_DRAWS // cfg.inner)
    sizes = []
    remaining = cfg.outer
    while remaining > 0:
        sizes.append(min(chunk_size, remaining))
        remaining -= sizes[-1]

    def run(chunk):
        return _oracle_chunk(cfg, theta, theta0, chunk, sizes[chunk])

    workers = resolve_workers(threads, len(sizes))
    parts = ordered_map(run, range(len(sizes)), workers=workers)
    mu = np.concatenate([part[1] for part in parts])
    inner_var = np.concatenate([part[2] for part in parts])

    result = empirical_cvar(mu, cfg.alpha)
    excess = np.maximum(mu - result.eta_star, 0.0)
    se_outer = float(np.std(excess)) / cfg.alpha / math.sqrt(cfg.outer)
    tail = mu >= result.eta_star
    se_inner = math.sqrt(
        float(np.mean(inner_var[tail])) / cfg.inner / (cfg.alpha * cfg.outer)
    )
    stderr = math.hypot(se_outer, se_inner)
    logger.info(
        'oracle W_%g = %.6g ± %.2g (outer=%d inner=%d, %d chunks)',
        cfg.alpha, result.value, stderr, cfg.outer, cfg.inner, len(sizes),
    )
    return OracleResult(
        value=result.value,
        stderr=stderr,
        alpha=cfg.alpha,
        outer=cfg.outer,
        inner=cfg.inner,
        seed=cfg.seed,
        theta=[float(value) for value in theta],
        theta0=[float(value) for value in theta0],
    )


def convergence_study(sim_cfg, eval_cfg, sizes, repeats, truth=None, threads=1):
    """Estimation error against the oracle along a ladder of sample sizes.

    The directions stay fixed (one seed); each repeat draws fresh rows.
    Returns ``(truth, points)``, one :class:`ConvergencePoint` per size.
    """
    sizes = [int(size) for size in sizes]
    repeats = int(repeats)
    if not sizes or any(size < 2 * eval_cfg.K for size in sizes):
        raise ValidationError(
            _("every sample size must be ≥ 2K = {}").format(2 * eval_cfg.K)
        )
    if repeats < 1:
        raise ValidationError(_("repeats must be ≥ 1, not {}").format(repeats))
    eval_cfg = eval_cfg.with_alpha(sim_cfg.alpha)
    if truth is None:
        truth = oracle_true_w(sim_cfg, threads=threads).value
    points = []
    for size in sizes:
        estimates = np.array([
            estimate(simulate_dataset(sim_cfg.replace(n=size), replicate), eval_cfg).omega
            for replicate in range(repeats)
        ])
        errors = np.abs(estimates - truth)
        sd = float(np.std(estimates, ddof=1)) if repeats > 1 else 0.0
        points.append(ConvergencePoint(
            n=size,
            repeats=repeats,
            mean_estimate=float(np.mean(estimates)),
            mean_abs_error=float(np.mean(errors)),
            median_abs_error=float(np.median(errors)),
            sd=sd,
            se=sd / math.sqrt(repeats),
            estimates=[float(value) for value in estimates],
        ))
        logger.info(
            'n=%d: mean |error| %.4g over %d repeats', size, points[-1].mean_abs_error,
            repeats,
        )
    return truth, points
