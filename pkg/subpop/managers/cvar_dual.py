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

"""Exact empirical CVaR (worst-case subpopulation performance) and relatives.

For a vector v of n values and a subpopulation size α ∈ (0, 1],

    Ŵ_α(v) = inf_η { (1/α)·mean[(v − η)₊] + η },

which equals the average of the αn largest values, counting the boundary
value fractionally when αn is not an integer. The sorted-tail form is the
definition used here; it matches the dual infimum even with ties.
"""

from gettext import gettext as _

import math

import numpy as np

from ..helpers.errors import ValidationError
from ..items.mixture import AlphaMixture
from ..items.results import EmpiricalCvarResult

__all__ = (
    'CvarCurve',
    'dual_objective',
    'empirical_cvar',
    'empirical_quantile',
    'generalized_worst_case',
    'golden_section_min',
    'higher_order_cvar',
    'QUANTILE_KINDS',
)

QUANTILE_KINDS = ('lower', 'upper')

GOLDEN_TOL = 1e-10

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _as_values(values):
    array = np.asarray(values, dtype=float)
    if array.ndim != 1:
        array = array.reshape(-1)
    if array.size == 0:
        raise ValidationError(_("cannot evaluate an empty vector"))
    if not np.all(np.isfinite(array)):
        raise ValidationError(_("values must be finite"))
    return array


def _check_alpha(alpha):
    alpha = float(alpha)
    if not (0.0 < alpha <= 1.0):
        raise ValidationError(_("alpha must be in (0, 1], not {}").format(alpha))
    return alpha


def _snap(count):
    """Round ``count`` to the nearest integer when it is within a couple of ulps.

    α·n for α = 0.3, n = 10 comes out as 3.0000000000000004; the tail split
    must see 3.
    """
    nearest = round(count)
    if abs(count - nearest) <= 2 * np.spacing(max(abs(count), 1.0)):
        return float(nearest)
    return count


def empirical_quantile(values, level, kind='lower'):
    """Lower or upper empirical quantile, always an attained sample value.

    lower: inf{t : F̂(t) ≥ level};  upper: inf{t : F̂(t) > level}, which
    is the maximum when level = 1. The lower quantile at level 0 is the
    minimum.
    """
    array = np.sort(_as_values(values))
    level = float(level)
    if not (0.0 <= level <= 1.0):
        raise ValidationError(_("level must be in [0, 1], not {}").format(level))
    if kind not in QUANTILE_KINDS:
        raise ValidationError(
            _("quantile kind must be ‘lower’ or ‘upper’, not ‘{}’").format(kind)
        )
    n = array.size
    count = _snap(level * n)
    if kind == 'lower':
        rank = int(math.ceil(count))
    else:
        rank = int(math.floor(count)) + 1
    rank = min(max(rank, 1), n)
    return float(array[rank - 1])


def dual_objective(values, alpha, eta):
    """η ↦ (1/α)·mean[(v − η)₊] + η, the function Ŵ_α minimizes."""
    array = _as_values(values)
    alpha = _check_alpha(alpha)
    return float(np.mean(np.maximum(array - eta, 0.0)) / alpha + eta)


class CvarCurve(object):
    """Ŵ_α(v) for many α from one sort.

    The values are sorted once and their deviations from the maximum are
    prefix-summed, so each :meth:`value` is O(1). Working relative to the
    maximum keeps Ŵ_α ≤ max(v) exactly and makes a constant vector return
    its constant exactly.
    """

    def __init__(self, values):
        self.values = _as_values(values)
        self.n = self.values.size
        self.descending = np.sort(self.values)[::-1]
        self.top = float(self.descending[0])
        self.deviations = self.descending - self.top
        self.prefix = np.concatenate(([0.0], np.cumsum(self.deviations)))
        self.mean = float(np.mean(self.values))

    def value(self, alpha):
        alpha = _check_alpha(alpha)
        if alpha == 1.0:
            return self.mean
        count = _snap(alpha * self.n)
        if count == 0.0:
            return self.top
        whole = int(math.floor(count))
        frac = count - whole
        tail = self.prefix[whole]
        if frac > 0.0 and whole < self.n:
            tail += frac * self.deviations[whole]
        return float(self.top + tail / count)

    def __call__(self, alpha):
        return self.value(alpha)

    def result(self, alpha):
        alpha = _check_alpha(alpha)
        level = 1.0 - alpha
        return EmpiricalCvarResult(
            value=self.value(alpha),
            eta_star=empirical_quantile(self.values, level, 'lower'),
            eta_upper=empirical_quantile(self.values, level, 'upper'),
            alpha=alpha,
            n=self.n,
        )


def empirical_cvar(values, alpha):
    """Ŵ_α of ``values`` with the lower/upper ends of the optimal η interval."""
    return CvarCurve(values).result(alpha)


# ***

def golden_section_min(func, low, high, tol=GOLDEN_TOL):
    """Minimize a convex ``func`` on [low, high]; return (x, func(x)).

    The endpoints are evaluated too, and the best of all is returned, so
    the answer is never worse than either end of the bracket.
    """
    f_low, f_high = func(low), func(high)
    best_x, best_f = (low, f_low) if f_low <= f_high else (high, f_high)
    a, b = float(low), float(high)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    f_c, f_d = func(c), func(d)
    width = b - a
    # Far from 0 a few ulps can exceed tol; stop there too.
    while width > tol + 4.0 * np.spacing(max(abs(a), abs(b))):
        if f_c <= f_d:
            b, d, f_d = d, c, f_c
            c = b - _INV_PHI * (b - a)
            f_c = func(c)
        else:
            a, c, f_c = c, d, f_d
            d = a + _INV_PHI * (b - a)
            f_d = func(d)
        if not (b - a) < width:
            break
        width = b - a
    for x, f_x in ((c, f_c), (d, f_d)):
        if f_x < best_f:
            best_x, best_f = x, f_x
    return best_x, best_f


def higher_order_cvar(values, alpha, k):
    """ρ_k(v) = inf_η (1/α)·(mean[(v − η)₊^k])^{1/k} + η.

    k = 1 is Ŵ_α and uses the exact sorted-tail form. For k > 1 the convex
    objective is minimized by golden-section search over [min v, max v].
    """
    array = _as_values(values)
    alpha = _check_alpha(alpha)
    k = float(k)
    if not (k >= 1.0) or not math.isfinite(k):
        raise ValidationError(_("order k must be ≥ 1, not {}").format(k))
    if k == 1.0:
        return CvarCurve(array).value(alpha)
    low, high = float(array.min()), float(array.max())
    if low == high:
        return low

    def objective(eta):
        excess = np.maximum(array - eta, 0.0)
        scale = excess.max()
        if scale == 0.0:
            return eta
        # Scaled so that large k cannot overflow.
        norm = scale * np.mean((excess / scale) ** k) ** (1.0 / k)
        return float(norm / alpha + eta)

    _eta, best = golden_section_min(objective, low, high)
    return best


def generalized_worst_case(values, mixture):
    """W_Λ(v) = Σ_i weight_i · Ŵ_{α_i}(v) for a discrete mixture Λ."""
    if not isinstance(mixture, AlphaMixture):
        mixture = AlphaMixture(mixture)
    curve = CvarCurve(values)
    return math.fsum(weight * curve.value(alpha) for alpha, weight in mixture.atoms)
