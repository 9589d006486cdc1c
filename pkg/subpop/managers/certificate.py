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

"""The certificate of robustness: the smallest α whose worst case is acceptable.

α ↦ Ŵ_α is nonincreasing, so the set of acceptable α (Ŵ_α ≤ threshold) is
an interval [α̂, 1] and α̂ is found by bisection over [alpha_lo, 1]. The
fitted fold models are reused for every probe.
"""

from gettext import gettext as _

import math

import numpy as np

from ..helpers.errors import ValidationError
from ..helpers.logging import child_logger
from ..items.results import Certificate, CertificateErrorBound
from ..items.settings import CertifyParams
from .cvar_dual import CvarCurve, empirical_quantile
from .estimator import fit_folds, summarize

__all__ = (
    'bisect_alpha',
    'certificate_error_bound',
    'certify',
    'refine_alpha',
)

logger = child_logger(__name__)


def _check_bracket(threshold, alpha_lo, tol):
    if not math.isfinite(threshold):
        raise ValidationError(_("threshold must be finite, not {}").format(threshold))
    if not (0.0 < alpha_lo < 1.0):
        raise ValidationError(_("alpha_lo must be in (0, 1), not {}").format(alpha_lo))
    if not (tol > 0.0):
        raise ValidationError(_("tol must be > 0, not {}").format(tol))


def _bisect(curve, threshold, lo, hi, tol, trace):
    # Invariant: curve(lo) > threshold ≥ curve(hi).
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        value = curve(mid)
        trace.append((mid, value))
        if value <= threshold:
            hi = mid
        else:
            lo = mid
    return hi


def bisect_alpha(curve, threshold, alpha_lo, tol):
    """Smallest α in [alpha_lo, 1] with ``curve(α) ≤ threshold``, to within ``tol``.

    Returns ``(alpha_hat, feasible, boundary, trace)``. The answer is the
    acceptable end of the final bracket. ``alpha_hat`` is ``None`` when
    curve(1) is over the threshold, and ``alpha_lo`` (boundary) when the
    whole bracket is acceptable.
    """
    _check_bracket(threshold, alpha_lo, tol)
    trace = []
    at_one = curve(1.0)
    trace.append((1.0, at_one))
    if at_one > threshold:
        return None, False, False, trace
    at_lo = curve(alpha_lo)
    trace.append((alpha_lo, at_lo))
    if at_lo <= threshold:
        return alpha_lo, True, True, trace
    return _bisect(curve, threshold, alpha_lo, 1.0, tol, trace), True, False, trace


def refine_alpha(curve, threshold, guess, alpha_lo, tol, trace):
    """Bisect ``curve`` near ``guess``, widening outward until a crossing is found.

    The caller has already checked curve(alpha_lo) > threshold ≥ curve(1).
    """
    guess = min(max(guess, alpha_lo), 1.0)
    value = curve(guess)
    trace.append((guess, value))
    step = tol
    if value <= threshold:
        hi = guess
        lo = max(guess - step, alpha_lo)
        while lo > alpha_lo:
            value = curve(lo)
            trace.append((lo, value))
            if value > threshold:
                break
            hi = lo
            step *= 2.0
            lo = max(hi - step, alpha_lo)
    else:
        lo = guess
        hi = min(guess + step, 1.0)
        while hi < 1.0:
            value = curve(hi)
            trace.append((hi, value))
            if value <= threshold:
                break
            lo = hi
            step *= 2.0
            hi = min(lo + step, 1.0)
    return _bisect(curve, threshold, lo, hi, tol, trace)


# ***

def _certify_per_fold(fitted, params, alpha_lo):
    per_fold = []
    trace = []
    feasible = True
    boundary = True
    for fold in fitted:
        alpha_k, feasible_k, boundary_k, trace_k = bisect_alpha(
            fold.curve, params.threshold, alpha_lo, params.tol,
        )
        trace.extend(trace_k)
        logger.debug('fold %d: α̂_k=%s (%d probes)', fold.k, alpha_k, len(trace_k))
        if not feasible_k:
            feasible = False
        boundary = boundary and boundary_k
        per_fold.append(alpha_k)
    notes = []
    if not feasible:
        failed = [str(k) for k, alpha_k in enumerate(per_fold) if alpha_k is None]
        notes.append(
            _("plug-in curve exceeds the threshold at α = 1 on fold(s) {}")
            .format(', '.join(failed))
        )
        return None, False, False, per_fold, trace, notes
    alpha_hat = math.fsum(per_fold) / len(per_fold)
    return alpha_hat, True, boundary, per_fold, trace, notes


def _certify_debiased(fitted, params, alpha_lo, delta, n):
    def plugin_curve(alpha):
        return math.fsum(fold.n_k * fold.plug_in(alpha) for fold in fitted) / n

    def debiased_curve(alpha):
        return summarize(fitted, alpha, delta, n, debiased=True).omega

    threshold, tol = params.threshold, params.tol
    trace = []
    notes = []
    at_one = debiased_curve(1.0)
    trace.append((1.0, at_one))
    if at_one > threshold:
        return None, False, False, trace, notes
    at_lo = debiased_curve(alpha_lo)
    trace.append((alpha_lo, at_lo))
    if at_lo <= threshold:
        return alpha_lo, True, True, trace, notes

    # The plug-in curve is monotone: bisect it first, then refine on ω̂_α.
    guess, plugin_ok, _boundary, _plugin_trace = bisect_alpha(
        plugin_curve, threshold, alpha_lo, tol,
    )
    if not plugin_ok:
        guess = 1.0
    alpha_hat = refine_alpha(debiased_curve, threshold, guess, alpha_lo, tol, trace)
    if abs(alpha_hat - guess) > tol:
        notes.append(
            _("debiased root {:.6g} differs from the plug-in bracket {:.6g} by more than tol")
            .format(alpha_hat, guess)
        )
    probes = sorted(trace)
    for (a_1, w_1), (a_2, w_2) in zip(probes, probes[1:]):
        if w_2 > w_1:
            notes.append(
                _("debiased curve rises from {:.6g} at α={:.6g} to {:.6g} at α={:.6g}")
                .format(w_1, a_1, w_2, a_2)
            )
    return alpha_hat, True, False, trace, notes


def certify(dataset, cfg, params):
    """Certificate of robustness for ``params.threshold`` (a :class:`CertifyParams`)."""
    if not isinstance(params, CertifyParams):
        raise ValidationError(_("certify needs CertifyParams, not {}").format(params))
    alpha_lo = params.resolve_alpha_lo(dataset.n)
    _check_bracket(params.threshold, alpha_lo, params.tol)
    fitted = fit_folds(dataset, cfg)
    if params.mode == 'plugin_per_fold':
        alpha_hat, feasible, boundary, per_fold, trace, notes = _certify_per_fold(
            fitted, params, alpha_lo,
        )
    else:
        alpha_hat, feasible, boundary, trace, notes = _certify_debiased(
            fitted, params, alpha_lo, cfg.delta, dataset.n,
        )
        per_fold = []
    if boundary:
        notes.append(
            _("the whole bracket is acceptable; α̂ is the lower end alpha_lo")
        )
    for note in notes:
        logger.warning(note)
    logger.info(
        'certificate (%s): threshold=%g α̂=%s in %d probes',
        params.mode, params.threshold,
        'infeasible' if not feasible else '{:.6g}'.format(alpha_hat), len(trace),
    )
    return Certificate(
        threshold=params.threshold,
        alpha_hat=alpha_hat,
        feasible=feasible,
        boundary=boundary,
        mode=params.mode,
        tol=params.tol,
        alpha_lo=alpha_lo,
        per_fold_alpha=per_fold,
        trace=[[alpha, value] for alpha, value in trace],
        notes=notes,
    )


def certificate_error_bound(values, alpha_hat, alpha_floor, U_delta):
    """Relative error radius U(δ) / mean[(μ̂ − q̂)₊] for a certificate α̂.

    ``values`` are μ̂ over an evaluation fold and q̂ their lower
    (1 − min(alpha_floor, alpha_hat))-quantile. A zero denominator (every
    μ̂ at or below q̂) gives a vacuous bound.
    """
    alpha_floor = float(alpha_floor)
    U_delta = float(U_delta)
    if not (0.0 < alpha_floor <= 1.0):
        raise ValidationError(
            _("alpha_floor must be in (0, 1], not {}").format(alpha_floor)
        )
    if not (U_delta >= 0.0) or not math.isfinite(U_delta):
        raise ValidationError(_("U_delta must be ≥ 0, not {}").format(U_delta))
    if not (0.0 < alpha_hat <= 1.0):
        raise ValidationError(_("alpha_hat must be in (0, 1], not {}").format(alpha_hat))
    array = CvarCurve(values).values
    alpha_used = min(alpha_floor, float(alpha_hat))
    quantile = empirical_quantile(array, 1.0 - alpha_used, 'lower')
    denominator = float(np.mean(np.maximum(array - quantile, 0.0)))
    if denominator == 0.0:
        return CertificateErrorBound(
            radius=None,
            vacuous=True,
            denominator=denominator,
            quantile=quantile,
            alpha_used=alpha_used,
            U_delta=U_delta,
        )
    return CertificateErrorBound(
        radius=U_delta / denominator,
        vacuous=False,
        denominator=denominator,
        quantile=quantile,
        alpha_used=alpha_used,
        U_delta=U_delta,
    )
