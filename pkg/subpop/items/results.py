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

"""Result records returned by the managers and rendered by the writers."""

from .item_base import BaseItem, plain_number

__all__ = (
    'Certificate',
    'CertificateErrorBound',
    'ConvergencePoint',
    'DimFreeBound',
    'EmpiricalCvarResult',
    'FoldEstimate',
    'OracleResult',
    'RunManifest',
    'WorstCaseEstimate',
)


class _Record(BaseItem):
    """A BaseItem whose constructor just stores its ``_fields`` by name."""

    def __init__(self, **kwargs):
        missing = set(self._fields) - set(kwargs)
        extra = set(kwargs) - set(self._fields)
        if missing or extra:
            raise TypeError('{}: missing {} / unexpected {}'.format(
                self.__class__.__name__, sorted(missing), sorted(extra),
            ))
        for key in self._fields:
            setattr(self, key, kwargs[key])


class EmpiricalCvarResult(_Record):
    """Ŵ_α of a vector, with the lower and upper ends of its η-minimizers."""

    _fields = ('value', 'eta_star', 'eta_upper', 'alpha', 'n')


class FoldEstimate(_Record):
    """One fold's share of the cross-fitted estimate.

    ``omega_k`` is ``plug_in_k + correction_k``; the sum is formed once, so
    the identity holds exactly.
    """

    _fields = (
        'k', 'n_k', 'omega_k', 'sigma2_k', 'plug_in_k', 'correction_k', 'q_hat_k',
    )


class WorstCaseEstimate(_Record):
    _fields = (
        'alpha', 'omega', 'sigma', 'ci_low', 'ci_high', 'delta', 'n', 'K',
        'debiased', 'folds',
    )

    @property
    def ci(self):
        return (self.ci_low, self.ci_high)

    def as_dict(self):
        return {
            'alpha': plain_number(self.alpha),
            'omega': plain_number(self.omega),
            'sigma': plain_number(self.sigma),
            'ci': [plain_number(self.ci_low), plain_number(self.ci_high)],
            'delta': plain_number(self.delta),
            'n': self.n,
            'K': self.K,
            'debiased': self.debiased,
            'folds': [fold.as_dict() for fold in self.folds],
        }


class Certificate(_Record):
    """The smallest α whose estimated worst-case loss stays under ``threshold``.

    ``alpha_hat`` is ``None`` when even the whole population (α = 1) is over
    the threshold; ``feasible`` is then False.
    """

    _fields = (
        'threshold', 'alpha_hat', 'feasible', 'boundary', 'mode', 'tol',
        'alpha_lo', 'per_fold_alpha', 'trace', 'notes',
    )

    def as_dict(self):
        kvals = super(Certificate, self).as_dict()
        if not self.feasible:
            kvals['alpha_hat'] = 'infeasible'
        return kvals


class CertificateErrorBound(_Record):
    """Relative error radius |α*/α̂ − 1| for a certificate, or vacuous."""

    _fields = ('radius', 'vacuous', 'denominator', 'quantile', 'alpha_used', 'U_delta')


class DimFreeBound(_Record):
    """Finite-sample upper confidence bound for one fold."""

    _fields = (
        'k', 'omega_k', 'mse_fit', 'mse_min', 'excess_mse_term', 'misspec_budget',
        'concentration_term', 'ucb', 'alpha', 'C', 'M', 'delta',
    )


class OracleResult(_Record):
    """Monte-Carlo ground truth W_α of the simulation, with its standard error."""

    _fields = ('value', 'stderr', 'alpha', 'outer', 'inner', 'seed', 'theta', 'theta0')


class ConvergencePoint(_Record):
    """Spread of repeated estimates at one sample size."""

    _fields = (
        'n', 'repeats', 'mean_estimate', 'mean_abs_error', 'median_abs_error',
        'sd', 'se', 'estimates',
    )


class RunManifest(_Record):
    """What produced an output: command, flags, seed, input digest, version, time.

    Two runs with identical command lines differ only in ``wall_clock``.
    """

    _fields = ('command', 'flags', 'seed', 'input_digest', 'version', 'wall_clock')
