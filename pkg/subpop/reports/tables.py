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

"""Tables (headers plus rows) for the delimited outputs."""

__all__ = (
    'CURVE_HEADERS',
    'MEMBERS_HEADERS',
    'curve_table',
    'dataset_headers',
    'dataset_table',
    'members_table',
)

CURVE_HEADERS = ('alpha', 'omega', 'sigma', 'ci_low', 'ci_high')

MEMBERS_HEADERS = ('row', 'fold', 'mu_hat', 'member')


def curve_table(estimates):
    for est in estimates:
        yield (
            float(est.alpha),
            float(est.omega),
            float(est.sigma),
            float(est.ci_low),
            float(est.ci_high),
        )


def dataset_headers(dataset):
    headers = ['loss']
    headers.extend('z{}'.format(col) for col in range(dataset.d))
    if dataset.has_external_mu:
        headers.append('mu_hat')
    return headers


def dataset_table(dataset):
    for row in range(dataset.n):
        cells = [float(dataset.losses[row])]
        cells.extend(float(value) for value in dataset.z[row])
        if dataset.has_external_mu:
            cells.append(float(dataset.external_mu[row]))
        yield cells


def members_table(fold_of, mu_hat, member):
    """Rows are numbered from 1, like the data rows of the input CSV."""
    for row, (fold, mu, flag) in enumerate(zip(fold_of, mu_hat, member), start=1):
        yield (row, int(fold), float(mu), bool(flag))
