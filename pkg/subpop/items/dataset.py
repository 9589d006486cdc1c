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

"""Loss observations and the dataset container every estimator consumes."""

from gettext import gettext as _

import numpy as np

from ..helpers.errors import DatasetError
from .item_base import BaseItem, frozen_array

__all__ = (
    'Dataset',
    'LossSample',
)


class LossSample(BaseItem):
    """One observation: the realized loss ℓ(θ(X);Y) and its attributes Z."""

    _fields = ('loss', 'z')

    def __init__(self, loss, z):
        self.loss = float(loss)
        self.z = frozen_array(np.atleast_1d(z))
        if not np.isfinite(self.loss):
            raise DatasetError(_("loss must be finite, not {}").format(loss))
        if self.loss < 0:
            raise DatasetError(_("loss must be nonnegative, not {}").format(loss))
        if self.z.ndim != 1 or self.z.size < 1:
            raise DatasetError(_("attributes must be a nonempty vector"))
        if not np.all(np.isfinite(self.z)):
            raise DatasetError(_("attributes must be finite"))

    @property
    def d(self):
        return self.z.size


class Dataset(BaseItem):
    """Observations in a fixed order, held column-wise.

    ``losses`` has shape (n,), ``z`` has shape (n, d) and ``external_mu``,
    when present, has shape (n,) and holds precomputed μ̂(Z_i). All three
    are read-only; :meth:`subset` returns a new Dataset.
    """

    _fields = ('losses', 'z', 'external_mu')

    def __init__(self, losses, z, external_mu=None):
        self.losses = frozen_array(losses)
        z = np.array(z, dtype=float)
        if z.ndim == 1:
            z = z.reshape(-1, 1)
        self.z = frozen_array(z)
        self.external_mu = None
        if external_mu is not None:
            self.external_mu = frozen_array(external_mu)
        self._verify()

    def _verify(self):
        n = self.losses.shape[0] if self.losses.ndim == 1 else -1
        if self.losses.ndim != 1 or n < 1:
            raise DatasetError(_("a dataset needs at least one loss"))
        if not np.all(np.isfinite(self.losses)):
            raise DatasetError(_("losses must be finite"))
        if np.any(self.losses < 0):
            row = int(np.flatnonzero(self.losses < 0)[0]) + 1
            raise DatasetError(_("negative loss at row {}").format(row))
        if self.z.ndim != 2 or self.z.shape[0] != n or self.z.shape[1] < 1:
            raise DatasetError(
                _("attributes must form an (n, d) array with d ≥ 1 and n = {}")
                .format(n)
            )
        if not np.all(np.isfinite(self.z)):
            raise DatasetError(_("attributes must be finite"))
        if self.external_mu is not None:
            if self.external_mu.shape != (n,):
                raise DatasetError(
                    _("external μ̂ has {} entries but the dataset has {} rows")
                    .format(self.external_mu.size, n)
                )
            if not np.all(np.isfinite(self.external_mu)):
                raise DatasetError(_("external μ̂ values must be finite"))

    # ***

    @classmethod
    def from_samples(cls, samples, external_mu=None):
        samples = list(samples)
        if not samples:
            raise DatasetError(_("a dataset needs at least one sample"))
        dims = {sample.d for sample in samples}
        if len(dims) != 1:
            raise DatasetError(
                _("samples disagree on attribute dimension: {}")
                .format(sorted(dims))
            )
        return cls(
            losses=[sample.loss for sample in samples],
            z=np.vstack([sample.z for sample in samples]),
            external_mu=external_mu,
        )

    @property
    def samples(self):
        return [LossSample(loss, z) for loss, z in zip(self.losses, self.z)]

    @property
    def n(self):
        return self.losses.shape[0]

    def __len__(self):
        return self.n

    @property
    def d(self):
        return self.z.shape[1]

    @property
    def has_external_mu(self):
        return self.external_mu is not None

    def subset(self, indices):
        """The rows at ``indices`` (in that order) as a new Dataset."""
        indices = np.asarray(indices, dtype=np.intp)
        if indices.size == 0:
            raise DatasetError(_("cannot take an empty slice of a dataset"))
        external_mu = None
        if self.external_mu is not None:
            external_mu = self.external_mu[indices]
        return Dataset(
            losses=self.losses[indices],
            z=self.z[indices],
            external_mu=external_mu,
        )

    def with_external_mu(self, external_mu):
        return Dataset(losses=self.losses, z=self.z, external_mu=external_mu)
