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

"""Discrete mixtures over subpopulation sizes."""

from gettext import gettext as _

import math

from ..helpers.errors import MixtureError
from .item_base import BaseItem

__all__ = (
    'AlphaMixture',
    'WEIGHT_SUM_TOL',
)

WEIGHT_SUM_TOL = 1e-12


class AlphaMixture(BaseItem):
    """A probability measure Λ on (0, 1] with finitely many atoms.

    ``atoms`` is a tuple of (alpha, weight) pairs sorted by alpha; repeated
    alphas are merged by adding their weights.
    """

    _fields = ('atoms',)

    def __init__(self, atoms):
        merged = {}
        for alpha, weight in atoms:
            alpha, weight = float(alpha), float(weight)
            if not (0 < alpha <= 1):
                raise MixtureError(
                    _("mixture alphas must be in (0, 1], not {}").format(alpha)
                )
            if not (weight > 0) or not math.isfinite(weight):
                raise MixtureError(
                    _("mixture weights must be positive, not {}").format(weight)
                )
            merged[alpha] = merged.get(alpha, 0.0) + weight
        if not merged:
            raise MixtureError(_("a mixture needs at least one atom"))
        total = math.fsum(merged.values())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise MixtureError(
                _("mixture weights must sum to 1, not {!r}").format(total)
            )
        self.atoms = tuple(sorted(merged.items()))

    @property
    def alphas(self):
        return tuple(alpha for alpha, _weight in self.atoms)

    @property
    def weights(self):
        return tuple(weight for _alpha, weight in self.atoms)

    @classmethod
    def point_mass(cls, alpha):
        return cls([(alpha, 1.0)])

    @classmethod
    def parse(cls, text):
        """Read ``"alpha:weight,alpha:weight,…"``, e.g. ``"0.2:0.5,1:0.5"``."""
        atoms = []
        for chunk in (text or '').split(','):
            chunk = chunk.strip()
            if not chunk:
                continue
            alpha, sep, weight = chunk.partition(':')
            if not sep:
                raise MixtureError(
                    _("mixture atom ‘{}’ is not of the form alpha:weight")
                    .format(chunk)
                )
            try:
                atoms.append((float(alpha), float(weight)))
            except ValueError:
                raise MixtureError(
                    _("mixture atom ‘{}’ is not numeric").format(chunk)
                )
        return cls(atoms)

    def as_dict(self):
        return {'atoms': [[alpha, weight] for alpha, weight in self.atoms]}
