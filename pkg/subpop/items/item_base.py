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

"""Base class for subpop item instances."""

import math

import numpy as np

__all__ = (
    'BaseItem',
    'frozen_array',
    'plain_number',
)


def frozen_array(values, dtype=float):
    """Copy ``values`` into a read-only array, so items stay immutable."""
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def plain_number(value):
    """Turn numpy scalars into builtins, and non-finite floats into ``None``.

    JSON has no NaN or infinity, and writers should not have to care.
    """
    if value is None:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    value = float(value)
    if not math.isfinite(value):
        return None
    return value


class BaseItem(object):
    """Base class for all items.

    Items are value objects: built once, never mutated, compared by content.
    Subclasses list the attributes that make up their value in ``_fields``.
    """

    _fields = ()

    def __repr__(self, ignore=()):
        parts = []
        for key in self._fields:
            if key in ignore:
                continue
            parts.append(
                "{key}={val}".format(key=key, val=repr(getattr(self, key)))
            )
        repred = "{cls}({parts})".format(
            cls=self.__class__.__name__, parts=', '.join(parts),
        )
        return repred

    def __eq__(self, other):
        if other is None or type(other) is not type(self):
            return False
        for key in self._fields:
            mine, theirs = getattr(self, key), getattr(other, key)
            if isinstance(mine, np.ndarray) or isinstance(theirs, np.ndarray):
                if not np.array_equal(mine, theirs):
                    return False
            elif mine != theirs:
                return False
        return True

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def as_dict(self):
        """Plain-data rendering, suitable for the JSON writer."""
        kvals = {}
        for key in self._fields:
            kvals[key] = self._plain(getattr(self, key))
        return kvals

    @classmethod
    def _plain(cls, value):
        if isinstance(value, BaseItem):
            return value.as_dict()
        if isinstance(value, np.ndarray):
            return [cls._plain(val) for val in value.tolist()]
        if isinstance(value, (list, tuple)):
            return [cls._plain(val) for val in value]
        if isinstance(value, dict):
            return {key: cls._plain(val) for key, val in value.items()}
        if isinstance(value, str):
            return value
        return plain_number(value)
