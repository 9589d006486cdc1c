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

"""Conform and validate callbacks for the settings in :mod:`subpop.config`.

A conformer turns whatever arrived (a config-file string, a CLI string, a
number from a dict) into the setting's value, or raises ``ValueError``.
"""

import logging
import math
import sys

from gettext import gettext as _

__all__ = (
    'AUTO',
    'conform_alpha_lo',
    'conform_k_neighbors',
    'must_verify_log_level',
    'get_log_level_safe',
    'get_log_name_safe',
    'real_in',
    'int_at_least',
    'int_in',
)

AUTO = 'auto'

this = sys.modules[__name__]


this.LOG_LEVELS = {
    'debug': logging.DEBUG,
    'info': logging.INFO,
    'warning': logging.WARNING,
    'error': logging.ERROR,
    'critical': logging.CRITICAL,
}


def must_verify_log_level(level_name):
    if isinstance(level_name, int):
        return level_name
    try:
        log_level = this.LOG_LEVELS[level_name.lower()]
    except AttributeError:
        msg = _(
            " (Unrecognized log level type in config: “{}”. Try a string from: {}.)"
        ).format(level_name, ', '.join(this.LOG_LEVELS))
        raise ValueError(msg)
    except KeyError:
        msg = _(
            " (Unrecognized log level value in config: “{}”. Try one of: ‘{}’.)"
        ).format(level_name, '’, ‘'.join(this.LOG_LEVELS))
        raise ValueError(msg)
    return log_level


def get_log_level_safe(level_name):
    try:
        return must_verify_log_level(level_name)
    except ValueError:
        return logging.WARNING


def get_log_name_safe(level):
    return logging.getLevelName(level)


# ***

def _as_real(value):
    if isinstance(value, bool):
        raise ValueError(_(" (Expected a number, not a boolean.)"))
    try:
        real = float(value)
    except (TypeError, ValueError):
        raise ValueError(_(" (Expected a number, not ‘{}’.)").format(value))
    if not math.isfinite(real):
        raise ValueError(_(" (Expected a finite number, not ‘{}’.)").format(value))
    return real


def real_in(low=None, high=None, low_open=False, high_open=False):
    """Return a conformer for reals in an interval; ``None`` bounds are open-ended."""
    def conform(value):
        real = _as_real(value)
        too_low = low is not None and (real <= low if low_open else real < low)
        too_high = high is not None and (real >= high if high_open else real > high)
        if too_low or too_high:
            raise ValueError(_(" (Expected a value in {}{}, {}{}, not {}.)").format(
                '(' if low_open else '[',
                '-inf' if low is None else low,
                'inf' if high is None else high,
                ')' if high_open else ']',
                real,
            ))
        return real
    return conform


def int_in(low, high=None):
    def conform(value):
        real = _as_real(value)
        if real != int(real):
            raise ValueError(_(" (Expected an integer, not ‘{}’.)").format(value))
        count = int(real)
        if count < low or (high is not None and count > high):
            raise ValueError(_(" (Expected an integer in [{}, {}], not {}.)").format(
                low, 'inf' if high is None else high, count,
            ))
        return count
    return conform


def int_at_least(low):
    return int_in(low)


def conform_k_neighbors(value):
    """``auto`` (⌈√n⌉ neighbors) or a positive neighbor count, kept as text."""
    if isinstance(value, str) and value.strip().lower() == AUTO:
        return AUTO
    return str(int_at_least(1)(value))


def conform_alpha_lo(value):
    """``auto`` (max(10/n, 0.01)) or a floor strictly inside (0, 1), kept as text."""
    if isinstance(value, str) and value.strip().lower() == AUTO:
        return AUTO
    return repr(real_in(0.0, 1.0, low_open=True, high_open=True)(value))
