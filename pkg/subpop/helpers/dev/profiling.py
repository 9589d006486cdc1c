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

"""Opt-in wall-clock profiling of the expensive entry points.

Flip ``subpop.__PROFILING__`` to collect timings; they print at exit.
"""

import time
from functools import update_wrapper

from ... import __PROFILING__, __time_0__

__all__ = (
    'MSGS_FUNC',
    'profile_elapsed',
    'timefunc',
)


MSGS_FUNC = []
MSGS_SPAN = []


def profile_elapsed(text):
    if not __PROFILING__:
        return
    MSGS_SPAN.append('{0}: {1:.3f} secs.'.format(text, time.time() - __time_0__))


def timefunc(func):
    """Record how long each call to ``func`` takes (no-op unless profiling)."""
    if not __PROFILING__:
        return func

    def f_timer(*args, **kwargs):
        start = time.time()
        result = func(*args, **kwargs)
        MSGS_FUNC.append(
            '{0}: {1:.3f} secs.'.format(func.__qualname__, time.time() - start)
        )
        return result

    return update_wrapper(f_timer, func)


if __PROFILING__:
    def exit_elapsed():
        profile_elapsed('subpop: exit')
        for msg in MSGS_SPAN + MSGS_FUNC:
            print(msg)  # noqa: T001

    import atexit
    atexit.register(exit_elapsed)
