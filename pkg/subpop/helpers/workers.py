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

"""Worker pool sizing and the fold-parallel map."""

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = (
    'THREADS_ENV_VAR',
    'resolve_workers',
    'ordered_map',
)

THREADS_ENV_VAR = 'SUBPOP_THREADS'


def resolve_workers(requested=0, n_tasks=None):
    """Number of worker threads to use.

    ``requested`` of 0 means one per CPU. The ``SUBPOP_THREADS`` environment
    variable, when set to a positive integer, caps whatever was asked for.
    """
    workers = int(requested or 0)
    if workers <= 0:
        workers = os.cpu_count() or 1
    env_cap = os.environ.get(THREADS_ENV_VAR, '').strip()
    if env_cap:
        try:
            cap = int(env_cap)
        except ValueError:
            cap = 0
        if cap > 0:
            workers = min(workers, cap)
    if n_tasks is not None:
        workers = min(workers, max(1, n_tasks))
    return max(1, workers)


def ordered_map(func, items, workers=1):
    """Map ``func`` over ``items``, returning results in input order.

    Results never depend on scheduling: callers aggregate the returned list
    in order, so a run with 1 thread and a run with 8 agree bit for bit.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
