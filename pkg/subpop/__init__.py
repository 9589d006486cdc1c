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

"""subpop estimates a model's worst-case performance over subpopulations."""

import time

__all__ = (
    'get_version',
    '__package_name__',
    '__time_0__',
    '__PROFILING__',
)

__PROFILING__ = True
# DEVS: Comment this out to see load times summary.
__PROFILING__ = False
__time_0__ = time.time()

# Same as setup.cfg:[metadata]name, kept here so the name is not
# hardcoded in strings across the package.
__package_name__ = 'subpop'


def get_version():
    """The installed version, as recorded in every run manifest."""
    # pkg_resources is slow to load; only the CLI and manifests need it.
    from pkg_resources import DistributionNotFound, get_distribution
    try:
        return get_distribution(__package_name__).version
    except DistributionNotFound:
        # Running from a source tree that was never installed.
        return '0+unknown'
