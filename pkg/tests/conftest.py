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

"""Base fixtures available to all subpop tests."""

import pytest

from subpop.control import SubpopControl

# The shared fixtures live in subpop.tests so that downstream packages can
# reuse them. conftest.py is loaded for every test module anyway, so the
# glob import is the honest way to say "all of them".
# F401 'subpop.tests.conftest.*' imported but unused
# F403 'from subpop.tests.conftest import *' used; unable to detect undefined names
from subpop.tests.conftest import *  # noqa: F401, F403


def pytest_addoption(parser):
    parser.addoption(
        '--run-slow', action='store_true', default=False,
        help='also run the slow statistical checks',
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption('--run-slow'):
        return
    skip_slow = pytest.mark.skip(reason='slow: pass --run-slow to run')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def controller(base_config):
    """Provide a basic controller."""
    return SubpopControl(base_config)
