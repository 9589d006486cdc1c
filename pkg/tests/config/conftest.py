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

"""Fixtures that are of general use."""

from configobj import ConfigObj

import pytest

from subpop.config import ConfigRoot
from subpop.config.conformers import LOG_LEVELS


@pytest.fixture(params=list(LOG_LEVELS.keys()) + [123, ])
def log_level_valid_parametrized(request):
    """Return each of the valid log level strings."""
    return request.param


@pytest.fixture(params=(None, '123', 'abc', ''))
def log_level_invalid_parametrized(request):
    """Return selection of invalid log level strings."""
    return request.param


@pytest.fixture
def config_root():
    config_root = ConfigRoot
    config_root.forget_config_values()
    return config_root


@pytest.fixture
def configobj_instance(request):
    """Provide a ``ConfigObj`` instance as it reads from a config file."""

    config = ConfigObj()
    config['eval'] = {}
    config['eval']['alpha'] = '0.25'
    config['eval']['folds'] = '4'
    config['eval']['learner'] = 'knn'
    config['knn'] = {}
    config['knn']['k_neighbors'] = '7'
    config['certify'] = {}
    config['certify']['mode'] = 'debiased_curve'
    config['dev'] = {}
    config['dev']['catch_errors'] = 'False'
    config['dev']['lib_log_level'] = 'debug'

    return config
