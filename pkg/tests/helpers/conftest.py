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

"""Fixtures needed to test helper submodule."""

import pytest

from subpop.helpers.app_dirs import SubpopAppDirs


@pytest.fixture
def app_dirs(mocker, tmpdir):
    """Provide a fresh SubpopAppDirs whose config dir lives under tmpdir."""
    path = tmpdir.join('config', 'subpop').strpath
    mocker.patch('subpop.helpers.app_dirs.appdirs.user_config_dir', return_value=path)
    SubpopAppDirs.forget_instance()
    yield SubpopAppDirs('subpop')
    SubpopAppDirs.forget_instance()
