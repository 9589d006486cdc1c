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

import os

import pytest

from subpop.helpers.app_dirs import (
    CONFIG_FILENAME,
    default_config_path,
    ensure_directory_exists
)


class TestSubpopAppDirs(object):
    """Make sure that our custom AppDirs works as intended."""

    def test_user_config_dir_returns_directoy(self, app_dirs, tmpdir):
        """Make sure method returns directory."""
        assert app_dirs.user_config_dir == tmpdir.join('config', 'subpop').strpath

    @pytest.mark.parametrize('create', [True, False])
    def test_user_config_dir_creates_file(self, app_dirs, create):
        """Make sure that path creation depends on ``create`` attribute."""
        app_dirs.create = create
        assert os.path.exists(app_dirs.user_config_dir) is create

    def test_singleton(self, app_dirs):
        assert app_dirs.__class__('subpop') is app_dirs

    def test_default_config_path(self, app_dirs):
        path = default_config_path()
        assert path == os.path.join(app_dirs.user_config_dir, CONFIG_FILENAME)
        assert not os.path.exists(path)


class TestEnsureDirectoryExists(object):
    def test_creates_nested(self, tmpdir, faker):
        path = os.path.join(tmpdir.strpath, faker.word(), faker.word())
        assert ensure_directory_exists(path) == path
        assert os.path.isdir(path)

    def test_existing_left_alone(self, tmpdir):
        assert ensure_directory_exists(tmpdir.strpath) == tmpdir.strpath
