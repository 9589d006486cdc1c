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

import appdirs

from .singleton import Singleton

__all__ = (
    'CONFIG_FILENAME',
    'default_config_path',
    'ensure_directory_exists',
    'SubpopAppDirs',
)

CONFIG_FILENAME = 'subpop.conf'


class SubpopAppDirs(appdirs.AppDirs, metaclass=Singleton):
    """Application-specific AppDirs interface.

    A Singleton because the paths derive from the user and application
    name, neither of which changes during a run.

    Unlike plain ``appdirs``, asking for a path does not create it unless
    ``create`` is set; the CLI only reads the config directory.
    """

    def __init__(self, *args, **kwargs):
        super(SubpopAppDirs, self).__init__(*args, **kwargs)
        self.create = False

    @property
    def user_config_dir(self):
        """Return ``user_config_dir``."""
        directory = appdirs.user_config_dir(
            self.appname,
            self.appauthor,
            version=self.version,
            roaming=self.roaming,
        )
        if self.create:
            ensure_directory_exists(directory)
        return directory


def default_config_path():
    """Where the CLI looks for ``subpop.conf`` when ``--config`` is absent."""
    app_dirs = SubpopAppDirs('subpop')
    return os.path.join(app_dirs.user_config_dir, CONFIG_FILENAME)


def ensure_directory_exists(directory):
    """Ensure that the passed path to a directory exists."""
    if not os.path.lexists(directory):
        os.makedirs(directory)
    return directory
