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

"""The run manifest every JSON output carries."""

import datetime

from .. import get_version
from ..helpers.digest import fnv1a_64_hex
from ..items.results import RunManifest

__all__ = (
    'build_manifest',
    'with_manifest',
)


def utc_now_iso():
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')


def build_manifest(command, flags, seed=None, input_bytes=None, clock=utc_now_iso):
    """
    Describe one run.

    Args:
        command (str): Subcommand name.

        flags (dict): Every resolved option, defaults included.

        seed (int): The seed the run used, or None when randomness is unused.

        input_bytes (bytes): Raw CSV bytes or the inline values text, hashed
            with 64-bit FNV-1a; None when there was no input.

        clock: Callable returning the wall-clock string.
    """
    digest = None
    if input_bytes is not None:
        if isinstance(input_bytes, str):
            input_bytes = input_bytes.encode('utf-8')
        digest = fnv1a_64_hex(input_bytes)
    return RunManifest(
        command=command,
        flags=dict(sorted(flags.items())),
        seed=seed,
        input_digest=digest,
        version=get_version(),
        wall_clock=clock(),
    )


def with_manifest(document, manifest):
    """``document`` with the manifest under the ``manifest`` key."""
    kvals = dict(document)
    kvals['manifest'] = manifest.as_dict()
    return kvals
