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

"""JSON writer output format module."""

import json

from . import ReportWriter

__all__ = (
    'JSONWriter',
)


class JSONWriter(ReportWriter):
    def __init__(self, indent=2):
        """Initialize a new JSONWriter instance."""
        super(JSONWriter, self).__init__()
        self.indent = indent

    def dump(self, obj):
        # Python's float repr is the shortest string that reads back to the
        # same double. allow_nan=False: items already map non-finite to null.
        json.dump(obj, self.output_file, indent=self.indent, allow_nan=False)
        self.output_file.write('\n')

    def _write_document(self, document):
        self.dump(document)

