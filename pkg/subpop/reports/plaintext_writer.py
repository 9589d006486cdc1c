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

"""Base class for the delimited text output formats."""

import csv
import math

from . import ReportWriter

__all__ = (
    'PlaintextWriter',
)


class PlaintextWriter(ReportWriter):
    def __init__(
        self,
        output_b=False,
        # dialect and **fmtparams passed to csv.writer().
        dialect='excel',
        **fmtparams
    ):
        super(PlaintextWriter, self).__init__(output_b=output_b)
        self.dialect = dialect
        self.fmtparams = fmtparams

    def output_setup(self, *args, **kwargs):
        super(PlaintextWriter, self).output_setup(*args, **kwargs)
        # Note that csv only requires that csvfile has a write() method.
        self.csv_writer = csv.writer(
            self.output_file, dialect=self.dialect, **self.fmtparams,
        )

    def open_file(self, path, output_b=False, newline=''):
        # Per docs: "If csvfile is a file object, it should be opened with newline=''".
        return super(PlaintextWriter, self).open_file(
            path=path, output_b=output_b, newline=newline,
        )

    # ***

    def format_cell(self, value):
        """Text for one cell: floats at ``float_format``, None as empty."""
        if value is None:
            return ''
        if isinstance(value, bool):
            return '1' if value else '0'
        if isinstance(value, float):
            if not math.isfinite(value):
                return ''
            return format(value, self.float_format)
        return str(value)

    def write_report(self, table, headers):
        self.csv_writer.writerow(headers)
        return super(PlaintextWriter, self).write_report(table, headers)

    def _write_result(self, row, headers):
        self.csv_writer.writerow([self.format_cell(value) for value in row])

    def _write_document(self, document):
        # A flat document becomes a two-column key/value table.
        self.csv_writer.writerow(('key', 'value'))
        for key, value in document.items():
            self.csv_writer.writerow((key, self.format_cell(value)))
