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

"""subpop output format base class.

- Each output class supports either or both write_document() and write_report().
- A document is one plain-data object (a result's ``as_dict()``); a report
  is a table of rows under a header.
"""

import sys

__all__ = (
    'ReportWriter',
)


class ReportWriter(object):
    def __init__(
        self,
        output_b=False,
    ):
        """
        Initiate new instance.

        Args:
            output_b: Whether to open a ``path`` for binary output.
        """
        self.output_b = output_b

    # ***

    def output_setup(
        self,
        output_obj,
        row_limit=0,
        float_format=None,
    ):
        """
        Open the output.

        Args:
            output_obj: File-like object, path string, or None for stdout.

            row_limit (int): Stop after this many report rows (0 = no limit).

            float_format (str): ``format`` spec for floats in text output.
                Defaults to 17 significant digits, which round-trips a double.
        """
        self.output_file = self.open_output_file(output_obj, self.output_b)

        self.row_limit = row_limit or 0

        self.float_format = float_format
        if self.float_format is None:
            self.float_format = '.17g'

    def open_output_file(self, output_obj, output_b=False):
        self.output_ours = False
        if not output_obj:
            return sys.stdout
        elif not isinstance(output_obj, str):
            return output_obj
        return self.open_file(output_obj, output_b)

    def open_file(self, path, output_b=False, newline=None):
        self.output_ours = True
        if not output_b:
            return open(path, 'w', encoding='utf-8', newline=newline)
        return open(path, 'wb')

    # ***

    def write_document(self, document):
        """
        Write one plain-data document and close the file like object.

        Args:
            document (dict): Typically a result item's ``as_dict()``.

        Returns:
            int: Number of documents written (1).
        """
        self._write_document(document)
        self._close()
        return 1

    def _write_document(self, document):
        raise NotImplementedError

    # ***

    def write_report(self, table, headers):
        """
        Write report to output file and close the file like object.

        Args:
            table (Iterable): Rows, each a sequence matching ``headers``.

            headers (Sequence): Column names.

        Returns:
            int: Number of rows written.
        """
        n_written = self.write_report_table(table, headers)
        self._close()
        return n_written

    def write_report_table(self, table, headers):
        """Write report to output file."""
        n_written = 0
        for row in table:
            self._write_result(row, headers)
            n_written += 1
            if self.row_limit > 0 and n_written >= self.row_limit:
                break
        return n_written

    def _write_result(self, row, headers):
        """
        Represent one result row in the output file.

        What this means exactly depends on the format.
        """
        raise NotImplementedError

    # ***

    def _close(self):
        """Default teardown method."""
        if self.output_ours:
            self.output_file.close()
        else:
            self.output_file.flush()
        # Rather than clear the file handle, leave set, so caller can inspect.
