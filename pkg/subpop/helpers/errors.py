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

"""Exceptions raised by subpop.

Everything derives from :class:`SubpopException`. A :class:`ValidationError`
means the caller handed us something we refuse to compute on (the CLI maps
it to exit code 2); an :class:`EstimationError` means the inputs were fine
but the numbers were not (exit code 1).
"""

from gettext import gettext as _

__all__ = (
    'SubpopException',
    'ValidationError',
    'ConfigError',
    'DatasetError',
    'FoldError',
    'MixtureError',
    'CsvParseError',
    'MissingColumnError',
    'NonNumericCellError',
    'NegativeLossError',
    'RaggedRowError',
    'EmptyFileError',
    'EstimationError',
)


class SubpopException(Exception):
    """Base class for all subpop errors."""
    pass


class ValidationError(SubpopException):  # noqa: E302
    """Raised if an input or argument violates its documented domain."""
    pass


class ConfigError(ValidationError):  # noqa: E302
    """Raised if a config setting cannot be applied."""
    pass


class DatasetError(ValidationError):  # noqa: E302
    """Raised if a Dataset breaks one of its invariants."""
    pass


class FoldError(ValidationError):  # noqa: E302
    """Raised if a fold partition cannot be made or used."""
    pass


class MixtureError(ValidationError):  # noqa: E302
    """Raised if an AlphaMixture is not a probability measure on (0, 1]."""
    pass


class CsvParseError(ValidationError):
    """Raised if a loss CSV cannot be ingested.

    Carries the 1-based data ``row`` (header excluded) and the ``column``
    name when they are known, so callers can point at the offending cell.
    """

    def __init__(self, message, row=None, column=None):
        super(CsvParseError, self).__init__(message)
        self.row = row
        self.column = column


class MissingColumnError(CsvParseError):  # noqa: E302
    """Raised if a required column is absent from the header."""

    def __init__(self, column):
        super(MissingColumnError, self).__init__(
            _("missing required column ‘{}’").format(column), column=column,
        )


class NonNumericCellError(CsvParseError):  # noqa: E302
    """Raised if a cell does not parse as a finite real number."""

    def __init__(self, row, column, text):
        super(NonNumericCellError, self).__init__(
            _("non-numeric value ‘{}’ at row {}, column ‘{}’").format(
                text, row, column,
            ),
            row=row,
            column=column,
        )


class NegativeLossError(CsvParseError):  # noqa: E302
    """Raised if a loss is below zero."""

    def __init__(self, row, column='loss'):
        super(NegativeLossError, self).__init__(
            _("negative loss at row {}").format(row), row=row, column=column,
        )


class RaggedRowError(CsvParseError):  # noqa: E302
    """Raised if a row does not have one cell per header column."""

    def __init__(self, row, detail=''):
        msg = _("ragged row {}: cell count does not match the header").format(row)
        if detail:
            msg = '{} ({})'.format(msg, detail)
        super(RaggedRowError, self).__init__(msg, row=row)


class EmptyFileError(CsvParseError):  # noqa: E302
    """Raised if the file has no header or no data rows."""

    def __init__(self, path):
        super(EmptyFileError, self).__init__(
            _("no data rows in ‘{}’").format(path),
        )


class EstimationError(SubpopException):
    """Raised if a computation cannot produce a meaningful number."""
    pass
