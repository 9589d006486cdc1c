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

"""Reading and writing the loss CSV.

The file is UTF-8 with a header row: a ``loss`` column, attribute columns
``z0`` … ``z{d-1}`` and, optionally, a ``mu_hat`` column of precomputed
μ̂(Z_i). Other columns are ignored. Every diagnostic names the 1-based data
row (the header is not counted) and/or the column.
"""

from gettext import gettext as _

import math
import re

import lazy_import
import numpy as np

from .helpers.errors import (
    CsvParseError,
    EmptyFileError,
    MissingColumnError,
    NegativeLossError,
    NonNumericCellError,
    RaggedRowError
)
from .helpers.logging import child_logger
from .items.dataset import Dataset
from .reports.csv_writer import CSVWriter
from .reports.tables import dataset_headers, dataset_table

pd = lazy_import.lazy_module('pandas')

__all__ = (
    'load_csv',
    'parse_values',
    'read_bytes',
    'write_csv',
)

logger = child_logger(__name__)

LOSS_COLUMN = 'loss'
MU_COLUMN = 'mu_hat'

_Z_COLUMN = re.compile(r'^z(\d+)$')
_FIELD_COUNT = re.compile(r'Expected (\d+) fields in line (\d+), saw (\d+)')


def read_bytes(path):
    try:
        with open(path, 'rb') as fobj:
            return fobj.read()
    except OSError as err:
        raise CsvParseError(_("cannot read ‘{}’: {}").format(path, err.strerror))


def _read_frame(path):
    # header=None: the header line fixes the field count, so a longer row
    # is a parser error and a shorter one leaves NaN cells.
    try:
        return pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            encoding='utf-8',
        )
    except pd.errors.EmptyDataError:
        raise EmptyFileError(path)
    except pd.errors.ParserError as err:
        match = _FIELD_COUNT.search(str(err))
        if match is None:
            raise CsvParseError(_("unreadable CSV ‘{}’: {}").format(path, err))
        expect, line, saw = (int(group) for group in match.groups())
        raise RaggedRowError(
            line - 1, _("expected {} cells, saw {}").format(expect, saw),
        )
    except UnicodeDecodeError as err:
        raise CsvParseError(_("‘{}’ is not UTF-8: {}").format(path, err))
    except OSError as err:
        raise CsvParseError(_("cannot read ‘{}’: {}").format(path, err.strerror))


def _header(frame):
    names = [str(name).strip() for name in frame.iloc[0].tolist()]
    seen = set()
    for name in names:
        if name in seen:
            raise CsvParseError(
                _("duplicate column ‘{}’").format(name), column=name,
            )
        seen.add(name)
    if LOSS_COLUMN not in seen:
        raise MissingColumnError(LOSS_COLUMN)
    z_indices = sorted(
        int(match.group(1))
        for match in (_Z_COLUMN.match(name) for name in names) if match
    )
    if not z_indices:
        raise MissingColumnError('z0')
    for expect, index in enumerate(z_indices):
        if index != expect:
            raise MissingColumnError('z{}'.format(expect))
    ignored = [
        name for name in names
        if name not in (LOSS_COLUMN, MU_COLUMN) and not _Z_COLUMN.match(name)
    ]
    if ignored:
        logger.warning('ignoring unknown column(s): %s', ', '.join(ignored))
    return names, ['z{}'.format(index) for index in z_indices]


def _numeric(cells, column):
    """Column ``column`` as floats, or a NonNumericCellError naming the cell."""
    text = cells.str.strip()
    values = pd.to_numeric(text, errors='coerce').to_numpy(dtype=float)
    bad = ~np.isfinite(values)
    if np.any(bad):
        row = int(np.flatnonzero(bad)[0])
        raise NonNumericCellError(row + 1, column, cells.iloc[row])
    return values


def load_csv(path):
    """Parse the loss CSV at ``path`` into a :class:`Dataset`, in file order."""
    frame = _read_frame(path)
    if frame.shape[0] < 2:
        raise EmptyFileError(path)
    names, z_columns = _header(frame)
    body = frame.iloc[1:].reset_index(drop=True)
    body.columns = names

    short = body.isna().any(axis=1).to_numpy()
    if np.any(short):
        row = int(np.flatnonzero(short)[0]) + 1
        raise RaggedRowError(row, _("fewer cells than the header"))

    losses = _numeric(body[LOSS_COLUMN], LOSS_COLUMN)
    negative = np.flatnonzero(losses < 0)
    if negative.size:
        raise NegativeLossError(int(negative[0]) + 1)
    z = np.column_stack([_numeric(body[column], column) for column in z_columns])
    external_mu = None
    if MU_COLUMN in names:
        external_mu = _numeric(body[MU_COLUMN], MU_COLUMN)

    logger.info(
        'loaded %d rows, d=%d%s from %s',
        losses.size, z.shape[1], ' with mu_hat' if external_mu is not None else '',
        path,
    )
    return Dataset(losses, z, external_mu=external_mu)


def parse_values(text):
    """A comma-separated list of finite reals, e.g. ``4,3,2,1``."""
    values = []
    for position, cell in enumerate(str(text).split(','), start=1):
        cell = cell.strip()
        try:
            value = float(cell)
        except ValueError:
            raise NonNumericCellError(position, 'values', cell)
        if not math.isfinite(value):
            raise NonNumericCellError(position, 'values', cell)
        values.append(value)
    return np.array(values)


def write_csv(dataset, output_obj):
    """Write ``dataset`` as a loss CSV; floats keep 17 significant digits."""
    writer = CSVWriter()
    writer.output_setup(output_obj)
    return writer.write_report(dataset_table(dataset), dataset_headers(dataset))
