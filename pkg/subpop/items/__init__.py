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

"""Immutable value objects shared by the managers, writers and CLI."""

from .dataset import Dataset, LossSample  # noqa: F401
from .folds import FoldPartition  # noqa: F401
from .item_base import BaseItem  # noqa: F401
from .mixture import AlphaMixture  # noqa: F401
from .results import (  # noqa: F401
    Certificate,
    CertificateErrorBound,
    ConvergencePoint,
    DimFreeBound,
    EmpiricalCvarResult,
    FoldEstimate,
    OracleResult,
    RunManifest,
    WorstCaseEstimate,
)
from .settings import CertifyParams, EvalConfig, LearnerParams, SimConfig  # noqa: F401
