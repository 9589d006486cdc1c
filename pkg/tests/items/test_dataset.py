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

import numpy as np
import pytest

from subpop.helpers.errors import DatasetError
from subpop.items.dataset import Dataset, LossSample


class TestLossSample(object):
    def test_init_valid(self):
        sample = LossSample(1.5, [0.2, -0.3])
        assert sample.loss == 1.5
        assert sample.d == 2

    def test_zero_loss_allowed(self):
        assert LossSample(0.0, 1.0).loss == 0.0

    @pytest.mark.parametrize('loss', [-0.5, float('nan'), float('inf')])
    def test_bad_loss(self, loss):
        with pytest.raises(DatasetError):
            LossSample(loss, [0.0])

    def test_nonfinite_attribute(self):
        with pytest.raises(DatasetError):
            LossSample(1.0, [0.0, float('nan')])


class TestDataset(object):
    def test_from_samples(self):
        dataset = Dataset.from_samples([LossSample(1.0, 0.2), LossSample(2.0, -0.3)])
        assert dataset.n == 2
        assert len(dataset) == 2
        assert dataset.d == 1
        assert dataset.losses.tolist() == [1.0, 2.0]
        assert dataset.samples[1] == LossSample(2.0, -0.3)

    def test_one_dimensional_z_becomes_a_column(self):
        dataset = Dataset([1.0, 2.0, 3.0], [0.1, 0.2, 0.3])
        assert dataset.z.shape == (3, 1)

    def test_arrays_are_read_only(self):
        dataset = Dataset([1.0, 2.0], [0.1, 0.2])
        with pytest.raises(ValueError):
            dataset.losses[0] = 5.0

    def test_negative_loss_names_the_row(self):
        with pytest.raises(DatasetError) as excinfo:
            Dataset([1.0, -0.5, 2.0], [0.0, 0.0, 0.0])
        assert str(excinfo.value) == 'negative loss at row 2'

    def test_empty(self):
        with pytest.raises(DatasetError):
            Dataset([], np.zeros((0, 1)))

    def test_misaligned_attributes(self):
        with pytest.raises(DatasetError):
            Dataset([1.0, 2.0], np.zeros((3, 1)))

    def test_samples_disagree_on_dimension(self):
        with pytest.raises(DatasetError):
            Dataset.from_samples([LossSample(1.0, [0.0]), LossSample(1.0, [0.0, 1.0])])

    def test_external_mu(self):
        dataset = Dataset([1.0, 2.0], [0.0, 1.0], external_mu=[0.9, 2.1])
        assert dataset.has_external_mu
        assert dataset.external_mu.tolist() == [0.9, 2.1]

    def test_external_mu_wrong_length(self):
        with pytest.raises(DatasetError):
            Dataset([1.0, 2.0], [0.0, 1.0], external_mu=[0.9])

    def test_external_mu_not_finite(self):
        with pytest.raises(DatasetError):
            Dataset([1.0, 2.0], [0.0, 1.0], external_mu=[0.9, float('nan')])

    def test_subset_keeps_order_and_mu(self):
        dataset = Dataset([1.0, 2.0, 3.0], [0.1, 0.2, 0.3], external_mu=[4.0, 5.0, 6.0])
        part = dataset.subset([2, 0])
        assert part.losses.tolist() == [3.0, 1.0]
        assert part.z[:, 0].tolist() == [0.3, 0.1]
        assert part.external_mu.tolist() == [6.0, 4.0]

    def test_subset_empty(self):
        with pytest.raises(DatasetError):
            Dataset([1.0], [0.0]).subset([])

    def test_with_external_mu(self):
        dataset = Dataset([1.0, 2.0], [0.0, 1.0]).with_external_mu([1.0, 2.0])
        assert dataset.has_external_mu

    def test_equality_by_content(self):
        one = Dataset([1.0, 2.0], [0.0, 1.0])
        two = Dataset([1.0, 2.0], [0.0, 1.0])
        assert one == two
        assert one != Dataset([1.0, 2.5], [0.0, 1.0])
