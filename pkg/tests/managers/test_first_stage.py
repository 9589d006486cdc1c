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

from subpop.helpers.errors import ValidationError
from subpop.items.dataset import Dataset
from subpop.items.settings import LearnerParams
from subpop.managers.first_stage import (
    BoostedStumpsRiskModel,
    ExternalRiskModel,
    KnnRiskModel,
    external_model,
    fit_conditional_risk,
    min_class_mse,
    mse_on,
    predict,
)
from subpop.managers.first_stage.boosting import bin_edges


@pytest.fixture
def step_dataset(rng):
    # Ten distinct attribute values, so bin edges fall between them.
    z = rng.integers(0, 10, size=400) / 10.0
    return Dataset(np.where(z > 0.5, 1.0, 0.0), z)


class TestBinEdges(object):
    def test_few_distinct_values(self):
        assert bin_edges(np.array([3.0, 1.0, 2.0, 1.0]), 64).tolist() == [1.5, 2.5]

    def test_constant(self):
        assert bin_edges(np.full(5, 2.0), 64).size == 0

    def test_quantile_edges(self, rng):
        column = rng.normal(size=1000)
        edges = bin_edges(column, 4)
        assert 1 <= edges.size <= 3
        assert (edges < column.max()).all()


class TestBoostedStumps(object):
    def test_learns_a_step(self, step_dataset):
        model = fit_conditional_risk(step_dataset, LearnerParams(rounds=200))
        assert isinstance(model, BoostedStumpsRiskModel)
        assert predict(model, [0.2]) == pytest.approx(0.0, abs=1e-3)
        assert predict(model, [0.8]) == pytest.approx(1.0, abs=1e-3)

    def test_training_error_never_rises(self, linear_dataset):
        model = fit_conditional_risk(linear_dataset(), LearnerParams(rounds=100))
        path = model.train_mse_path
        assert len(path) == 100
        assert all(b <= a + 1e-12 for a, b in zip(path, path[1:]))

    def test_stumps(self, linear_dataset):
        model = fit_conditional_risk(linear_dataset(), LearnerParams(rounds=20, max_depth=1))
        assert all(tree.feature.size <= 3 for tree in model.trees)

    def test_predictions_clamped(self, linear_dataset):
        dataset = linear_dataset()
        model = fit_conditional_risk(dataset, LearnerParams(rounds=20))
        far = model.predict_z(np.array([[-100.0], [100.0]]))
        assert far.min() >= dataset.losses.min()
        assert far.max() <= dataset.losses.max()

    def test_deterministic(self, linear_dataset):
        dataset = linear_dataset()
        one = fit_conditional_risk(dataset, LearnerParams(rounds=30))
        two = fit_conditional_risk(dataset, LearnerParams(rounds=30))
        assert np.array_equal(one.predict_dataset(dataset), two.predict_dataset(dataset))


class TestKnn(object):
    def test_auto_neighbors(self, linear_dataset):
        model = fit_conditional_risk(linear_dataset(n=100), kind='knn')
        assert isinstance(model, KnnRiskModel)
        assert model.k_neighbors == 10

    def test_one_neighbor_interpolates(self, linear_dataset):
        dataset = linear_dataset(n=50)
        model = fit_conditional_risk(dataset, LearnerParams(k_neighbors=1), 'knn')
        assert np.allclose(model.predict_dataset(dataset), dataset.losses)

    def test_every_neighbor_is_the_mean(self, linear_dataset, rng):
        dataset = linear_dataset(n=60)
        model = fit_conditional_risk(dataset, LearnerParams(k_neighbors=60), 'knn')
        queries = rng.uniform(-1.0, 2.0, size=(10, 1))
        assert np.allclose(model.predict_z(queries), dataset.losses.mean(), atol=1e-12)

    def test_too_many_neighbors(self, linear_dataset):
        with pytest.raises(ValidationError):
            fit_conditional_risk(linear_dataset(n=20), LearnerParams(k_neighbors=21), 'knn')

    def test_wrong_dimension(self, linear_dataset):
        model = fit_conditional_risk(linear_dataset(n=50), kind='knn')
        with pytest.raises(ValidationError):
            model.predict([0.1, 0.2])


class TestFitConditionalRisk(object):
    def test_external_is_not_fitted(self, linear_dataset):
        with pytest.raises(ValidationError):
            fit_conditional_risk(linear_dataset(), kind='external')

    def test_unknown_kind(self, linear_dataset):
        with pytest.raises(ValidationError):
            fit_conditional_risk(linear_dataset(), kind='forest')


class TestExternal(object):
    def test_predict_by_index(self):
        dataset = Dataset([1.0, 2.0, 3.0], [0.0, 0.0, 0.0], external_mu=[1.5, 2.5, 3.5])
        model = external_model(dataset)
        assert isinstance(model, ExternalRiskModel)
        assert model.predict(1) == 2.5
        assert model.predict_dataset(dataset).tolist() == [1.5, 2.5, 3.5]

    def test_out_of_range_index(self):
        model = external_model(Dataset([1.0], [0.0], external_mu=[1.0]))
        with pytest.raises(ValidationError):
            model.predict(1)

    def test_no_attribute_queries(self):
        model = external_model(Dataset([1.0], [0.0], external_mu=[1.0]))
        with pytest.raises(ValidationError):
            model.predict_z([[0.0]])

    def test_needs_the_column(self):
        with pytest.raises(ValidationError):
            external_model(Dataset([1.0], [0.0]))


class TestMse(object):
    def test_mse_on(self):
        dataset = Dataset([1.0, 3.0], [0.0, 0.0], external_mu=[2.0, 2.0])
        assert mse_on(external_model(dataset), dataset) == 1.0

    def test_min_class_mse_fits_the_fold(self, step_dataset):
        assert min_class_mse(step_dataset, LearnerParams(rounds=200)) == pytest.approx(
            0.0, abs=1e-6,
        )
