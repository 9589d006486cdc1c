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

"""Global fixtures."""

import numpy as np
import pytest

from subpop.config import decorate_config
from subpop.items.dataset import Dataset
from subpop.items.settings import EvalConfig, LearnerParams


def _base_config():
    """Provide a generic baseline configuration."""
    base_config = {
        'eval': {
            'alpha': 0.3,
            'folds': 5,
            'delta': 0.1,
            'seed': 0,
            'learner': 'boosted_stumps',
        },
        'boost': {
            # Fewer rounds than the default keep the suite quick.
            'rounds': 50,
        },
        'dev': {
            'catch_errors': False,
            'lib_log_level': 'WARNING',
            'cli_log_level': 'WARNING',
            'threads': 1,
        },
    }
    # The application deals with a ConfigDecorator object, and not a
    # simple dict, so tests need not set every value. We still return a
    # dict, so that tests can change values without triggering validation.
    config_root = decorate_config(base_config)
    config = config_root.as_dict()
    return config


@pytest.fixture
def base_config():
    return _base_config()


@pytest.fixture(scope="session")
def base_config_ro():
    return _base_config()


@pytest.fixture
def rng():
    """A seeded generator, so random test data is the same on every run."""
    return np.random.default_rng(20200527)


@pytest.fixture
def eval_config():
    """Cross-fitting settings with a small, fast boosting learner."""
    return EvalConfig(
        alpha=0.3,
        K=5,
        delta=0.1,
        learner='boosted_stumps',
        params=LearnerParams(rounds=50),
        seed=0,
        threads=1,
    )


@pytest.fixture
def knn_config():
    return EvalConfig(alpha=0.3, K=5, learner='knn', seed=0, threads=1)


@pytest.fixture
def constant_dataset():
    """Every loss is 2.0, whatever the attributes."""
    def generate(n=100, c=2.0, d=1):
        z = np.linspace(-1.0, 1.0, n * d).reshape(n, d)
        return Dataset(np.full(n, c), z)
    return generate


@pytest.fixture
def linear_dataset(rng):
    """Loss rises with the single attribute, plus bounded noise."""
    def generate(n=200, noise=0.1):
        z = rng.uniform(0.0, 1.0, size=n)
        losses = z + rng.uniform(0.0, noise, size=n)
        return Dataset(losses, z)
    return generate


@pytest.fixture
def loss_csv(tmpdir):
    """Write CSV text to a file in ``tmpdir`` and return its path."""
    def generate(text, name='losses.csv'):
        path = tmpdir.join(name)
        path.write_text(text, encoding='utf-8')
        return path.strpath
    return generate
