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

"""The library's front door: one object that owns the config and the logger."""

import gettext

from .config import decorate_config
from .helpers import logging as logging_helpers
from .helpers.logging import LIB_LOGGER_NAME
from .ingest import load_csv
from .items.mixture import AlphaMixture
from .items.settings import CertifyParams, EvalConfig, SimConfig
from .managers import bounds, certificate, cvar_dual, estimator, simulation

gettext.install('subpop')


class SubpopControl(object):
    """
    All config options are set as part of the controller setup. Any client
    may overwrite those values, but we can always assume that the controller
    has a value set.

    The numerical work lives in :mod:`subpop.managers`, which take plain
    items. The controller is the hub that turns the decorated config into
    those items, so that clients do not have to.
    """

    def __init__(self, config=None):
        self.capture_config_lib(config)

    def capture_config_lib(self, config):
        self.config = decorate_config(config)
        self.lib_logger = self._get_logger()

    def update_config(self, config):
        """Use a new config dictionary and apply its settings."""
        self.capture_config_lib(config)

    def _get_logger(self):
        """
        Setup and configure the main logger.

        As the docs suggest we setup just a pseudo handler. Any client that
        actually wants to use logging needs to setup its required handlers
        itself.
        """
        lib_log_level = self.config['dev.lib_log_level']
        lib_logger = logging_helpers.set_logger_level(
            LIB_LOGGER_NAME, lib_log_level,
        )
        return lib_logger

    # ***

    @property
    def eval_config(self):
        return EvalConfig.from_config(self.config)

    @property
    def sim_config(self):
        return SimConfig.from_config(self.config)

    def certify_params(self, threshold):
        return CertifyParams.from_config(self.config, threshold)

    def load(self, path):
        return load_csv(path)

    # ***

    def cvar(self, values, alpha=None):
        alpha = self.config['eval.alpha'] if alpha is None else alpha
        return cvar_dual.empirical_cvar(values, alpha)

    def higher_order_cvar(self, values, k, alpha=None):
        alpha = self.config['eval.alpha'] if alpha is None else alpha
        return cvar_dual.higher_order_cvar(values, alpha, k)

    def mixture(self, values, mixture):
        if not isinstance(mixture, AlphaMixture):
            mixture = AlphaMixture.parse(mixture)
        return cvar_dual.generalized_worst_case(values, mixture)

    def estimate(self, dataset, plugin_only=False):
        if plugin_only:
            return estimator.estimate_plugin_only(dataset, self.eval_config)
        return estimator.estimate(dataset, self.eval_config)

    def curve(self, dataset, alphas):
        return estimator.estimate_curve(dataset, self.eval_config, alphas)

    def members(self, dataset):
        return estimator.worst_case_members(dataset, self.eval_config)

    def certify(self, dataset, threshold):
        return certificate.certify(
            dataset, self.eval_config, self.certify_params(threshold),
        )

    def ucb(self, dataset, M=None):
        return bounds.dim_free_ucb(
            dataset,
            self.eval_config,
            C=self.config['bounds.C'],
            M=M,
            misspec_budget=self.config['bounds.misspec_budget'],
        )

    def simulate(self, replicate=0):
        return simulation.simulate_dataset(self.sim_config, replicate)

    def oracle(self):
        return simulation.oracle_true_w(
            self.sim_config, threads=self.config['dev.threads'],
        )

    def converge(self, sizes, repeats, truth=None):
        return simulation.convergence_study(
            self.sim_config,
            self.eval_config,
            sizes,
            repeats,
            truth=truth,
            threads=self.config['dev.threads'],
        )
