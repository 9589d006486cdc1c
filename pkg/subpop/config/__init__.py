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

"""subpop User Configurable Settings"""

from gettext import gettext as _

from config_decorator import section, ConfigDecorator

from .conformers import (
    AUTO,
    conform_alpha_lo,
    conform_k_neighbors,
    get_log_level_safe,
    get_log_name_safe,
    int_at_least,
    int_in,
    must_verify_log_level,
    real_in,
)

__all__ = (
    'LEARNERS',
    'CERTIFY_MODES',
    'ConfigRoot',
    'decorate_config',
    # PRIVATE:
    # 'SubpopConfigurableEval',
    # 'SubpopConfigurableKnn',
    # 'SubpopConfigurableBoost',
    # 'SubpopConfigurableCertify',
    # 'SubpopConfigurableBounds',
    # 'SubpopConfigurableSim',
    # 'SubpopConfigurableDev',
)

# config-decorator cannot deduce a type from a float default; the real_in
# conformer does the parsing and validation, so pass values through as-is.
def _pass_real(value):
    return value


LEARNERS = ('knn', 'boosted_stumps', 'external')

CERTIFY_MODES = ('plugin_per_fold', 'debiased_curve')


# ***
# *** Top-level, root config object.
# ***

@section(None)
class ConfigRoot(object):
    pass


# ***

@ConfigRoot.section('eval')
class SubpopConfigurableEval(object):
    """"""

    def __init__(self, *args, **kwargs):
        # The @section decorator swaps the class for a decorator instance,
        # so there is no real class to super() into.
        pass

    @property
    @ConfigRoot.setting(
        _("Smallest subpopulation size α to guard against, in (0, 1]."),
        value_type=_pass_real,
        conform=real_in(0.0, 1.0, low_open=True),
    )
    def alpha(self):
        return 0.3

    @property
    @ConfigRoot.setting(
        _("Number of cross-fitting folds K (at least 2)."),
        conform=int_at_least(2),
    )
    def folds(self):
        return 5

    @property
    @ConfigRoot.setting(
        _("Confidence interval significance δ, in (0, 1)."),
        value_type=_pass_real,
        conform=real_in(0.0, 1.0, low_open=True, high_open=True),
    )
    def delta(self):
        return 0.1

    @property
    @ConfigRoot.setting(
        _("Seed for fold shuffling (and simulated data)."),
        conform=int_at_least(0),
    )
    def seed(self):
        return 0

    @property
    @ConfigRoot.setting(
        _("First-stage learner for the conditional risk μ̂."),
        choices=LEARNERS,
    )
    def learner(self):
        return 'boosted_stumps'


# ***

@ConfigRoot.section('knn')
class SubpopConfigurableKnn(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Neighbors averaged per prediction, or ‘auto’ for ⌈√n⌉."),
        conform=conform_k_neighbors,
    )
    def k_neighbors(self):
        return AUTO


# ***

@ConfigRoot.section('boost')
class SubpopConfigurableBoost(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Boosting rounds (trees fitted)."),
        conform=int_at_least(1),
    )
    def rounds(self):
        return 200

    @property
    @ConfigRoot.setting(
        _("Shrinkage applied to each tree, in (0, 1]."),
        value_type=_pass_real,
        conform=real_in(0.0, 1.0, low_open=True),
    )
    def learning_rate(self):
        return 0.1

    @property
    @ConfigRoot.setting(
        _("Depth of each tree (1 is a stump; at most 3)."),
        conform=int_in(1, 3),
    )
    def max_depth(self):
        return 2

    @property
    @ConfigRoot.setting(
        _("Histogram bins per attribute for split search."),
        conform=int_at_least(2),
    )
    def n_bins(self):
        return 64


# ***

@ConfigRoot.section('certify')
class SubpopConfigurableCertify(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Lower end of the α bisection bracket, or ‘auto’ for max(10/n, 0.01)."),
        conform=conform_alpha_lo,
    )
    def alpha_lo(self):
        return AUTO

    @property
    @ConfigRoot.setting(
        _("Bisection stops once the α bracket is this narrow."),
        value_type=_pass_real,
        conform=real_in(0.0, 1.0, low_open=True),
    )
    def tol(self):
        return 1e-3

    @property
    @ConfigRoot.setting(
        _("Which curve is bisected: per-fold plug-in, or the debiased estimate."),
        choices=CERTIFY_MODES,
    )
    def mode(self):
        return 'plugin_per_fold'


# ***

@ConfigRoot.section('bounds')
class SubpopConfigurableBounds(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Heuristic constant C of the dimension-free bound (unspecified in theory)."),
        name='C',
        value_type=_pass_real,
        conform=real_in(0.0, low_open=True),
    )
    def concentration_constant(self):
        return 1.0

    @property
    @ConfigRoot.setting(
        _("Assumed L2 distance from the best in-class μ to the true μ*."),
        value_type=_pass_real,
        conform=real_in(0.0),
    )
    def misspec_budget(self):
        return 0.0


# ***

@ConfigRoot.section('sim')
class SubpopConfigurableSim(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Covariate dimension d of the synthetic classification task."),
        conform=int_at_least(2),
    )
    def d(self):
        return 5

    @property
    @ConfigRoot.setting(
        _("Rows drawn by the simulator."),
        conform=int_at_least(1),
    )
    def n(self):
        return 10000

    @property
    @ConfigRoot.setting(
        _("Subpopulation size at which the oracle is evaluated."),
        value_type=_pass_real,
        conform=real_in(0.0, 1.0, low_open=True),
    )
    def alpha(self):
        return 0.3

    @property
    @ConfigRoot.setting(
        _("Oracle: outer draws of the attribute X¹."),
        conform=int_at_least(1),
    )
    def outer(self):
        return 20000

    @property
    @ConfigRoot.setting(
        _("Oracle: inner draws per outer point, averaged into μ*(X¹)."),
        conform=int_at_least(1),
    )
    def inner(self):
        return 5000

    @property
    @ConfigRoot.setting(
        _("Labels flip where X¹ exceeds this value."),
        value_type=_pass_real,
        conform=real_in(),
    )
    def clip(self):
        return 1.645


# ***

@ConfigRoot.section('dev')
class SubpopConfigurableDev(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("If True, the CLI re-raises errors with tracebacks."),
    )
    def catch_errors(self):
        return False

    @property
    @ConfigRoot.setting(
        _("The log level for library (subpop) squaller"
            " (using Python logging library levels)"),
        validate=must_verify_log_level,
        conform=get_log_level_safe,
        recover=get_log_name_safe,
    )
    def lib_log_level(self):
        return 'WARNING'

    @property
    @ConfigRoot.setting(
        _("The log level for the command line front end."),
        validate=must_verify_log_level,
        conform=get_log_level_safe,
        recover=get_log_name_safe,
    )
    def cli_log_level(self):
        return 'WARNING'

    @property
    @ConfigRoot.setting(
        _("Worker threads for per-fold work (0: one per CPU;"
          " SUBPOP_THREADS caps it)."),
        conform=int_at_least(0),
    )
    def threads(self):
        return 0


# ***

def decorate_config(config):
    """Wraps or ensures the supplied config dict is a subpop config decorator.

    Library users and tests usually hold a plain nested dict; the CLI builds
    the dict from the config file and its flags. Either way, unset values
    fall back to the defaults declared above.
    """
    if isinstance(config, ConfigDecorator):
        return config
    # ConfigRoot is module-global; reset before applying a new dict.
    config_root = ConfigRoot
    config_root.forget_config_values()
    config_root.update(config or {})
    return config_root
