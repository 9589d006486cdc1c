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

"""The ``subpop`` command.

Results go to stdout (JSON, or CSV for tables), diagnostics to stderr.
Exit codes: 0 on success, 1 on a runtime error, 2 on a validation error
(including bad usage). Settings layer as defaults < config file < flags.
"""

from gettext import gettext as _

import argparse
import os
import sys

import configobj

from . import __package_name__, get_version
from .config import CERTIFY_MODES, LEARNERS
from .config.conformers import (
    conform_alpha_lo,
    conform_k_neighbors,
    int_at_least,
    int_in,
    real_in
)
from .control import SubpopControl
from .helpers import logging as logging_helpers
from .helpers.app_dirs import default_config_path
from .helpers.errors import (
    ConfigError,
    SubpopException,
    ValidationError
)
from .ingest import load_csv, parse_values, read_bytes, write_csv
from .items.mixture import AlphaMixture
from .managers import certificate, cvar_dual
from .reports.csv_writer import CSVWriter
from .reports.json_writer import JSONWriter
from .reports.manifest import build_manifest, with_manifest
from .reports.tables import (
    CURVE_HEADERS,
    MEMBERS_HEADERS,
    curve_table,
    members_table
)

__all__ = (
    'build_parser',
    'main',
)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_VALIDATION = 2


# ***
# *** Argument types.
# ***

def _arg_type(conform, name):
    """Adapt a config conformer (which raises ValueError) to an argparse type."""
    def convert(text):
        try:
            return conform(text)
        except ValueError as err:
            raise argparse.ArgumentTypeError(
                _("invalid {}: ‘{}’{}").format(name, text, err)
            )
    convert.__name__ = name
    return convert


ALPHA = _arg_type(real_in(0.0, 1.0, low_open=True), 'alpha')
ALPHA_LO = _arg_type(conform_alpha_lo, 'alpha-lo')
DELTA = _arg_type(real_in(0.0, 1.0, low_open=True, high_open=True), 'delta')
POSITIVE = _arg_type(real_in(0.0, low_open=True), 'positive number')
NONNEGATIVE = _arg_type(real_in(0.0), 'nonnegative number')
REAL = _arg_type(real_in(), 'number')
ORDER = _arg_type(real_in(1.0), 'order k')
SEED = _arg_type(int_in(0), 'seed')
COUNT = _arg_type(int_at_least(1), 'count')
THREADS = _arg_type(int_at_least(0), 'threads')
FOLDS = _arg_type(int_at_least(2), 'folds')
DIMENSION = _arg_type(int_at_least(2), 'dimension')
K_NEIGHBORS = _arg_type(conform_k_neighbors, 'k-neighbors')


def _list_of(convert):
    def convert_list(text):
        cells = [cell.strip() for cell in text.split(',') if cell.strip()]
        if not cells:
            raise argparse.ArgumentTypeError(_("expected a comma-separated list"))
        return [convert(cell) for cell in cells]
    convert_list.__name__ = 'list'
    return convert_list


# ***
# *** Parser.
# ***

# Flag destination → config setting it overrides.
SETTING_FLAGS = {
    'alpha': 'eval.alpha',
    'folds': 'eval.folds',
    'delta': 'eval.delta',
    'seed': 'eval.seed',
    'learner': 'eval.learner',
    'k_neighbors': 'knn.k_neighbors',
    'rounds': 'boost.rounds',
    'learning_rate': 'boost.learning_rate',
    'max_depth': 'boost.max_depth',
    'n_bins': 'boost.n_bins',
    'alpha_lo': 'certify.alpha_lo',
    'tol': 'certify.tol',
    'mode': 'certify.mode',
    'C': 'bounds.C',
    'misspec_budget': 'bounds.misspec_budget',
    'd': 'sim.d',
    'n': 'sim.n',
    'outer': 'sim.outer',
    'inner': 'sim.inner',
    'clip': 'sim.clip',
    'threads': 'dev.threads',
    'log_level': 'dev.cli_log_level',
}


def _add_values_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', help=_("loss CSV (its ‘loss’ column is used)"))
    source.add_argument(
        '--values', help=_("inline comma-separated values, e.g. 4,3,2,1"),
    )


def _add_eval_flags(parser, alpha=True):
    parser.add_argument('--input', required=True, help=_("loss CSV"))
    if alpha:
        parser.add_argument('--alpha', type=ALPHA, help=_("subpopulation size α"))
    parser.add_argument('--folds', type=FOLDS, help=_("cross-fitting folds K"))
    parser.add_argument('--learner', choices=LEARNERS, help=_("first-stage learner"))
    parser.add_argument('--delta', type=DELTA, help=_("CI level is 1 − δ"))
    parser.add_argument('--seed', type=SEED, help=_("fold shuffle seed"))
    _add_learner_flags(parser)


def _add_learner_flags(parser):
    group = parser.add_argument_group(_("learner hyperparameters"))
    group.add_argument('--k-neighbors', type=K_NEIGHBORS, help=_("knn: ‘auto’ or k"))
    group.add_argument('--rounds', type=COUNT, help=_("boosting rounds"))
    group.add_argument('--learning-rate', type=POSITIVE, help=_("boosting shrinkage"))
    group.add_argument('--max-depth', type=COUNT, help=_("tree depth"))
    group.add_argument('--n-bins', type=COUNT, help=_("histogram bins per feature"))


def _add_sim_flags(parser, n=True):
    parser.add_argument('--seed', type=SEED, help=_("simulation seed"))
    parser.add_argument('--d', type=DIMENSION, help=_("covariate dimension"))
    if n:
        parser.add_argument('--n', type=COUNT, help=_("rows to draw"))
    parser.add_argument('--clip', type=REAL, help=_("labels flip above this X¹"))


def _add_oracle_flags(parser):
    parser.add_argument('--outer', type=COUNT, help=_("oracle outer draws"))
    parser.add_argument('--inner', type=COUNT, help=_("oracle inner draws"))


def build_parser():
    parser = argparse.ArgumentParser(
        prog=__package_name__,
        description=_("Worst-case subpopulation performance of a fixed model."),
    )
    parser.add_argument(
        '--version', action='version',
        version='%(prog)s {}'.format(get_version()),
    )
    parser.add_argument(
        '--config', help=_("INI config file (default: {})").format(
            default_config_path(),
        ),
    )
    parser.add_argument(
        '--log-level', help=_("stderr log level (DEBUG, INFO, WARNING, …)"),
    )
    parser.add_argument(
        '--threads', type=THREADS, help=_("worker threads (0: one per CPU)"),
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    cmd = commands.add_parser('cvar', help=_("empirical CVaR of a vector"))
    _add_values_source(cmd)
    cmd.add_argument('--alpha', type=ALPHA)
    cmd.set_defaults(func=cmd_cvar)

    cmd = commands.add_parser('estimate', help=_("cross-fitted debiased estimate"))
    _add_eval_flags(cmd)
    cmd.add_argument(
        '--plugin-only', action='store_true',
        help=_("skip the debiasing correction (for bias comparisons)"),
    )
    cmd.set_defaults(func=cmd_estimate)

    cmd = commands.add_parser('curve', help=_("estimates over several α, as CSV"))
    _add_eval_flags(cmd, alpha=False)
    cmd.add_argument('--alphas', type=_list_of(ALPHA), required=True)
    cmd.add_argument('--output', help=_("CSV path (default: stdout)"))
    cmd.set_defaults(func=cmd_curve)

    cmd = commands.add_parser('certify', help=_("certificate of robustness α̂"))
    _add_eval_flags(cmd, alpha=False)
    cmd.add_argument('--threshold', type=REAL, required=True)
    cmd.add_argument('--alpha-lo', type=ALPHA_LO)
    cmd.add_argument('--tol', type=POSITIVE)
    cmd.add_argument('--mode', choices=CERTIFY_MODES)
    cmd.add_argument(
        '--u-delta', type=NONNEGATIVE,
        help=_("also report the relative error radius for this U(δ)"),
    )
    cmd.add_argument('--alpha-floor', type=ALPHA, help=_("α floor of the radius"))
    cmd.set_defaults(func=cmd_certify)

    cmd = commands.add_parser('simulate', help=_("draw the synthetic dataset"))
    _add_sim_flags(cmd)
    cmd.add_argument('--output', help=_("CSV path (default: stdout)"))
    cmd.set_defaults(func=cmd_simulate)

    cmd = commands.add_parser('oracle', help=_("Monte-Carlo true W_α of the simulation"))
    _add_sim_flags(cmd, n=False)
    _add_oracle_flags(cmd)
    cmd.add_argument('--alpha', type=ALPHA)
    cmd.set_defaults(func=cmd_oracle)

    cmd = commands.add_parser('hocvar', help=_("higher-order CVaR ρ_k"))
    _add_values_source(cmd)
    cmd.add_argument('--alpha', type=ALPHA)
    cmd.add_argument('--k', type=ORDER, required=True)
    cmd.set_defaults(func=cmd_hocvar)

    cmd = commands.add_parser('ucb', help=_("dimension-free upper confidence bound"))
    _add_eval_flags(cmd)
    cmd.add_argument('--C', dest='C', type=POSITIVE, help=_("heuristic constant C"))
    cmd.add_argument('--M', dest='M', type=NONNEGATIVE, help=_("loss bound M"))
    cmd.add_argument('--misspec-budget', type=NONNEGATIVE)
    cmd.set_defaults(func=cmd_ucb)

    cmd = commands.add_parser('mixture', help=_("generalized worst case W_Λ"))
    _add_values_source(cmd)
    cmd.add_argument(
        '--mixture', required=True, help=_("alpha:weight pairs, e.g. 0.1:0.5,1:0.5"),
    )
    cmd.set_defaults(func=cmd_mixture)

    cmd = commands.add_parser('members', help=_("flag the worst-case subpopulation"))
    _add_eval_flags(cmd)
    cmd.add_argument('--output', help=_("CSV path (default: stdout)"))
    cmd.set_defaults(func=cmd_members)

    cmd = commands.add_parser('converge', help=_("estimation error along n"))
    _add_sim_flags(cmd, n=False)
    _add_oracle_flags(cmd)
    _add_learner_flags(cmd)
    cmd.add_argument('--alpha', type=ALPHA)
    cmd.add_argument('--folds', type=FOLDS)
    cmd.add_argument('--learner', choices=[name for name in LEARNERS if name != 'external'])
    cmd.add_argument('--ns', type=_list_of(COUNT), required=True)
    cmd.add_argument('--repeats', type=COUNT, default=10)
    cmd.add_argument('--truth', type=REAL, help=_("skip the oracle and use this W_α"))
    cmd.set_defaults(func=cmd_converge)

    return parser


# ***
# *** Settings.
# ***

def read_config_file(path, required):
    if not path or not os.path.exists(path):
        if required:
            raise ConfigError(_("config file not found: ‘{}’").format(path))
        return {}
    try:
        return configobj.ConfigObj(path, encoding='utf-8', file_error=True).dict()
    except (configobj.ConfigObjError, IOError) as err:
        raise ConfigError(_("cannot read config ‘{}’: {}").format(path, err))


def resolve_settings(args):
    """Config-file sections with the flags that were given laid on top."""
    required = args.config is not None
    path = args.config if required else default_config_path()
    settings = read_config_file(path, required)
    flags = vars(args)
    for dest, setting in SETTING_FLAGS.items():
        value = flags.get(dest)
        if value is None:
            continue
        section, name = setting.split('.')
        settings.setdefault(section, {})[name] = value
    # The simulation alpha follows --alpha for the commands that simulate.
    if args.command in ('oracle', 'converge') and flags.get('alpha') is not None:
        settings.setdefault('sim', {})['alpha'] = flags['alpha']
    return settings


def make_control(settings):
    try:
        return SubpopControl(settings)
    except ValueError as err:
        raise ConfigError(_("invalid setting{}").format(err))


def manifest_flags(args):
    return {
        key: value for key, value in sorted(vars(args).items())
        if key not in ('func',)
    }


# ***
# *** Output.
# ***

def emit_json(document, args, seed=None, input_bytes=None):
    manifest = build_manifest(
        args.command, manifest_flags(args), seed=seed, input_bytes=input_bytes,
    )
    writer = JSONWriter()
    writer.output_setup(sys.stdout)
    writer.write_document(with_manifest(document, manifest))


def emit_table(table, headers, output):
    writer = CSVWriter()
    writer.output_setup(output or sys.stdout)
    return writer.write_report(table, headers)


def _values_and_bytes(args):
    if args.values is not None:
        return parse_values(args.values), args.values
    return load_csv(args.input).losses, read_bytes(args.input)


def _dataset_and_bytes(args):
    return load_csv(args.input), read_bytes(args.input)


# ***
# *** Commands.
# ***

def cmd_cvar(args, control):
    values, raw = _values_and_bytes(args)
    result = control.cvar(values)
    emit_json(result.as_dict(), args, input_bytes=raw)


def cmd_estimate(args, control):
    dataset, raw = _dataset_and_bytes(args)
    result = control.estimate(dataset, plugin_only=args.plugin_only)
    emit_json(
        result.as_dict(), args,
        seed=control.config['eval.seed'], input_bytes=raw,
    )


def cmd_curve(args, control):
    dataset, _raw = _dataset_and_bytes(args)
    estimates = control.curve(dataset, args.alphas)
    emit_table(curve_table(estimates), CURVE_HEADERS, args.output)


def cmd_certify(args, control):
    dataset, raw = _dataset_and_bytes(args)
    result = control.certify(dataset, args.threshold)
    document = result.as_dict()
    if args.u_delta is not None and result.feasible:
        _fold_of, mu_hat, _member = control.members(dataset)
        alpha_floor = args.alpha_floor or result.alpha_lo
        bound = certificate.certificate_error_bound(
            mu_hat, result.alpha_hat, alpha_floor, args.u_delta,
        )
        if bound.vacuous:
            control.lib_logger.warning(
                'certificate error bound is vacuous: no μ̂ lies above its quantile'
            )
        document['error_bound'] = bound.as_dict()
    emit_json(
        document, args, seed=control.config['eval.seed'], input_bytes=raw,
    )


def cmd_simulate(args, control):
    dataset = control.simulate()
    write_csv(dataset, args.output or sys.stdout)


def cmd_oracle(args, control):
    result = control.oracle()
    emit_json(result.as_dict(), args, seed=control.config['eval.seed'])


def cmd_hocvar(args, control):
    values, raw = _values_and_bytes(args)
    alpha = control.config['eval.alpha']
    value = control.higher_order_cvar(values, args.k)
    document = {'value': value, 'alpha': alpha, 'k': args.k, 'n': int(values.size)}
    emit_json(document, args, input_bytes=raw)


def cmd_ucb(args, control):
    dataset, raw = _dataset_and_bytes(args)
    bounds = control.ucb(dataset, M=args.M)
    first = bounds[0]
    document = {
        'alpha': first.alpha,
        'C': first.C,
        'C_is_heuristic': True,
        'M': first.M,
        'delta': first.delta,
        'misspec_budget': first.misspec_budget,
        'ucb_max': max(bound.ucb for bound in bounds),
        'folds': [bound.as_dict() for bound in bounds],
    }
    emit_json(
        document, args, seed=control.config['eval.seed'], input_bytes=raw,
    )


def cmd_mixture(args, control):
    values, raw = _values_and_bytes(args)
    mixture = AlphaMixture.parse(args.mixture)
    value = control.mixture(values, mixture)
    curve = cvar_dual.CvarCurve(values)
    document = {
        'value': value,
        'atoms': [
            {'alpha': alpha, 'weight': weight, 'W': curve.value(alpha)}
            for alpha, weight in mixture.atoms
        ],
        'n': int(values.size),
    }
    emit_json(document, args, input_bytes=raw)


def cmd_members(args, control):
    dataset, _raw = _dataset_and_bytes(args)
    fold_of, mu_hat, member = control.members(dataset)
    emit_table(members_table(fold_of, mu_hat, member), MEMBERS_HEADERS, args.output)


def cmd_converge(args, control):
    truth, points = control.converge(args.ns, args.repeats, truth=args.truth)
    document = {
        'truth': truth,
        'alpha': control.config['sim.alpha'],
        'points': [point.as_dict() for point in points],
    }
    emit_json(document, args, seed=control.config['eval.seed'])


# ***
# *** Entry point.
# ***

def _attach_stderr_logging(control):
    level = control.config['dev.cli_log_level']
    handler = logging_helpers.stderr_handler(level)
    logging_helpers.setup_handler(
        handler, handler.formatter, control.lib_logger,
    )
    control.lib_logger.setLevel(min(control.lib_logger.level, handler.level))
    return handler


def _fail(message, code):
    sys.stderr.write('{}: error: {}\n'.format(__package_name__, message))
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse has already printed usage or the version.
        return err.code

    handler = None
    control = None
    try:
        control = make_control(resolve_settings(args))
        handler = _attach_stderr_logging(control)
        args.func(args, control)
    except ValidationError as err:
        return _fail(str(err), EXIT_VALIDATION)
    except SubpopException as err:
        return _fail(str(err), EXIT_RUNTIME)
    except Exception as err:
        if control is not None and control.config['dev.catch_errors']:
            raise
        return _fail(
            _("unexpected {}: {}").format(type(err).__name__, err), EXIT_RUNTIME,
        )
    finally:
        if handler is not None:
            control.lib_logger.removeHandler(handler)
    return EXIT_OK


def run():
    sys.exit(main())
