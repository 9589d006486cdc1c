# This file exists within 'subpop':
#
#   https://github.com/subpop-dev/subpop

"""
Packaging instruction for setup tools.

Refs:

  https://setuptools.readthedocs.io/

  https://packaging.python.org/en/latest/distributing.html

  https://github.com/pypa/sampleproject
"""

from setuptools import find_packages, setup

# *** Package requirements.

requirements = [
    # Platform-specific directory magic.
    #  https://github.com/ActiveState/appdirs
    'appdirs >= 1.4.3, < 2',
    # Better INI/conf parser (preserves order, comments) than ConfigParser.
    #  https://github.com/DiffSK/configobj
    #  https://configobj.readthedocs.io/en/latest/
    'configobj >= 5.0.6, < 6',
    # https://github.com/mnmelo/lazy_import
    'lazy_import >= 0.2.2, < 1',
    # Arrays, seeded generators, and all the vector arithmetic.
    #  https://numpy.org/
    'numpy >= 1.17',
    # CSV ingestion.
    #  https://pandas.pydata.org/
    'pandas >= 1.0',
    # Nearest-neighbor regression and feature scaling.
    #  https://scikit-learn.org/
    'scikit-learn >= 0.22',
    # Normal quantiles for the confidence interval.
    #  https://scipy.org/
    'scipy >= 1.4',

    # *** HOTH packages.

    # "Very simple Python library for color and formatting in terminal."
    # Forked by HOTH (for italic "support"):
    #  https://github.com/hotoffthehamster/ansi-escape-room
    # Used to color the CLI's stderr log messages.
    'ansi-escape-room == 1.4.2',
    # Pythonic config @decorator.
    #  https://github.com/hotoffthehamster/config-decorator
    'config-decorator == 2.0.14',
]

# *** Minimal setup() function -- Prefer using config where possible.

# Most settings are in setup.cfg, except identifying packages.
# (We could find-packages from within setup.cfg, but it's convoluted.)

setup(
    # Run-time dependencies installed on `pip install`. To learn more
    # about "install_requires" vs pip's requirements files, see:
    #   https://packaging.python.org/en/latest/requirements.html
    install_requires=requirements,

    # Specify which package(s) to install.
    # - Without any rules, find_packages returns, e.g.,
    #     ['subpop', 'tests', 'tests.managers']
    # - With the 'exclude*' rule, this call is essentially:
    #     packages=['subpop', 'subpop.config', ...]
    packages=find_packages(exclude=['tests*']),

    entry_points={
        'console_scripts': [
            'subpop = subpop.cli:run',
        ],
    },

    # Tell setuptools to determine the version
    # from the latest SCM (git) version tag.
    #
    # Note that if the latest commit is not tagged with a version,
    # or if your working tree or index is dirty, then the version
    # from git will be appended with the commit hash that has the
    # version tag, as well as some sort of 'distance' identifier.
    # Ref:
    #   https://github.com/pypa/setuptools_scm
    setup_requires=['setuptools_scm'],
    use_scm_version=True,
)
