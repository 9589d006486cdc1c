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

import logging

import pytest

from subpop.config.conformers import (
    conform_alpha_lo,
    conform_k_neighbors,
    get_log_level_safe,
    get_log_name_safe,
    int_in,
    must_verify_log_level,
    real_in
)


class TestConfigLogLevels:
    def test_must_verify_log_level_valid(self, log_level_valid_parametrized):
        _log_level = must_verify_log_level(log_level_valid_parametrized)
        assert isinstance(_log_level, int)

    def test_must_verify_log_level_invalid(self, log_level_invalid_parametrized):
        with pytest.raises(ValueError):
            must_verify_log_level(log_level_invalid_parametrized)

    def test_get_log_level_safe_valid(self, log_level_valid_parametrized):
        _log_level = get_log_level_safe(log_level_valid_parametrized)
        assert isinstance(_log_level, int)

    def test_get_log_level_safe_invalid(self, log_level_invalid_parametrized):
        _log_level = get_log_level_safe(log_level_invalid_parametrized)
        assert _log_level == logging.WARNING

    def test_get_log_name_safe(self):
        assert get_log_name_safe(logging.ERROR) == 'ERROR'


class TestRealIn(object):
    def test_closed(self):
        conform = real_in(0.0, 1.0)
        assert conform('0') == 0.0
        assert conform(1) == 1.0

    @pytest.mark.parametrize('value', [0.0, 1.0])
    def test_open(self, value):
        with pytest.raises(ValueError):
            real_in(0.0, 1.0, low_open=True, high_open=True)(value)

    def test_unbounded(self):
        assert real_in()('-1e9') == -1e9

    @pytest.mark.parametrize('value', [True, 'nan', 'inf', None, 'x'])
    def test_not_a_real(self, value):
        with pytest.raises(ValueError):
            real_in()(value)


class TestIntIn(object):
    def test_range(self):
        conform = int_in(1, 3)
        assert conform('2') == 2
        assert conform(3.0) == 3
        with pytest.raises(ValueError):
            conform(4)

    def test_not_whole(self):
        with pytest.raises(ValueError):
            int_in(0)(2.5)


class TestAutoConformers(object):
    def test_k_neighbors(self):
        assert conform_k_neighbors(' Auto ') == 'auto'
        assert conform_k_neighbors('9') == '9'
        with pytest.raises(ValueError):
            conform_k_neighbors('-1')

    def test_alpha_lo(self):
        assert conform_alpha_lo('auto') == 'auto'
        assert conform_alpha_lo('0.05') == '0.05'
        with pytest.raises(ValueError):
            conform_alpha_lo(1)
