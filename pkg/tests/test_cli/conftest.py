#!/usr/bin/env python
#
#  conftest.py
#
#  Copyright © 2026 Dominic Davis-Foster <dominic@davis-foster.co.uk>
#
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU Lesser General Public License as published by
#  the Free Software Foundation; either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  GNU Lesser General Public License for more details.
#
#  You should have received a copy of the GNU Lesser General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.
#


# 3rd party
import pytest
from consolekit.testing import CliRunner
from domdf_python_tools.paths import PathPlus

# this package
from pwl_reduce.testing import FIVE_CONSTITUENTS_TEXT


@pytest.fixture()
def runner() -> CliRunner:
	return CliRunner(mix_stderr=False)


@pytest.fixture()
def expression_file(tmp_pathplus: PathPlus) -> PathPlus:
	path = tmp_pathplus / "five.txt"
	path.write_clean(FIVE_CONSTITUENTS_TEXT)
	return path
