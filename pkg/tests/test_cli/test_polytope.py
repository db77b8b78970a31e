#!/usr/bin/env python
#
#  test_polytope.py
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


# stdlib
import json

# 3rd party
import pytest
from consolekit.testing import CliRunner, Result

# this package
from pwl_reduce.cli import cli
from pwl_reduce.cli.commands.polytope import face, maxterm_of, minkowski, support, tau
from pwl_reduce.cli.utils import EXIT_USAGE
from pwl_reduce.core import AffineFunc, MaxTerm

TRIANGLE = "max(x1 - x2, 3*x1 + x2, -x1 + 2*x2)"
SEGMENT = "max(0, -x1 - x2)"


def test_maxterm_of():
	assert maxterm_of("max(x1, 0)", 1) == MaxTerm([AffineFunc((1, )), AffineFunc.zero(1)])

	with pytest.raises(ValueError, match="Expected a single maximum of linear functions"):
		maxterm_of("min(x1, x2)", 2)

	with pytest.raises(ValueError, match="Expected a single maximum of linear functions"):
		maxterm_of("max(x1, 0) - max(x2, 0)", 2)


@pytest.mark.parametrize("text", ["max(0)", "max(0, 0)", "max(x1, x2) - max(x2, x1)"])
def test_maxterm_of_zero(text: str):
	assert maxterm_of(text, 2) == MaxTerm([AffineFunc.zero(2)])


def test_tau_point(runner: CliRunner):
	result: Result = runner.invoke(tau, ["max(0)", "-n", '2'])
	assert result.exit_code == 0
	assert result.stdout == "(0, 0)\n"

	result = runner.invoke(tau, ["max(0)", "-n", '2', "-f", "json"])
	assert result.exit_code == 0
	assert json.loads(result.stdout) == {'n': 2, "points": [['0', '0']]}

	result = runner.invoke(support, ["max(0)", "-n", '2', "-d", "3,-1"])
	assert result.exit_code == 0
	assert result.stdout == "0\n"


def test_missing_direction_json(runner: CliRunner):
	result: Result = runner.invoke(support, [TRIANGLE, "-n", '2', "-f", "json"])
	assert result.exit_code == EXIT_USAGE
	assert json.loads(result.stderr)["kind"] == "UsageError"


def test_tau(runner: CliRunner):
	result: Result = runner.invoke(tau, [TRIANGLE, "-n", '2'])
	assert result.exit_code == 0
	assert result.stdout == "(-1, 2) -> (1, -1) -> (3, 1) -> (-1, 2)\n"

	result = runner.invoke(tau, [SEGMENT, "-n", '2', "-f", "json"])
	assert result.exit_code == 0
	assert json.loads(result.stdout) == {'n': 2, "points": [["-1", "-1"], ['0', '0']]}


def test_minkowski(runner: CliRunner):
	result: Result = runner.invoke(minkowski, [TRIANGLE, SEGMENT, "-n", '2'])
	assert result.exit_code == 0
	assert result.stdout == "(-2, 1) -> (0, -2) -> (3, 1) -> (-1, 2) -> (-2, 1)\n"


def test_support(runner: CliRunner):
	result: Result = runner.invoke(support, [TRIANGLE, "-n", '2', "-d", "0,1"])
	assert result.exit_code == 0
	assert result.stdout == "2\n"

	result = runner.invoke(support, [TRIANGLE, "-n", '2', "-d", "1/2,-1/2", "-f", "json"])
	assert result.exit_code == 0
	assert json.loads(result.stdout) == {"value": '1'}


def test_face(runner: CliRunner):
	result: Result = runner.invoke(face, [TRIANGLE, "-n", '2', "-d", "0,1"])
	assert result.exit_code == 0
	assert result.stdout == "(-1, 2)\n"


def test_through_group(runner: CliRunner):
	result: Result = runner.invoke(cli, ["polytope", "support", TRIANGLE, "-n", '2', "-d", "1,0"])
	assert result.exit_code == 0
	assert result.stdout == "3\n"


@pytest.mark.parametrize(
		"args, message",
		[
				pytest.param(["max(x1, 1)", "-n", '1'], "zero constant term", id="not_homogeneous"),
				pytest.param(["min(x1, x2)", "-n", '2'], "Expected a single maximum", id="not_single"),
				]
		)
def test_tau_errors(runner: CliRunner, args, message: str):
	result: Result = runner.invoke(tau, args)
	assert result.exit_code == EXIT_USAGE
	assert message in result.stderr


@pytest.mark.parametrize(
		"direction, message",
		[
				pytest.param("0,0", "non-zero vector", id="zero"),
				pytest.param("1,0,0", "Dimension mismatch", id="dimension"),
				]
		)
def test_direction_errors(runner: CliRunner, direction: str, message: str):
	result: Result = runner.invoke(face, [TRIANGLE, "-n", '2', "-d", direction, "-f", "json"])
	assert result.exit_code == EXIT_USAGE
	assert message in json.loads(result.stderr)["error"]
