#!/usr/bin/env python
#
#  polytope.py
"""
Polytopes of maxima of linear functions: their Newton polytopes, Minkowski sums, support values and faces.
"""
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
from functools import partial

# 3rd party
import click
from consolekit import CONTEXT_SETTINGS

# this package
from pwl_reduce.cli import JsonErrorCommand, cli_group
from pwl_reduce.cli.utils import dimension_option, output_format_option
from pwl_reduce.core import AffineFunc, MaxTerm
from pwl_reduce.polytope import Direction, VPolytope

__all__ = ["polytope", "polytope_command", "tau", "minkowski", "support", "face", "maxterm_of", "echo_polytope"]


@cli_group(invoke_without_command=False)
def polytope() -> None:
	"""
	Work with the polytopes whose support functions are maxima of linear functions.
	"""


polytope_command = partial(polytope.command, context_settings=CONTEXT_SETTINGS, cls=JsonErrorCommand)

direction_option = partial(
		click.option,
		"-d",
		"--direction",
		type=click.STRING,
		required=True,
		metavar="D1,...,DN",
		help="The direction, as comma separated rationals.",
		)


def maxterm_of(text: str, n: int) -> MaxTerm:
	"""
	Parse ``text`` as a single maximum of linear functions.

	:param text: The expression, or ``@path`` or ``-``.
	:param n: The dimension.

	:raises ValueError: if the expression is not a single maximum with coefficient 1.
	"""

	# this package
	from pwl_reduce.cli.utils import parse_and_expand, read_expression
	from pwl_reduce.parser import format_expression

	_, combination = parse_and_expand(read_expression(text), n)

	if not combination.terms:
		# the zero function, whose polytope is the origin
		return MaxTerm([AffineFunc.zero(n)])

	if len(combination.terms) != 1 or combination.terms[0][0] != 1:
		raise ValueError(f"Expected a single maximum of linear functions, got {format_expression(combination)!r}")

	return combination.terms[0][1]


def echo_polytope(p: VPolytope, output_format: str) -> None:
	"""
	Write a polytope as JSON, or as a cycle of vertices.

	:param p:
	:param output_format:
	"""

	# this package
	from pwl_reduce.cli.utils import echo_json
	from pwl_reduce.polytope import vertex_cycle

	if output_format == "json":
		echo_json(p.to_dict())
	else:
		click.echo(vertex_cycle(p))


def _direction(text: str, n: int) -> Direction:
	# this package
	from pwl_reduce.core import DimensionError
	from pwl_reduce.utils import parse_rational_list

	d = Direction(parse_rational_list(text))
	if d.n != n:
		raise DimensionError(n, d.n, "direction")
	return d


@output_format_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@polytope_command(name="tau")
def tau(expression: str, dimension: int, output_format: str = "text") -> None:
	"""
	Show the polytope whose support function is EXPR, a maximum of linear functions.
	"""

	# this package
	from pwl_reduce import polytope as _polytope
	from pwl_reduce.cli.utils import handle_errors, load_config

	with handle_errors(output_format):
		config = load_config("polytope tau", dimension=dimension, output_format=output_format)
		p = _polytope.tau(maxterm_of(expression, config.n))

	echo_polytope(p, config.output_format)


@output_format_option()
@dimension_option()
@click.argument("expression_b", metavar="EXPR2")
@click.argument("expression_a", metavar="EXPR1")
@polytope_command(name="minkowski")
def minkowski(expression_a: str, expression_b: str, dimension: int, output_format: str = "text") -> None:
	"""
	Show the Minkowski sum of the polytopes of EXPR1 and EXPR2.

	This is the polytope of the maximum of all pairwise sums of their constituents.
	"""

	# this package
	from pwl_reduce import polytope as _polytope
	from pwl_reduce.cli.utils import handle_errors, load_config

	with handle_errors(output_format):
		config = load_config("polytope minkowski", dimension=dimension, output_format=output_format)
		p = _polytope.minkowski(
				_polytope.tau(maxterm_of(expression_a, config.n)),
				_polytope.tau(maxterm_of(expression_b, config.n)),
				)

	echo_polytope(p, config.output_format)


@output_format_option()
@direction_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@polytope_command(name="support")
def support(expression: str, dimension: int, direction: str, output_format: str = "text") -> None:
	"""
	Show the largest value of <v, D> over the polytope of EXPR.
	"""

	# this package
	from pwl_reduce import polytope as _polytope
	from pwl_reduce.cli.utils import echo_json, handle_errors, load_config
	from pwl_reduce.utils import format_rational

	with handle_errors(output_format):
		config = load_config("polytope support", dimension=dimension, output_format=output_format)
		p = _polytope.tau(maxterm_of(expression, config.n))
		value = _polytope.support(p, _direction(direction, config.n))

	if config.output_format == "json":
		echo_json({"value": format_rational(value)})
	else:
		click.echo(format_rational(value))


@output_format_option()
@direction_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@polytope_command(name="face")
def face(expression: str, dimension: int, direction: str, output_format: str = "text") -> None:
	"""
	Show the face of the polytope of EXPR on which <v, D> is largest.
	"""

	# this package
	from pwl_reduce import polytope as _polytope
	from pwl_reduce.cli.utils import handle_errors, load_config

	with handle_errors(output_format):
		config = load_config("polytope face", dimension=dimension, output_format=output_format)
		p = _polytope.tau(maxterm_of(expression, config.n))
		result = _polytope.face(p, _direction(direction, config.n))

	echo_polytope(result, config.output_format)
