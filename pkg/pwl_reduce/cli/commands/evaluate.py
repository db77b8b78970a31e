#!/usr/bin/env python
#
#  evaluate.py
"""
Evaluate an expression exactly at a rational point.
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

# 3rd party
import click

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import dimension_option, output_format_option

__all__ = ["evaluate"]


@output_format_option()
@click.option(
		"--at",
		"point",
		type=click.STRING,
		required=True,
		metavar="P1,...,PN",
		help="The point, as comma separated rationals such as '1/2,3'.",
		)
@dimension_option()
@click.argument("expression", metavar="EXPR")
@cli_command(name="eval")
def evaluate(expression: str, dimension: int, point: str, output_format: str = "text") -> None:
	"""
	Evaluate EXPR at a point, using exact rational arithmetic.
	"""

	# this package
	from pwl_reduce.cli.utils import echo_json, handle_errors, load_config
	from pwl_reduce.core import DimensionError
	from pwl_reduce.parser import parse
	from pwl_reduce.utils import format_rational, parse_rational_list

	with handle_errors(output_format):
		config = load_config("eval", expression, dimension=dimension, output_format=output_format)
		tree = parse(config.input, config.n)

		coordinates = parse_rational_list(point)
		if len(coordinates) != config.n:
			raise DimensionError(config.n, len(coordinates), "point")

		value = tree(coordinates)

	if config.output_format == "json":
		echo_json({"point": [format_rational(c) for c in coordinates], "value": format_rational(value)})
	else:
		click.echo(format_rational(value))
