#!/usr/bin/env python
#
#  expand.py
"""
Expand a nested expression into a linear combination of maxima.
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
from typing import Any, Dict, List

# 3rd party
import click

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import dimension_option, output_format_option

__all__ = ["expand", "statistics_rows"]


def statistics_rows(statistics: Dict[str, Any]) -> List[List[Any]]:
	"""
	Returns the rows of the summary table for a dictionary created by :meth:`~.SummandStatistics.to_dict`.

	:param statistics:
	"""

	rows = [
			["Summands", statistics["summands"]],
			["Distinct affine functions", statistics["constituents"]],
			["Summands with 5 or more", statistics["at_least_five"]],
			["Height", statistics["height"]],
			]

	for size, count in statistics["histogram"].items():
		rows.append([f"Summands of size {size}", count])

	return rows


@output_format_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@cli_command()
def expand(expression: str, dimension: int, output_format: str = "text") -> None:
	"""
	Expand EXPR into a linear combination of maxima of affine functions.

	EXPR may be given inline, as @path to read it from a file, or as - to read standard input.
	"""

	# this package
	from pwl_reduce.cli.utils import echo_json, echo_table, handle_errors, load_config, parse_and_expand
	from pwl_reduce.expand import summand_statistics
	from pwl_reduce.parser import format_expression

	with handle_errors(output_format):
		config = load_config("expand", expression, dimension=dimension, output_format=output_format)
		_, combination = parse_and_expand(config.input, config.n)
		statistics = summand_statistics(combination).to_dict()

	if config.output_format == "json":
		echo_json({
				"expression": format_expression(combination),
				"lincomb": combination.to_dict(),
				"statistics": statistics,
				})
	else:
		click.echo(format_expression(combination))
		click.echo()
		echo_table(statistics_rows(statistics))
