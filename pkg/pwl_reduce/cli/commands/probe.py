#!/usr/bin/env python
#
#  probe.py
"""
Compare reductions of the same expression under several kernel strategies.
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
from consolekit.options import auto_default_option

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import dimension_option, output_format_option, seed_option

__all__ = ["probe"]


@seed_option()
@auto_default_option(
		"-s",
		"--strategies",
		type=click.STRING,
		help="Comma separated kernel strategies. 'random:K' runs K random strategies with consecutive seeds.",
		show_default=True,
		)
@output_format_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@cli_command()
def probe(
		expression: str,
		dimension: int,
		output_format: str = "text",
		strategies: str = "first,last,random:3",
		seed: int = 42,
		) -> None:
	"""
	Reduce EXPR with each kernel strategy and report whether the results are identical.

	Differing results are reported, not treated as an error.
	"""

	# this package
	from pwl_reduce.cli.utils import echo_json, echo_table, echo_warnings, handle_errors, load_config, parse_and_expand
	from pwl_reduce.parser import format_expression
	from pwl_reduce.reduce import conjecture_probe, parse_strategies

	with handle_errors(output_format), echo_warnings():
		config = load_config("probe", expression, dimension=dimension, output_format=output_format, seed=seed)
		_, combination = parse_and_expand(config.input, config.n)
		report = conjecture_probe(combination, parse_strategies(strategies, config.seed))

	if config.output_format == "json":
		echo_json(report.to_dict())
	else:
		echo_table(
				[[name, format_expression(output)] for name, output in report.outputs.items()],
				headers=["Strategy", "Reduction"],
				)
		click.echo()
		click.echo(f"Identical: {'yes' if report.identical else 'no'} ({report.distinct} distinct)")
