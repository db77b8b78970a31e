#!/usr/bin/env python
#
#  equiv.py
"""
Check whether two expressions define the same function.
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
import sys

# 3rd party
import click
from consolekit.options import auto_default_option

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import dimension_option, output_format_option, samples_option, seed_option

__all__ = ["equiv"]


@auto_default_option(
		"--method",
		type=click.Choice(["auto", "sample", "1d", "homogeneous"], case_sensitive=False),
		help="The equivalence oracle to use.",
		show_default=True,
		)
@seed_option()
@samples_option()
@output_format_option()
@dimension_option()
@click.argument("expression_b", metavar="EXPR2")
@click.argument("expression_a", metavar="EXPR1")
@cli_command()
def equiv(
		expression_a: str,
		expression_b: str,
		dimension: int,
		output_format: str = "text",
		samples: int = 10000,
		seed: int = 42,
		method: str = "auto",
		) -> None:
	"""
	Check whether EXPR1 and EXPR2 are the same function.

	Exits with code 3 if they differ, printing a point where they disagree.
	"""

	# this package
	from pwl_reduce.cli.utils import (
			EXIT_NOT_EQUAL,
			echo_json,
			echo_table,
			handle_errors,
			load_config,
			parse_and_expand,
			read_expression
			)
	from pwl_reduce.parser import parse
	from pwl_reduce.utils import format_rational
	from pwl_reduce.verify import equiv_1d, equiv_auto, equiv_homogeneous, equiv_sample

	with handle_errors(output_format):
		config = load_config(
				"equiv",
				expression_a,
				dimension=dimension,
				output_format=output_format,
				samples=samples,
				seed=seed,
				)
		second = read_expression(expression_b)

		if method == "sample":
			report = equiv_sample(parse(config.input, config.n), parse(second, config.n), config.samples, config.seed)
		else:
			_, a = parse_and_expand(config.input, config.n)
			_, b = parse_and_expand(second, config.n)

			if method == "1d":
				report = equiv_1d(a, b)
			elif method == "homogeneous":
				report = equiv_homogeneous(a, b)
			else:
				report = equiv_auto(a, b, config.samples, config.seed)

	if config.output_format == "json":
		echo_json(report.to_dict())
	else:
		rows = [["Verdict", report.verdict], ["Method", report.method]]
		if report.method == "sampling":
			rows.extend([["Samples", report.samples], ["Seed", report.seed]])
		if report.witness is not None:
			rows.extend([
					["Point", '(' + ", ".join(map(format_rational, report.witness.point)) + ')'],
					["EXPR1", format_rational(report.witness.left)],
					["EXPR2", format_rational(report.witness.right)],
					])
		echo_table(rows)

	if not report.equal:
		sys.exit(EXIT_NOT_EQUAL)
