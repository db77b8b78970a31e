#!/usr/bin/env python
#
#  reduce.py
"""
Reduce every maximum of an expanded expression to affinely independent constituents.
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
from typing import List, Optional, Tuple

# 3rd party
import click
from consolekit.options import auto_default_option

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import (
		dimension_option,
		kernel_strategy_option,
		output_format_option,
		seed_option
		)
from pwl_reduce.core import LinComb
from pwl_reduce.reduce import Reducer, TraceNode

__all__ = ["reduce", "reduce_with_traces"]


def reduce_with_traces(combination: LinComb, reducer: Reducer) -> Tuple[LinComb, List[TraceNode]]:
	"""
	Reduce each term of ``combination``, keeping the recursion tree of every term.

	:param combination:
	:param reducer:
	"""

	# this package
	from pwl_reduce.core import canonicalize

	result = LinComb(combination.n)
	traces = []

	for coeff, term in combination.terms:
		reduced, node = reducer.reduce_max(term)
		result += reduced.scale(coeff)
		traces.append(node)

	return canonicalize(result), traces


@auto_default_option(
		"--trace",
		type=click.STRING,
		metavar="FILE",
		help="Write the recursion tree of every maximum to FILE in Graphviz DOT format.",
		)
@seed_option()
@kernel_strategy_option()
@output_format_option("text", "json", "dot")
@dimension_option()
@click.argument("expression", metavar="EXPR")
@cli_command()
def reduce(  # noqa: A001  # pylint: disable=redefined-builtin
		expression: str,
		dimension: int,
		output_format: str = "text",
		kernel_strategy: str = "first",
		seed: int = 42,
		trace: Optional[str] = None,
		) -> None:
	"""
	Expand EXPR and reduce every maximum to at most N+1 affinely independent constituents.

	With '--output-format dot' the recursion trees are written to standard output instead of the result.
	"""

	# 3rd party
	from domdf_python_tools.paths import PathPlus

	# this package
	from pwl_reduce.cli.commands.expand import statistics_rows
	from pwl_reduce.cli.utils import echo_json, echo_table, handle_errors, load_config, parse_and_expand
	from pwl_reduce.expand import summand_statistics
	from pwl_reduce.linalg import KernelChooser
	from pwl_reduce.parser import format_expression
	from pwl_reduce.reduce import trace_to_dict, trace_to_dot

	with handle_errors(output_format):
		config = load_config(
				"reduce",
				expression,
				dimension=dimension,
				output_format=output_format,
				kernel_strategy=kernel_strategy,
				seed=seed,
				)

		_, combination = parse_and_expand(config.input, config.n)
		chooser = KernelChooser(config.kernel_strategy, config.seed)
		reduced, traces = reduce_with_traces(combination, Reducer(chooser))
		statistics = summand_statistics(reduced).to_dict()

	dot = ''.join(trace_to_dot(node) for node in traces)

	if trace is not None:
		PathPlus(trace).write_clean(dot)

	if config.output_format == "dot":
		click.echo(dot, nl=False)

	elif config.output_format == "json":
		echo_json({
				"expression": format_expression(reduced),
				"lincomb": reduced.to_dict(),
				"statistics": statistics,
				"kernel_strategy": chooser.name,
				"traces": [trace_to_dict(node) for node in traces],
				})

	else:
		click.echo(format_expression(reduced))
		click.echo()
		echo_table(statistics_rows(statistics))
