#!/usr/bin/env python
#
#  relu.py
"""
Compile an expression into a ReLU network.
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
from consolekit.options import flag_option

# this package
from pwl_reduce.cli import cli_command
from pwl_reduce.cli.utils import dimension_option, kernel_strategy_option, output_format_option, seed_option

__all__ = ["relu"]


@flag_option("--floats", help="Write weights as floating point numbers rather than exact fractions.")
@seed_option()
@kernel_strategy_option()
@output_format_option()
@dimension_option()
@click.argument("expression", metavar="EXPR")
@cli_command()
def relu(
		expression: str,
		dimension: int,
		output_format: str = "text",
		kernel_strategy: str = "first",
		seed: int = 42,
		floats: bool = False,
		) -> None:
	"""
	Expand and reduce EXPR, then compile it into a feed-forward ReLU network.

	The network is written as JSON. Text output adds a table of layer widths.
	"""

	# this package
	from pwl_reduce.cli.utils import echo_json, echo_table, echo_warnings, handle_errors, load_config, parse_and_expand
	from pwl_reduce.linalg import KernelChooser
	from pwl_reduce.reduce import reduce_lincomb
	from pwl_reduce.relu import depth_bound, emit, stats

	with handle_errors(output_format), echo_warnings():
		config = load_config(
				"relu",
				expression,
				dimension=dimension,
				output_format=output_format,
				kernel_strategy=kernel_strategy,
				seed=seed,
				)

		_, combination = parse_and_expand(config.input, config.n)
		reduced = reduce_lincomb(combination, KernelChooser(config.kernel_strategy, config.seed))
		network = emit(reduced)
		network_stats = stats(network)
		data = network.to_dict(floats=floats)

	if config.output_format == "json":
		echo_json({"network": data, "stats": network_stats.to_dict(), "depth_bound": depth_bound(config.n)})
	else:
		echo_json(data)
		click.echo()
		echo_table(
				[[index, width, layer.activation]
					for index, (width, layer) in enumerate(zip(network_stats.widths, network.layers))],
				headers=["Layer", "Width", "Activation"],
				)
		click.echo()
		click.echo(f"Depth {network_stats.depth} (at most {depth_bound(config.n)} for dimension {config.n})")
