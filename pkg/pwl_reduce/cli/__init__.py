#!/usr/bin/env python
#
#  __init__.py
"""
Core CLI tools.

.. note::

	Enable autocompletion with:

	.. prompt:: bash

		_PWL_REDUCE_COMPLETE=source_bash pwl-reduce > /usr/share/bash-completion/completions/pwl-reduce

	.. seealso:: https://click.palletsprojects.com/en/7.x/bashcomplete/#activation
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
import logging
from functools import partial
from typing import List, Sequence

# 3rd party
import click
from click import Context
from consolekit import CONTEXT_SETTINGS, SuggestionGroup, click_group
from consolekit.options import verbose_option

# this package
from pwl_reduce import __version__

__all__ = ["JsonErrorCommand", "cli", "cli_command", "cli_group", "log_level"]


def log_level(verbose: int) -> int:
	"""
	Returns the logging level for the given number of ``-v`` flags.

	:param verbose:
	"""

	if verbose >= 2:
		return logging.DEBUG
	elif verbose == 1:
		return logging.INFO
	else:
		return logging.WARNING


def _wants_json(args: Sequence[str]) -> bool:
	fmt = None

	for index, arg in enumerate(args):
		if arg in {"-f", "--output-format"} and index + 1 < len(args):
			fmt = args[index + 1]
		elif arg.startswith("--output-format="):
			fmt = arg.split('=', 1)[1]
		elif arg.startswith("-f") and not arg.startswith("--") and len(arg) > 2:
			fmt = arg[2:]

	return fmt is not None and fmt.lower() == "json"


class JsonErrorCommand(click.Command):
	"""
	A :class:`click.Command` which reports usage errors found while parsing its options
	as ``{"error": ..., "kind": "UsageError"}`` when ``--output-format json`` was requested.
	"""

	def parse_args(self, ctx: Context, args: List[str]) -> List[str]:  # noqa: D102
		original = list(args)

		try:
			return super().parse_args(ctx, args)
		except click.UsageError as e:
			if not _wants_json(original):
				raise

			# this package
			from pwl_reduce.cli.utils import EXIT_USAGE, report_error

			report_error(e, "json")
			raise click.exceptions.Exit(EXIT_USAGE) from e


@click.version_option(__version__)
@verbose_option(help_text="Show progress messages. Pass twice for debugging output.")
@click_group(invoke_without_command=False)
@click.pass_context
def cli(ctx: Context, verbose: int = 0):
	"""
	Expand, reduce and verify piecewise linear functions given as nested min/max expressions.
	"""

	logging.basicConfig(format="%(levelname)s: %(name)s: %(message)s")
	logging.getLogger("pwl_reduce").setLevel(log_level(verbose))

	ctx.ensure_object(dict)["verbose"] = verbose


cli_command = partial(cli.command, context_settings=CONTEXT_SETTINGS, cls=JsonErrorCommand)
cli_group = partial(cli.group, context_settings=CONTEXT_SETTINGS, cls=SuggestionGroup)
