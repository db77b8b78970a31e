#!/usr/bin/env python
#
#  utils.py
"""
Shared options and helpers for the command line interface.
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
import json
import sys
import warnings
from contextlib import contextmanager
from typing import Any, Callable, Iterator, Mapping, Optional, Sequence, Tuple

# 3rd party
import click
from consolekit.options import auto_default_option
from consolekit.terminal_colours import Fore
from domdf_python_tools.paths import PathPlus
from tabulate import tabulate

# this package
from pwl_reduce.configuration import CliConfig
from pwl_reduce.core import LinComb
from pwl_reduce.reduce import InvariantViolation

__all__ = [
		"EXIT_USAGE",
		"EXIT_NOT_EQUAL",
		"EXIT_INVARIANT",
		"dimension_option",
		"seed_option",
		"samples_option",
		"kernel_strategy_option",
		"output_format_option",
		"read_expression",
		"load_config",
		"handle_errors",
		"report_error",
		"echo_warnings",
		"echo_json",
		"echo_table",
		"parse_and_expand",
		]

#: Exit code for usage errors, unparsable input and dimension mismatches.
EXIT_USAGE = 2

#: Exit code when ``equiv`` finds the two functions differ.
EXIT_NOT_EQUAL = 3

#: Exit code when the reduction breaks one of its own invariants.
EXIT_INVARIANT = 4


def dimension_option() -> Callable:
	"""
	Adds the required ``-n / --dimension`` option to a command.
	"""

	return click.option(
			"-n",
			"--dimension",
			type=click.INT,
			required=True,
			help="The dimension of the input space; expressions may use x1 to xN.",
			)


def seed_option() -> Callable:
	"""
	Adds the ``--seed`` option to a command.
	"""

	return auto_default_option(
			"--seed",
			type=click.INT,
			help="The seed for random sampling and the random kernel strategy.",
			show_default=True,
			)


def samples_option() -> Callable:
	"""
	Adds the ``--samples`` option to a command.
	"""

	return auto_default_option(
			"--samples",
			type=click.INT,
			help="The number of random points evaluated when sampling.",
			show_default=True,
			)


def kernel_strategy_option() -> Callable:
	"""
	Adds the ``--kernel-strategy`` option to a command.
	"""

	return auto_default_option(
			"--kernel-strategy",
			type=click.Choice(["first", "last", "random"], case_sensitive=False),
			help="How a vector is picked from the kernel when splitting a maximum.",
			show_default=True,
			)


def output_format_option(*formats: str) -> Callable:
	"""
	Adds the ``--output-format`` option to a command.

	:param formats: The supported formats. Defaults to ``text`` and ``json``.
	"""

	return auto_default_option(
			"-f",
			"--output-format",
			type=click.Choice(list(formats or ("text", "json")), case_sensitive=False),
			help="The format for the output.",
			show_default=True,
			)


def read_expression(text: str) -> str:
	"""
	Resolve an expression argument.

	``@path`` reads the expression from a file and ``-`` reads it from standard input.
	Anything else is the expression itself.

	:param text:
	"""

	if text == '-':
		return click.get_text_stream("stdin").read().strip()

	elif text.startswith('@'):
		path = PathPlus(text[1:])
		if not path.is_file():
			raise click.BadParameter(f"No such file {path.as_posix()!r}", param_hint="'EXPR'")
		return path.read_text().strip()

	return text


def load_config(command: str, expression: Optional[str] = None, **options: Any) -> CliConfig:
	"""
	Validate the options of a command.

	:param command: The name of the command.
	:param expression: The expression argument, before resolving ``@path`` and ``-``.
	:param options: Maps option names to values. ``dimension`` is required.
	"""

	return CliConfig.from_mapping(
			options,
			command=command,
			input=None if expression is None else read_expression(expression),
			)


def _error_kind(exc: BaseException) -> str:
	if isinstance(exc, click.UsageError):
		return "UsageError"
	return type(exc).__name__


@contextmanager
def handle_errors(output_format: Optional[str] = "text") -> Iterator[None]:
	"""
	Context manager which reports errors on standard error and exits with the matching code.

	Syntax errors, invalid values and usage errors exit with :data:`~.EXIT_USAGE`;
	invariant violations exit with :data:`~.EXIT_INVARIANT`.
	With ``output_format='json'`` the message is written as ``{"error": ..., "kind": ...}``.

	:param output_format:
	"""

	try:
		yield

	except InvariantViolation as e:
		report_error(e, output_format)
		sys.exit(EXIT_INVARIANT)

	except (SyntaxError, ValueError, click.UsageError) as e:
		report_error(e, output_format)
		sys.exit(EXIT_USAGE)


def report_error(exc: BaseException, output_format: Optional[str] = "text") -> None:
	"""
	Write the message of ``exc`` to standard error, as JSON when ``output_format`` is ``'json'``.

	:param exc:
	:param output_format:
	"""

	message = exc.format_message() if isinstance(exc, click.ClickException) else str(exc)

	if output_format == "json":
		click.echo(json.dumps({"error": message, "kind": _error_kind(exc)}), err=True)
	else:
		click.echo(Fore.RED(f"ERROR: {message}"), err=True)


@contextmanager
def echo_warnings() -> Iterator[None]:
	"""
	Context manager which writes warnings issued by the library to standard error,
	keeping standard output free for results.
	"""

	with warnings.catch_warnings(record=True) as caught:
		warnings.simplefilter("always")
		yield

	for warning in caught:
		click.echo(Fore.YELLOW(f"WARNING: {warning.message}"), err=True)


def echo_json(data: Mapping[str, Any]) -> None:
	"""
	Write ``data`` to standard output as indented JSON.

	:param data:
	"""

	click.echo(json.dumps(data, indent=2))


def echo_table(rows: Sequence[Sequence[Any]], headers: Sequence[str] = ()) -> None:
	"""
	Write ``rows`` to standard output as a plain text table.

	:param rows:
	:param headers:
	"""

	click.echo(tabulate(rows, headers=headers, tablefmt="simple"))


def parse_and_expand(text: str, n: int) -> Tuple[Any, LinComb]:
	"""
	Parse an expression and expand it to a linear combination of maxima.

	:param text:
	:param n:

	:returns: The expression tree and its expansion.
	"""

	# this package
	from pwl_reduce.expand import expand
	from pwl_reduce.parser import parse

	tree = parse(text, n)
	return tree, expand(tree)
