#!/usr/bin/env python
#
#  configuration.py
r"""
Run settings, declared as :class:`~configconfig.configvar.ConfigVar`\s.

Settings come from command line options only; no configuration file is read.
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
from typing import Any, Dict, List, Mapping, Optional

# 3rd party
import attr
from configconfig.configvar import ConfigVar
from configconfig.metaclass import ConfigVarMeta
from typing_extensions import Literal

__all__ = [
		"dimension",
		"seed",
		"samples",
		"kernel_strategy",
		"output_format",
		"all_values",
		"parse_settings",
		"CliConfig",
		]


class dimension(ConfigVar):
	"""
	The dimension ``n`` of the input space. Variables ``x1`` to ``xn`` may be used in expressions.

	Example:

	.. code-block:: bash

		pwl-reduce expand -n 2 "max(x1, x2)"
	"""

	dtype = int
	required = True
	category: str = "run"

	@classmethod
	def validator(cls, value: int) -> int:  # noqa: D102
		if int(value) < 1:
			raise ValueError("'dimension' must be a positive integer")
		return int(value)


class seed(ConfigVar):
	"""
	The seed for random sampling and for the ``random`` kernel strategy.
	"""

	dtype = int
	default = 42
	category: str = "run"


class samples(ConfigVar):
	"""
	The number of random points evaluated when checking equivalence by sampling.
	"""

	dtype = int
	default = 10000
	category: str = "run"

	@classmethod
	def validator(cls, value: int) -> int:  # noqa: D102
		if int(value) < 1:
			raise ValueError("'samples' must be a positive integer")
		return int(value)


class kernel_strategy(ConfigVar):
	"""
	How a vector is picked from the kernel when splitting a set of constituents.

	* ``first`` -- the basis vector for the first free variable.
	* ``last`` -- the basis vector for the last free variable.
	* ``random`` -- a seeded random integer combination of the basis vectors.
	"""

	dtype = Literal["first", "last", "random"]
	default = "first"
	category: str = "run"

	@classmethod
	def validator(cls, value: str) -> str:  # noqa: D102
		value = str(value).lower()
		if value not in {"first", "last", "random"}:
			raise ValueError(f"Unknown kernel strategy {value!r}")
		return value


class output_format(ConfigVar):
	"""
	The format for command output.
	"""

	dtype = Literal["text", "json", "dot"]
	default = "text"
	category: str = "run"

	@classmethod
	def validator(cls, value: str) -> str:  # noqa: D102
		value = str(value).lower()
		if value not in {"text", "json", "dot"}:
			raise ValueError(f"Unknown output format {value!r}")
		return value


all_values: List[ConfigVarMeta] = [dimension, seed, samples, kernel_strategy, output_format]


def parse_settings(raw: Mapping[str, Any]) -> Dict[str, Any]:
	"""
	Validate ``raw`` against every setting, filling in defaults.

	Keys whose value is :py:obj:`None` are treated as missing.

	:param raw:

	:raises ValueError: if a value is invalid, or ``dimension`` is missing.
	"""

	cleaned = {key: value for key, value in raw.items() if value is not None}
	return {var.__name__: var.get(cleaned) for var in all_values}


@attr.s(frozen=True, slots=True)
class CliConfig:
	"""
	The validated settings for a single command line invocation.
	"""

	#: The name of the subcommand.
	command: str = attr.ib()

	#: The dimension of the input space.
	n: int = attr.ib()

	#: The expression text (after resolving ``@path`` and ``-``), if the command takes one.
	input: Optional[str] = attr.ib(default=None)  # noqa: A003  # pylint: disable=redefined-builtin

	seed: int = attr.ib(default=42)
	samples: int = attr.ib(default=10000)
	kernel_strategy: str = attr.ib(default="first")
	output_format: str = attr.ib(default="text")

	@classmethod
	def from_mapping(cls, raw: Mapping[str, Any], command: str, input: Optional[str] = None) -> "CliConfig":  # noqa: A002  # pylint: disable=redefined-builtin
		"""
		Construct a :class:`~.CliConfig` from unvalidated settings.

		:param raw: Maps setting names (see :data:`~.all_values`) to values.
		:param command: The name of the subcommand.
		:param input: The expression text.
		"""

		settings = parse_settings(raw)

		return cls(
				command=command,
				n=settings["dimension"],
				input=input,
				seed=settings["seed"],
				samples=settings["samples"],
				kernel_strategy=settings["kernel_strategy"],
				output_format=settings["output_format"],
				)
