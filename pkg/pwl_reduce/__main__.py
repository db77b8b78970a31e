#!/usr/bin/env python
#
#  __main__.py
"""
Entry point for running ``pwl_reduce`` from the command line.
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
from consolekit.utils import import_commands

# this package
import pwl_reduce.cli.commands
from pwl_reduce.cli import cli

__all__ = ["main"]

# Load commands
import_commands(pwl_reduce.cli.commands, entry_point="pwl_reduce.command")


def main():  # noqa: D103,MAN002
	return cli(obj={})


if __name__ == "__main__":
	sys.exit(main())
