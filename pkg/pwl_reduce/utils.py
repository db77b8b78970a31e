#!/usr/bin/env python
#
#  utils.py
"""
General utility functions for exact rational arithmetic.
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
import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, TypeVar, Union

__all__ = [
		"RationalLike",
		"as_rational",
		"format_rational",
		"parse_rational_list",
		"nonempty_proper_subsets",
		"lcm_of_denominators",
		"dot",
		]

_T = TypeVar("_T")

#: Types which may be converted exactly to a :class:`fractions.Fraction`.
RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
	"""
	Convert ``value`` to a :class:`fractions.Fraction`, exactly.

	Strings may be integers (``'3'``), fractions (``'-3/4'``) or decimals (``'0.5'``).

	:param value:

	:raises TypeError: if ``value`` is a :class:`float` or :class:`bool`.
		Binary floating point values are never silently accepted.
	:raises ValueError: if ``value`` is a string which is not a valid rational.
	"""

	if isinstance(value, Fraction):
		return value
	elif isinstance(value, bool) or isinstance(value, float):
		raise TypeError(f"Expected an exact rational, got {value!r}")
	elif isinstance(value, int):
		return Fraction(value)
	elif isinstance(value, str):
		try:
			return Fraction(value.strip())
		except ZeroDivisionError:
			raise ValueError(f"Invalid rational {value!r}: division by zero") from None
	else:
		raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
	"""
	Format a rational as ``'p'`` or ``'p/q'``.

	:param value:
	"""

	value = as_rational(value)

	if value.denominator == 1:
		return str(value.numerator)
	else:
		return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
	"""
	Parse a comma-separated list of rationals, such as ``'1/2,3,-0.25'``.

	:param text:
	"""

	if not text.strip():
		return ()

	return tuple(as_rational(part) for part in text.split(','))


def nonempty_proper_subsets(items: Sequence[_T]) -> Iterator[Tuple[_T, ...]]:
	"""
	Returns an iterator over the non-empty proper subsets of ``items``.

	Subsets are produced in order of increasing size,
	and lexicographically by position within each size.

	:param items:
	"""

	for size in range(1, len(items)):
		yield from itertools.combinations(items, size)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
	"""
	Returns the least common multiple of the denominators of ``values``.

	:param values:
	"""

	result = 1
	for value in values:
		denominator = as_rational(value).denominator
		result = result * denominator // math.gcd(result, denominator)

	return result


def dot(left: Sequence[Fraction], right: Sequence[Fraction]) -> Fraction:
	"""
	The exact inner product of two equal-length vectors.

	:param left:
	:param right:
	"""

	return sum((a * b for a, b in zip(left, right) if a), Fraction(0))
