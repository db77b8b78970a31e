#!/usr/bin/env python
#
#  linalg.py
"""
Exact rational linear algebra: reduced row echelon form and kernel bases.
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
import math
import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

# 3rd party
import attr
from typing_extensions import Literal

# this package
from pwl_reduce.core import DimensionError
from pwl_reduce.utils import RationalLike, as_rational, dot, lcm_of_denominators

__all__ = [
		"RatMatrix",
		"KernelVector",
		"KernelStrategy",
		"KernelChooser",
		"rref",
		"kernel_basis",
		"pick_kernel_vector",
		"normalize_vector",
		]

#: The names of the strategies for choosing a vector from a kernel basis.
KernelStrategy = Literal["first", "last", "random"]


def _to_entries(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
	return tuple(map(as_rational, values))


@attr.s(frozen=True, slots=True)
class RatMatrix:
	"""
	A dense matrix of rationals, stored row-major.
	"""

	rows: int = attr.ib(converter=int)
	cols: int = attr.ib(converter=int)
	entries: Tuple[Fraction, ...] = attr.ib(converter=_to_entries)

	@entries.validator
	def _check_entries(self, attribute: "attr.Attribute", value: Tuple[Fraction, ...]) -> None:
		if len(value) != self.rows * self.cols:
			raise ValueError(f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, got {len(value)}")

	@classmethod
	def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RatMatrix":
		"""
		Construct a matrix from a sequence of rows.

		:param rows:
		"""

		n_cols = len(rows[0]) if rows else 0

		for row in rows:
			if len(row) != n_cols:
				raise ValueError("All rows must have the same length")

		return cls(len(rows), n_cols, [value for row in rows for value in row])

	@classmethod
	def from_columns(cls, columns: Sequence[Sequence[RationalLike]]) -> "RatMatrix":
		"""
		Construct a matrix from a sequence of columns.

		:param columns:
		"""

		if not columns:
			return cls(0, 0, ())

		return cls.from_rows(list(zip(*columns)))

	def __getitem__(self, index: Tuple[int, int]) -> Fraction:
		row, col = index
		return self.entries[row * self.cols + col]

	def row(self, index: int) -> Tuple[Fraction, ...]:
		"""
		Returns the given row.

		:param index:
		"""

		return self.entries[index * self.cols:(index + 1) * self.cols]

	def to_rows(self) -> List[List[Fraction]]:
		"""
		Returns the matrix as a list of (mutable) rows.
		"""

		return [list(self.row(i)) for i in range(self.rows)]

	def __matmul__(self, vector: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
		if len(vector) != self.cols:
			raise DimensionError(self.cols, len(vector), "vector")

		vector = _to_entries(vector)
		return tuple(dot(self.row(i), vector) for i in range(self.rows))


def normalize_vector(values: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
	"""
	Scale a non-zero vector to integers with gcd 1 and a positive first non-zero entry.

	:param values:
	"""

	values = _to_entries(values)
	if not any(values):
		raise ValueError("Cannot normalise the zero vector")

	multiplier = lcm_of_denominators(values)
	integers = [int(v * multiplier) for v in values]

	divisor = 0
	for value in integers:
		divisor = math.gcd(divisor, value)

	leading = next(v for v in integers if v)
	if leading < 0:
		divisor = -divisor

	return tuple(Fraction(v // divisor) for v in integers)


@attr.s(frozen=True, slots=True)
class KernelVector:
	"""
	A normalised non-zero element of the kernel of a matrix.

	Entries are integers with gcd 1 and the first non-zero entry is positive.
	"""

	entries: Tuple[Fraction, ...] = attr.ib(converter=normalize_vector)

	def __len__(self) -> int:
		return len(self.entries)

	def __iter__(self):  # noqa: MAN002
		return iter(self.entries)

	def __getitem__(self, index: int) -> Fraction:
		return self.entries[index]

	def as_ints(self) -> Tuple[int, ...]:
		"""
		Returns the entries as Python integers.
		"""

		return tuple(int(v) for v in self.entries)


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int]]:
	"""
	Returns the reduced row echelon form of ``m`` and the list of pivot columns.

	The first non-zero entry of each column is used as the pivot.

	:param m:
	"""

	rows = m.to_rows()
	pivots: List[int] = []
	pivot_row = 0

	for col in range(m.cols):
		if pivot_row == m.rows:
			break

		for i in range(pivot_row, m.rows):
			if rows[i][col] != 0:
				break
		else:
			continue

		if i != pivot_row:
			rows[pivot_row], rows[i] = rows[i], rows[pivot_row]

		pivot = rows[pivot_row][col]
		rows[pivot_row] = [value / pivot for value in rows[pivot_row]]

		for r in range(m.rows):
			factor = rows[r][col]
			if r != pivot_row and factor != 0:
				rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]

		pivots.append(col)
		pivot_row += 1

	return RatMatrix(m.rows, m.cols, [value for row in rows for value in row]), pivots


def kernel_basis(m: RatMatrix) -> List[KernelVector]:
	"""
	Returns a basis of the kernel (null space) of ``m``.

	There is one basis vector per free column of the reduced row echelon form,
	obtained by setting that free variable to 1 and the others to 0.
	The list is empty if and only if the kernel is trivial.

	:param m:
	"""

	reduced, pivots = rref(m)
	free = [col for col in range(m.cols) if col not in pivots]
	basis = []

	for free_col in free:
		vector = [Fraction(0)] * m.cols
		vector[free_col] = Fraction(1)

		for row, pivot_col in enumerate(pivots):
			vector[pivot_col] = -reduced[row, free_col]

		basis.append(KernelVector(vector))

	return basis


def pick_kernel_vector(
		basis: Sequence[KernelVector],
		strategy: KernelStrategy = "first",
		rng: Optional[random.Random] = None,
		) -> Optional[KernelVector]:
	"""
	Choose a non-zero vector from the span of ``basis``.

	:param basis:
	:param strategy: ``'first'`` and ``'last'`` pick that basis vector.
		``'random'`` picks a random integer combination of the basis vectors.
	:param rng: The random number generator for the ``'random'`` strategy.

	:returns: :py:obj:`None` if and only if ``basis`` is empty.
	"""

	if not basis:
		return None
	elif strategy == "first" or len(basis) == 1:
		return basis[0]
	elif strategy == "last":
		return basis[-1]
	elif strategy == "random":
		if rng is None:
			rng = random.Random()

		while True:
			weights = [rng.randint(-3, 3) for _ in basis]
			if any(weights):
				break

		return KernelVector(sum(w * vector[i] for w, vector in zip(weights, basis)) for i in range(len(basis[0])))
	else:
		raise ValueError(f"Unknown kernel strategy {strategy!r}")


@attr.s(slots=True)
class KernelChooser:
	"""
	Callable which picks a vector from a kernel basis according to a fixed strategy.

	Each chooser owns its random number generator, so a ``'random'`` chooser
	built with the same seed makes the same sequence of choices.
	"""

	strategy: KernelStrategy = attr.ib(default="first")
	seed: Optional[int] = attr.ib(default=None)
	_rng: random.Random = attr.ib(init=False)

	@strategy.validator
	def _check_strategy(self, attribute: "attr.Attribute", value: str) -> None:
		if value not in {"first", "last", "random"}:
			raise ValueError(f"Unknown kernel strategy {value!r}")

	def __attrs_post_init__(self) -> None:
		self._rng = random.Random(self.seed)

	@property
	def name(self) -> str:
		"""
		A short description of the strategy, such as ``'random:42'``.
		"""

		if self.strategy == "random":
			return f"random:{self.seed}"
		return self.strategy

	def __call__(self, basis: Sequence[KernelVector]) -> Optional[KernelVector]:
		return pick_kernel_vector(basis, self.strategy, self._rng)
