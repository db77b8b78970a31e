#!/usr/bin/env python
#
#  test_linalg.py
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
import random
from fractions import Fraction

# 3rd party
import pytest

# this package
from pwl_reduce.core import DimensionError
from pwl_reduce.linalg import (
		KernelChooser,
		KernelVector,
		RatMatrix,
		kernel_basis,
		normalize_vector,
		pick_kernel_vector,
		rref
		)


def test_matrix_construction():
	m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
	assert (m.rows, m.cols) == (2, 3)
	assert m[1, 0] == 4
	assert m.row(0) == (1, 2, 3)
	assert RatMatrix.from_columns([[1, 4], [2, 5], [3, 6]]) == m
	assert m.to_rows() == [[1, 2, 3], [4, 5, 6]]

	with pytest.raises(ValueError, match="same length"):
		RatMatrix.from_rows([[1, 2], [3]])

	with pytest.raises(ValueError, match="Expected 4 entries"):
		RatMatrix(2, 2, [1, 2, 3])


def test_matmul():
	m = RatMatrix.from_rows([[1, 2], [3, 4]])
	assert m @ (1, "1/2") == (2, 5)

	with pytest.raises(DimensionError):
		m @ (1, 2, 3)


def test_rref():
	m = RatMatrix.from_rows([[2, 4, 2], [1, 2, 3]])
	reduced, pivots = rref(m)
	assert pivots == [0, 2]
	assert reduced.to_rows() == [[1, 2, 0], [0, 0, 1]]


@pytest.mark.parametrize(
		"values, expected",
		[
				((2, 4, -6), (1, 2, -3)),
				((-2, 4), (1, -2)),
				((0, "-1/2", "1/3"), (0, 3, -2)),
				]
		)
def test_normalize_vector(values, expected):
	assert normalize_vector(values) == tuple(map(Fraction, expected))


def test_normalize_zero_vector():
	with pytest.raises(ValueError, match="zero vector"):
		normalize_vector((0, 0))


def test_kernel_vector():
	v = KernelVector((-3, 6, 0))
	assert v.as_ints() == (1, -2, 0)
	assert len(v) == 3
	assert list(v) == [1, -2, 0]
	assert v[1] == -2


def test_kernel_basis():
	# columns (1, 1), (2, 1), (3, 1): the lifted gradients of x, 2x, 3x
	m = RatMatrix.from_columns([(1, 1), (2, 1), (3, 1)])
	basis = kernel_basis(m)
	assert basis == [KernelVector((1, -2, 1))]
	assert m @ basis[0].entries == (0, 0)


def test_kernel_basis_trivial():
	assert kernel_basis(RatMatrix.from_rows([[1, 0], [0, 1]])) == []


def test_kernel_basis_dimension(rng: random.Random):
	for _ in range(20):
		rows = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(3)]
		m = RatMatrix.from_rows(rows)
		_, pivots = rref(m)
		basis = kernel_basis(m)
		assert len(basis) == 6 - len(pivots)
		for vector in basis:
			assert not any(m @ vector.entries)


def test_pick_kernel_vector():
	basis = [KernelVector((1, 0, -1)), KernelVector((0, 1, -1))]
	assert pick_kernel_vector([]) is None
	assert pick_kernel_vector(basis, "first") == basis[0]
	assert pick_kernel_vector(basis, "last") == basis[1]

	chosen = pick_kernel_vector(basis, "random", random.Random(1))
	assert chosen is not None
	assert chosen[2] == -(chosen[0] + chosen[1])

	with pytest.raises(ValueError, match="Unknown kernel strategy"):
		pick_kernel_vector(basis, "middle")  # type: ignore[arg-type]


def test_kernel_chooser():
	basis = [KernelVector((1, 0, -1)), KernelVector((0, 1, -1))]

	assert KernelChooser().name == "first"
	assert KernelChooser("last").name == "last"
	assert KernelChooser("random", 7).name == "random:7"

	first = [KernelChooser("random", 7)(basis) for _ in range(3)]
	second = [KernelChooser("random", 7)(basis) for _ in range(3)]
	assert first == second

	with pytest.raises(ValueError, match="Unknown kernel strategy"):
		KernelChooser("middle")  # type: ignore[arg-type]


def test_rref_examples():
	identity = RatMatrix.from_rows([[1, 0], [0, 1]])
	assert rref(identity) == (identity, [0, 1])

	reduced, pivots = rref(RatMatrix.from_rows([[1, 2], [2, 4]]))
	assert reduced.to_rows() == [[1, 2], [0, 0]]
	assert pivots == [0]


def test_rref_idempotent(rng: random.Random):
	for _ in range(10):
		m = RatMatrix.from_rows([[rng.randint(-4, 4) for _ in range(5)] for _ in range(3)])
		reduced, pivots = rref(m)
		assert rref(reduced) == (reduced, pivots)


def test_lifted_gradients_of_five_functions(five_constituents):
	m = RatMatrix.from_columns([(*f.gradient, 1) for f in five_constituents])
	_, pivots = rref(m)
	assert len(pivots) == 3

	basis = kernel_basis(m)
	assert len(basis) == 2
	assert m @ (4, 1, -21, 13, 3) == (0, 0, 0)

	# the same choice every time
	assert kernel_basis(m) == basis
	for vector in basis:
		assert not any(m @ vector.entries)


def test_kernel_of_parallel_functions():
	# g and g + 1 have the same gradient
	m = RatMatrix.from_columns([(2, -1, 1), (2, -1, 1)])
	assert kernel_basis(m) == [KernelVector((1, -1))]


def test_wide_matrices_have_a_kernel(rng: random.Random):
	for n in (1, 2, 3):
		columns = [[rng.randint(-10, 10) for _ in range(n)] + [1] for _ in range(n + 2)]
		assert kernel_basis(RatMatrix.from_columns(columns))
