#!/usr/bin/env python
#
#  __init__.py
"""
Pytest fixtures and random instance generators for testing ``pwl_reduce``.

Enable with:

.. code-block:: python

	pytest_plugins = ("pwl_reduce.testing", )
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
import random
from fractions import Fraction
from typing import List, Tuple

# 3rd party
import pytest  # nodep

# this package
from pwl_reduce.core import AffineFunc, LinComb, MaxTerm, canonicalize
from pwl_reduce.expand import to_maxmin
from pwl_reduce.parser import Affine, ExprNode, Max, Min, Scale, Sum, make_scale, make_sum
from pwl_reduce.reduce import reduce_lincomb

__all__ = [
		"EXAMPLE_G",
		"EXAMPLE_G_HAT",
		"EXAMPLE_F",
		"EXAMPLE_F_HAT",
		"FIVE_CONSTITUENTS_TEXT",
		"RELU_EXAMPLE_TEXT",
		"five_functions",
		"relu_example_combination",
		"random_affine",
		"random_constituents",
		"random_point",
		"expression_size_bound",
		"random_expression",
		"random_reduced_lincomb",
		"random_homogeneous_lincomb",
		"rng",
		"five_constituents",
		"relu_example",
		"example_g",
		"example_g_hat",
		"example_f",
		"example_f_hat",
		]

#: A nested expression in two variables whose expansion has many large maxima.
EXAMPLE_G = "max(x1, x1 + x2, x2 + max(x1 + x2 - 7, x1 + 6*x2 + 4) + 3*min(4*x2, x1 - 9, x1 - x2))"

#: A reduced form of :data:`~.EXAMPLE_G`, with seven maxima of at most three constituents.
EXAMPLE_G_HAT = (
		"max(x1, x1 + 19*x2 + 4)"
		" - max(x1 + x2, 4*x1 + 4*x2 + 4, 4*x1 + 7*x2 - 23)"
		" - max(x1 + 19*x2 + 4, 4*x1 + 4*x2 + 4)"
		" + max(x1, x1 + x2, 4*x1 + 7*x2 - 23)"
		" - max(x1, x1 + 19*x2 + 4, 4*x1 + 7*x2 - 23)"
		" + max(x1 + x2, 4*x1 + 4*x2 + 4)"
		" + max(x1 + 19*x2 + 4, 4*x1 + 4*x2 + 4, 4*x1 + 7*x2 - 23)"
		)

#: A nested expression in two variables whose reduced form has five maxima.
EXAMPLE_F = (
		"max(6*x1 + 5*x2 - 3, 8*x2 - 2, -3*x1 - 5*x2 - 4, "
		"max(12*x1 - 4*x2 + 1, -7*x1 + 8*x2 + 12) + 3*x1 - 10, "
		"min(-3*x1 + 4*x2 - 5, 8*x1 + 2))"
		)

#: A reduced form of :data:`~.EXAMPLE_F`.
EXAMPLE_F_HAT = (
		"- max(-4*x1 + 8*x2 + 2, 15*x1 - 4*x2 - 9)"
		" + max(8*x2 - 2, -4*x1 + 8*x2 + 2, 6*x1 + 5*x2 - 3)"
		" + max(-4*x1 + 8*x2 + 2, -3*x1 - 5*x2 - 4, 15*x1 - 4*x2 - 9)"
		" + max(-4*x1 + 8*x2 + 2, 6*x1 + 5*x2 - 3, 15*x1 - 4*x2 - 9)"
		" - max(-4*x1 + 8*x2 + 2, 6*x1 + 5*x2 - 3)"
		)

#: The maximum of five affine functions in two variables, whose reduction has three maxima.
FIVE_CONSTITUENTS_TEXT = "max(3*x1 - 4*x2 + 1, -3*x1 - x2 - 2, 2*x1 + x2 - 1, 3*x1 + 2*x2 + 2, -2*x1 + 4*x2 + 3)"

#: A combination of three maxima with zero plus a constant, computed by a network of depth 2.
RELU_EXAMPLE_TEXT = "4*max(-x1 + 3*x2 + 2, 0) - 5*max(2*x1 - 3, 0) + 6*max(5*x2 + 1, 0) + 8"


def five_functions() -> List[AffineFunc]:
	"""
	Returns the five constituents of :data:`~.FIVE_CONSTITUENTS_TEXT`, in the order written.
	"""

	return [
			AffineFunc((3, -4), 1),
			AffineFunc((-3, -1), -2),
			AffineFunc((2, 1), -1),
			AffineFunc((3, 2), 2),
			AffineFunc((-2, 4), 3),
			]


def relu_example_combination() -> LinComb:
	"""
	Returns :data:`~.RELU_EXAMPLE_TEXT` as a (canonical) linear combination of four maxima.
	"""

	zero = AffineFunc.zero(2)

	return canonicalize(
			LinComb(
					2,
					[
							(4, MaxTerm([AffineFunc((-1, 3), 2), zero])),
							(-5, MaxTerm([AffineFunc((2, 0), -3), zero])),
							(6, MaxTerm([AffineFunc((0, 5), 1), zero])),
							(1, MaxTerm([AffineFunc.const(2, 8)])),
							]
					)
			)


def random_affine(
		rng: random.Random,
		n: int,
		low: int = -10,
		high: int = 10,
		homogeneous: bool = False,
		) -> AffineFunc:
	"""
	Returns an affine function with random integer gradient and constant in ``[low, high]``.

	:param rng:
	:param n:
	:param low:
	:param high:
	:param homogeneous: If :py:obj:`True` the constant is zero.
	"""

	gradient = [rng.randint(low, high) for _ in range(n)]
	constant = 0 if homogeneous else rng.randint(low, high)
	return AffineFunc(gradient, constant)


def random_constituents(rng: random.Random, n: int, k: int, **kwargs) -> List[AffineFunc]:
	"""
	Returns ``k`` distinct random affine functions.

	:param rng:
	:param n:
	:param k:
	:param kwargs: Passed to :func:`~.random_affine`.
	"""

	functions: List[AffineFunc] = []

	while len(functions) < k:
		candidate = random_affine(rng, n, **kwargs)
		if candidate not in functions:
			functions.append(candidate)

	return functions


def random_point(rng: random.Random, n: int, bound: int = 10, max_denominator: int = 20) -> Tuple[Fraction, ...]:
	"""
	Returns a random rational point in :math:`[-bound, bound]^n`.

	:param rng:
	:param n:
	:param bound:
	:param max_denominator:
	"""

	point = []
	for _ in range(n):
		denominator = rng.randint(1, max_denominator)
		point.append(Fraction(rng.randint(-bound * denominator, bound * denominator), denominator))

	return tuple(point)


def expression_size_bound(e: ExprNode) -> Tuple[int, int]:
	"""
	Returns an upper bound on the number of blocks, and on the largest block size,
	of the max-min form of ``e``.

	:param e:
	"""

	if isinstance(e, Affine):
		return 1, 1

	bounds = [expression_size_bound(arg) for arg in getattr(e, "args", ())]

	if isinstance(e, Max):
		return sum(b for b, _ in bounds), max(s for _, s in bounds)

	elif isinstance(e, Min):
		blocks = 1
		for b, _ in bounds:
			blocks *= b
		return blocks, sum(s for _, s in bounds)

	elif isinstance(e, Sum):
		blocks, size = 1, 1
		for b, s in bounds:
			blocks *= b
			size *= s
		return blocks, size

	elif isinstance(e, Scale):
		blocks, size = expression_size_bound(e.child)
		if e.coeff < 0:
			return size**blocks, blocks
		return blocks, size

	raise TypeError(f"Unsupported expression node {type(e).__name__!r}")


def _random_tree(
		rng: random.Random,
		n: int,
		depth: int,
		leaf_probability: float,
		root: bool = False,
		) -> ExprNode:
	if depth == 0 or (not root and rng.random() < leaf_probability):
		return Affine(random_affine(rng, n, -9, 9))

	kind = rng.choice(["max", "min", "sum", "scale"])

	if kind == "scale":
		coeff = rng.choice([c for c in range(-9, 10) if c])
		return make_scale(coeff, _random_tree(rng, n, depth - 1, leaf_probability))

	left = _random_tree(rng, n, depth - 1, leaf_probability)
	right = _random_tree(rng, n, depth - 1, leaf_probability)

	if kind == "max":
		return Max([left, right])
	elif kind == "min":
		return Min([left, right])
	else:
		return make_sum([left, right])


def random_expression(
		rng: random.Random,
		n: int,
		depth: int = 4,
		leaf_probability: float = 0.35,
		max_blocks_size: int = 8,
		max_measure: int = 6,
		min_measure: int = 1,
		) -> ExprNode:
	"""
	Returns a random nested expression with integer data in ``[-9, 9]``.

	The root is never a leaf. Expressions are drawn until one is small enough to expand quickly,
	according to :func:`~.expression_size_bound`, and its max-min form has a measure of at least ``min_measure``,
	so that expanding it needs inclusion-exclusion.

	:param rng:
	:param n:
	:param depth: The maximum nesting depth.
	:param leaf_probability: The probability that a node above the maximum depth is a leaf.
	:param max_blocks_size: The maximum of ``blocks * size``.
	:param max_measure: The maximum of ``blocks * (size - 1)``.
	:param min_measure: The minimum :attr:`~.MaxMinForm.measure` of the max-min form.
	"""

	while True:
		expr = _random_tree(rng, n, depth, leaf_probability, root=True)
		blocks, size = expression_size_bound(expr)
		if blocks * size > max_blocks_size or blocks * (size - 1) > max_measure:
			continue
		if to_maxmin(expr).measure >= min_measure:
			return expr


def random_reduced_lincomb(rng: random.Random, n: int, terms: int = 3) -> LinComb:
	"""
	Returns a random reduced linear combination, whose maxima have at most ``n + 1`` constituents.

	:param rng:
	:param n:
	:param terms: The number of maxima before reduction.
	"""

	combination = LinComb(
			n,
			[(rng.choice([-3, -2, -1, 1, 2, 3]), MaxTerm(random_constituents(rng, n, rng.randint(1, n + 2))))
				for _ in range(terms)],
			)

	return reduce_lincomb(combination)


def random_homogeneous_lincomb(rng: random.Random, n: int = 2, terms: int = 3) -> LinComb:
	"""
	Returns a random linear combination of maxima of linear functions.

	:param rng:
	:param n:
	:param terms:
	"""

	return canonicalize(
			LinComb(
					n,
					[(
							rng.choice([-3, -2, -1, 1, 2, 3]),
							MaxTerm(random_constituents(rng, n, rng.randint(1, 4), low=-5, high=5, homogeneous=True))
							) for _ in range(terms)],
					)
			)


@pytest.fixture()
def rng() -> random.Random:
	"""
	Pytest fixture providing a :class:`random.Random` seeded with 42.
	"""

	return random.Random(42)


@pytest.fixture()
def five_constituents() -> List[AffineFunc]:
	"""
	Pytest fixture returning the five constituents of :data:`~.FIVE_CONSTITUENTS_TEXT`, in the order written.
	"""

	return five_functions()


@pytest.fixture()
def relu_example() -> LinComb:  # noqa: D103
	return relu_example_combination()


@pytest.fixture()
def example_g() -> str:  # noqa: D103
	return EXAMPLE_G


@pytest.fixture()
def example_g_hat() -> str:  # noqa: D103
	return EXAMPLE_G_HAT


@pytest.fixture()
def example_f() -> str:  # noqa: D103
	return EXAMPLE_F


@pytest.fixture()
def example_f_hat() -> str:  # noqa: D103
	return EXAMPLE_F_HAT
