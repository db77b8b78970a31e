#!/usr/bin/env python
#
#  test_reduce.py
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
import warnings
from typing import List, Optional, Sequence

# 3rd party
import pytest

# this package
from pwl_reduce.core import AffineFunc, LinComb, MaxTerm, canonicalize, height
from pwl_reduce.linalg import KernelChooser, KernelVector
from pwl_reduce.reduce import (
		InvariantViolation,
		ProbeReport,
		Reducer,
		conjecture_probe,
		lifted_gradient_matrix,
		parse_strategies,
		reduce_lincomb,
		reduce_max,
		split,
		trace_to_dict,
		trace_to_dot
		)
from pwl_reduce.testing import random_constituents, random_point


def keyed_chooser(constituents: Sequence[AffineFunc], alpha: Sequence[int]):  # noqa: MAN002
	# Uses ``alpha`` for the full set of constituents, and the first basis vector below it.
	order = MaxTerm(constituents).constituents
	by_function = dict(zip(constituents, alpha))
	fixed = KernelVector(by_function[f] for f in order)

	def chooser(basis: Sequence[KernelVector]) -> Optional[KernelVector]:
		if not basis:
			return None
		if len(basis[0]) == len(order):
			return fixed
		return basis[0]

	return chooser


def test_lifted_gradient_matrix(five_constituents: List[AffineFunc]):
	g1, g2, g3, g4, g5 = five_constituents
	matrix = lifted_gradient_matrix([g1, g3])
	assert matrix.to_rows() == [[3, 2], [-4, 1], [1, 1]]

	with pytest.raises(ValueError, match="At least one constituent"):
		lifted_gradient_matrix([])

	with pytest.raises(ValueError, match="Dimension mismatch"):
		lifted_gradient_matrix([g1, AffineFunc((1, ))])


class TestSplit:

	def test_injected_alpha(self, five_constituents: List[AffineFunc]):
		g1, g2, g3, g4, g5 = five_constituents

		result = split(five_constituents, alpha={g1: 4, g2: 1, g3: -21, g4: 13, g5: 3})
		assert not result.is_trivial
		assert result.c == 58
		assert set(result.t) == {g1, g2, g4, g5}
		assert result.s == (g3, )

	def test_second_level(self, five_constituents: List[AffineFunc]):
		g1, g2, g3, g4, g5 = five_constituents

		result = split([g1, g2, g4, g5], alpha={g1: 9, g2: -10, g4: -11, g5: 12})
		assert result.c == 43
		assert set(result.t) == {g1, g5}
		assert set(result.s) == {g2, g4}

	def test_injected_sign_kept(self, five_constituents: List[AffineFunc]):
		g1, g2, g3, g4, g5 = five_constituents

		result = split(five_constituents, alpha={g1: -4, g2: -1, g3: 21, g4: -13, g5: -3})
		assert result.c == -58
		assert set(result.t) == {g1, g2, g4, g5}
		assert result.s == (g3, )

		# gcd is removed, the sign is not
		result = split([g1, g2, g4, g5], alpha={g1: 18, g2: -20, g4: -22, g5: 24})
		assert result.c == 43

	@pytest.mark.parametrize(
			"weights, expected_t",
			[
					pytest.param((1, -2, 1), "outer", id="positive_outer"),
					pytest.param((-1, 2, -1), "middle", id="negative_outer"),
					]
			)
	def test_zero_c_orientation(self, weights: Sequence[int], expected_t: str):
		left, middle, right = -AffineFunc((1, )), AffineFunc.zero(1), AffineFunc((1, ))
		result = split([left, middle, right], alpha=dict(zip((left, middle, right), weights)))

		assert result.c == 0
		assert result.alpha is not None
		assert result.alpha.as_ints() == (1, -2, 1)

		if expected_t == "outer":
			assert result.t == (left, right)
			assert result.s == (middle, )
		else:
			assert result.t == (middle, )
			assert result.s == (left, right)

	def test_not_in_kernel(self, five_constituents: List[AffineFunc]):
		with pytest.raises(InvariantViolation, match="not in the kernel"):
			split(five_constituents, alpha={f: 1 for f in five_constituents})

	def test_alpha_keys(self, five_constituents: List[AffineFunc]):
		with pytest.raises(ValueError, match="exactly one entry per constituent"):
			split(five_constituents, alpha={five_constituents[0]: 1})

	def test_trivial(self, five_constituents: List[AffineFunc]):
		g1, g2, g3, *_ = five_constituents
		result = split(MaxTerm([g1, g2, g3]))
		assert result.is_trivial
		assert result.s == ()
		assert set(result.t) == {g1, g2, g3}
		assert result.c is None

	def test_random(self, rng: random.Random):
		for _ in range(30):
			n = rng.randint(1, 3)
			constituents = random_constituents(rng, n, n + 2 + rng.randint(0, 2))
			result = split(constituents, KernelChooser("random", rng.randint(0, 1000)))

			assert result.s and result.t
			assert set(result.s) | set(result.t) == set(constituents)

			for _ in range(10):
				point = random_point(rng, n)
				assert max(f(point) for f in result.t) >= min(f(point) for f in result.s)


def test_five_constituent_tree(five_constituents: List[AffineFunc]):
	g1, g2, g3, g4, g5 = five_constituents
	chooser = keyed_chooser(five_constituents, (4, 1, -21, 13, 3))

	combination, trace = reduce_max(MaxTerm(five_constituents), chooser)

	assert combination == canonicalize(
			LinComb(2, [
					(-1, MaxTerm([g1, g5])),
					(1, MaxTerm([g1, g2, g5])),
					(1, MaxTerm([g1, g4, g5])),
					])
			)
	assert trace.depth() == 3
	assert len(trace.leaves()) == 3

	as_dict = trace_to_dict(trace, five_constituents)
	assert as_dict["label"] == "m_12345"
	assert as_dict["alpha"] == [4, 1, -21, 13, 3]
	assert as_dict['c'] == "58"

	child, = as_dict["children"]
	assert child["label"] == "m_1245"
	assert [leaf["label"] for leaf in child["children"]] == ["m_15", "m_125", "m_145"]
	assert [leaf["sign"] for leaf in child["children"]] == [-1, 1, 1]
	assert all(leaf["alpha"] is None for leaf in child["children"])

	dot = trace_to_dot(trace, five_constituents)
	assert dot.startswith("digraph trace {\n")
	assert dot.endswith("}\n")
	assert 'label="m_12345\\nalpha = (4, 1, -21, 13, 3)"' in dot
	for label in ("m_15", "m_125", "m_145"):
		assert f'label="{label}"' in dot
	assert dot.count(" -> ") == 4


def test_reduce_max_pruning():
	g = AffineFunc((1, 2), 0)
	term = MaxTerm([g + AffineFunc.const(2, k) for k in range(4)])

	combination, trace = reduce_max(term)
	assert combination == LinComb(2, [(1, MaxTerm([g + AffineFunc.const(2, 3)]))])
	assert trace.is_leaf
	assert len(trace.removed) == 3


def test_reduce_max_properties(rng: random.Random):
	for _ in range(25):
		n = rng.randint(1, 3)
		term = MaxTerm(random_constituents(rng, n, rng.randint(1, n + 4)))
		combination, _ = reduce_max(term, KernelChooser("random", rng.randint(0, 1000)))

		assert height(combination) <= n
		assert combination.has_integer_coefficients
		assert combination.constituents() <= set(term.constituents)

		for _ in range(10):
			point = random_point(rng, n)
			assert combination(point) == term(point)


def test_reduce_lincomb(rng: random.Random, relu_example: LinComb):
	# already reduced
	assert reduce_lincomb(relu_example) == relu_example

	for _ in range(10):
		n = rng.randint(1, 2)
		combination = LinComb(
				n,
				[(rng.randint(-3, 3), MaxTerm(random_constituents(rng, n, rng.randint(1, n + 3)))) for _ in range(3)],
				)
		reduced = reduce_lincomb(combination)
		assert height(reduced) <= n

		for _ in range(10):
			point = random_point(rng, n)
			assert reduced(point) == combination(point)


def test_reducer_memoises(five_constituents: List[AffineFunc]):
	reducer = Reducer()
	term = MaxTerm(five_constituents)
	first, _ = reducer.reduce_max(term)
	second, _ = reducer.reduce_max(term)
	assert first == second

	assert reducer.reduce_lincomb(LinComb.from_maxterm(term, 2)) == first.scale(2)


def test_parse_strategies():
	assert [c.name for c in parse_strategies("first,last,random:3")] == [
			"first",
			"last",
			"random:42",
			"random:43",
			"random:44",
			]
	assert [c.name for c in parse_strategies("random", seed=7)] == ["random:7"]
	assert [c.name for c in parse_strategies(" last , first ")] == ["last", "first"]


@pytest.mark.parametrize(
		"text, match",
		[
				pytest.param("first:2", "does not take a count", id="count"),
				pytest.param("random:x", "Invalid count", id="invalid_count"),
				pytest.param("random:0", "must be positive", id="zero_count"),
				pytest.param("middle", "Unknown kernel strategy 'middle'", id="unknown"),
				]
		)
def test_parse_strategies_errors(text: str, match: str):
	with pytest.raises(ValueError, match=match):
		parse_strategies(text)


def test_probe_report(relu_example: LinComb):
	report = ProbeReport({"first": relu_example, "last": relu_example.scale(2)})
	assert not report.identical
	assert report.distinct == 2

	as_dict = report.to_dict()
	assert as_dict["identical"] is False
	assert as_dict["distinct"] == 2
	assert as_dict["outputs"]["first"] == relu_example.to_dict()


def test_conjecture_probe(five_constituents: List[AffineFunc]):
	with pytest.raises(ValueError, match="At least two strategies"):
		conjecture_probe(MaxTerm(five_constituents), [KernelChooser()])

	# A one-dimensional kernel leaves no choice.
	term = MaxTerm(five_constituents[:4])
	report = conjecture_probe(term, parse_strategies("first,last,random:2"))
	assert report.identical
	assert list(report.outputs) == ["first", "last", "random:42", "random:43"]

	with warnings.catch_warnings(record=True) as caught:
		warnings.simplefilter("always")
		report = conjecture_probe(MaxTerm(five_constituents), parse_strategies("first,last,random:3"))

	assert report.identical is not bool(caught)
	for warning in caught:
		assert "different reductions" in str(warning.message)
