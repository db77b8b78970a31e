#!/usr/bin/env python
#
#  verify.py
"""
Equivalence checks between piecewise linear functions.

Three oracles are provided:

* :func:`~.equiv_sample` compares values at seeded random rational points (any dimension).
* :func:`~.equiv_1d` decides equality exactly in one dimension using breakpoints.
* :func:`~.equiv_homogeneous` decides equality of positively homogeneous combinations
  through Minkowski sums of the corresponding polytopes.
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
import random
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

# 3rd party
import attr
from typing_extensions import Literal, Protocol, runtime_checkable

# this package
from pwl_reduce.core import DimensionError, LinComb, MaxTerm
from pwl_reduce.polytope import (
		NotHomogeneousError,
		Point,
		VPolytope,
		minkowski,
		polytope_equal,
		sample_directions,
		scale,
		support,
		tau
		)
from pwl_reduce.utils import RationalLike, format_rational, lcm_of_denominators

__all__ = [
		"Evaluable",
		"Verdict",
		"Method",
		"Witness",
		"EquivReport",
		"sample_points",
		"equiv_sample",
		"equiv_1d",
		"equiv_homogeneous",
		"equiv_auto",
		]

logger = logging.getLogger(__name__)

Verdict = Literal["equal", "not-equal", "probably-equal"]
Method = Literal["sampling", "breakpoints-1d", "polytope-homogeneous"]


@runtime_checkable
class Evaluable(Protocol):
	"""
	:class:`typing.Protocol` for objects which can be evaluated exactly at a point of :math:`\\mathbb{R}^n`.

	This includes :class:`~.LinComb`, :class:`~.MaxTerm`, expression trees and ReLU networks.
	"""

	@property
	def n(self) -> int: ...  # pragma: no cover

	def __call__(self, x: Sequence[RationalLike]) -> Fraction: ...  # pragma: no cover


@attr.s(frozen=True, slots=True)
class Witness:
	"""
	A point at which two functions differ.
	"""

	point: Point = attr.ib(converter=tuple)
	left: Fraction = attr.ib()
	right: Fraction = attr.ib()

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the witness.
		"""

		return {
				"point": [format_rational(c) for c in self.point],
				"left": format_rational(self.left),
				"right": format_rational(self.right),
				}


@attr.s(frozen=True, slots=True)
class EquivReport:
	"""
	The outcome of an equivalence check.

	A ``'not-equal'`` verdict always carries a :class:`~.Witness`.
	"""

	verdict: Verdict = attr.ib()
	method: Method = attr.ib()

	#: The number of points evaluated.
	samples: int = attr.ib(default=0)

	#: The random seed, for the sampling method.
	seed: Optional[int] = attr.ib(default=None)

	witness: Optional[Witness] = attr.ib(default=None)

	@witness.validator
	def _check_witness(self, attribute: "attr.Attribute", value: Optional[Witness]) -> None:
		if self.verdict == "not-equal" and value is None:
			raise ValueError("A 'not-equal' verdict requires a witness")

	@property
	def equal(self) -> bool:
		"""
		Whether the verdict is ``'equal'`` or ``'probably-equal'``.
		"""

		return self.verdict != "not-equal"

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the report.
		"""

		return {
				"verdict": self.verdict,
				"method": self.method,
				"samples": self.samples,
				"seed": self.seed,
				"witness": None if self.witness is None else self.witness.to_dict(),
				}


def _check_dimensions(a: Evaluable, b: Evaluable) -> int:
	if a.n != b.n:
		raise DimensionError(a.n, b.n, "function")
	return a.n


def sample_points(n: int, samples: int, seed: int = 42) -> Iterator[Point]:
	"""
	Generate seeded random rational points in boxes of increasing size.

	The ``i``-th point lies in :math:`[-2^k, 2^k]^n` with ``k = i % 10 + 1``,
	with coordinates whose denominators are drawn from 1 to 100.

	:param n:
	:param samples:
	:param seed:
	"""

	rng = random.Random(seed)

	for i in range(samples):
		bound = 2**(i % 10 + 1)
		point = []
		for _ in range(n):
			denominator = rng.randint(1, 100)
			point.append(Fraction(rng.randint(-bound * denominator, bound * denominator), denominator))
		yield tuple(point)


def equiv_sample(a: Evaluable, b: Evaluable, samples: int = 10000, seed: int = 42) -> EquivReport:
	"""
	Compare two functions at seeded random rational points.

	The verdict is never ``'equal'``, only ``'probably-equal'`` or ``'not-equal'``.

	:param a:
	:param b:
	:param samples: The number of points.
	:param seed:
	"""

	if samples < 1:
		raise ValueError("'samples' must be a positive integer")

	n = _check_dimensions(a, b)

	for point in sample_points(n, samples, seed):
		left, right = a(point), b(point)
		if left != right:
			logger.info("Functions differ at %s", point)
			return EquivReport("not-equal", "sampling", samples, seed, Witness(point, left, right))

	return EquivReport("probably-equal", "sampling", samples, seed)


def _as_lincomb(c: Union[LinComb, MaxTerm]) -> LinComb:
	if isinstance(c, MaxTerm):
		return LinComb.from_maxterm(c)
	return c


def _breakpoints(c: LinComb) -> List[Fraction]:
	functions = sorted(c.constituents())
	points = set()

	for i, f in enumerate(functions):
		for g in functions[i + 1:]:
			slope = f.gradient[0] - g.gradient[0]
			if slope:
				points.add((g.constant - f.constant) / slope)

	return sorted(points)


def equiv_1d(a: Union[LinComb, MaxTerm], b: Union[LinComb, MaxTerm]) -> EquivReport:
	"""
	Decide exactly whether two one-dimensional combinations are equal.

	Both sides are compared at every breakpoint (intersection of two constituents),
	at the midpoints between consecutive breakpoints, and one unit beyond the outermost breakpoints.

	:param a:
	:param b:
	"""

	a, b = _as_lincomb(a), _as_lincomb(b)
	n = _check_dimensions(a, b)
	if n != 1:
		raise DimensionError(1, n, "combination")

	breakpoints = _breakpoints(a + b)

	if breakpoints:
		points = [breakpoints[0] - 1, *breakpoints, breakpoints[-1] + 1]
		points.extend((u + v) / 2 for u, v in zip(breakpoints, breakpoints[1:]))
	else:
		points = [Fraction(0), Fraction(1)]

	for x in sorted(points):
		left, right = a((x, )), b((x, ))
		if left != right:
			return EquivReport("not-equal", "breakpoints-1d", len(points), witness=Witness((x, ), left, right))

	return EquivReport("equal", "breakpoints-1d", len(points))


def _check_homogeneous(c: LinComb) -> None:
	for _, term in c.terms:
		for f in term:
			if not f.is_linear:
				raise NotHomogeneousError(f)


def _weighted_sum(n: int, parts: Sequence[Tuple[Fraction, MaxTerm]]) -> VPolytope:
	result = VPolytope(n, [(0, ) * n])
	for weight, term in parts:
		result = minkowski(result, scale(tau(term), weight))
	return result


def _edge_normals(p: VPolytope) -> Iterator[Point]:
	if p.n != 2 or len(p.points) < 2:
		return

	for u, v in zip(p.points, p.points[1:] + p.points[:1]):
		dx, dy = v[0] - u[0], v[1] - u[1]
		yield dy, -dx
		yield -dy, dx


def equiv_homogeneous(a: Union[LinComb, MaxTerm], b: Union[LinComb, MaxTerm]) -> EquivReport:
	"""
	Decide whether two positively homogeneous combinations are equal, by comparing polytopes.

	Writing each side as a difference of its positive and negative parts,
	:math:`A^+ - A^- = B^+ - B^-` exactly when :math:`A^+ + B^- = B^+ + A^-`,
	which is an equality of Minkowski sums.

	The verdict is exact for ``n <= 2``, and ``'probably-equal'`` at best otherwise.

	:param a:
	:param b:

	:raises NotHomogeneousError: if any constituent has a non-zero constant.
	"""

	a, b = _as_lincomb(a), _as_lincomb(b)
	n = _check_dimensions(a, b)
	_check_homogeneous(a)
	_check_homogeneous(b)

	multiplier = lcm_of_denominators(coeff for coeff, _ in a.terms + b.terms)
	left_parts, right_parts = [], []

	for coeff, term in a.terms:
		(left_parts if coeff > 0 else right_parts).append((abs(coeff) * multiplier, term))
	for coeff, term in b.terms:
		(right_parts if coeff > 0 else left_parts).append((abs(coeff) * multiplier, term))

	left = _weighted_sum(n, left_parts)
	right = _weighted_sum(n, right_parts)
	logger.debug("Comparing polytopes with %d and %d generators", len(left), len(right))

	if polytope_equal(left, right):
		return EquivReport("equal" if n <= 2 else "probably-equal", "polytope-homogeneous")

	candidates = [*_edge_normals(left), *_edge_normals(right), *sample_directions(n)]

	for d in candidates:
		if support(left, d) != support(right, d):
			return EquivReport(
					"not-equal",
					"polytope-homogeneous",
					witness=Witness(d, a(d), b(d)),
					)

	raise RuntimeError("Polytopes differ but no separating direction was found")  # pragma: no cover


def equiv_auto(
		a: Evaluable,
		b: Evaluable,
		samples: int = 10000,
		seed: int = 42,
		) -> EquivReport:
	"""
	Use the strongest applicable oracle.

	Exact breakpoints are used in one dimension, polytopes for homogeneous combinations in two dimensions,
	and sampling otherwise.

	:param a:
	:param b:
	:param samples: The number of points for sampling.
	:param seed: The seed for sampling.
	"""

	n = _check_dimensions(a, b)
	combinations = isinstance(a, (LinComb, MaxTerm)) and isinstance(b, (LinComb, MaxTerm))

	if combinations and n == 1:
		return equiv_1d(a, b)  # type: ignore[arg-type]

	if combinations and n == 2 and a.is_homogeneous and b.is_homogeneous:  # type: ignore[union-attr]
		return equiv_homogeneous(a, b)  # type: ignore[arg-type]

	return equiv_sample(a, b, samples, seed)
