#!/usr/bin/env python
#
#  polytope.py
"""
Convex polytopes and their correspondence with positively homogeneous maxima.

The maximum of linear functions :math:`x \\mapsto \\langle g_i, x \\rangle` is the support function
of the convex hull of the gradients :math:`g_i`. Sums of maxima correspond to Minkowski sums of polytopes.
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
import random
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

# 3rd party
import attr

# this package
from pwl_reduce.core import AffineFunc, DimensionError, MaxTerm
from pwl_reduce.utils import RationalLike, as_rational, dot, format_rational

__all__ = [
		"NotHomogeneousError",
		"Point",
		"VPolytope",
		"Direction",
		"tau",
		"support",
		"minkowski",
		"face",
		"scale",
		"support_function",
		"polytope_equal",
		"vertex_cycle",
		"sample_directions",
		"RANDOM_DIRECTIONS",
		]

Point = Tuple[Fraction, ...]

#: The number of seeded random directions compared by :func:`~.polytope_equal` for ``n >= 3``.
RANDOM_DIRECTIONS = 500


class NotHomogeneousError(ValueError):
	"""
	Raised when a constituent with a non-zero constant is given where only linear functions are allowed.

	:param function: The offending constituent.
	"""

	def __init__(self, function: AffineFunc):
		self.function = function
		super().__init__(f"Expected a linear function (zero constant term), got {function}")


def _cross(o: Point, a: Point, b: Point) -> Fraction:
	return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(points: Iterable[Point]) -> Tuple[Point, ...]:
	# Monotone chain; collinear points are dropped.
	ordered = sorted(set(points))
	if len(ordered) <= 2:
		return tuple(ordered)

	lower: List[Point] = []
	for p in ordered:
		while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
			lower.pop()
		lower.append(p)

	upper: List[Point] = []
	for p in reversed(ordered):
		while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
			upper.pop()
		upper.append(p)

	return tuple(lower[:-1] + upper[:-1])


def _to_points(points: Iterable[Sequence[RationalLike]]) -> Tuple[Point, ...]:
	return tuple(tuple(map(as_rational, p)) for p in points)


@attr.s(frozen=True, slots=True)
class VPolytope:
	"""
	The convex hull of a non-empty finite set of points.

	Generators are reduced on construction:
	in one dimension to the two endpoints, in two dimensions to the hull vertices
	in counterclockwise order starting from the lexicographically smallest,
	and otherwise to the sorted distinct points.
	"""

	#: The dimension of the ambient space.
	n: int = attr.ib(converter=int)

	#: The generating points.
	points: Tuple[Point, ...] = attr.ib(converter=_to_points)

	@points.validator
	def _check_points(self, attribute: "attr.Attribute", value: Tuple[Point, ...]) -> None:
		if self.n < 1:
			raise ValueError("'n' must be a positive integer")
		if not value:
			raise ValueError("A polytope needs at least one generator")

		for p in value:
			if len(p) != self.n:
				raise DimensionError(self.n, len(p))

	def __attrs_post_init__(self) -> None:
		if self.n == 1:
			reduced: Tuple[Point, ...] = tuple(sorted({min(self.points), max(self.points)}))
		elif self.n == 2:
			reduced = _hull_2d(self.points)
		else:
			reduced = tuple(sorted(set(self.points)))

		object.__setattr__(self, "points", reduced)

	@classmethod
	def from_points(cls, points: Sequence[Sequence[RationalLike]]) -> "VPolytope":
		"""
		Construct a polytope from its generators, inferring the dimension.

		:param points:
		"""

		if not points:
			raise ValueError("A polytope needs at least one generator")

		return cls(len(points[0]), points)

	def __len__(self) -> int:
		return len(self.points)

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the polytope.
		"""

		return {'n': self.n, "points": [[format_rational(c) for c in p] for p in self.points]}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "VPolytope":
		"""
		Construct a :class:`~.VPolytope` from a dictionary created by :meth:`~.VPolytope.to_dict`.

		:param data:
		"""

		return cls(data['n'], data["points"])


def _nonzero(instance: "Direction", attribute: "attr.Attribute", value: Tuple[Fraction, ...]) -> None:
	if not value or not any(value):
		raise ValueError("A direction must be a non-zero vector")


@attr.s(frozen=True, slots=True)
class Direction:
	"""
	A non-zero direction vector.
	"""

	d: Tuple[Fraction, ...] = attr.ib(converter=lambda v: tuple(map(as_rational, v)), validator=_nonzero)

	@property
	def n(self) -> int:
		return len(self.d)


def _as_direction(d: Union[Direction, Sequence[RationalLike]]) -> Direction:
	if isinstance(d, Direction):
		return d
	return Direction(d)


def _check_same_dimension(p: VPolytope, n: int) -> None:
	if p.n != n:
		raise DimensionError(p.n, n, "polytope or direction")


def tau(t: MaxTerm) -> VPolytope:
	"""
	Returns the polytope whose support function is ``t``: the convex hull of the gradients.

	:param t: A maximum of linear functions.

	:raises NotHomogeneousError: if any constituent has a non-zero constant.
	"""

	for f in t:
		if not f.is_linear:
			raise NotHomogeneousError(f)

	return VPolytope(t.n, [f.gradient for f in t])


def support(p: VPolytope, d: Union[Direction, Sequence[RationalLike]]) -> Fraction:
	"""
	Returns :math:`\\max_{v \\in P} \\langle v, d \\rangle`.

	:param p:
	:param d:
	"""

	d = _as_direction(d)
	_check_same_dimension(p, d.n)
	return max(dot(v, d.d) for v in p.points)


def minkowski(p: VPolytope, q: VPolytope) -> VPolytope:
	"""
	Returns the Minkowski sum :math:`P + Q = \\{a + b : a \\in P, b \\in Q\\}`.

	:param p:
	:param q:
	"""

	_check_same_dimension(p, q.n)
	return VPolytope(p.n, [tuple(a + b for a, b in zip(u, v)) for u in p.points for v in q.points])


def face(p: VPolytope, d: Union[Direction, Sequence[RationalLike]]) -> VPolytope:
	"""
	Returns the face of ``p`` on which :math:`\\langle \\cdot, d \\rangle` is maximal.

	:param p:
	:param d:
	"""

	d = _as_direction(d)
	best = support(p, d)
	return VPolytope(p.n, [v for v in p.points if dot(v, d.d) == best])


def scale(p: VPolytope, factor: RationalLike) -> VPolytope:
	"""
	Returns :math:`cP` for a non-negative rational :math:`c`.

	:param p:
	:param factor:
	"""

	factor = as_rational(factor)
	if factor < 0:
		raise ValueError("The scale factor must be non-negative")

	return VPolytope(p.n, [tuple(c * factor for c in v) for v in p.points])


def support_function(p: VPolytope) -> MaxTerm:
	"""
	Returns the support function of ``p`` as a maximum of linear functions.

	This is the inverse of :func:`~.tau`.

	:param p:
	"""

	return MaxTerm(AffineFunc(v, 0) for v in p.points)


def sample_directions(n: int, seed: int = 42, count: int = RANDOM_DIRECTIONS) -> List[Tuple[Fraction, ...]]:
	"""
	Returns every non-zero vector in :math:`\\{-1, 0, 1\\}^n`,
	followed by ``count`` seeded random non-zero integer vectors with entries in :math:`[-10, 10]`.

	:param n:
	:param seed:
	:param count:
	"""

	directions = [
			tuple(map(Fraction, signs)) for signs in itertools.product((-1, 0, 1), repeat=n) if any(signs)
			]

	rng = random.Random(seed)
	while count:
		candidate = tuple(Fraction(rng.randint(-10, 10)) for _ in range(n))
		if any(candidate):
			directions.append(candidate)
			count -= 1

	return directions


def polytope_equal(p: VPolytope, q: VPolytope) -> bool:
	"""
	Returns whether two polytopes are equal.

	The answer is exact for ``n <= 2``, where generators are reduced to the hull vertices.
	For ``n >= 3`` the support functions are compared on the directions from :func:`~.sample_directions`.
	This is a strong necessary condition but not a decision procedure.

	:param p:
	:param q:
	"""

	_check_same_dimension(p, q.n)

	if p.n <= 2 or p.points == q.points:
		return p.points == q.points

	return all(support(p, d) == support(q, d) for d in sample_directions(p.n))


def vertex_cycle(p: VPolytope) -> str:
	"""
	Render the generators of ``p`` as text.

	Two-dimensional polytopes are shown as a closed counterclockwise cycle.

	:param p:
	"""

	formatted = ['(' + ", ".join(map(format_rational, v)) + ')' for v in p.points]

	if p.n == 2 and len(formatted) > 2:
		formatted.append(formatted[0])

	return " -> ".join(formatted)
