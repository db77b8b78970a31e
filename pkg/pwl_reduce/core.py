#!/usr/bin/env python
#
#  core.py
"""
Exact domain types: affine functions, maxima of affine functions, and linear combinations of maxima.

All scalars are :class:`fractions.Fraction`; nothing in this package rounds.
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
from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, MutableMapping, Sequence, Set, Tuple

# 3rd party
import attr

# this package
from pwl_reduce.utils import RationalLike, as_rational, dot, format_rational

__all__ = [
		"DimensionError",
		"AffineFunc",
		"MaxTerm",
		"LinComb",
		"eval_affine",
		"eval_maxterm",
		"eval_lincomb",
		"prune_dominated",
		"canonicalize",
		"height",
		"format_affine",
		]


class DimensionError(ValueError):
	"""
	Raised when objects (or points) of different dimensions are combined.

	:param expected:
	:param got:
	:param what: Description of the offending value.
	"""

	def __init__(self, expected: int, got: int, what: str = "point"):
		self.expected = expected
		self.got = got
		super().__init__(f"Dimension mismatch: expected a {what} of dimension {expected}, got {got}")


def _check_point(n: int, x: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
	if len(x) != n:
		raise DimensionError(n, len(x))
	return tuple(map(as_rational, x))


def _to_vector(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
	return tuple(map(as_rational, values))


def _nonempty(instance: Any, attribute: "attr.Attribute", value: Sequence) -> None:
	if not len(value):
		raise ValueError(f"'{attribute.name}' must not be empty")


@attr.s(frozen=True, slots=True, order=True, repr=False)
class AffineFunc:
	"""
	An affine map :math:`x \\mapsto \\langle g, x \\rangle + c` on :math:`\\mathbb{R}^n`.

	Instances are ordered lexicographically on ``(gradient, constant)``,
	which is the canonical order used throughout the package.
	"""

	#: The gradient vector, of length ``n``.
	gradient: Tuple[Fraction, ...] = attr.ib(converter=_to_vector, validator=_nonempty)

	#: The constant term.
	constant: Fraction = attr.ib(converter=as_rational, default=Fraction(0))

	@property
	def n(self) -> int:
		"""
		The dimension of the domain.
		"""

		return len(self.gradient)

	@classmethod
	def zero(cls, n: int) -> "AffineFunc":
		"""
		The zero function on :math:`\\mathbb{R}^n`.

		:param n:
		"""

		return cls((0, ) * n, 0)

	@classmethod
	def const(cls, n: int, value: RationalLike) -> "AffineFunc":
		"""
		The constant function ``value`` on :math:`\\mathbb{R}^n`.

		:param n:
		:param value:
		"""

		return cls((0, ) * n, value)

	@classmethod
	def variable(cls, n: int, index: int) -> "AffineFunc":
		"""
		The coordinate function :math:`x_{index}` (1-based) on :math:`\\mathbb{R}^n`.

		:param n:
		:param index:
		"""

		if not 1 <= index <= n:
			raise IndexError(f"Variable index {index} out of range for dimension {n}")

		return cls(tuple(int(i == index - 1) for i in range(n)), 0)

	@property
	def is_linear(self) -> bool:
		"""
		Whether the constant term is zero.
		"""

		return self.constant == 0

	@property
	def is_constant(self) -> bool:
		"""
		Whether the gradient is zero.
		"""

		return not any(self.gradient)

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		return dot(self.gradient, _check_point(self.n, x)) + self.constant

	def __add__(self, other: "AffineFunc") -> "AffineFunc":
		if not isinstance(other, AffineFunc):
			return NotImplemented
		if other.n != self.n:
			raise DimensionError(self.n, other.n, "function")

		return AffineFunc(
				tuple(a + b for a, b in zip(self.gradient, other.gradient)),
				self.constant + other.constant,
				)

	def __neg__(self) -> "AffineFunc":
		return AffineFunc(tuple(-a for a in self.gradient), -self.constant)

	def __sub__(self, other: "AffineFunc") -> "AffineFunc":
		if not isinstance(other, AffineFunc):
			return NotImplemented
		return self + (-other)

	def scale(self, factor: RationalLike) -> "AffineFunc":
		"""
		Returns ``factor * self``.

		:param factor:
		"""

		factor = as_rational(factor)
		return AffineFunc(tuple(a * factor for a in self.gradient), self.constant * factor)

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the function.
		"""

		return {
				"grad": [format_rational(a) for a in self.gradient],
				"const": format_rational(self.constant),
				}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "AffineFunc":
		"""
		Construct an :class:`~.AffineFunc` from a dictionary created by :meth:`~.AffineFunc.to_dict`.

		:param data:
		"""

		return cls(data["grad"], data.get("const", 0))

	def __repr__(self) -> str:
		return f"<AffineFunc {format_affine(self)!r}>"

	def __str__(self) -> str:
		return format_affine(self)


def _canonical_constituents(constituents: Iterable[AffineFunc]) -> Tuple[AffineFunc, ...]:
	return tuple(sorted(set(constituents)))


def _same_dimension(instance: "MaxTerm", attribute: "attr.Attribute", value: Tuple[AffineFunc, ...]) -> None:
	_nonempty(instance, attribute, value)

	dimensions = {f.n for f in value}
	if len(dimensions) != 1:
		raise DimensionError(value[0].n, max(dimensions - {value[0].n}), "constituent")


@attr.s(frozen=True, slots=True, order=True, repr=False)
class MaxTerm:
	"""
	The pointwise maximum of a non-empty finite set of affine functions.

	Constituents are deduplicated and stored in canonical order,
	so two :class:`~.MaxTerm` objects built from the same set compare equal.
	"""

	#: The affine functions, sorted in canonical order.
	constituents: Tuple[AffineFunc, ...] = attr.ib(converter=_canonical_constituents, validator=_same_dimension)

	@property
	def n(self) -> int:
		"""
		The dimension of the domain.
		"""

		return self.constituents[0].n

	def __len__(self) -> int:
		return len(self.constituents)

	def __iter__(self) -> Iterator[AffineFunc]:
		return iter(self.constituents)

	def __contains__(self, item: object) -> bool:
		return item in self.constituents

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = _check_point(self.n, x)
		return max(f(point) for f in self.constituents)

	@property
	def is_homogeneous(self) -> bool:
		"""
		Whether every constituent is linear, i.e. the term is positively homogeneous.
		"""

		return all(f.is_linear for f in self.constituents)

	@property
	def is_zero(self) -> bool:
		"""
		Whether the term is the maximum of the zero function alone.
		"""

		return len(self.constituents) == 1 and self.constituents[0] == AffineFunc.zero(self.n)

	def pairwise_sum(self, other: "MaxTerm") -> "MaxTerm":
		"""
		Returns the maximum of all pairwise sums of constituents.

		This is the max-plus product: ``self(x) + other(x) == self.pairwise_sum(other)(x)``.

		:param other:
		"""

		return MaxTerm(f + g for f in self.constituents for g in other.constituents)

	def to_list(self) -> List[Dict[str, Any]]:
		"""
		Returns a JSON-serialisable list of the constituents.
		"""

		return [f.to_dict() for f in self.constituents]

	@classmethod
	def from_list(cls, data: Iterable[Mapping[str, Any]]) -> "MaxTerm":
		"""
		Construct a :class:`~.MaxTerm` from a list created by :meth:`~.MaxTerm.to_list`.

		:param data:
		"""

		return cls(AffineFunc.from_dict(f) for f in data)

	def __repr__(self) -> str:
		return f"<MaxTerm max({', '.join(map(format_affine, self.constituents))})>"


def _to_terms(terms: Iterable[Tuple[RationalLike, MaxTerm]]) -> Tuple[Tuple[Fraction, MaxTerm], ...]:
	return tuple((as_rational(coeff), term) for coeff, term in terms)


@attr.s(frozen=True, slots=True, repr=False)
class LinComb:
	"""
	A linear combination :math:`\\sum_i c_i \\max(A_i)` of maxima of affine functions.

	:class:`~.LinComb` objects are not canonicalised on construction;
	use :func:`~.canonicalize` for that.
	Equality is structural, so compare canonical forms.
	"""

	#: The dimension of the domain.
	n: int = attr.ib(converter=int)

	#: ``(coefficient, term)`` pairs.
	terms: Tuple[Tuple[Fraction, MaxTerm], ...] = attr.ib(converter=_to_terms, default=())

	@terms.validator
	def _check_terms(self, attribute: "attr.Attribute", value: Tuple[Tuple[Fraction, MaxTerm], ...]) -> None:
		if self.n < 1:
			raise ValueError("'n' must be a positive integer")

		for _, term in value:
			if term.n != self.n:
				raise DimensionError(self.n, term.n, "term")

	@classmethod
	def from_maxterm(cls, term: MaxTerm, coeff: RationalLike = 1) -> "LinComb":
		"""
		A combination with the single summand ``coeff * term``.

		:param term:
		:param coeff:
		"""

		return cls(term.n, [(coeff, term)])

	@classmethod
	def from_affine(cls, function: AffineFunc) -> "LinComb":
		"""
		A combination with the single summand ``1 * max(function)``.

		:param function:
		"""

		return cls.from_maxterm(MaxTerm([function]))

	def __len__(self) -> int:
		return len(self.terms)

	def __iter__(self) -> Iterator[Tuple[Fraction, MaxTerm]]:
		return iter(self.terms)

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = _check_point(self.n, x)
		return sum((coeff * term(point) for coeff, term in self.terms), Fraction(0))

	def _check_other(self, other: "LinComb") -> None:
		if other.n != self.n:
			raise DimensionError(self.n, other.n, "combination")

	def __add__(self, other: "LinComb") -> "LinComb":
		if not isinstance(other, LinComb):
			return NotImplemented

		self._check_other(other)
		return LinComb(self.n, self.terms + other.terms)

	def __neg__(self) -> "LinComb":
		return self.scale(-1)

	def __sub__(self, other: "LinComb") -> "LinComb":
		if not isinstance(other, LinComb):
			return NotImplemented

		return self + (-other)

	def scale(self, factor: RationalLike) -> "LinComb":
		"""
		Returns ``factor * self``.

		:param factor:
		"""

		factor = as_rational(factor)
		return LinComb(self.n, [(coeff * factor, term) for coeff, term in self.terms])

	def constituents(self) -> Set[AffineFunc]:
		"""
		Returns the set of all affine functions appearing in any term.
		"""

		return {f for _, term in self.terms for f in term}

	@property
	def is_homogeneous(self) -> bool:
		"""
		Whether every constituent of every term is linear.
		"""

		return all(term.is_homogeneous for _, term in self.terms)

	@property
	def has_integer_coefficients(self) -> bool:
		"""
		Whether every coefficient is an integer.
		"""

		return all(coeff.denominator == 1 for coeff, _ in self.terms)

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the combination.
		"""

		return {
				"n": self.n,
				"terms": [{"coeff": format_rational(coeff), "max": term.to_list()} for coeff, term in self.terms],
				}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "LinComb":
		"""
		Construct a :class:`~.LinComb` from a dictionary created by :meth:`~.LinComb.to_dict`.

		:param data:
		"""

		return cls(
				data['n'],
				[(entry["coeff"], MaxTerm.from_list(entry["max"])) for entry in data.get("terms", ())],
				)

	def __repr__(self) -> str:
		return f"<LinComb n={self.n} terms={len(self.terms)}>"


def eval_affine(f: AffineFunc, x: Sequence[RationalLike]) -> Fraction:
	"""
	Evaluate an affine function at ``x``.

	:param f:
	:param x:

	:raises DimensionError: if ``x`` does not have length ``f.n``.
	"""

	return f(x)


def eval_maxterm(t: MaxTerm, x: Sequence[RationalLike]) -> Fraction:
	"""
	Evaluate the maximum of the constituents of ``t`` at ``x``.

	:param t:
	:param x:
	"""

	return t(x)


def eval_lincomb(c: LinComb, x: Sequence[RationalLike]) -> Fraction:
	"""
	Evaluate a linear combination of maxima at ``x``.

	:param c:
	:param x:
	"""

	return c(x)


def prune_dominated(t: MaxTerm) -> MaxTerm:
	"""
	Remove constituents which are dominated everywhere by another constituent with the same gradient.

	Among constituents sharing a gradient only the one with the largest constant is kept.

	:param t:
	"""

	best: Dict[Tuple[Fraction, ...], AffineFunc] = {}

	for f in t.constituents:
		current = best.get(f.gradient)
		if current is None or f.constant > current.constant:
			best[f.gradient] = f

	if len(best) == len(t):
		return t

	return MaxTerm(best.values())


def canonicalize(c: LinComb) -> LinComb:
	"""
	Returns the canonical form of ``c``.

	Coefficients of identical terms are merged, zero coefficients and
	terms equal to the zero function are dropped, and terms are sorted in canonical order.

	:param c:
	"""

	merged: MutableMapping[MaxTerm, Fraction] = defaultdict(Fraction)

	for coeff, term in c.terms:
		merged[term] += coeff

	return LinComb(
			c.n,
			[(merged[term], term) for term in sorted(merged) if merged[term] and not term.is_zero],
			)


def height(c: LinComb) -> int:
	"""
	Returns the height of the representation ``c``: the largest number of constituents in a term, less one.

	This is an upper bound on the height of the function ``c`` denotes.
	The empty combination has height 0.

	:param c:
	"""

	if not c.terms:
		return 0

	return max(len(term) for _, term in c.terms) - 1


def _format_coefficient(coeff: Fraction, variable: str) -> str:
	if coeff == 1:
		return variable
	return f"{format_rational(coeff)}*{variable}"


def format_affine(f: AffineFunc) -> str:
	"""
	Format an affine function as text in the expression language, e.g. ``'3*x1 - 4*x2 + 1'``.

	:param f:
	"""

	parts: List[Tuple[bool, str]] = []

	for index, coeff in enumerate(f.gradient, start=1):
		if coeff:
			parts.append((coeff < 0, _format_coefficient(abs(coeff), f"x{index}")))

	if f.constant or not parts:
		parts.append((f.constant < 0, format_rational(abs(f.constant))))

	negative, text = parts[0]
	buf = [f"-{text}" if negative else text]

	for negative, text in parts[1:]:
		buf.append(f"- {text}" if negative else f"+ {text}")

	return ' '.join(buf)


