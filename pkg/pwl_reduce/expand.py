#!/usr/bin/env python
#
#  expand.py
"""
Expansion of expression trees into linear combinations of maxima.

An expression is first brought into max-min normal form
(the maximum over blocks of the minimum over each block),
and the blocks are then removed one element at a time using the identity

.. math::

	\\max(a, \\min(b, c)) = \\max(a, b) + \\max(a, c) - \\max(a, b, c)
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
import logging
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, Mapping, MutableMapping, Sequence, Tuple

# 3rd party
import attr

# this package
from pwl_reduce.core import AffineFunc, LinComb, MaxTerm, canonicalize, height
from pwl_reduce.parser import Affine, ExprNode, Max, Min, Scale, Sum
from pwl_reduce.utils import RationalLike, as_rational

__all__ = [
		"Block",
		"MaxMinForm",
		"SummandStatistics",
		"to_maxmin",
		"to_lincomb",
		"expand",
		"summand_statistics",
		]

logger = logging.getLogger(__name__)

#: A block of a max-min form: a non-empty set of affine functions denoting their minimum.
Block = FrozenSet[AffineFunc]


def _block_key(block: Block) -> Tuple[AffineFunc, ...]:
	return tuple(sorted(block))


def _absorb(blocks: Iterable[Iterable[AffineFunc]]) -> Tuple[Block, ...]:
	unique = {frozenset(block) for block in blocks}

	for block in unique:
		if not block:
			raise ValueError("Blocks must not be empty")

	# max(min(A), min(B)) == min(A) whenever A is a subset of B
	reduced = [block for block in unique if not any(other < block for other in unique)]
	return tuple(sorted(reduced, key=_block_key))


@attr.s(frozen=True, slots=True)
class MaxMinForm:
	"""
	The maximum over ``blocks`` of the minimum over each block.

	Blocks are absorption-reduced (no block is a superset of another)
	and sorted in canonical order.
	"""

	blocks: Tuple[Block, ...] = attr.ib(converter=_absorb)

	@blocks.validator
	def _check_blocks(self, attribute: "attr.Attribute", value: Tuple[Block, ...]) -> None:
		if not value:
			raise ValueError("A max-min form needs at least one block")

		dimensions = {f.n for block in value for f in block}
		if len(dimensions) != 1:
			raise ValueError("All affine functions must have the same dimension")

	@property
	def n(self) -> int:
		"""
		The dimension of the domain.
		"""

		return next(iter(self.blocks[0])).n

	@property
	def measure(self) -> int:
		"""
		The sum over the blocks of ``len(block) - 1``.

		This is zero exactly when the form is a single maximum.
		"""

		return sum(len(block) - 1 for block in self.blocks)

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = tuple(map(as_rational, x))
		return max(min(f(point) for f in block) for block in self.blocks)


def _scale_form(form: MaxMinForm, coeff: Fraction) -> MaxMinForm:
	if coeff == 0:
		return MaxMinForm([[AffineFunc.zero(form.n)]])
	elif coeff > 0:
		return MaxMinForm([f.scale(coeff) for f in block] for block in form.blocks)
	else:
		# -max_i min(B_i) == min_i max(-B_i), redistributed over choice functions
		return MaxMinForm(
				[f.scale(coeff) for f in choice] for choice in itertools.product(*map(_block_key, form.blocks))
				)


def _add_forms(left: MaxMinForm, right: MaxMinForm) -> MaxMinForm:
	return MaxMinForm([u + v for u in b for v in c] for b in left.blocks for c in right.blocks)


def to_maxmin(e: ExprNode) -> MaxMinForm:
	"""
	Convert an expression tree to max-min normal form.

	:param e:
	"""

	if isinstance(e, Affine):
		return MaxMinForm([[e.func]])

	elif isinstance(e, Max):
		return MaxMinForm(block for arg in e.args for block in to_maxmin(arg).blocks)

	elif isinstance(e, Min):
		forms = [to_maxmin(arg) for arg in e.args]
		return MaxMinForm(frozenset().union(*choice) for choice in itertools.product(*(f.blocks for f in forms)))

	elif isinstance(e, Sum):
		form = to_maxmin(e.args[0])
		for arg in e.args[1:]:
			form = _add_forms(form, to_maxmin(arg))
		return form

	elif isinstance(e, Scale):
		return _scale_form(to_maxmin(e.child), e.coeff)

	else:
		raise TypeError(f"Unsupported expression node {type(e).__name__!r}")


def _expand_form(form: MaxMinForm, memo: MutableMapping[MaxMinForm, Mapping[MaxTerm, int]]) -> Mapping[MaxTerm, int]:
	if form in memo:
		return memo[form]

	for index, block in enumerate(form.blocks):
		if len(block) > 1:
			break
	else:
		result: Mapping[MaxTerm, int] = {MaxTerm(f for block in form.blocks for f in block): 1}
		memo[form] = result
		return result

	others = form.blocks[:index] + form.blocks[index + 1:]
	smallest, *rest = _block_key(block)
	remainder = frozenset(rest)
	singleton = frozenset([smallest])

	counts: Counter = Counter()
	counts.update(_expand_form(MaxMinForm(others + (singleton, )), memo))
	counts.update(_expand_form(MaxMinForm(others + (remainder, )), memo))
	counts.subtract(_expand_form(MaxMinForm(others + (singleton, remainder)), memo))

	result = {term: coeff for term, coeff in counts.items() if coeff}
	memo[form] = result
	return result


def to_lincomb(m: MaxMinForm) -> LinComb:
	"""
	Rewrite a max-min form as an integral linear combination of maxima.

	The first non-singleton block (in canonical order) is split into its smallest element
	and the rest, until every block is a singleton.

	:param m:
	"""

	memo: Dict[MaxMinForm, Mapping[MaxTerm, int]] = {}
	terms = _expand_form(m, memo)
	logger.debug("Expanded %d block(s) via %d intermediate form(s)", len(m.blocks), len(memo))

	return canonicalize(LinComb(m.n, [(coeff, term) for term, coeff in terms.items()]))


def expand(e: ExprNode) -> LinComb:
	"""
	Expand an expression tree into a canonical linear combination of maxima.

	:param e:
	"""

	form = to_maxmin(e)
	logger.info("Max-min form has %d block(s), largest of size %d", len(form.blocks), max(map(len, form.blocks)))
	return to_lincomb(form)


@attr.s(frozen=True, slots=True)
class SummandStatistics:
	"""
	Summary statistics for a linear combination of maxima.
	"""

	#: The number of terms.
	summands: int = attr.ib()

	#: The number of distinct affine functions across all terms.
	constituents: int = attr.ib()

	#: Maps a constituent count to the number of terms with that many constituents.
	histogram: Dict[int, int] = attr.ib()

	#: The number of terms with five or more constituents.
	at_least_five: int = attr.ib()

	#: The largest constituent count, less one.
	height: int = attr.ib()

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary of the statistics.
		"""

		return {
				"summands": self.summands,
				"constituents": self.constituents,
				"histogram": {str(size): count for size, count in sorted(self.histogram.items())},
				"at_least_five": self.at_least_five,
				"height": self.height,
				}


def summand_statistics(c: LinComb) -> SummandStatistics:
	"""
	Count the summands of ``c`` and their sizes.

	:param c:
	"""

	histogram = Counter(len(term) for _, term in c.terms)

	return SummandStatistics(
			summands=len(c.terms),
			constituents=len(c.constituents()),
			histogram=dict(sorted(histogram.items())),
			at_least_five=sum(count for size, count in histogram.items() if size >= 5),
			height=height(c),
			)
