#!/usr/bin/env python
#
#  reduce.py
"""
Reduce maxima of affine functions to maxima of affinely independent constituents.

A set of constituents whose lifted gradients (the gradients with a 1 appended)
are linearly dependent can be split into two non-empty sets :math:`S` and :math:`T`
with :math:`\\max(T) \\geq \\min(S)` everywhere.
Then, by inclusion and exclusion over the subsets of :math:`S`,

.. math::

	\\max(S \\cup T) = (-1)^{|S|+1} \\sum_{M \\subsetneq S} (-1)^{|M|} \\max(M \\cup T)

and every term on the right has fewer constituents.
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
import warnings
from collections import Counter
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

# 3rd party
import attr

# this package
from pwl_reduce.core import AffineFunc, DimensionError, LinComb, MaxTerm, canonicalize, prune_dominated
from pwl_reduce.linalg import KernelChooser, KernelVector, RatMatrix, kernel_basis
from pwl_reduce.utils import RationalLike, as_rational, dot, format_rational, nonempty_proper_subsets

__all__ = [
		"InvariantViolation",
		"ConjectureWarning",
		"Chooser",
		"SplitResult",
		"TraceNode",
		"Reducer",
		"ProbeReport",
		"lifted_gradient_matrix",
		"split",
		"reduce_max",
		"reduce_lincomb",
		"parse_strategies",
		"conjecture_probe",
		"trace_to_dict",
		"trace_to_dot",
		]

logger = logging.getLogger(__name__)

#: A callable which picks a vector from a kernel basis, returning :py:obj:`None` for an empty basis.
Chooser = Callable[[Sequence[KernelVector]], Optional[KernelVector]]


class InvariantViolation(RuntimeError):
	"""
	Raised when a chosen vector is not in the kernel, or a split produces an empty side.
	"""


class ConjectureWarning(UserWarning):
	"""
	Warning issued when reductions under different kernel strategies disagree.
	"""


def lifted_gradient_matrix(constituents: Sequence[AffineFunc]) -> RatMatrix:
	"""
	Returns the ``(n + 1) x k`` matrix whose columns are the gradients of ``constituents`` with a 1 appended.

	:param constituents:
	"""

	if not constituents:
		raise ValueError("At least one constituent is required")

	n = constituents[0].n
	for f in constituents:
		if f.n != n:
			raise DimensionError(n, f.n, "constituent")

	return RatMatrix.from_columns([(*f.gradient, 1) for f in constituents])


@attr.s(frozen=True, slots=True)
class SplitResult:
	"""
	The outcome of :func:`~.split`.

	If ``alpha`` is :py:obj:`None` the constituents are affinely independent,
	``s`` is empty and ``t`` holds every constituent.
	"""

	#: The constituents whose minimum is bounded above by ``max(t)``.
	s: Tuple[AffineFunc, ...] = attr.ib(converter=tuple)

	#: The remaining constituents.
	t: Tuple[AffineFunc, ...] = attr.ib(converter=tuple)

	#: The kernel vector used, indexed like the canonically ordered constituents.
	alpha: Optional[KernelVector] = attr.ib(default=None)

	#: The weighted sum of the constant terms, ``sum(alpha_i * constant_i)``,
	#: taking the sign of ``alpha`` from an injected vector.
	c: Optional[Fraction] = attr.ib(default=None)

	@property
	def is_trivial(self) -> bool:
		"""
		Whether the kernel was trivial, so no split was made.
		"""

		return self.alpha is None


def _as_constituents(r: Union[MaxTerm, Iterable[AffineFunc]]) -> Tuple[AffineFunc, ...]:
	if isinstance(r, MaxTerm):
		return r.constituents
	return MaxTerm(r).constituents


def split(
		r: Union[MaxTerm, Iterable[AffineFunc]],
		chooser: Optional[Chooser] = None,
		alpha: Optional[Mapping[AffineFunc, RationalLike]] = None,
		) -> SplitResult:
	"""
	Split a set of constituents into ``s`` and ``t`` with ``max(t) >= min(s)`` everywhere.

	If ``c >= 0`` then ``t`` holds the constituents with positive ``alpha``,
	otherwise those with negative ``alpha``.
	Constituents with zero ``alpha`` always go in ``s``.

	An injected vector keeps its sign: ``c`` and the orientation are computed from it as given,
	even though the stored ``alpha`` is normalised.

	:param r: The constituents.
	:param chooser: Picks the kernel vector. Defaults to the first basis vector.
	:param alpha: Use this vector (keyed by constituent) instead of choosing one from the kernel.

	:raises InvariantViolation: if the vector is not in the kernel.
	"""

	constituents = _as_constituents(r)
	matrix = lifted_gradient_matrix(constituents)

	orientation = 1

	if alpha is not None:
		missing = set(alpha) ^ set(constituents)
		if missing:
			raise ValueError("The injected vector must have exactly one entry per constituent")
		entries = [as_rational(alpha[f]) for f in constituents]
		vector: Optional[KernelVector] = KernelVector(entries)
		if next((a for a in entries if a), 1) < 0:
			orientation = -1
	else:
		if chooser is None:
			chooser = KernelChooser()
		vector = chooser(kernel_basis(matrix))

	if vector is None:
		return SplitResult((), constituents)

	if any(matrix @ vector.entries):
		raise InvariantViolation(f"Vector {vector.as_ints()} is not in the kernel")

	oriented = [orientation * a for a in vector]
	c = dot(oriented, [f.constant for f in constituents])
	sign = 1 if c >= 0 else -1

	t = [f for f, a in zip(constituents, oriented) if a * sign > 0]
	s = [f for f, a in zip(constituents, oriented) if a * sign <= 0]

	if not s or not t:
		raise InvariantViolation("Split produced an empty side")

	logger.debug("Split %d constituent(s) into |S|=%d, |T|=%d with c=%s", len(constituents), len(s), len(t), c)
	return SplitResult(s, t, vector, c)


@attr.s(frozen=True, slots=True)
class TraceNode:
	"""
	A node in the recursion tree of :func:`~.reduce_max`.

	Leaves are the terms with affinely independent constituents, and have no ``alpha``.
	"""

	#: The (pruned) term reduced at this node.
	term: MaxTerm = attr.ib()

	#: The kernel vector used to split the term, or :py:obj:`None` for a leaf.
	alpha: Optional[KernelVector] = attr.ib(default=None)

	#: The sign of this node's contribution to its parent.
	sign: int = attr.ib(default=1)

	children: Tuple["TraceNode", ...] = attr.ib(default=(), converter=tuple)

	#: The split constant.
	c: Optional[Fraction] = attr.ib(default=None)

	#: Constituents removed because another constituent with the same gradient dominates them.
	removed: Tuple[AffineFunc, ...] = attr.ib(default=(), converter=tuple)

	@property
	def is_leaf(self) -> bool:
		return self.alpha is None

	def depth(self) -> int:
		"""
		Returns the number of levels in the tree below and including this node.
		"""

		return 1 + max((child.depth() for child in self.children), default=0)

	def leaves(self) -> List["TraceNode"]:
		"""
		Returns the leaves of the tree, in order.
		"""

		if self.is_leaf:
			return [self]
		return [leaf for child in self.children for leaf in child.leaves()]


_Result = Tuple[Mapping[MaxTerm, int], TraceNode]


@attr.s(slots=True)
class Reducer:
	"""
	Reduces maxima, memoising the result for each constituent set.

	One :class:`~.Reducer` may be shared by every term of a linear combination.

	:param chooser: Picks the kernel vector used to split each term.
	"""

	chooser: Chooser = attr.ib(factory=KernelChooser)
	_memo: Dict[MaxTerm, _Result] = attr.ib(init=False, factory=dict)

	def _reduce(self, t: MaxTerm, depth: int) -> _Result:
		if t in self._memo:
			return self._memo[t]

		result = split(t, self.chooser)

		if result.is_trivial:
			value: _Result = ({t: 1}, TraceNode(t))
		else:
			s, rest = result.s, result.t
			outer = (-1)**(len(s) + 1)
			counts: Counter = Counter()
			children = []

			for subset in [(), *nonempty_proper_subsets(s)]:
				sign = outer * (-1)**len(subset)
				child_terms, child_node = self._reduce(MaxTerm(subset + rest), depth + 1)

				for term, coeff in child_terms.items():
					counts[term] += sign * coeff

				children.append(attr.evolve(child_node, sign=sign))

			logger.debug("%sReduced %d constituent(s) into %d subterm(s)", "  " * depth, len(t), len(children))
			value = (
					{term: coeff for term, coeff in counts.items() if coeff},
					TraceNode(t, result.alpha, 1, children, c=result.c),
					)

		self._memo[t] = value
		return value

	def reduce_max(self, t: MaxTerm) -> Tuple[LinComb, TraceNode]:
		"""
		Reduce a single maximum.

		:param t:

		:returns: The reduced combination, and the root of the recursion tree.
		"""

		pruned = prune_dominated(t)
		terms, node = self._reduce(pruned, 0)

		if pruned is not t:
			node = attr.evolve(node, removed=sorted(set(t.constituents) - set(pruned.constituents)))

		return canonicalize(LinComb(t.n, [(coeff, term) for term, coeff in terms.items()])), node

	def reduce_lincomb(self, c: LinComb) -> LinComb:
		"""
		Reduce every term of a linear combination.

		:param c:
		"""

		result = LinComb(c.n)

		for coeff, term in c.terms:
			reduced, _ = self.reduce_max(term)
			result += reduced.scale(coeff)

		return canonicalize(result)


def reduce_max(t: MaxTerm, chooser: Optional[Chooser] = None) -> Tuple[LinComb, TraceNode]:
	"""
	Reduce ``max(t)`` to a linear combination of maxima of affinely independent constituents.

	Every output term's constituents are a subset of ``t``'s (after pruning dominated constituents),
	so each term has at most ``n + 1`` constituents. The coefficients are integers.

	:param t:
	:param chooser: Picks the kernel vector used to split each term. Defaults to the first basis vector.

	:returns: The reduced combination, and the root of the recursion tree.
	"""

	return Reducer(chooser or KernelChooser()).reduce_max(t)


def reduce_lincomb(c: LinComb, chooser: Optional[Chooser] = None) -> LinComb:
	"""
	Reduce every term of ``c``, so the result has height at most ``n``.

	:param c:
	:param chooser: Picks the kernel vector used to split each term. Defaults to the first basis vector.
	"""

	return Reducer(chooser or KernelChooser()).reduce_lincomb(c)


def parse_strategies(text: str, seed: int = 42) -> List[KernelChooser]:
	"""
	Parse a comma-separated list of kernel strategies, such as ``'first,last,random:3'``.

	``random:k`` expands to ``k`` random strategies seeded ``seed`` to ``seed + k - 1``.
	A bare ``random`` means ``random:1``.

	:param text:
	:param seed:
	"""

	choosers: List[KernelChooser] = []

	for item in filter(None, (part.strip() for part in text.split(','))):
		name, _, count = item.partition(':')

		if name in {"first", "last"}:
			if count:
				raise ValueError(f"Strategy {name!r} does not take a count")
			choosers.append(KernelChooser(name))
		elif name == "random":
			try:
				repeats = int(count) if count else 1
			except ValueError:
				raise ValueError(f"Invalid count for random strategy: {count!r}") from None
			if repeats < 1:
				raise ValueError("The count for the random strategy must be positive")
			choosers.extend(KernelChooser("random", seed + i) for i in range(repeats))
		else:
			raise ValueError(f"Unknown kernel strategy {name!r}")

	return choosers


@attr.s(frozen=True, slots=True)
class ProbeReport:
	"""
	Whether reduction under several kernel strategies gives identical results.
	"""

	#: Maps each strategy's name to its canonical output.
	outputs: Dict[str, LinComb] = attr.ib()

	@property
	def identical(self) -> bool:
		"""
		Whether every strategy produced the same canonical combination.
		"""

		return len(set(self.outputs.values())) <= 1

	@property
	def distinct(self) -> int:
		"""
		The number of different outputs.
		"""

		return len(set(self.outputs.values()))

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the report.
		"""

		return {
				"identical": self.identical,
				"distinct": self.distinct,
				"outputs": {name: output.to_dict() for name, output in self.outputs.items()},
				}


def conjecture_probe(
		t: Union[MaxTerm, LinComb],
		strategies: Sequence[KernelChooser],
		) -> ProbeReport:
	"""
	Reduce ``t`` under each strategy, and report whether the results agree.

	Disagreement is reported with a :class:`UserWarning`, never an exception.

	:param t:
	:param strategies: At least two kernel choosers.
	"""

	if len(strategies) < 2:
		raise ValueError("At least two strategies are required")

	outputs: Dict[str, LinComb] = {}

	for chooser in strategies:
		reducer = Reducer(chooser)
		if isinstance(t, MaxTerm):
			outputs[chooser.name], _ = reducer.reduce_max(t)
		else:
			outputs[chooser.name] = reducer.reduce_lincomb(t)

	report = ProbeReport(outputs)

	if not report.identical:
		warnings.warn(
				f"Kernel strategies gave {report.distinct} different reductions: {', '.join(outputs)}",
				ConjectureWarning,
				stacklevel=2,
				)

	return report


def _label(term: MaxTerm, order: Sequence[AffineFunc]) -> Tuple[str, List[int]]:
	indices = []
	for f in term:
		try:
			indices.append(order.index(f) + 1)
		except ValueError:
			raise ValueError(f"Constituent {f} is not in the given order") from None

	indices.sort()
	separator = '' if len(order) < 10 else ','
	return "m_" + separator.join(map(str, indices)), indices


def _alpha_in_order(node: TraceNode, order: Sequence[AffineFunc]) -> Optional[List[int]]:
	if node.alpha is None:
		return None

	by_constituent = dict(zip(node.term.constituents, node.alpha.as_ints()))
	return [by_constituent[f] for f in sorted(node.term.constituents, key=order.index)]


def trace_to_dict(node: TraceNode, order: Optional[Sequence[AffineFunc]] = None) -> Dict[str, Any]:
	"""
	Returns a JSON-serialisable representation of a recursion tree.

	:param node:
	:param order: The order in which constituents are numbered in labels.
		Defaults to the canonical order of the root's constituents.
	"""

	if order is None:
		order = node.term.constituents

	label, _ = _label(node.term, order)

	return {
			"label": label,
			"sign": node.sign,
			"alpha": _alpha_in_order(node, order),
			'c': None if node.c is None else format_rational(node.c),
			"term": node.term.to_list(),
			"removed": [f.to_dict() for f in node.removed],
			"children": [trace_to_dict(child, order) for child in node.children],
			}


def trace_to_dot(node: TraceNode, order: Optional[Sequence[AffineFunc]] = None) -> str:
	"""
	Render a recursion tree in Graphviz DOT format.

	Each node is labelled ``m_{indices}``, plus the kernel vector for inner nodes.
	Edges are labelled with the sign of the child's contribution.

	:param node:
	:param order: The order in which constituents are numbered in labels.
		Defaults to the canonical order of the root's constituents.
	"""

	if order is None:
		order = node.term.constituents

	lines = ["digraph trace {", "\tnode [shape=box];"]
	counter = 0

	def visit(current: TraceNode) -> str:
		nonlocal counter
		name = f"n{counter}"
		counter += 1

		label, _ = _label(current.term, order)
		alpha = _alpha_in_order(current, order)
		if alpha is not None:
			label += "\\nalpha = (" + ", ".join(map(str, alpha)) + ')'

		lines.append(f'\t{name} [label="{label}"];')

		for child in current.children:
			child_name = visit(child)
			lines.append(f'\t{name} -> {child_name} [label="{"+" if child.sign > 0 else "-"}"];')

		return name

	visit(node)
	lines.append('}')
	return '\n'.join(lines) + '\n'
