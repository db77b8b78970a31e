#!/usr/bin/env python
#
#  parser.py
"""
Parse and format the text language for nested ``min``/``max`` expressions of affine functions.

The grammar is:

.. code-block:: text

	expr     := sum
	sum      := ["+" | "-"] prod (("+" | "-") prod)*
	prod     := rational "*" atom | rational | atom
	atom     := var | "(" expr ")" | "max" "(" expr ("," expr)* ")" | "min" "(" expr ("," expr)* ")"
	var      := "x" index
	rational := integer | integer "/" positive-integer | decimal

Affine subexpressions are folded into :class:`~.Affine` leaves while parsing.
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
import re
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

# 3rd party
import attr

# this package
from pwl_reduce.core import AffineFunc, DimensionError, LinComb, MaxTerm, format_affine
from pwl_reduce.utils import RationalLike, as_rational, format_rational

__all__ = [
		"ParseError",
		"ExprNode",
		"Affine",
		"Max",
		"Min",
		"Sum",
		"Scale",
		"make_sum",
		"make_scale",
		"parse",
		"format_expression",
		]


class ParseError(SyntaxError):
	"""
	Raised when an expression cannot be parsed.

	:param message: Description of the problem.
	:param position: The 0-based offset into the text at which the problem was found.
	:param text: The text being parsed.
	"""

	def __init__(self, message: str, position: int, text: Optional[str] = None):
		self.position = position
		super().__init__(f"{message} at position {position}")
		self.offset = position + 1
		self.text = text


class ExprNode:
	"""
	Base class for nodes of an expression tree.

	Nodes are callable, evaluating the expression exactly at a point.
	"""

	__slots__ = ()

	@property
	def n(self) -> int:  # pragma: no cover
		"""
		The dimension of the domain.
		"""

		raise NotImplementedError

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:  # pragma: no cover
		raise NotImplementedError

	def __str__(self) -> str:
		return format_expression(self)


def _nonempty_args(instance: ExprNode, attribute: "attr.Attribute", value: Tuple[ExprNode, ...]) -> None:
	if not value:
		raise ValueError(f"{type(instance).__name__} requires at least one argument")

	dimensions = {arg.n for arg in value}
	if len(dimensions) != 1:
		raise DimensionError(value[0].n, max(dimensions - {value[0].n}), "argument")


def _to_point(node: ExprNode, x: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
	if len(x) != node.n:
		raise DimensionError(node.n, len(x))
	return tuple(map(as_rational, x))


@attr.s(frozen=True, slots=True, repr=False)
class Affine(ExprNode):
	"""
	An affine leaf.
	"""

	func: AffineFunc = attr.ib()

	@property
	def n(self) -> int:
		return self.func.n

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		return self.func(x)

	def __repr__(self) -> str:
		return f"Affine({format_affine(self.func)!r})"


@attr.s(frozen=True, slots=True, repr=False)
class Max(ExprNode):
	"""
	The pointwise maximum of one or more subexpressions.
	"""

	args: Tuple[ExprNode, ...] = attr.ib(converter=tuple, validator=_nonempty_args)

	@property
	def n(self) -> int:
		return self.args[0].n

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = _to_point(self, x)
		return max(arg(point) for arg in self.args)

	def __repr__(self) -> str:
		return f"Max[{', '.join(map(repr, self.args))}]"


@attr.s(frozen=True, slots=True, repr=False)
class Min(ExprNode):
	"""
	The pointwise minimum of one or more subexpressions.
	"""

	args: Tuple[ExprNode, ...] = attr.ib(converter=tuple, validator=_nonempty_args)

	@property
	def n(self) -> int:
		return self.args[0].n

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = _to_point(self, x)
		return min(arg(point) for arg in self.args)

	def __repr__(self) -> str:
		return f"Min[{', '.join(map(repr, self.args))}]"


@attr.s(frozen=True, slots=True, repr=False)
class Sum(ExprNode):
	"""
	The sum of two or more subexpressions.
	"""

	args: Tuple[ExprNode, ...] = attr.ib(converter=tuple, validator=_nonempty_args)

	@args.validator
	def _at_least_two(self, attribute: "attr.Attribute", value: Tuple[ExprNode, ...]) -> None:
		if len(value) < 2:
			raise ValueError("Sum requires at least two arguments")

	@property
	def n(self) -> int:
		return self.args[0].n

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		point = _to_point(self, x)
		return sum((arg(point) for arg in self.args), Fraction(0))

	def __repr__(self) -> str:
		return f"Sum[{', '.join(map(repr, self.args))}]"


@attr.s(frozen=True, slots=True, repr=False)
class Scale(ExprNode):
	"""
	A rational multiple of a subexpression.
	"""

	coeff: Fraction = attr.ib(converter=as_rational)
	child: ExprNode = attr.ib()

	@property
	def n(self) -> int:
		return self.child.n

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		return self.coeff * self.child(x)

	def __repr__(self) -> str:
		return f"Scale({format_rational(self.coeff)}, {self.child!r})"


def make_sum(parts: Iterable[ExprNode]) -> ExprNode:
	"""
	Construct the normalised sum of ``parts``.

	Nested sums are flattened and affine parts are folded into a single
	:class:`~.Affine` at the position of the first affine part.
	A zero affine part is dropped if anything else remains.

	:param parts:
	"""

	flat: List[ExprNode] = []
	for part in parts:
		if isinstance(part, Sum):
			flat.extend(part.args)
		else:
			flat.append(part)

	if not flat:
		raise ValueError("Cannot sum zero expressions")

	affine: Optional[AffineFunc] = None
	affine_index = 0
	others: List[ExprNode] = []

	for part in flat:
		if isinstance(part, Affine):
			if affine is None:
				affine = part.func
				affine_index = len(others)
			else:
				affine = affine + part.func
		else:
			others.append(part)

	if not others:
		assert affine is not None
		return Affine(affine)

	if affine is not None and (any(affine.gradient) or affine.constant):
		others.insert(affine_index, Affine(affine))

	if len(others) == 1:
		return others[0]

	return Sum(others)


def make_scale(coeff: RationalLike, child: ExprNode) -> ExprNode:
	"""
	Construct the normalised expression ``coeff * child``.

	:param coeff:
	:param child:
	"""

	coeff = as_rational(coeff)

	if coeff == 1:
		return child
	elif coeff == 0:
		return Affine(AffineFunc.zero(child.n))
	elif isinstance(child, Affine):
		return Affine(child.func.scale(coeff))
	elif isinstance(child, Scale):
		return make_scale(coeff * child.coeff, child.child)
	else:
		return Scale(coeff, child)


class _Token(NamedTuple):
	kind: str
	value: str
	position: int


_token_re = re.compile(
		r"""
		(?P<ws>\s+)
		|(?P<number>\d+(?:\.\d+)?|\.\d+)
		|(?P<name>[A-Za-z_][A-Za-z_0-9]*)
		|(?P<op>[-+*/(),])
		""",
		re.VERBOSE,
		)

_variable_re = re.compile(r"x(\d+)")


def _tokenize(text: str) -> List[_Token]:
	tokens = []
	position = 0

	while position < len(text):
		match = _token_re.match(text, position)
		if match is None:
			raise ParseError(f"Unexpected character {text[position]!r}", position, text)

		kind = match.lastgroup
		assert kind is not None
		if kind != "ws":
			tokens.append(_Token(kind, match.group(), position))

		position = match.end()

	tokens.append(_Token("end", '', len(text)))
	return tokens


class _Parser:

	def __init__(self, text: str, n: int):
		self.text = text
		self.n = n
		self.tokens = _tokenize(text)
		self.index = 0

	@property
	def current(self) -> _Token:
		return self.tokens[self.index]

	def error(self, message: str, token: Optional[_Token] = None) -> ParseError:
		if token is None:
			token = self.current
		return ParseError(message, token.position, self.text)

	def describe(self, token: _Token) -> str:
		if token.kind == "end":
			return "end of input"
		return repr(token.value)

	def advance(self) -> _Token:
		token = self.current
		self.index += 1
		return token

	def accept(self, value: str) -> bool:
		if self.current.kind == "op" and self.current.value == value:
			self.index += 1
			return True
		return False

	def expect(self, value: str) -> _Token:
		if self.current.kind == "op" and self.current.value == value:
			return self.advance()
		raise self.error(f"Expected {value!r}, got {self.describe(self.current)}")

	def parse(self) -> ExprNode:
		expr = self.parse_sum()

		if self.current.kind != "end":
			if self.current.kind == "op" and self.current.value in "*/":
				raise self.error("Non-linear product; only rational * expression is supported")
			raise self.error(f"Unexpected {self.describe(self.current)}")

		return expr

	def parse_sum(self) -> ExprNode:
		parts: List[ExprNode] = []

		if self.accept('-'):
			parts.append(make_scale(-1, self.parse_prod()))
		else:
			self.accept('+')
			parts.append(self.parse_prod())

		while True:
			if self.accept('+'):
				parts.append(self.parse_prod())
			elif self.accept('-'):
				parts.append(make_scale(-1, self.parse_prod()))
			else:
				break

		return make_sum(parts)

	def parse_prod(self) -> ExprNode:
		if self.current.kind == "number":
			value = self.parse_rational()

			if self.accept('*'):
				if self.current.kind == "number":
					raise self.error("Expected a variable or bracketed expression after '*'")
				expr = make_scale(value, self.parse_atom())
			else:
				expr = Affine(AffineFunc.const(self.n, value))
		else:
			expr = self.parse_atom()

		if self.current.kind == "op" and self.current.value in "*/":
			raise self.error("Non-linear product; only rational * expression is supported")

		return expr

	def parse_rational(self) -> Fraction:
		token = self.advance()
		value = Fraction(token.value)

		if self.accept('/'):
			denominator = self.current
			if denominator.kind != "number" or not denominator.value.isdigit():
				raise self.error("Expected a positive integer denominator")
			self.advance()
			if int(denominator.value) == 0:
				raise self.error("Division by zero", denominator)
			value /= int(denominator.value)

		return value

	def parse_atom(self) -> ExprNode:
		token = self.current

		if token.kind == "op" and token.value == '(':
			self.advance()
			expr = self.parse_sum()
			self.expect(')')
			return expr

		if token.kind == "name":
			self.advance()

			if token.value in {"max", "min"}:
				self.expect('(')
				if self.current.kind == "op" and self.current.value == ')':
					raise self.error(f"{token.value}() requires at least one argument", token)

				args = [self.parse_sum()]
				while self.accept(','):
					args.append(self.parse_sum())
				self.expect(')')

				return Max(args) if token.value == "max" else Min(args)

			match = _variable_re.fullmatch(token.value)
			if match is None:
				raise self.error(f"Unknown name {token.value!r}", token)

			index = int(match.group(1))
			if not 1 <= index <= self.n:
				raise self.error(f"Variable {token.value!r} out of range for dimension {self.n}", token)

			return Affine(AffineFunc.variable(self.n, index))

		raise self.error(f"Unexpected {self.describe(token)}")


def parse(text: str, n: int) -> ExprNode:
	"""
	Parse ``text`` into an expression tree over :math:`\\mathbb{R}^n`.

	:param text:
	:param n: The dimension. Variables ``x1`` to ``xn`` are valid.

	:raises ParseError: if the text is not a valid expression.
	"""

	if n < 1:
		raise ValueError("The dimension must be a positive integer")

	return _Parser(text, n).parse()


def _format_atom(node: ExprNode) -> str:
	text = format_expression(node)
	if isinstance(node, Sum) or (isinstance(node, Affine) and (' ' in text or text.startswith('-'))):
		return f"({text})"
	return text


def _join_signed(parts: Sequence[str], leading_space: bool) -> str:
	buf = []

	for index, part in enumerate(parts):
		negative = part.startswith('-')
		body = part[1:] if negative else part

		if index == 0:
			if negative:
				buf.append(f"- {body}" if leading_space else f"-{body}")
			else:
				buf.append(body)
		else:
			buf.append(f" - {body}" if negative else f" + {body}")

	return ''.join(buf)


def _format_term(coeff: Fraction, term: MaxTerm) -> str:
	text = f"max({', '.join(map(format_affine, term))})"

	if coeff == 1:
		return text
	elif coeff == -1:
		return f"-{text}"
	else:
		return f"{format_rational(coeff)}*{text}"


def format_expression(obj: Union[ExprNode, LinComb]) -> str:
	"""
	Format an expression tree or a linear combination of maxima as text.

	The output parses back to the same (normalised) expression.

	:param obj:
	"""

	if isinstance(obj, LinComb):
		if not obj.terms:
			return '0'
		return _join_signed([_format_term(coeff, term) for coeff, term in obj.terms], leading_space=True)

	elif isinstance(obj, Affine):
		return format_affine(obj.func)

	elif isinstance(obj, (Max, Min)):
		name = "max" if isinstance(obj, Max) else "min"
		return f"{name}({', '.join(map(format_expression, obj.args))})"

	elif isinstance(obj, Sum):
		return _join_signed([format_expression(arg) for arg in obj.args], leading_space=False)

	elif isinstance(obj, Scale):
		if obj.coeff == -1:
			return f"-{_format_atom(obj.child)}"
		return f"{format_rational(obj.coeff)}*{_format_atom(obj.child)}"

	else:
		raise TypeError(f"Cannot format {type(obj).__name__!r} object")
