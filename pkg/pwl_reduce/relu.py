#!/usr/bin/env python
#
#  relu.py
"""
Compile linear combinations of maxima into feed-forward ReLU networks.

Each maximum is computed by a balanced tree of binary maxima using
:math:`\\max(a, b) = a + \\operatorname{relu}(b - a)`.
Values needed by later layers are carried forward:
inputs as :math:`x = \\operatorname{relu}(x) - \\operatorname{relu}(-x)`,
and outputs of earlier ReLU neurons (which are non-negative) through identity ReLU neurons.
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
from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

# 3rd party
import attr
from typing_extensions import Literal

# this package
from pwl_reduce.core import AffineFunc, DimensionError, LinComb
from pwl_reduce.utils import RationalLike, as_rational, dot, format_rational

__all__ = [
		"Activation",
		"InexactWarning",
		"WidthWarning",
		"Layer",
		"ReluNetwork",
		"NetworkStats",
		"emit",
		"eval_network",
		"stats",
		"depth_bound",
		"relu_layers_needed",
		]

logger = logging.getLogger(__name__)

Activation = Literal["relu", "linear"]


class InexactWarning(UserWarning):
	"""
	Warning issued when a network is written with floating point numbers.
	"""


class WidthWarning(UserWarning):
	"""
	Warning issued when a hidden layer has more than :math:`2n + N` neurons,
	for ``N`` maxima in ``n`` variables.
	"""


def _to_matrix(rows: Sequence[Sequence[RationalLike]]) -> Tuple[Tuple[Fraction, ...], ...]:
	return tuple(tuple(map(as_rational, row)) for row in rows)


def _to_vector(values: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
	return tuple(map(as_rational, values))


def _load_number(value: Union[str, int, float]) -> Fraction:
	if isinstance(value, float):
		return Fraction(repr(value))
	return as_rational(value)


@attr.s(frozen=True, slots=True)
class Layer:
	"""
	A fully connected layer: one row of ``weights`` and one ``bias`` entry per neuron.
	"""

	weights: Tuple[Tuple[Fraction, ...], ...] = attr.ib(converter=_to_matrix)
	bias: Tuple[Fraction, ...] = attr.ib(converter=_to_vector)
	activation: Activation = attr.ib(default="relu")

	@bias.validator
	def _check_bias(self, attribute: "attr.Attribute", value: Tuple[Fraction, ...]) -> None:
		if len(value) != len(self.weights):
			raise ValueError(f"Expected {len(self.weights)} bias entries, got {len(value)}")

	@activation.validator
	def _check_activation(self, attribute: "attr.Attribute", value: str) -> None:
		if value not in {"relu", "linear"}:
			raise ValueError(f"Unknown activation {value!r}")

	@property
	def width(self) -> int:
		"""
		The number of neurons.
		"""

		return len(self.weights)

	def __call__(self, inputs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
		outputs = (dot(row, inputs) + b for row, b in zip(self.weights, self.bias))

		if self.activation == "relu":
			return tuple(max(value, Fraction(0)) for value in outputs)
		return tuple(outputs)

	def to_dict(self, floats: bool = False) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the layer.

		:param floats: Write numbers as floats rather than exact ``'p/q'`` strings.
		"""

		convert = float if floats else format_rational

		return {
				"weights": [[convert(w) for w in row] for row in self.weights],
				"bias": [convert(b) for b in self.bias],
				"activation": self.activation,
				}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "Layer":
		"""
		Construct a :class:`~.Layer` from a dictionary created by :meth:`~.Layer.to_dict`.

		:param data:
		"""

		return cls(
				[[_load_number(w) for w in row] for row in data["weights"]],
				[_load_number(b) for b in data["bias"]],
				data.get("activation", "relu"),
				)


@attr.s(frozen=True, slots=True)
class ReluNetwork:
	"""
	A feed-forward network with ReLU hidden layers and a single linear output neuron.
	"""

	#: The number of inputs.
	n_in: int = attr.ib(converter=int)

	layers: Tuple[Layer, ...] = attr.ib(converter=tuple)

	@layers.validator
	def _check_layers(self, attribute: "attr.Attribute", value: Tuple[Layer, ...]) -> None:
		if not value:
			raise ValueError("A network needs at least one layer")

		width = self.n_in
		for index, layer in enumerate(value):
			for row in layer.weights:
				if len(row) != width:
					raise ValueError(f"Layer {index} expects {len(row)} inputs, but receives {width}")
			width = layer.width

			expected = "linear" if index == len(value) - 1 else "relu"
			if layer.activation != expected:
				raise ValueError(f"Layer {index} must have a {expected!r} activation")

		if width != 1:
			raise ValueError("The output layer must have exactly one neuron")

	@property
	def n(self) -> int:
		"""
		The dimension of the input space.
		"""

		return self.n_in

	def __call__(self, x: Sequence[RationalLike]) -> Fraction:
		return eval_network(self, x)

	def to_dict(self, floats: bool = False) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary representation of the network.

		:param floats: Write numbers as IEEE 754 doubles rather than exact ``'p/q'`` strings.
			The network then only agrees with the source combination up to rounding.
		"""

		if floats:
			warnings.warn(
					"Writing network weights as floating point numbers; "
					"values are no longer exact (compare with a tolerance of 1e-9).",
					InexactWarning,
					stacklevel=2,
					)

		return {"n_in": self.n_in, "layers": [layer.to_dict(floats) for layer in self.layers]}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "ReluNetwork":
		"""
		Construct a :class:`~.ReluNetwork` from a dictionary created by :meth:`~.ReluNetwork.to_dict`.

		:param data:
		"""

		return cls(data["n_in"], [Layer.from_dict(layer) for layer in data["layers"]])


def eval_network(net: ReluNetwork, x: Sequence[RationalLike]) -> Fraction:
	"""
	Evaluate a network at ``x`` using exact arithmetic.

	:param net:
	:param x:
	"""

	if len(x) != net.n_in:
		raise DimensionError(net.n_in, len(x), "input")

	values = tuple(map(as_rational, x))
	for layer in net.layers:
		values = layer(values)

	return values[0]


@attr.s(frozen=True, slots=True)
class NetworkStats:
	"""
	Size statistics for a :class:`~.ReluNetwork`.
	"""

	#: The total number of layers, including the linear output layer.
	depth: int = attr.ib()

	#: The number of neurons in the widest layer.
	max_width: int = attr.ib()

	#: The number of neurons in each layer.
	widths: Tuple[int, ...] = attr.ib(converter=tuple)

	@property
	def relu_layers(self) -> int:
		"""
		The number of hidden (ReLU) layers.
		"""

		return self.depth - 1

	def to_dict(self) -> Dict[str, Any]:
		"""
		Returns a JSON-serialisable dictionary of the statistics.
		"""

		return {"depth": self.depth, "max_width": self.max_width, "widths": list(self.widths)}


def stats(net: ReluNetwork) -> NetworkStats:
	"""
	Returns the depth and widths of ``net``.

	:param net:
	"""

	widths = [layer.width for layer in net.layers]
	return NetworkStats(len(widths), max(widths), widths)


def depth_bound(n: int) -> int:
	"""
	Returns :math:`\\lceil \\log_2(n + 1) \\rceil + 1`,
	the number of layers needed for a combination of maxima of at most ``n + 1`` functions.

	:param n: The dimension.
	"""

	return n.bit_length() + 1


def relu_layers_needed(k: int) -> int:
	"""
	Returns :math:`\\lceil \\log_2 k \\rceil`, the depth of a balanced binary tree with ``k`` leaves.

	:param k:
	"""

	return (k - 1).bit_length()


@attr.s(slots=True)
class _Value:
	# xpart(x) + sum(weight * neuron) over neurons of the current layer
	xpart: AffineFunc = attr.ib()
	atoms: Dict[int, Fraction] = attr.ib(factory=dict)

	@property
	def carry_cost(self) -> int:
		return sum(1 for g in self.xpart.gradient if g) + len(self.atoms)

	def __add__(self, other: "_Value") -> "_Value":
		atoms: Dict[int, Fraction] = defaultdict(Fraction, self.atoms)
		for index, weight in other.atoms.items():
			atoms[index] += weight
		return _Value(self.xpart + other.xpart, {i: w for i, w in atoms.items() if w})

	def scale(self, factor: Fraction) -> "_Value":
		return _Value(self.xpart.scale(factor), {i: factor * w for i, w in self.atoms.items() if factor * w})

	def __sub__(self, other: "_Value") -> "_Value":
		return self + other.scale(-1)


@attr.s(slots=True)
class _LayerInputs:
	# How the inputs of the layer being built are laid out.
	width: int = attr.ib()
	positive: Optional[Dict[int, int]] = attr.ib(default=None)
	negative: Optional[Dict[int, int]] = attr.ib(default=None)

	def express(self, value: _Value) -> Tuple[Tuple[Fraction, ...], Fraction]:
		row = [Fraction(0)] * self.width

		if self.positive is None or self.negative is None:
			if value.atoms:
				raise ValueError("The input layer has no neurons")
			row[:] = value.xpart.gradient
		else:
			for j, g in enumerate(value.xpart.gradient):
				if g:
					row[self.positive[j]] += g
					row[self.negative[j]] -= g
			for index, weight in value.atoms.items():
				row[index] += weight

		return tuple(row), value.xpart.constant


class _LayerBuilder:

	def __init__(self, inputs: _LayerInputs):
		self.inputs = inputs
		self.rows: List[Tuple[Fraction, ...]] = []
		self.biases: List[Fraction] = []
		self._index: Dict[Tuple[Tuple[Fraction, ...], Fraction], int] = {}

	def neuron(self, value: _Value) -> int:
		key = self.inputs.express(value)
		if key not in self._index:
			self._index[key] = len(self.rows)
			self.rows.append(key[0])
			self.biases.append(key[1])
		return self._index[key]

	def carry(self, value: _Value) -> _Value:
		n = value.xpart.n
		atoms = {}
		for index, weight in value.atoms.items():
			identity = _Value(AffineFunc.zero(n), {index: Fraction(1)})
			atoms[self.neuron(identity)] = weight
		return _Value(value.xpart, atoms)

	def carry_inputs(self, values: Sequence[_Value]) -> _LayerInputs:
		n = values[0].xpart.n if values else 0
		needed = sorted({j for value in values for j, g in enumerate(value.xpart.gradient) if g})
		positive, negative = {}, {}

		for j in needed:
			positive[j] = self.neuron(_Value(AffineFunc.variable(n, j + 1)))
			negative[j] = self.neuron(_Value(-AffineFunc.variable(n, j + 1)))

		return _LayerInputs(len(self.rows), positive, negative)

	def layer(self, activation: Activation = "relu") -> Layer:
		return Layer(self.rows, self.biases, activation)


def emit(c: LinComb) -> ReluNetwork:
	"""
	Compile ``c`` into a ReLU network which computes it exactly.

	The network has :math:`\\lceil \\log_2 k \\rceil` ReLU layers, where ``k`` is the largest
	number of constituents in a term, followed by one linear layer.

	:param c:
	"""

	groups = [[_Value(f) for f in term] for _, term in c.terms]
	inputs = _LayerInputs(c.n)
	layers: List[Layer] = []

	while any(len(group) > 1 for group in groups):
		builder = _LayerBuilder(inputs)
		new_groups = []

		for group in groups:
			new_group = []

			for i in range(0, len(group) - 1, 2):
				a, b = group[i], group[i + 1]
				base, other = (b, a) if b.carry_cost < a.carry_cost else (a, b)
				# max(base, other) == base + relu(other - base)
				step = builder.neuron(other - base)
				carried = builder.carry(base)
				carried.atoms[step] = carried.atoms.get(step, Fraction(0)) + 1
				new_group.append(carried)

			if len(group) % 2:
				new_group.append(builder.carry(group[-1]))

			new_groups.append(new_group)

		inputs = builder.carry_inputs([value for group in new_groups for value in group])
		layers.append(builder.layer())
		groups = new_groups

	output = _Value(AffineFunc.zero(c.n))
	for (coeff, _), (value, ) in zip(c.terms, groups):
		output = output + value.scale(coeff)

	row, bias = inputs.express(output)
	layers.append(Layer([row], [bias], "linear"))

	network = ReluNetwork(c.n, layers)
	widths = stats(network).widths
	logger.info("Emitted network with layer widths %s", widths)

	limit = 2 * c.n + len(c.terms)
	if any(width > limit for width in widths[:-1]):
		warnings.warn(f"Hidden layer width {max(widths[:-1])} exceeds 2n + N = {limit}", WidthWarning, stacklevel=2)

	return network
