"""Exact scalar arithmetic over Z_max and its two layered extensions.

Every scalar is a ``(layer, magnitude)`` pair.  The magnitude is a Python
``int`` or :data:`NEG_INF` (the bottom element), and the layer lives in a
small "layer semiring":

* tropical      -- the Boolean semiring {ZERO, UNIT}, which makes the layered
                   construction collapse to plain max-plus arithmetic;
* symmetrized   -- the four-element semiring {ZERO, PLUS, MINUS, BALANCED};
* supertropical -- the three classes {ZERO, TANGIBLE, GHOST} of N modulo ">= 2".

Addition keeps the operand of larger magnitude and combines layers through the
layer addition table when magnitudes tie.  Multiplication adds magnitudes and
multiplies layers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import ClassVar, Union

from .errors import BalancedOrZeroHasNoSign, KindMismatch, MagnitudeOverflow

NEG_INF = float("-inf")

# Magnitudes must fit a signed 64-bit integer.  Parsed inputs stay strictly
# below INPUT_BOUND in absolute value so a single product cannot leave the range.
MAX_MAGNITUDE = 2**63 - 1
INPUT_BOUND = 2**62

Magnitude = Union[int, float]


class Kind(str, enum.Enum):
    TROP = "trop"
    SYM = "sym"
    SUP = "sup"

    @property
    def scalar_class(self) -> type[LayeredScalar]:
        return _CLASSES[self]


class TropLayer(enum.Enum):
    ZERO = 0
    UNIT = 1


class SymLayer(enum.Enum):
    ZERO = 0  # epsilon
    PLUS = 1  # 0
    MINUS = 2  # minus 0
    BALANCED = 3  # 0 balanced


class SupLayer(enum.Enum):
    ZERO = 0
    TANGIBLE = 1
    GHOST = 2


def _table(rows, layers):
    out = {}
    for a, row in zip(layers, rows):
        for b, c in zip(layers, row):
            out[a, b] = c
    return out


_T0, _T1 = TropLayer.ZERO, TropLayer.UNIT
TROP_ADD = _table([[_T0, _T1], [_T1, _T1]], list(TropLayer))
TROP_MUL = _table([[_T0, _T0], [_T0, _T1]], list(TropLayer))

_E, _P, _M, _B = SymLayer.ZERO, SymLayer.PLUS, SymLayer.MINUS, SymLayer.BALANCED
SYM_ADD = _table(
    [
        [_E, _P, _M, _B],
        [_P, _P, _B, _B],
        [_M, _B, _M, _B],
        [_B, _B, _B, _B],
    ],
    list(SymLayer),
)
SYM_MUL = _table(
    [
        [_E, _E, _E, _E],
        [_E, _P, _M, _B],
        [_E, _M, _P, _B],
        [_E, _B, _B, _B],
    ],
    list(SymLayer),
)

_Z, _1, _2 = SupLayer.ZERO, SupLayer.TANGIBLE, SupLayer.GHOST
SUP_ADD = _table([[_Z, _1, _2], [_1, _2, _2], [_2, _2, _2]], list(SupLayer))
SUP_MUL = _table([[_Z, _Z, _Z], [_Z, _1, _2], [_Z, _2, _2]], list(SupLayer))


def _check_magnitude(value: Magnitude) -> None:
    if value == NEG_INF:
        return
    if value.__class__ is not int:
        raise TypeError(f"magnitude must be an int or NEG_INF, got {value!r}")
    if not -MAX_MAGNITUDE <= value <= MAX_MAGNITUDE:
        raise MagnitudeOverflow(f"magnitude {value} outside the 64-bit range")


@dataclass(frozen=True, slots=True)
class LayeredScalar:
    """Base for the three scalar kinds.  ``+`` is the semiring sum, ``*`` the product."""

    layer: enum.Enum
    magnitude: Magnitude

    kind: ClassVar[Kind]
    layers: ClassVar[type[enum.Enum]]
    _add_table: ClassVar[dict]
    _mul_table: ClassVar[dict]
    _unit: ClassVar[enum.Enum]

    def __post_init__(self):
        if not isinstance(self.layer, self.layers):
            raise KindMismatch(f"{self.layer!r} is not a layer of {self.kind.value}")
        _check_magnitude(self.magnitude)
        if (self.magnitude == NEG_INF) != (self.layer.value == 0):
            raise ValueError("zero layer and bottom magnitude must go together")

    @classmethod
    def zero(cls):
        return cls(cls.layers(0), NEG_INF)

    @classmethod
    def one(cls):
        return cls(cls._unit, 0)

    def __add__(self, other):
        if other.__class__ is not self.__class__:
            raise KindMismatch(f"cannot add {type(self).__name__} and {type(other).__name__}")
        a, b = self.magnitude, other.magnitude
        if a > b:
            return self
        if b > a:
            return other
        layer = self._add_table[self.layer, other.layer]
        if layer is self.layer:
            return self
        return self.__class__(layer, a)

    def __mul__(self, other):
        if other.__class__ is not self.__class__:
            raise KindMismatch(f"cannot multiply {type(self).__name__} and {type(other).__name__}")
        mag = self.magnitude + other.magnitude
        if mag == NEG_INF:
            return self.zero()
        if not -MAX_MAGNITUDE <= mag <= MAX_MAGNITUDE:
            raise MagnitudeOverflow(f"{self.magnitude} + {other.magnitude} overflows")
        return self.__class__(self._mul_table[self.layer, other.layer], mag)

    def __abs__(self) -> TropScalar:
        return modulus(self)

    @property
    def is_zero(self) -> bool:
        return self.layer.value == 0

    def with_magnitude(self, magnitude: Magnitude):
        """Same layer, new magnitude (bottom maps to zero)."""
        if magnitude == NEG_INF:
            return self.zero()
        return self.__class__(self.layer, magnitude)

    def token(self) -> str:
        """ASCII token used by the file formats."""
        if self.is_zero:
            return "z"
        return self._prefixes[self.layer] + str(self.magnitude)

    def __str__(self):
        if self.is_zero:
            return "𝟎"
        pre, post = self._glyphs[self.layer]
        return f"{pre}{self.magnitude}{post}"


class TropScalar(LayeredScalar):
    __slots__ = ()
    kind = Kind.TROP
    layers = TropLayer
    _add_table = TROP_ADD
    _mul_table = TROP_MUL
    _unit = TropLayer.UNIT
    _prefixes = {TropLayer.UNIT: ""}
    _glyphs = {TropLayer.UNIT: ("", "")}

    @classmethod
    def of(cls, value: Magnitude) -> TropScalar:
        if value == NEG_INF:
            return cls.zero()
        return cls(TropLayer.UNIT, value)

    @property
    def value(self) -> Magnitude:
        return self.magnitude

    def __str__(self):
        return "-∞" if self.is_zero else str(self.magnitude)

    def __repr__(self):
        return f"TropScalar({self})"


class SymScalar(LayeredScalar):
    __slots__ = ()
    kind = Kind.SYM
    layers = SymLayer
    _add_table = SYM_ADD
    _mul_table = SYM_MUL
    _unit = SymLayer.PLUS
    _prefixes = {SymLayer.PLUS: "", SymLayer.MINUS: "n:", SymLayer.BALANCED: "b:"}
    _glyphs = {
        SymLayer.PLUS: ("", ""),
        SymLayer.MINUS: ("⊖", ""),
        SymLayer.BALANCED: ("", "•"),
    }

    @classmethod
    def plus(cls, value: Magnitude) -> SymScalar:
        return cls.zero() if value == NEG_INF else cls(SymLayer.PLUS, value)

    @classmethod
    def minus(cls, value: Magnitude) -> SymScalar:
        return cls.zero() if value == NEG_INF else cls(SymLayer.MINUS, value)

    @classmethod
    def balanced(cls, value: Magnitude) -> SymScalar:
        return cls.zero() if value == NEG_INF else cls(SymLayer.BALANCED, value)

    def __neg__(self) -> SymScalar:
        return self * _SYM_MINUS_ONE

    def __repr__(self):
        return f"SymScalar({self})"


class SupScalar(LayeredScalar):
    __slots__ = ()
    kind = Kind.SUP
    layers = SupLayer
    _add_table = SUP_ADD
    _mul_table = SUP_MUL
    _unit = SupLayer.TANGIBLE
    _prefixes = {SupLayer.TANGIBLE: "", SupLayer.GHOST: "g:"}
    _glyphs = {SupLayer.TANGIBLE: ("", ""), SupLayer.GHOST: ("", "°")}

    @classmethod
    def tangible(cls, value: Magnitude) -> SupScalar:
        return cls.zero() if value == NEG_INF else cls(SupLayer.TANGIBLE, value)

    @classmethod
    def ghost(cls, value: Magnitude) -> SupScalar:
        return cls.zero() if value == NEG_INF else cls(SupLayer.GHOST, value)

    def __repr__(self):
        return f"SupScalar({self})"


_CLASSES = {Kind.TROP: TropScalar, Kind.SYM: SymScalar, Kind.SUP: SupScalar}
_SYM_MINUS_ONE = SymScalar(SymLayer.MINUS, 0)


def add(a: LayeredScalar, b: LayeredScalar) -> LayeredScalar:
    return a + b


def mul(a: LayeredScalar, b: LayeredScalar) -> LayeredScalar:
    return a * b


def modulus(a: LayeredScalar) -> TropScalar:
    """Projection onto the magnitude, as a tropical scalar."""
    return TropScalar.of(a.magnitude)


def sign(a: SymScalar) -> SymLayer:
    """PLUS or MINUS for a signed symmetrized scalar."""
    if not isinstance(a, SymScalar):
        raise KindMismatch("sign is defined for symmetrized scalars only")
    if a.layer not in (SymLayer.PLUS, SymLayer.MINUS):
        raise BalancedOrZeroHasNoSign(f"{a} has no sign")
    return a.layer


def opposite(s: SymLayer) -> SymLayer:
    return SYM_MUL[s, SymLayer.MINUS]


def is_zero(a: LayeredScalar) -> bool:
    return a.layer.value == 0


def is_signed(a: LayeredScalar) -> bool:
    return a.layer is SymLayer.PLUS or a.layer is SymLayer.MINUS


def is_balanced(a: LayeredScalar) -> bool:
    return a.layer is SymLayer.BALANCED


def is_tangible(a: LayeredScalar) -> bool:
    return a.layer is SupLayer.TANGIBLE


def is_ghost(a: LayeredScalar) -> bool:
    return a.layer is SupLayer.GHOST


def scalar_class(kind: Kind | str) -> type[LayeredScalar]:
    return Kind(kind).scalar_class


def nonzero_layers(kind: Kind | str) -> list[enum.Enum]:
    return [layer for layer in Kind(kind).scalar_class.layers if layer.value != 0]


_TOKEN_LAYERS = {
    Kind.TROP: {"": TropLayer.UNIT},
    Kind.SYM: {"": SymLayer.PLUS, "n": SymLayer.MINUS, "b": SymLayer.BALANCED},
    Kind.SUP: {"": SupLayer.TANGIBLE, "g": SupLayer.GHOST},
}
_ALL_PREFIXES = {"", "n", "b", "g"}


def parse_token(kind: Kind | str, text: str) -> LayeredScalar:
    """Parse one scalar token (``z``, ``K``, ``n:K``, ``b:K``, ``g:K``).

    Raises ``ValueError`` for malformed tokens and :class:`KindMismatch` when a
    well-formed token belongs to another kind.
    """
    kind = Kind(kind)
    cls = kind.scalar_class
    if text == "z":
        return cls.zero()
    prefix, _, digits = text.rpartition(":")
    if prefix not in _ALL_PREFIXES:
        raise ValueError(f"unknown token prefix in {text!r}")
    if prefix not in _TOKEN_LAYERS[kind]:
        raise KindMismatch(f"token {text!r} is not a {kind.value} scalar")
    try:
        value = int(digits)
    except ValueError:
        raise ValueError(f"bad magnitude in token {text!r}") from None
    if digits.strip() != digits or "_" in digits:
        raise ValueError(f"bad magnitude in token {text!r}")
    if abs(value) >= INPUT_BOUND:
        raise MagnitudeOverflow(f"token {text!r} is not below the input bound 2**62")
    return cls(_TOKEN_LAYERS[kind][prefix], value)
