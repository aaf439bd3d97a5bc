"""Elements of Q/Z, the additive model of U(1)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Phase:
    """A rational number modulo 1, stored as ``num/den`` with ``0 <= num < den``.

    The multiplicative value is ``exp(2 pi i num/den)``.  Everything that the
    library calls a U(1) product is a ``Phase`` sum.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: int = 0, den: int = 1) -> None:
        if den == 0:
            raise ZeroDivisionError("phase denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if num == 0:
            den = 1
        self._num = num
        self._den = den

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> Phase:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text: str) -> Phase:
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            return cls(int(p), int(q))
        return cls(int(text), 1)

    @classmethod
    def coerce(cls, value) -> Phase:
        if isinstance(value, Phase):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls.from_fraction(value)

    @property
    def num(self) -> int:
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def order(self) -> int:
        return self._den

    def as_fraction(self) -> Fraction:
        return Fraction(self._num, self._den)

    def is_zero(self) -> bool:
        return self._num == 0

    def __add__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._num * other._den + other._num * self._den, self._den * other._den)

    def __sub__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._num * other._den - other._num * self._den, self._den * other._den)

    def __neg__(self) -> Phase:
        return Phase(-self._num, self._den)

    def __mul__(self, k: int) -> Phase:
        if not isinstance(k, int):
            return NotImplemented
        return Phase(self._num * k, self._den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Phase):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Phase.from_fraction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((Phase, self._num, self._den))

    def __bool__(self) -> bool:
        return self._num != 0

    def __str__(self) -> str:
        return f"{self._num}/{self._den}"

    def __repr__(self) -> str:
        return f"Phase({self._num}, {self._den})"


ZERO = Phase(0, 1)


def phase_add(a: Phase, b: Phase) -> Phase:
    return a + b


def phase_sum(values) -> Phase:
    total = ZERO
    for v in values:
        total = total + v
    return total


def common_order(phases) -> int:
    """Least common multiple of the denominators (1 for an empty collection)."""
    n = 1
    for p in phases:
        n = n * p.den // gcd(n, p.den)
    return n
