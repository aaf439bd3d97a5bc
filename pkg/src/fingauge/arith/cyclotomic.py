"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a polynomial in ``zeta_N`` with rational coefficients, reduced
modulo the N-th cyclotomic polynomial, so equal values have equal
coefficient vectors once brought to a common order.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .phase import Phase


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are low degree first
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                num[i - dq + j] -= c * den[j]
    rem = num[:dq] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
        assert not any(rem)
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of zeta_n**k for 0 <= k < 2*deg."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    for k in range(max(2 * deg - 1, n)):
        mono = [0] * k + [1]
        _, rem = _poly_divmod(mono, list(phi))
        rem = rem + [0] * (deg - len(rem))
        rows.append(tuple(rem[:deg]))
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_N) with canonical coefficient vector."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        deg = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = self._reduce(order, cs)
        cs = cs + [Fraction(0)] * (deg - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def _reduce(order: int, cs: list[Fraction]) -> list[Fraction]:
        table = _power_table(order)
        deg = euler_phi(order)
        out = [Fraction(0)] * deg
        for k, c in enumerate(cs):
            if not c:
                continue
            if k >= len(table):
                k %= order
            for j, t in enumerate(table[k]):
                if t:
                    out[j] += c * t
        return out

    # construction

    @classmethod
    def rational(cls, value, order: int = 1) -> Cyclotomic:
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int = 1) -> Cyclotomic:
        return cls(order, [])

    @classmethod
    def one(cls, order: int = 1) -> Cyclotomic:
        return cls(order, [1])

    @classmethod
    def zeta_power(cls, order: int, k: int) -> Cyclotomic:
        k %= order
        return cls(order, [0] * k + [1])

    @classmethod
    def from_phase(cls, phase: Phase, order: int | None = None) -> Cyclotomic:
        if order is None:
            order = phase.den
        if order % phase.den:
            raise ValueError(f"phase {phase} does not embed in Q(zeta_{order})")
        return cls.zeta_power(order, phase.num * (order // phase.den))

    # order changes

    def lift(self, order: int) -> Cyclotomic:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        cs = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            cs[k * step] = c
        return Cyclotomic(order, cs)

    def _align(self, other) -> tuple[Cyclotomic, Cyclotomic]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other, self.order)
        if other.order == self.order:
            return self, other
        n = _lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    # arithmetic

    def __add__(self, other) -> Cyclotomic:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> Cyclotomic:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        deg = len(a.coeffs)
        if deg == 1:
            return Cyclotomic(a.order, [a.coeffs[0] * b.coeffs[0]])
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.order, self._reduce(a.order, prod))

    __rmul__ = __mul__

    def _mult_matrix(self) -> list[list[Fraction]]:
        deg = len(self.coeffs)
        cols = []
        for k in range(deg):
            cols.append((self * Cyclotomic.zeta_power(self.order, k)).coeffs)
        return [[cols[j][i] for j in range(deg)] for i in range(deg)]

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        deg = len(self.coeffs)
        if deg == 1:
            return Cyclotomic(self.order, [1 / self.coeffs[0]])
        m = self._mult_matrix()
        aug = [row + [Fraction(int(i == 0))] for i, row in enumerate(m)]
        for col in range(deg):
            piv = next(r for r in range(col, deg) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(deg):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return Cyclotomic(self.order, [aug[i][deg] for i in range(deg)])

    def __truediv__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # values of different orders can be equal

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Cyclotomic:
        return cls(int(obj["order"]), [Fraction(c) for c in obj["coeffs"]])

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z{self.order}^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"


def phase_to_cyclotomic(a: Phase, n: int) -> Cyclotomic:
    """``zeta_n ** (a*n)``; ``a.den`` must divide ``n``."""
    return Cyclotomic.from_phase(a, n)


def phase_weight_sum(counts, order: int | None = None) -> Cyclotomic:
    """Sum ``count * embed(phase)`` over a mapping ``Phase -> int``."""
    if order is None:
        order = 1
        for p in counts:
            order = _lcm(order, p.den)
    cs = [Fraction(0)] * order
    for p, c in counts.items():
        cs[p.num * (order // p.den)] += c
    return Cyclotomic(order, cs)
