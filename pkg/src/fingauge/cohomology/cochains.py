"""Group cochains with Q/Z values and the bar differential.

Composite convention: a simplex with edges ``g`` then ``h`` has long edge
``hg`` (``G.then(g, h)``), so the bar differential reads

    (dc)(g1..g_{n+1}) = c(g2..g_{n+1})
                        + sum_i (-1)^i c(g1.., g_{i+1} g_i, ..g_{n+1})
                        + (-1)^{n+1} c(g1..g_n)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..arith.phase import ZERO, Phase, common_order
from ..groupoids.group import FiniteGroup


class CocycleError(ValueError):
    """A cochain fails a cocycle condition that an operation requires."""


@dataclass(frozen=True, eq=False)
class GroupCochain:
    """A map ``G^n -> Q/Z``; tuples absent from ``values`` are zero."""

    group: FiniteGroup
    degree: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.values.items():
            key = tuple(int(a) for a in k)
            if len(key) != self.degree:
                raise ValueError(f"cochain key {key} has wrong length for degree {self.degree}")
            if any(not 0 <= a < self.group.order for a in key):
                raise ValueError(f"cochain key {key} is not a tuple of group elements")
            v = Phase.coerce(v)
            if v:
                clean[key] = v
        object.__setattr__(self, "values", clean)

    @classmethod
    def from_function(cls, G: FiniteGroup, degree: int, fn) -> GroupCochain:
        return cls(G, degree, {t: fn(*t) for t in itertools.product(range(G.order), repeat=degree)})

    @classmethod
    def zero(cls, G: FiniteGroup, degree: int) -> GroupCochain:
        return cls(G, degree, {})

    def __call__(self, *args: int) -> Phase:
        return self.values.get(args, ZERO)

    def tuples(self):
        return itertools.product(range(self.group.order), repeat=self.degree)

    @property
    def normalized(self) -> bool:
        return all(0 not in k for k in self.values)

    @property
    def order(self) -> int:
        return common_order(self.values.values())

    def _check_compatible(self, other: GroupCochain) -> None:
        if other.group is not self.group and other.group.table != self.group.table:
            raise ValueError("cochains live on different groups")
        if other.degree != self.degree:
            raise ValueError("cochains have different degrees")

    def __add__(self, other: GroupCochain) -> GroupCochain:
        self._check_compatible(other)
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, ZERO) + v
        return GroupCochain(self.group, self.degree, vals)

    def __neg__(self) -> GroupCochain:
        return GroupCochain(self.group, self.degree, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: GroupCochain) -> GroupCochain:
        return self + (-other)

    def __mul__(self, k: int) -> GroupCochain:
        return GroupCochain(self.group, self.degree, {t: v * k for t, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupCochain):
            return NotImplemented
        return self.degree == other.degree and self.group.table == other.group.table and self.values == other.values

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.values

    def with_value(self, key, value) -> GroupCochain:
        vals = dict(self.values)
        vals[tuple(key)] = Phase.coerce(value)
        return GroupCochain(self.group, self.degree, vals)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "degree": self.degree,
            "values": {",".join(map(str, k)): str(v) for k, v in sorted(self.values.items())},
        }

    def __repr__(self) -> str:
        return f"GroupCochain({self.group.name}, degree={self.degree}, support={len(self.values)})"


def differential(c: GroupCochain) -> GroupCochain:
    G, n = c.group, c.degree
    vals = {}
    for t in itertools.product(range(G.order), repeat=n + 1):
        acc = c(*t[1:])
        for i in range(1, n + 1):
            merged = t[: i - 1] + (G.then(t[i - 1], t[i]),) + t[i + 1 :]
            term = c(*merged)
            acc = acc - term if i % 2 else acc + term
        last = c(*t[:n])
        acc = acc + last if (n + 1) % 2 == 0 else acc - last
        if acc:
            vals[t] = acc
    return GroupCochain(G, n + 1, vals)


def three_cocycle_defect(alpha: GroupCochain, g: int, h: int, k: int, l: int) -> Phase:
    """LHS - RHS of
    a(g,h,k) a(g,kh,l) a(h,k,l) = a(hg,k,l) a(g,h,lk), written additively."""
    G = alpha.group
    kh, hg, lk = G.mul(k, h), G.mul(h, g), G.mul(l, k)
    lhs = alpha(g, h, k) + alpha(g, kh, l) + alpha(h, k, l)
    rhs = alpha(hg, k, l) + alpha(g, h, lk)
    return lhs - rhs


def is_three_cocycle(alpha: GroupCochain) -> bool:
    if alpha.degree != 3:
        raise ValueError("is_three_cocycle needs a degree-3 cochain")
    r = range(alpha.group.order)
    return all(not three_cocycle_defect(alpha, g, h, k, l) for g, h, k, l in itertools.product(r, repeat=4))


def is_cocycle(c: GroupCochain) -> bool:
    return differential(c).is_zero()


def cyclic_three_cocycle(n: int, p: int, G: FiniteGroup | None = None) -> GroupCochain:
    """``a_p(a, b, c) = p a floor((b + c)/n) / n`` on Z/n."""
    if not 0 <= p < n:
        raise ValueError("need 0 <= p < n")
    if G is None:
        from ..groupoids.group import cyclic_group

        G = cyclic_group(n)
    elif G.order != n:
        raise ValueError("group order does not match n")
    vals = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        num = p * a * ((b + c) // n)
        if num % n:
            vals[(a, b, c)] = Phase(num, n)
    return GroupCochain(G, 3, vals)
