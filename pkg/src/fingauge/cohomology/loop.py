"""Cochains on the loop groupoid: 2-cochains ``(x; g, h)`` and 1-cochains ``(x, g)``.

A composable pair in Lambda G is ``x --g--> gxg^-1 --h--> (hg)x(hg)^-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..arith.phase import ZERO, Phase, common_order
from ..arith.snf import solve_inhomogeneous_mod
from ..groupoids.group import FiniteGroup


@dataclass(frozen=True, eq=False)
class LoopTwoCochain:
    group: FiniteGroup
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.values.items():
            key = tuple(int(a) for a in k)
            if len(key) != 3:
                raise ValueError("loop 2-cochain keys are triples (x, g, h)")
            v = Phase.coerce(v)
            if v:
                clean[key] = v
        object.__setattr__(self, "values", clean)

    @classmethod
    def zero(cls, G: FiniteGroup) -> LoopTwoCochain:
        return cls(G, {})

    def __call__(self, x: int, g: int, h: int) -> Phase:
        return self.values.get((x, g, h), ZERO)

    @property
    def normalized(self) -> bool:
        return all(g != 0 and h != 0 for _, g, h in self.values)

    @property
    def order(self) -> int:
        return common_order(self.values.values())

    def __add__(self, other: LoopTwoCochain) -> LoopTwoCochain:
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, ZERO) + v
        return LoopTwoCochain(self.group, vals)

    def __neg__(self) -> LoopTwoCochain:
        return LoopTwoCochain(self.group, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: LoopTwoCochain) -> LoopTwoCochain:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LoopTwoCochain):
            return NotImplemented
        return self.group.table == other.group.table and self.values == other.values

    __hash__ = None

    def with_value(self, key, value) -> LoopTwoCochain:
        vals = dict(self.values)
        vals[tuple(key)] = Phase.coerce(value)
        return LoopTwoCochain(self.group, vals)

    def is_zero(self) -> bool:
        return not self.values

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "values": {";".join(map(str, k)): str(v) for k, v in sorted(self.values.items())},
        }


def loop_cocycle_defect(w: LoopTwoCochain, x: int, g: int, h: int, k: int) -> Phase:
    G = w.group
    y = G.conj(g, x)
    return w(x, g, h) + w(x, G.then(g, h), k) - w(y, h, k) - w(x, g, G.then(h, k))


def is_loop_two_cocycle(w: LoopTwoCochain) -> bool:
    """``w(x;g,h) + w(x;hg,k) == w(gxg^-1;h,k) + w(x;g,kh)`` everywhere."""
    r = range(w.group.order)
    return all(not loop_cocycle_defect(w, x, g, h, k) for x, g, h, k in itertools.product(r, repeat=4))


def loop_differential(theta: dict, G: FiniteGroup) -> LoopTwoCochain:
    """``(d theta)(x; g, h) = theta(x,g) + theta(gxg^-1,h) - theta(x,hg)`` for a
    1-cochain given as ``{(x, g): Phase}``."""

    def t(x, g):
        return theta.get((x, g), ZERO)

    vals = {}
    for x, g, h in itertools.product(range(G.order), repeat=3):
        vals[(x, g, h)] = t(x, g) + t(G.conj(g, x), h) - t(x, G.then(g, h))
    return LoopTwoCochain(G, vals)


def loop_coboundary_witness(w: LoopTwoCochain, M: int) -> dict | None:
    """A 1-cochain ``theta`` valued in (1/M)Z/Z with ``d theta = w``, else ``None``."""
    G = w.group
    n = G.order
    cols = list(itertools.product(range(n), repeat=2))
    cidx = {c: i for i, c in enumerate(cols)}
    rows, target = [], []
    for x, g, h in itertools.product(range(n), repeat=3):
        row = [0] * len(cols)
        row[cidx[(x, g)]] += 1
        row[cidx[(G.conj(g, x), h)]] += 1
        row[cidx[(x, G.then(g, h))]] -= 1
        rows.append(row)
        v = w(x, g, h)
        if M % v.den:
            raise ValueError(f"value {v} does not lie in (1/{M})Z/Z")
        target.append(v.num * (M // v.den))
    sol = solve_inhomogeneous_mod(rows, target, M, cols=len(cols))
    if sol is None:
        return None
    return {c: Phase(v, M) for c, v in zip(cols, sol) if v % M}
