"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
from functools import cached_property


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group on ``range(order)`` with element 0 the identity.

    ``mul(a, b)`` is the ordinary table product ``a*b``.  Composition of
    morphisms in BG (first ``g``, then ``h``) is ``then(g, h) == mul(h, g)``.
    """

    def __init__(self, table, name: str = "G", labels=None, check: bool = True) -> None:
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))
        if check:
            _validate(self.table)
        self.inverses = tuple(
            next(b for b in range(self.order) if self.table[a][b] == 0) for a in range(self.order)
        )

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def then(self, g: int, h: int) -> int:
        """Composite of ``g`` followed by ``h``: the element ``hg``."""
        return self.table[h][g]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        t = self.table
        return t[t[g][x]][self.inverses[g]]

    def power(self, a: int, k: int) -> int:
        r = 0
        base = a if k >= 0 else self.inverses[a]
        for _ in range(abs(k)):
            r = self.table[r][base]
        return r

    def element_order(self, a: int) -> int:
        k, r = 1, a
        while r != 0:
            r = self.table[r][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self for b in self)

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        e = 1
        for a in self:
            e = lcm(e, self.element_order(a))
        return e

    def centralizer(self, x: int) -> list[int]:
        return [g for g in self if self.table[g][x] == self.table[x][g]]

    def subgroup_generated(self, gens) -> list[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        span = {0}
        for a in self:
            if a not in span:
                gens.append(a)
                span = set(self.subgroup_generated(gens))
        return gens

    def to_json(self) -> dict:
        return {"name": self.name, "table": [list(r) for r in self.table]}


def _validate(table) -> None:
    n = len(table)
    if n == 0:
        raise GroupError("empty table")
    for r in table:
        if len(r) != n:
            raise GroupError("table is not square")
        for v in r:
            if not 0 <= v < n:
                raise GroupError(f"entry {v} out of range")
    if any(table[0][a] != a or table[a][0] != a for a in range(n)):
        raise GroupError("element 0 is not a two-sided identity")
    for a in range(n):
        if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(n)):
            raise GroupError(f"no inverse for element {a}")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(f"not associative at ({a}, {b}, {c})")


def group_from_table(table, name: str = "G") -> FiniteGroup:
    return FiniteGroup(table, name=name)


def group_from_permutations(gens, name: str = "G") -> FiniteGroup:
    """Close a set of permutations (image lists) under composition.

    Elements are ordered breadth-first from the identity; ``mul(a, b)`` is the
    permutation ``a o b`` (apply ``b`` first).
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise GroupError("need at least one generator")
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple(a[g[i]] for i in range(n))
                if b not in index:
                    index[b] = len(elems)
                    elems.append(b)
                    nxt.append(b)
        frontier = nxt
    table = [[index[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems]
    return FiniteGroup(table, name=name, labels=[str(list(p)) for p in elems], check=False)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}", check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Elements ``(g, h)`` indexed as ``g * |H| + h``."""
    m = H.order
    table = [
        [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    labels = [f"({G.labels[a // m]},{H.labels[a % m]})" for a in range(G.order * m)]
    return FiniteGroup(table, name=f"{G.name}x{H.name}", labels=labels, check=False)


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], name="S1", check=False)
    transposition = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    return group_from_permutations([transposition, cycle], name=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return group_from_permutations([rot, ref], name=f"D{2 * n}")


def quaternion_group() -> FiniteGroup:
    # left regular action of Q8 on {+-1, +-i, +-j, +-k}
    names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    base = {("1", x): x for x in "1ijk"}
    prod = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }
    prod.update(base)
    prod.update({(x, "1"): x for x in "ijk"})

    def mul(a, b):
        sa, sb = a.startswith("-"), b.startswith("-")
        r = prod[(a.lstrip("-"), b.lstrip("-"))]
        if sa != sb:
            r = r[1:] if r.startswith("-") else "-" + r
        return r

    idx = {x: k for k, x in enumerate(names)}
    table = [[idx[mul(a, b)] for b in names] for a in names]
    return FiniteGroup(table, name="Q8", labels=names)


def conjugacy_data(G: FiniteGroup) -> tuple[list[list[int]], list[list[int]]]:
    """Conjugacy classes (ordered by smallest member) and the centralizer of
    each class's first element."""
    seen: set[int] = set()
    classes, cents = [], []
    for x in G:
        if x in seen:
            continue
        cls = sorted({G.conj(g, x) for g in G})
        seen.update(cls)
        classes.append(cls)
        cents.append(G.centralizer(x))
    return classes, cents


def abelianization_order(G: FiniteGroup) -> int:
    """``|G / [G, G]|`` computed from the commutator subgroup."""
    comms = {G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))) for a in G for b in G}
    return G.order // len(G.subgroup_generated(sorted(comms)))


BUILTIN_GROUPS = {
    "Z1": lambda: cyclic_group(1),
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z5": lambda: cyclic_group(5),
    "Z6": lambda: cyclic_group(6),
    "Z2xZ2": lambda: direct_product(cyclic_group(2), cyclic_group(2)),
    "S3": lambda: symmetric_group(3),
    "D8": lambda: dihedral_group(4),
    "Q8": quaternion_group,
}


def builtin_group(name: str) -> FiniteGroup:
    key = name.strip()
    if key in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[key]()
    if key.startswith("Z") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    if key.startswith("S") and key[1:].isdigit():
        return symmetric_group(int(key[1:]))
    raise KeyError(f"unknown group {name!r}")
