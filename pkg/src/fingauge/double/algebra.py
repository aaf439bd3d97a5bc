"""The omega-twisted groupoid algebra of the loop groupoid."""

from __future__ import annotations

import itertools
from collections import defaultdict

from ..arith.cyclotomic import Cyclotomic
from ..arith.linalg import nullspace
from ..cohomology.loop import LoopTwoCochain


class NonAssociativeError(ValueError):
    pass


class TwistedLoopAlgebra:
    """Basis ``e[(x, g)]`` indexed by Lambda G morphisms.

    ``e(x,g) * e(gxg^-1,h) = zeta^omega(x;g,h) e(x,hg)``; every other basis
    product vanishes (the second factor must continue the first).
    Basis index of ``(x, g)`` is ``x * |G| + g``.
    """

    def __init__(self, twist: LoopTwoCochain) -> None:
        self.twist = twist
        G = self.group = twist.group
        n = G.order
        self.dim = n * n
        self.field_order = max(twist.order, 1)
        self.labels = [(x, g) for x in range(n) for g in range(n)]
        table = {}
        for x, g, h in itertools.product(range(n), repeat=3):
            i = x * n + g
            j = G.conj(g, x) * n + h
            k = x * n + G.then(g, h)
            table[(i, j)] = (k, twist(x, g, h))
        self.table = table
        self._coeff = {p: Cyclotomic.from_phase(p, self.field_order) for _, p in table.values()}

    def index(self, x: int, g: int) -> int:
        return x * self.group.order + g

    def basis_product(self, i: int, j: int) -> tuple[int, Cyclotomic] | None:
        r = self.table.get((i, j))
        if r is None:
            return None
        k, p = r
        return k, self._coeff[p]

    def multiply(self, a: dict, b: dict) -> dict:
        """Product of elements given as ``{basis index: Cyclotomic}``."""
        out = defaultdict(lambda: Cyclotomic.zero(self.field_order))
        for i, u in a.items():
            for j, v in b.items():
                r = self.basis_product(i, j)
                if r is not None:
                    k, c = r
                    out[k] = out[k] + u * v * c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def unit(self) -> dict:
        n = self.group.order
        return {x * n: Cyclotomic.one(self.field_order) for x in range(n)}

    def basis(self, i: int) -> dict:
        return {i: Cyclotomic.one(self.field_order)}

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if not _elements_equal(self.multiply(self.basis(i), self.basis(j)),
                                       self.multiply(self.basis(j), self.basis(i))):
                    return False
        return True


def _elements_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, Cyclotomic.zero()) == b.get(k, Cyclotomic.zero()) for k in keys)


def build_twisted_algebra(G, omega: LoopTwoCochain | None = None) -> TwistedLoopAlgebra:
    """Accepts ``(G, omega)``, ``(G,)`` for the untwisted double, or a bare twist."""
    if isinstance(G, LoopTwoCochain):
        return TwistedLoopAlgebra(G)
    if omega is None:
        omega = LoopTwoCochain.zero(G)
    elif omega.group.table != G.table:
        raise ValueError("twist lives on a different group")
    return TwistedLoopAlgebra(omega)


def check_associativity(A: TwistedLoopAlgebra) -> bool:
    """``(e_i e_j) e_k == e_i (e_j e_k)`` for every basis triple."""
    d = A.dim
    for i, j, k in itertools.product(range(d), repeat=3):
        left = right = None
        ij = A.basis_product(i, j)
        if ij is not None:
            r = A.basis_product(ij[0], k)
            if r is not None:
                left = (r[0], ij[1] * r[1])
        jk = A.basis_product(j, k)
        if jk is not None:
            r = A.basis_product(i, jk[0])
            if r is not None:
                right = (r[0], jk[1] * r[1])
        if left is None and right is None:
            continue
        if left is None or right is None or left[0] != right[0] or left[1] != right[1]:
            return False
    return True


def center_dimension(A: TwistedLoopAlgebra, check: bool = True) -> int:
    """``dim {z : z e_i = e_i z for all i}`` by exact elimination."""
    if check and not check_associativity(A):
        raise NonAssociativeError("center_dimension needs an associative algebra")
    rows = []
    d = A.dim
    for i in range(d):
        eq = defaultdict(dict)
        for b in range(d):
            r = A.basis_product(b, i)
            if r is not None:
                k, c = r
                eq[k][b] = eq[k].get(b, Cyclotomic.zero()) + c
            r = A.basis_product(i, b)
            if r is not None:
                k, c = r
                eq[k][b] = eq[k].get(b, Cyclotomic.zero()) - c
        for k in sorted(eq):
            row = {b: v for b, v in eq[k].items() if not v.is_zero()}
            if row:
                rows.append(row)
    return len(nullspace(rows, d))


def commuting_pair_orbits(G) -> int:
    """Number of simultaneous-conjugation orbits on commuting pairs (brute force)."""
    pairs = {(a, b) for a in G for b in G if G.mul(a, b) == G.mul(b, a)}
    seen = set()
    orbits = 0
    for p in sorted(pairs):
        if p in seen:
            continue
        orbits += 1
        for g in G:
            seen.add((G.conj(g, p[0]), G.conj(g, p[1])))
    return orbits
