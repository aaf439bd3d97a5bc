"""Finite categories and their category algebras."""

from __future__ import annotations

import itertools
import random
from collections import defaultdict

from ..groupoids.group import FiniteGroup


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """Objects ``0..n-1``, morphisms ``0..m-1`` with ``src``/``tgt`` and a
    composition table ``comp[(f, g)] = f then g``.  Inverses are not required."""

    def __init__(self, num_objects: int, src, tgt, comp: dict, identities, labels=None, name: str = "C"):
        self.num_objects = num_objects
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.comp = dict(comp)
        self.identities = tuple(identities)
        self.labels = tuple(labels) if labels is not None else tuple(range(len(self.src)))
        self.name = name
        self.audit()

    @property
    def num_morphisms(self) -> int:
        return len(self.src)

    def audit(self) -> None:
        m = self.num_morphisms
        out_of = defaultdict(list)
        for f in range(m):
            out_of[self.src[f]].append(f)
        for a, i in enumerate(self.identities):
            if self.src[i] != a or self.tgt[i] != a:
                raise CategoryError("identity has wrong endpoints")
        for f in range(m):
            for g in out_of[self.tgt[f]]:
                h = self.comp.get((f, g))
                if h is None:
                    raise CategoryError(f"missing composite of {f} and {g}")
                if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                    raise CategoryError("composite has wrong endpoints")
            if self.comp[(self.identities[self.src[f]], f)] != f or self.comp[(f, self.identities[self.tgt[f]])] != f:
                raise CategoryError("unit law fails")
        for (f, g), fg in self.comp.items():
            if self.tgt[f] != self.src[g]:
                raise CategoryError("composite on a non-composable pair")
            for h in out_of[self.tgt[g]]:
                if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                    raise CategoryError("composition is not associative")


def category_from_group(G: FiniteGroup) -> FiniteCategory:
    """BG as a category: ``g then h = hg``."""
    n = G.order
    comp = {(g, h): G.then(g, h) for g in range(n) for h in range(n)}
    return FiniteCategory(1, [0] * n, [0] * n, comp, [0], name=f"B{G.name}")


def category_from_monoid(table) -> FiniteCategory:
    """One-object category of a monoid with identity 0; ``f then g = table[g][f]``
    (the same order convention as BG)."""
    n = len(table)
    comp = {(f, g): table[g][f] for f in range(n) for g in range(n)}
    return FiniteCategory(1, [0] * n, [0] * n, comp, [0], name="BM")


def interval_category() -> FiniteCategory:
    """``{0 -> 1}``: morphisms id0, id1, f."""
    comp = {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2}
    return FiniteCategory(2, [0, 1, 0], [0, 1, 1], comp, [0, 1], labels=["id0", "id1", "f"], name="I")


def path_category(num_objects: int, edges) -> FiniteCategory:
    """Free category on a finite acyclic quiver (morphisms are paths)."""
    # morphisms 0..n-1 are the identities; the rest are nonempty edge sequences
    src, tgt = list(range(num_objects)), list(range(num_objects))
    labels: list = [("id", a) for a in range(num_objects)]
    found = []
    stack = [((k,), t) for k, (s, t) in enumerate(edges)]
    while stack:
        p, end = stack.pop()
        if len(p) > len(edges):
            raise CategoryError("quiver has a cycle")
        found.append(p)
        stack.extend((p + (k,), t) for k, (s, t) in enumerate(edges) if s == end)
    found.sort(key=lambda p: (len(p), p))
    index = {}
    for p in found:
        index[p] = len(labels)
        labels.append(p)
        src.append(edges[p[0]][0])
        tgt.append(edges[p[-1]][1])

    comp = {}
    for f in range(len(labels)):
        for g in range(len(labels)):
            if tgt[f] != src[g]:
                continue
            if f < num_objects:
                comp[(f, g)] = g
            elif g < num_objects:
                comp[(f, g)] = f
            else:
                comp[(f, g)] = index[labels[f] + labels[g]]
    return FiniteCategory(num_objects, src, tgt, comp, range(num_objects), labels=labels, name="path")


def poset_category(n: int, relation) -> FiniteCategory:
    """Thin category of a partial order given by ``relation(a, b)`` (a <= b)."""
    mors = [(a, b) for a in range(n) for b in range(n) if a == b or relation(a, b)]
    idx = {m: i for i, m in enumerate(mors)}
    comp = {(idx[(a, b)], idx[(b2, c)]): idx[(a, c)] for a, b in mors for b2, c in mors if b == b2}
    return FiniteCategory(n, [a for a, _ in mors], [b for _, b in mors], comp, [idx[(a, a)] for a in range(n)],
                          labels=mors, name="poset")


def disjoint_union(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    m, n = C.num_morphisms, C.num_objects
    src = list(C.src) + [s + n for s in D.src]
    tgt = list(C.tgt) + [t + n for t in D.tgt]
    comp = dict(C.comp)
    comp.update({(f + m, g + m): h + m for (f, g), h in D.comp.items()})
    ids = list(C.identities) + [i + m for i in D.identities]
    return FiniteCategory(n + D.num_objects, src, tgt, comp, ids, name=f"{C.name}+{D.name}")


def enumerate_monoids(n: int) -> list[list[list[int]]]:
    """Every associative table on ``0..n-1`` with two-sided identity 0."""
    if n == 1:
        return [[[0]]]
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        table[0][a] = a
        table[a][0] = a
    filled = [[a == 0 or b == 0 for b in range(n)] for a in range(n)]
    out = []

    def consistent():
        for a, b, c in itertools.product(range(n), repeat=3):
            if filled[a][b] and filled[b][c]:
                ab, bc = table[a][b], table[b][c]
                if filled[ab][c] and filled[a][bc] and table[ab][c] != table[a][bc]:
                    return False
        return True

    def rec(k):
        if k == len(cells):
            out.append([row[:] for row in table])
            return
        a, b = cells[k]
        for v in range(n):
            table[a][b] = v
            filled[a][b] = True
            if consistent():
                rec(k + 1)
        filled[a][b] = False
        table[a][b] = 0

    rec(0)
    return out


def random_category(rng: random.Random, max_morphisms: int = 6) -> FiniteCategory:
    """A small random category: a path category, a poset, a monoid, or a
    disjoint union of two of these."""
    while True:
        kind = rng.choice(["path", "poset", "monoid", "union"])
        if kind == "path":
            n = rng.randint(1, 3)
            edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.7]
            if rng.random() < 0.5 and n >= 2:
                edges.append((0, 1))
            C = path_category(n, edges)
        elif kind == "poset":
            n = rng.randint(1, 3)
            C = poset_category(n, lambda a, b: a < b)
        elif kind == "monoid":
            k = rng.randint(1, 3)
            C = category_from_monoid(rng.choice(enumerate_monoids(k)))
        else:
            C = disjoint_union(interval_category(), category_from_monoid(rng.choice(enumerate_monoids(rng.randint(1, 2)))))
        if C.num_morphisms <= max_morphisms:
            return C


class CategoryAlgebra:
    """``k[C]`` with basis the morphisms and ``f . g = (f then g)`` when
    composable, 0 otherwise."""

    def __init__(self, C: FiniteCategory):
        self.category = C
        self.dim = C.num_morphisms
        self.table = dict(C.comp)

    def basis_product(self, f: int, g: int) -> int | None:
        return self.table.get((f, g))

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for f, u in a.items():
            for g, v in b.items():
                h = self.table.get((f, g))
                if h is not None:
                    out[h] = out.get(h, 0) + u * v
        return {k: v for k, v in out.items() if v != 0}

    def unit(self) -> dict:
        return {i: 1 for i in self.category.identities}

    def is_associative(self) -> bool:
        d = self.dim
        for f, g, h in itertools.product(range(d), repeat=3):
            fg = self.table.get((f, g))
            gh = self.table.get((g, h))
            left = self.table.get((fg, h)) if fg is not None else None
            right = self.table.get((f, gh)) if gh is not None else None
            if left != right:
                return False
        return True


def category_algebra(C: FiniteCategory) -> CategoryAlgebra:
    return CategoryAlgebra(C)
