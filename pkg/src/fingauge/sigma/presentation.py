"""Finite group presentations and brute-force homomorphism counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..groupoids.group import FiniteGroup
from ..groupoids.mapping import DEFAULT_CAP, SizeGuardError
from .triangulation import Triangulation3


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``1..n``; a relator is a word of signed generator indices
    (``-k`` is the inverse of generator ``k``)."""

    generators: int
    relators: tuple

    def __post_init__(self):
        rels = tuple(tuple(int(a) for a in w) for w in self.relators)
        for w in rels:
            if any(a == 0 or abs(a) > self.generators for a in w):
                raise PresentationError(f"bad letter in relator {list(w)}")
        object.__setattr__(self, "relators", rels)

    def to_json(self) -> dict:
        return {"generators": self.generators, "relators": [list(w) for w in self.relators]}

    @classmethod
    def from_json(cls, data: dict) -> GroupPresentation:
        return cls(int(data["generators"]), data.get("relators", []))


def evaluate_word(G: FiniteGroup, word, images) -> int:
    """Left-to-right product of the letters."""
    acc = 0
    for a in word:
        g = images[abs(a) - 1]
        acc = G.mul(acc, g if a > 0 else G.inv(g))
    return acc


def count_homs(P: GroupPresentation, G: FiniteGroup, cap: int = DEFAULT_CAP) -> int:
    if G.order**P.generators > cap:
        raise SizeGuardError(f"{G.order}^{P.generators} generator tuples exceed cap {cap}")
    n = 0
    for images in itertools.product(range(G.order), repeat=P.generators):
        if all(evaluate_word(G, w, images) == 0 for w in P.relators):
            n += 1
    return n


def dw_untwisted(P: GroupPresentation, G: FiniteGroup) -> Fraction:
    """``|Hom(pi, G)| / |G|``."""
    return Fraction(count_homs(P, G), G.order)


def trivial_presentation() -> GroupPresentation:
    return GroupPresentation(0, ())


def torus3_presentation() -> GroupPresentation:
    return GroupPresentation(3, ((1, 2, -1, -2), (1, 3, -1, -3), (2, 3, -2, -3)))


def presentation_from_triangulation(M: Triangulation3) -> GroupPresentation:
    """Generators are the edges off a spanning tree; each triangle gives the
    relator ``g_jk g_ij g_ik^-1`` with tree edges deleted."""
    tree = set(M.spanning_tree())
    gens = [e for e in range(M.num_edges) if e not in tree]
    gid = {e: k + 1 for k, e in enumerate(gens)}
    rels = []
    for a, b, c in M.triangles:
        word = [gid[b] if b in gid else None, gid[a] if a in gid else None, -gid[c] if c in gid else None]
        word = [x for x in word if x is not None]
        if word:
            rels.append(tuple(word))
    return GroupPresentation(len(gens), tuple(rels))
