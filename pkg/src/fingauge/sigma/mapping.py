"""Transgression of a group cocycle on BG to the mapping groupoid
``hom(Sigma, BG)`` for Sigma a point or the loop shape."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..arith.phase import ZERO
from ..cohomology.cochains import GroupCochain
from ..cohomology.loop import LoopTwoCochain
from ..groupoids.groupoid import FiniteGroupoid
from ..groupoids.mapping import DEFAULT_CAP, FreeShape, loop_shape, mapping_groupoid

POINT = FreeShape(1, (), name="pt")


@dataclass(eq=False)
class MappingCochain:
    """Values on composable chains ``(functor index, eta_1, ..., eta_k)`` of
    the mapping groupoid, where ``eta_i`` is the (single) component."""

    groupoid: FiniteGroupoid
    degree: int
    values: dict

    def __call__(self, *key) -> object:
        return self.values.get(tuple(key), ZERO)


def _chains(H: FiniteGroupoid, k: int):
    """Composable chains of ``k`` morphisms as tuples of morphism indices."""
    out_of = {}
    for m in range(H.num_morphisms):
        out_of.setdefault(H.src[m], []).append(m)
    for start in range(H.num_objects):
        def rec(obj, chain):
            if len(chain) == k:
                yield start, tuple(chain)
                return
            for m in out_of.get(obj, []):
                yield from rec(H.tgt[m], chain + [m])

        yield from rec(start, [])


def transgress_to_mapping_space(shape, X: FiniteGroupoid, alpha: GroupCochain, cap: int = DEFAULT_CAP) -> MappingCochain:
    """Evaluate ``alpha`` on ``shape x chain``, with the prism decomposed into
    simplices by shuffles.

    For the point this is ``alpha`` itself.  For the loop, a chain
    ``eta_1 .. eta_k`` starting at loop value ``l_0`` meets the loop values
    ``l_s`` after ``s`` steps, and the value is
    ``sum_s (-1)^s alpha(eta_1, .., eta_s, l_s, eta_(s+1), .., eta_k)``.
    """
    if shape in ("point", "pt"):
        shape = POINT
    elif shape == "loop":
        shape = loop_shape()
    G = alpha.group
    if X.num_objects != 1 or X.num_morphisms != G.order:
        raise ValueError("target must be BG for the cochain's group")
    H = mapping_groupoid(shape, X, cap)
    n = alpha.degree
    loops = len(shape.generators)
    if loops not in (0, 1) or shape.num_objects != 1:
        raise ValueError("supported shapes are the point and the loop")
    k = n - loops
    vals = {}
    for start, chain in _chains(H, k):
        etas = [H.morphisms[m][1][0] for m in chain]
        key = (start,) + tuple(etas)
        if loops == 0:
            vals[key] = alpha(*etas)
            continue
        total = ZERO
        for s in range(k + 1):
            obj = H.tgt[chain[s - 1]] if s else start
            ell = H.objects[obj][1][0]
            term = alpha(*etas[:s], ell, *etas[s:])
            total = total + term if s % 2 == 0 else total - term
        vals[key] = total
    return MappingCochain(H, k, vals)


def as_loop_cochain(c: MappingCochain, G) -> LoopTwoCochain:
    """Read a 2-cochain on ``hom(BZ, BG)`` as a cochain on Lambda G by
    sending a functor to its loop value."""
    if c.degree != 2:
        raise ValueError("need a 2-cochain")
    H = c.groupoid
    vals = {}
    for (start, g, h), v in c.values.items():
        vals[(H.objects[start][1][0], g, h)] = v
    return LoopTwoCochain(G, vals)


def as_group_cochain(c: MappingCochain, G) -> GroupCochain:
    """A cochain on ``hom(pt, BG) = BG`` read back as a group cochain."""
    vals = {key[1:]: v for key, v in c.values.items()}
    return GroupCochain(G, c.degree, vals)


def loop_values_agree(G, alpha: GroupCochain, other: LoopTwoCochain) -> bool:
    from ..groupoids.groupoid import delooping

    mine = as_loop_cochain(transgress_to_mapping_space("loop", delooping(G), alpha), G)
    return all(mine(x, g, h) == other(x, g, h) for x, g, h in itertools.product(range(G.order), repeat=3))
