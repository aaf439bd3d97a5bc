"""Transgression of group 3-cocycles to 2-cocycles on the loop groupoid."""

from __future__ import annotations

import itertools

from ..cohomology.cochains import CocycleError, GroupCochain, is_three_cocycle
from ..cohomology.loop import LoopTwoCochain


def transgress(alpha: GroupCochain, check: bool = True) -> LoopTwoCochain:
    """The twist of the alpha-twisted Drinfeld double.

    For ``x --g--> gxg^-1 --h--> (hg)x(hg)^-1``::

        (tau a)(x; g, h) = a(x, g, h) - a(g, gxg^-1, h) + a(g, h, (hg)x(hg)^-1)

    The three terms are the three tetrahedra of the prism (triangle x
    circle) swept out by the 2-cell; see
    :func:`fingauge.sigma.mapping.transgress_to_mapping_space` for the
    same computation done generically.
    """
    if alpha.degree != 3:
        raise ValueError("transgress needs a degree-3 cochain")
    if check and not is_three_cocycle(alpha):
        raise CocycleError("transgress needs a 3-cocycle")
    G = alpha.group
    vals = {}
    for x, g, h in itertools.product(range(G.order), repeat=3):
        y = G.conj(g, x)
        z = G.conj(G.then(g, h), x)
        vals[(x, g, h)] = alpha(x, g, h) - alpha(g, y, h) + alpha(g, h, z)
    return LoopTwoCochain(G, vals)


def transgress_coboundary(beta: GroupCochain) -> dict:
    """Transgression of a 2-cochain to a 1-cochain on Lambda G:
    ``theta(x, g) = beta(x, g) - beta(g, gxg^-1)``."""
    if beta.degree != 2:
        raise ValueError("transgress_coboundary needs a degree-2 cochain")
    G = beta.group
    out = {}
    for x, g in itertools.product(range(G.order), repeat=2):
        v = beta(x, g) - beta(g, G.conj(g, x))
        if v:
            out[(x, g)] = v
    return out
