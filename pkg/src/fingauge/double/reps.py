"""Twisted-equivariant vector bundles over Lambda G and their fusion."""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass

from ..arith.cyclotomic import Cyclotomic
from ..arith.linalg import CycMatrix, block_diagonal, nullspace
from ..arith.phase import ZERO, Phase
from ..cohomology.loop import LoopTwoCochain
from ..groupoids.group import FiniteGroup
from .algebra import TwistedLoopAlgebra


class RepShapeError(ValueError):
    pass


class TwistedFusionError(ValueError):
    pass


@dataclass(eq=False)
class LoopRep:
    """A vector space ``dims[x]`` over each ``x`` and a matrix
    ``mats[(x, g)]: V(x) -> V(gxg^-1)`` for every morphism of Lambda G."""

    group: FiniteGroup
    dims: tuple[int, ...]
    mats: dict

    def __post_init__(self):
        self.dims = tuple(self.dims)

    def check_shapes(self) -> None:
        G = self.group
        if len(self.dims) != G.order:
            raise RepShapeError("need one dimension per group element")
        for x, g in itertools.product(range(G.order), repeat=2):
            m = self.mats.get((x, g))
            if m is None:
                raise RepShapeError(f"missing matrix for ({x}, {g})")
            want = (self.dims[G.conj(g, x)], self.dims[x])
            if m.shape != want:
                raise RepShapeError(f"matrix ({x}, {g}) has shape {m.shape}, expected {want}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "dims": list(self.dims),
            "matrices": {f"{x};{g}": m.to_json() for (x, g), m in sorted(self.mats.items())},
        }


def is_twisted_rep(sigma: LoopRep, omega: LoopTwoCochain | None = None) -> bool:
    """``sigma(gxg^-1, h) sigma(x, g) == zeta^omega(x;g,h) sigma(x, hg)`` and
    ``sigma(x, e) == 1``."""
    sigma.check_shapes()
    G = sigma.group
    n = G.order
    for x in range(n):
        if sigma.mats[(x, 0)] != CycMatrix.identity(sigma.dims[x]):
            return False
    for x, g, h in itertools.product(range(n), repeat=3):
        y = G.conj(g, x)
        lhs = sigma.mats[(y, h)] @ sigma.mats[(x, g)]
        w = omega(x, g, h) if omega is not None else ZERO
        rhs = sigma.mats[(x, G.then(g, h))]
        if w:
            rhs = rhs.scale(Cyclotomic.from_phase(w))
        if lhs != rhs:
            return False
    return True


def rep_character(sigma: LoopRep) -> dict:
    """``chi(x, g) = tr sigma(x, g)`` on commuting pairs, 0 elsewhere."""
    G = sigma.group
    out = {}
    for x, g in itertools.product(range(G.order), repeat=2):
        if G.conj(g, x) == x:
            out[(x, g)] = sigma.mats[(x, g)].trace()
        else:
            out[(x, g)] = Cyclotomic.zero()
    return out


def fuse(sigma: LoopRep, tau: LoopRep, omega: LoopTwoCochain | None = None) -> LoopRep:
    """``(sigma * tau)(x) = sum_y sigma(x y^-1) (x) tau(y)``; untwisted only.

    The morphism ``(x, g)`` sends the ``y`` summand to the ``gyg^-1`` summand
    by ``sigma(xy^-1, g) (x) tau(y, g)``.
    """
    if omega is not None and not omega.is_zero():
        raise TwistedFusionError("fusion is only defined for the untwisted double")
    G = sigma.group
    n = G.order
    offsets = {}
    dims = []
    for x in range(n):
        off = 0
        for y in range(n):
            offsets[(x, y)] = off
            off += sigma.dims[G.mul(x, G.inv(y))] * tau.dims[y]
        dims.append(off)
    mats = {}
    for x, g in itertools.product(range(n), repeat=2):
        tx = G.conj(g, x)
        out = [[Cyclotomic.zero() for _ in range(dims[x])] for _ in range(dims[tx])]
        for y in range(n):
            block = sigma.mats[(G.mul(x, G.inv(y)), g)].kron(tau.mats[(y, g)])
            r0, c0 = offsets[(tx, G.conj(g, y))], offsets[(x, y)]
            for i in range(block.rows):
                for j in range(block.cols):
                    out[r0 + i][c0 + j] = block.entries[i][j]
        mats[(x, g)] = CycMatrix(out, dims[x])
    return LoopRep(G, dims, mats)


def convolve_dimensions(G: FiniteGroup, d1, d2) -> list[int]:
    """``(d1 * d2)(x) = sum_y d1(x y^-1) d2(y)``."""
    return [sum(d1[G.mul(x, G.inv(y))] * d2[y] for y in G) for x in G]


def convolve_characters(G: FiniteGroup, c1: dict, c2: dict) -> dict:
    out = {}
    for x, g in itertools.product(range(G.order), repeat=2):
        acc = Cyclotomic.zero()
        if G.conj(g, x) == x:
            for y in G:
                if G.conj(g, y) == y:
                    acc = acc + c1[(G.mul(x, G.inv(y)), g)] * c2[(y, g)]
        out[(x, g)] = acc
    return out


def characters_equal(c1: dict, c2: dict) -> bool:
    return all(c1[k] == c2[k] for k in c1)


# constructions


def direct_sum(sigma: LoopRep, tau: LoopRep) -> LoopRep:
    G = sigma.group
    mats = {k: block_diagonal([sigma.mats[k], tau.mats[k]]) for k in sigma.mats}
    return LoopRep(G, [a + b for a, b in zip(sigma.dims, tau.dims)], mats)


def unit_rep(G: FiniteGroup) -> LoopRep:
    """Supported at the identity with the trivial character."""
    dims = [1] + [0] * (G.order - 1)
    mats = {}
    for x, g in itertools.product(range(G.order), repeat=2):
        d = dims[x]
        mats[(x, g)] = CycMatrix.identity(d) if d else CycMatrix.zeros(0, 0)
    return LoopRep(G, dims, mats)


def induced_rep(G: FiniteGroup, x: int, rho: dict) -> LoopRep:
    """Untwisted rep supported on the conjugacy class of ``x`` built from a
    representation ``rho`` (``z -> CycMatrix``, homomorphic for ``G.mul``) of
    the centralizer of ``x``."""
    t = {}
    for g in G:
        y = G.conj(g, x)
        t.setdefault(y, g)
    t[x] = 0
    d = next(iter(rho.values())).rows
    dims = [d if y in t else 0 for y in G]
    mats = {}
    for y, g in itertools.product(range(G.order), repeat=2):
        if y not in t:
            mats[(y, g)] = CycMatrix.zeros(0, 0)
            continue
        ty = G.conj(g, y)
        z = G.mul(G.mul(G.inv(t[ty]), g), t[y])
        mats[(y, g)] = rho[z]
    return LoopRep(G, dims, mats)


def subgroup_characters(G: FiniteGroup, elems) -> list[dict]:
    """All homomorphisms ``H -> Q/Z`` for the subgroup on ``elems``."""
    elems = sorted(elems)
    gens: list[int] = []
    span = {0}
    for a in elems:
        if a not in span:
            gens.append(a)
            span = set(G.subgroup_generated(gens))
    orders = [G.element_order(g) for g in gens]
    found = []
    for imgs in itertools.product(*[range(o) for o in orders]):
        chi = {0: ZERO}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for g, j, o in zip(gens, imgs, orders):
                    b = G.mul(a, g)
                    v = chi[a] + Phase(j, o)
                    if b in chi:
                        if chi[b] != v:
                            ok = False
                            break
                    else:
                        chi[b] = v
                        nxt.append(b)
                if not ok:
                    break
            frontier = nxt
        if ok and all(chi[G.mul(a, b)] == chi[a] + chi[b] for a in elems for b in elems):
            found.append(chi)
    return found


def character_rho(chi: dict) -> dict:
    return {z: CycMatrix.scalar(Cyclotomic.from_phase(p)) for z, p in chi.items()}


def regular_rho(G: FiniteGroup, elems) -> dict:
    """Left regular representation of the subgroup on ``elems``."""
    elems = sorted(elems)
    idx = {e: i for i, e in enumerate(elems)}
    k = len(elems)
    out = {}
    for z in elems:
        rows = [[0] * k for _ in range(k)]
        for e in elems:
            rows[idx[G.mul(z, e)]][idx[e]] = 1
        out[z] = CycMatrix(rows, k)
    return out


def one_dimensional_reps(G: FiniteGroup, omega: LoopTwoCochain | None = None) -> list[LoopRep]:
    """Every rep of total dimension 1, found exhaustively.

    Such a rep lives over a central ``x`` with scalars ``s(g)`` satisfying
    ``s(g) + s(h) = omega(x;g,h) + s(hg)``; candidate values range over roots
    of unity of order ``exponent(G) * order(omega)``.
    """
    omega = omega if omega is not None else LoopTwoCochain.zero(G)
    K = G.exponent * max(omega.order, 1)
    gens = G.generators()
    n = G.order
    reps = []
    for x in G:
        if any(G.conj(g, x) != x for g in G):
            continue
        for imgs in itertools.product(range(K), repeat=len(gens)):
            s = {0: ZERO}
            frontier = [0]
            ok = True
            while frontier and ok:
                nxt = []
                for a in frontier:
                    for gen, j in zip(gens, imgs):
                        b = G.then(a, gen)
                        v = s[a] + Phase(j, K) - omega(x, a, gen)
                        if b in s:
                            if s[b] != v:
                                ok = False
                                break
                        else:
                            s[b] = v
                            nxt.append(b)
                    if not ok:
                        break
                frontier = nxt
            if not ok:
                continue
            if not all(s[g] + s[h] == omega(x, g, h) + s[G.then(g, h)] for g in G for h in G):
                continue
            dims = [int(y == x) for y in range(n)]
            mats = {}
            for y, g in itertools.product(range(n), repeat=2):
                mats[(y, g)] = CycMatrix.scalar(Cyclotomic.from_phase(s[g])) if y == x else CycMatrix.zeros(0, 0)
            reps.append(LoopRep(G, dims, mats))
    return reps


def random_untwisted_rep(G: FiniteGroup, rng: random.Random, pieces: int = 2) -> LoopRep:
    """Direct sum of induced reps from random centralizer characters or
    centralizer regular representations."""
    rep = None
    for _ in range(pieces):
        x = rng.randrange(G.order)
        cent = G.centralizer(x)
        if rng.random() < 0.75:
            rho = character_rho(rng.choice(subgroup_characters(G, cent)))
        else:
            rho = regular_rho(G, cent)
        piece = induced_rep(G, x, rho)
        rep = piece if rep is None else direct_sum(rep, piece)
    return rep


def regular_isotypic_dimension(A: TwistedLoopAlgebra, sigma: LoopRep) -> int:
    """Dimension of ``{v : v e_i = sigma(e_i) v}`` in the regular right module,
    for a one-dimensional ``sigma``."""
    if sigma.total_dim != 1:
        raise ValueError("isotypic dimension is implemented for one-dimensional reps")
    x0 = sigma.dims.index(1)
    n = A.group.order
    d = A.dim
    rows = []
    for i in range(d):
        x, g = divmod(i, n)
        lam = sigma.mats[(x, g)].entries[0][0] if x == x0 else Cyclotomic.zero()
        eq = defaultdict(dict)
        for b in range(d):
            r = A.basis_product(b, i)
            if r is not None:
                k, c = r
                eq[k][b] = eq[k].get(b, Cyclotomic.zero()) + c
            eq[b][b] = eq[b].get(b, Cyclotomic.zero()) - lam
        for k in sorted(eq):
            row = {b: v for b, v in eq[k].items() if not v.is_zero()}
            if row:
                rows.append(row)
    return len(nullspace(rows, d))
