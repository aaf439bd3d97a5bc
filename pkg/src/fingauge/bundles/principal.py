"""Principal and associated bundles over finite groupoids, and their sections.

A cocycle is a functor ``g: X -> BG``.  A representation of ``G`` is a dict
``rho[g] = CycMatrix`` with ``rho[h * g] == rho[h] @ rho[g]``, which is the
same as a functor ``BG -> Vect`` under ``g then h = hg``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..arith.cyclotomic import Cyclotomic
from ..arith.linalg import CycMatrix, nullspace
from ..groupoids.group import FiniteGroup
from ..groupoids.groupoid import (
    FiniteGroupoid,
    GroupoidError,
    GroupoidFunctor,
    delooping,
    product_groupoid,
    pullback,
    universal_bundle,
)


class RepresentationError(ValueError):
    pass


def _check_cocycle(g: GroupoidFunctor, G: FiniteGroup) -> None:
    BG = g.target
    if BG.num_objects != 1 or BG.num_morphisms != G.order:
        raise GroupoidError("cocycle must land in BG")


def principal_bundle(g: GroupoidFunctor, G: FiniteGroup) -> tuple[FiniteGroupoid, GroupoidFunctor]:
    """Strict pullback of ``EG -> BG`` along ``g``; returns ``(P, pi)``."""
    _check_cocycle(g, G)
    _, p = universal_bundle(G, BG=g.target)
    pb = pullback(g, p)
    return pb.groupoid, pb.left


def fiber_audit(P: FiniteGroupoid, pi: GroupoidFunctor, order: int) -> bool:
    """Each fiber of ``pi`` has exactly ``order`` objects and only identity
    morphisms over identities; ``pi`` is onto objects."""
    X = pi.target
    if not pi.is_surjective_on_objects():
        return False
    for a in range(X.num_objects):
        objs = [o for o in range(P.num_objects) if pi.obj_map[o] == a]
        if len(objs) != order:
            return False
    for m in range(P.num_morphisms):
        if pi.mor_map[m] == X.identities[pi.obj_map[P.src[m]]] and m not in P.identities:
            return False
    return True


# representations of G


@dataclass(eq=False)
class GroupRep:
    group: FiniteGroup
    dim: int
    mats: dict

    def check(self) -> None:
        G = self.group
        if self.mats[0] != CycMatrix.identity(self.dim):
            raise RepresentationError("rho(e) must be the identity")
        for g, h in itertools.product(range(G.order), repeat=2):
            if self.mats[G.mul(h, g)] != self.mats[h] @ self.mats[g]:
                raise RepresentationError("rho is not multiplicative")


def trivial_rep(G: FiniteGroup, dim: int = 1) -> GroupRep:
    return GroupRep(G, dim, {g: CycMatrix.identity(dim) for g in G})


def sign_rep(G: FiniteGroup) -> GroupRep:
    """A nontrivial character with values in {+1, -1} (the sign for S_n)."""
    from ..double.reps import subgroup_characters

    for chi in subgroup_characters(G, list(G)):
        if any(chi.values()) and all(v.den <= 2 for v in chi.values()):
            return character_rep(G, chi)
    raise RepresentationError(f"{G.name} has no sign character")


def regular_rep(G: FiniteGroup) -> GroupRep:
    """``rho(g) e_x = e_{gx}``."""
    n = G.order
    mats = {}
    for g in G:
        rows = [[0] * n for _ in range(n)]
        for x in G:
            rows[G.mul(g, x)][x] = 1
        mats[g] = CycMatrix(rows, n)
    return GroupRep(G, n, mats)


def character_rep(G: FiniteGroup, chi: dict) -> GroupRep:
    """One-dimensional rep from a homomorphism ``G -> Q/Z``."""
    return GroupRep(G, 1, {g: CycMatrix.scalar(Cyclotomic.from_phase(chi[g])) for g in G})


# associated bundles and sections


@dataclass(eq=False)
class VectorBundle:
    base: FiniteGroupoid
    dims: tuple[int, ...]
    mats: tuple[CycMatrix, ...]

    def is_functorial(self) -> bool:
        X = self.base
        for a in range(X.num_objects):
            if self.mats[X.identities[a]] != CycMatrix.identity(self.dims[a]):
                return False
        for (f, g), h in X.comp.items():
            if self.mats[g] @ self.mats[f] != self.mats[h]:
                return False
        return True

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "matrices": [m.to_json() for m in self.mats]}


def associated_bundle(g: GroupoidFunctor, rho: GroupRep) -> VectorBundle:
    X = g.source
    return VectorBundle(X, tuple([rho.dim] * X.num_objects), tuple(rho.mats[g.mor_map[m]] for m in range(X.num_morphisms)))


def sections(g: GroupoidFunctor, rho: GroupRep) -> tuple[int, list[list[list[Cyclotomic]]]]:
    """Solve ``rho(g(m)) v_src == v_tgt`` for every morphism ``m``.

    Returns the dimension and a basis, each basis vector given as one
    coordinate list per object.
    """
    E = associated_bundle(g, rho)
    X = E.base
    d = rho.dim
    ncols = d * X.num_objects
    rows = []
    for m in range(X.num_morphisms):
        if m in X.identities:
            continue
        s, t = X.src[m], X.tgt[m]
        A = E.mats[m]
        for i in range(d):
            row: dict = {}
            for j in range(d):
                c = A.entries[i][j]
                if not c.is_zero():
                    row[s * d + j] = row.get(s * d + j, Cyclotomic.zero()) + c
            row[t * d + i] = row.get(t * d + i, Cyclotomic.zero()) - Cyclotomic.one()
            row = {k: v for k, v in row.items() if not v.is_zero()}
            if row:
                rows.append(row)
    basis = nullspace(rows, ncols)
    return len(basis), [[vec[a * d:(a + 1) * d] for a in range(X.num_objects)] for vec in basis]


def invariant_dimension(rho: GroupRep) -> int:
    """Oracle: ``dim {v : rho(g) v = v for all g}`` read off BG directly."""
    rows = []
    d = rho.dim
    for g in rho.group:
        A = rho.mats[g]
        for i in range(d):
            row = {j: A.entries[i][j] - Cyclotomic.rational(int(i == j)) for j in range(d)}
            row = {k: v for k, v in row.items() if not v.is_zero()}
            if row:
                rows.append(row)
    return len(nullspace(rows, d))


# cocycle helpers


def identity_cocycle(G: FiniteGroup, BG: FiniteGroupoid | None = None) -> GroupoidFunctor:
    BG = BG if BG is not None else delooping(G)
    return GroupoidFunctor(BG, BG, [0], range(G.order), check=False)


def trivial_cocycle(X: FiniteGroupoid, G: FiniteGroup, BG: FiniteGroupoid | None = None) -> GroupoidFunctor:
    BG = BG if BG is not None else delooping(G)
    return GroupoidFunctor(X, BG, [0] * X.num_objects, [0] * X.num_morphisms)


def conjugate_cocycle(g: GroupoidFunctor, G: FiniteGroup, eta) -> GroupoidFunctor:
    """The cocycle ``m |-> eta[tgt] * g(m) * eta[src]^-1``, naturally
    isomorphic to ``g`` via the components ``eta``."""
    X = g.source
    mor = [G.mul(G.mul(eta[X.tgt[m]], g.mor_map[m]), G.inv(eta[X.src[m]])) for m in range(X.num_morphisms)]
    return GroupoidFunctor(X, g.target, g.obj_map, mor)


def refine(g: GroupoidFunctor, copies: int = 2) -> GroupoidFunctor:
    """Pull ``g`` back along the equivalence ``X x codisc(copies) -> X``
    (a finer cover of the same base)."""
    from ..groupoids.groupoid import codiscrete_groupoid

    X = g.source
    Y = product_groupoid(X, codiscrete_groupoid(copies))
    proj = GroupoidFunctor(Y, X, [a for a, _ in Y.objects], [m for m, _ in Y.morphisms], check=False)
    return proj.compose(g)


def random_cocycle(rng: random.Random, G: FiniteGroup, BG: FiniteGroupoid | None = None) -> GroupoidFunctor:
    """A random functor into BG from a random small groupoid.

    The source is either BG itself (through a random endomorphism found by
    sampling generator images), a codiscrete groupoid with random ``eta``
    conjugation of the trivial cocycle, or a product of the two.
    """
    from ..groupoids.groupoid import codiscrete_groupoid

    BG = BG if BG is not None else delooping(G)
    kind = rng.choice(["codisc", "self", "product"])
    if kind == "codisc":
        X = codiscrete_groupoid(rng.randint(1, 4))
        g = trivial_cocycle(X, G, BG)
    elif kind == "self":
        g = _random_endo(rng, G, BG)
    else:
        g = refine(_random_endo(rng, G, BG), rng.randint(1, 3))
    eta = [rng.randrange(G.order) for _ in range(g.source.num_objects)]
    return conjugate_cocycle(g, G, eta)


def _random_endo(rng: random.Random, G: FiniteGroup, BG: FiniteGroupoid) -> GroupoidFunctor:
    """Random homomorphism ``G -> G`` by rejection on generator images."""
    gens = G.generators()
    while True:
        imgs = [rng.randrange(G.order) for _ in gens]
        phi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for s, t in zip(gens, imgs):
                    b, v = G.mul(a, s), G.mul(phi[a], t)
                    if b in phi:
                        if phi[b] != v:
                            ok = False
                            break
                    else:
                        phi[b] = v
                        nxt.append(b)
                if not ok:
                    break
            frontier = nxt
        if ok and all(phi[G.mul(a, b)] == G.mul(phi[a], phi[b]) for a in G for b in G):
            return GroupoidFunctor(BG, BG, [0], [phi[g] for g in G])
