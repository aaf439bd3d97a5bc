"""Finite groupoids stored extensionally, with functors between them."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Sequence

from .group import FiniteGroup


class GroupoidError(ValueError):
    pass


class FiniteGroupoid:
    """Objects ``0..n-1`` and morphisms ``0..m-1`` with explicit composition.

    ``comp[(f, g)]`` is the composite *f then g* (defined when ``tgt[f] ==
    src[g]``).  Labels are kept for printing and for locating morphisms.
    """

    def __init__(
        self,
        objects: Sequence[Hashable],
        morphisms: Sequence[Hashable],
        src: Sequence[int],
        tgt: Sequence[int],
        comp: dict[tuple[int, int], int],
        identities: Sequence[int],
        name: str = "",
        check: bool = True,
    ) -> None:
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.comp = dict(comp)
        self.identities = tuple(identities)
        self.name = name
        self.obj_index = {o: i for i, o in enumerate(self.objects)}
        self.mor_index = {m: i for i, m in enumerate(self.morphisms)}
        if check:
            self.audit()

    # construction helpers

    @classmethod
    def build(
        cls,
        objects: Sequence[Hashable],
        morphisms: Sequence[tuple[Hashable, Hashable, Hashable]],
        then: Callable[[Hashable, Hashable], Hashable],
        identity: Callable[[Hashable], Hashable],
        name: str = "",
        check: bool = True,
    ) -> FiniteGroupoid:
        """Build from labelled morphisms ``(label, source, target)`` and a
        composition rule on labels."""
        oidx = {o: i for i, o in enumerate(objects)}
        labels = [m[0] for m in morphisms]
        midx = {m: i for i, m in enumerate(labels)}
        if len(midx) != len(labels):
            raise GroupoidError("duplicate morphism labels")
        src = [oidx[m[1]] for m in morphisms]
        tgt = [oidx[m[2]] for m in morphisms]
        out_of = defaultdict(list)
        for i, s in enumerate(src):
            out_of[s].append(i)
        comp = {}
        for f in range(len(labels)):
            for g in out_of[tgt[f]]:
                lab = then(labels[f], labels[g])
                if lab not in midx:
                    raise GroupoidError(f"composite {lab!r} is not a morphism")
                comp[(f, g)] = midx[lab]
        ids = [midx[identity(o)] for o in objects]
        return cls(objects, labels, src, tgt, comp, ids, name=name, check=check)

    # basic queries

    @property
    def num_objects(self) -> int:
        return len(self.objects)

    @property
    def num_morphisms(self) -> int:
        return len(self.morphisms)

    def then(self, f: int, g: int) -> int:
        try:
            return self.comp[(f, g)]
        except KeyError:
            raise GroupoidError(f"morphisms {f} and {g} are not composable") from None

    @cached_property
    def hom(self) -> dict[tuple[int, int], list[int]]:
        h = defaultdict(list)
        for m in range(self.num_morphisms):
            h[(self.src[m], self.tgt[m])].append(m)
        return dict(h)

    def hom_set(self, a: int, b: int) -> list[int]:
        return self.hom.get((a, b), [])

    def automorphisms(self, a: int) -> list[int]:
        return self.hom_set(a, a)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = []
        for f in range(self.num_morphisms):
            s, t = self.src[f], self.tgt[f]
            cand = [
                g
                for g in self.hom_set(t, s)
                if self.comp[(f, g)] == self.identities[s] and self.comp[(g, f)] == self.identities[t]
            ]
            if not cand:
                raise GroupoidError(f"morphism {self.morphisms[f]!r} has no inverse")
            inv.append(cand[0])
        return tuple(inv)

    def inv(self, f: int) -> int:
        return self.inverses[f]

    def composable_pairs(self):
        return iter(self.comp)

    def audit(self) -> None:
        """Raise :class:`GroupoidError` on the first violated groupoid axiom."""
        n = self.num_objects
        for a, i in enumerate(self.identities):
            if self.src[i] != a or self.tgt[i] != a:
                raise GroupoidError(f"identity of object {a} has wrong endpoints")
        for f in range(self.num_morphisms):
            s, t = self.src[f], self.tgt[f]
            if not (0 <= s < n and 0 <= t < n):
                raise GroupoidError("endpoint out of range")
            if self.comp.get((self.identities[s], f)) != f or self.comp.get((f, self.identities[t])) != f:
                raise GroupoidError(f"unit law fails at {self.morphisms[f]!r}")
        for (f, g), h in self.comp.items():
            if self.tgt[f] != self.src[g]:
                raise GroupoidError("composite defined on a non-composable pair")
            if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                raise GroupoidError("composite has wrong endpoints")
        out_of = defaultdict(list)
        for m in range(self.num_morphisms):
            out_of[self.src[m]].append(m)
        for f in range(self.num_morphisms):
            for g in out_of[self.tgt[f]]:
                if (f, g) not in self.comp:
                    raise GroupoidError("composition table is not total on composable pairs")
        for (f, g), fg in self.comp.items():
            for h in out_of[self.tgt[g]]:
                if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                    raise GroupoidError("composition is not associative")
        _ = self.inverses

    # structure

    @cached_property
    def components(self) -> list[list[int]]:
        parent = list(range(self.num_objects))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in range(self.num_morphisms):
            a, b = find(self.src[m]), find(self.tgt[m])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups = defaultdict(list)
        for o in range(self.num_objects):
            groups[find(o)].append(o)
        return [groups[k] for k in sorted(groups)]

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def export(self) -> dict:
        return {
            "objects": [str(o) for o in self.objects],
            "morphisms": [[str(self.morphisms[m]), self.src[m], self.tgt[m]] for m in range(self.num_morphisms)],
            "composition": [[f, g, h] for (f, g), h in sorted(self.comp.items())],
            "identities": list(self.identities),
        }

    def __repr__(self) -> str:
        nm = f"{self.name}, " if self.name else ""
        return f"FiniteGroupoid({nm}objects={self.num_objects}, morphisms={self.num_morphisms})"


class GroupoidFunctor:
    """Object and morphism maps between two finite groupoids."""

    def __init__(self, source: FiniteGroupoid, target: FiniteGroupoid, obj_map, mor_map, check: bool = True):
        self.source = source
        self.target = target
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        if check:
            self.check()

    def check(self) -> None:
        S, T = self.source, self.target
        if len(self.obj_map) != S.num_objects or len(self.mor_map) != S.num_morphisms:
            raise GroupoidError("functor maps have wrong length")
        for m in range(S.num_morphisms):
            fm = self.mor_map[m]
            if T.src[fm] != self.obj_map[S.src[m]] or T.tgt[fm] != self.obj_map[S.tgt[m]]:
                raise GroupoidError(f"functor does not preserve endpoints of {S.morphisms[m]!r}")
        for a in range(S.num_objects):
            if self.mor_map[S.identities[a]] != T.identities[self.obj_map[a]]:
                raise GroupoidError("functor does not preserve identities")
        for (f, g), h in S.comp.items():
            if T.comp[(self.mor_map[f], self.mor_map[g])] != self.mor_map[h]:
                raise GroupoidError("functor does not preserve composition")

    def is_functor(self) -> bool:
        try:
            self.check()
        except GroupoidError:
            return False
        return True

    def compose(self, other: GroupoidFunctor) -> GroupoidFunctor:
        """``self`` then ``other``."""
        return GroupoidFunctor(
            self.source,
            other.target,
            [other.obj_map[o] for o in self.obj_map],
            [other.mor_map[m] for m in self.mor_map],
            check=False,
        )

    def is_surjective_on_objects(self) -> bool:
        return set(self.obj_map) == set(range(self.target.num_objects))

    def is_surjective_on_morphisms(self) -> bool:
        return set(self.mor_map) == set(range(self.target.num_morphisms))

    def is_full(self) -> bool:
        S, T = self.source, self.target
        for a in range(S.num_objects):
            for b in range(S.num_objects):
                image = {self.mor_map[m] for m in S.hom_set(a, b)}
                if image != set(T.hom_set(self.obj_map[a], self.obj_map[b])):
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupoidFunctor):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
        )

    __hash__ = None


def same_groupoid(A: FiniteGroupoid, B: FiniteGroupoid) -> bool:
    if A is B:
        return True
    return (
        A.objects == B.objects
        and A.morphisms == B.morphisms
        and A.src == B.src
        and A.tgt == B.tgt
        and A.comp == B.comp
    )


def identity_functor(X: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(X, X, range(X.num_objects), range(X.num_morphisms), check=False)


# standard groupoids


def point_groupoid() -> FiniteGroupoid:
    return FiniteGroupoid(["*"], ["id"], [0], [0], {(0, 0): 0}, [0], name="pt")


def discrete_groupoid(labels) -> FiniteGroupoid:
    labels = list(labels)
    n = len(labels)
    return FiniteGroupoid(
        labels, [("id", o) for o in labels], range(n), range(n), {(i, i): i for i in range(n)}, range(n),
        name="discrete",
    )


def codiscrete_groupoid(n: int) -> FiniteGroupoid:
    """Objects ``0..n-1`` with exactly one morphism between any two."""
    objs = list(range(n))
    mors = [((a, b), a, b) for a in objs for b in objs]
    return FiniteGroupoid.build(objs, mors, lambda f, g: (f[0], g[1]), lambda a: (a, a), name=f"codisc{n}")


def delooping(G: FiniteGroup) -> FiniteGroupoid:
    """BG: one object, morphisms the elements of G, ``g then h = hg``."""
    n = G.order
    comp = {(g, h): G.then(g, h) for g in range(n) for h in range(n)}
    return FiniteGroupoid(["*"], list(range(n)), [0] * n, [0] * n, comp, [0], name=f"B{G.name}", check=False)


def universal_bundle(G: FiniteGroup, BG: FiniteGroupoid | None = None) -> tuple[FiniteGroupoid, GroupoidFunctor]:
    """EG (translation groupoid of G on itself) and its projection to BG.

    Morphisms are ``(x, g): x -> g x``; ``(x, g) then (gx, h) = (x, hg)``.
    """
    objs = list(G)
    mors = [((x, g), x, G.mul(g, x)) for x in G for g in G]
    EG = FiniteGroupoid.build(
        objs, mors, lambda f, k: (f[0], G.then(f[1], k[1])), lambda x: (x, 0), name=f"E{G.name}", check=False
    )
    BG = BG if BG is not None else delooping(G)
    p = GroupoidFunctor(EG, BG, [0] * G.order, [m[1] for m in EG.morphisms], check=False)
    return EG, p


def loop_groupoid(G: FiniteGroup) -> FiniteGroupoid:
    """Lambda G: objects x in G, morphisms ``(x, g): x -> g x g^-1``,
    ``(x, g) then (gxg^-1, h) = (x, hg)``."""
    objs = list(G)
    mors = [((x, g), x, G.conj(g, x)) for x in G for g in G]
    return FiniteGroupoid.build(
        objs, mors, lambda f, k: (f[0], G.then(f[1], k[1])), lambda x: (x, 0), name=f"L{G.name}", check=False
    )


def action_groupoid(G: FiniteGroup, points, act: Callable[[int, Hashable], Hashable]) -> FiniteGroupoid:
    """V//G for a left action ``act(g, v)``; morphisms ``(v, g): v -> g.v``."""
    points = list(points)
    mors = [((v, g), v, act(g, v)) for v in points for g in G]
    return FiniteGroupoid.build(
        points, mors, lambda f, k: (f[0], G.then(f[1], k[1])), lambda v: (v, 0), name=f"V//{G.name}"
    )


def product_groupoid(A: FiniteGroupoid, B: FiniteGroupoid) -> FiniteGroupoid:
    objs = list(itertools.product(range(A.num_objects), range(B.num_objects)))
    oidx = {o: i for i, o in enumerate(objs)}
    mors = list(itertools.product(range(A.num_morphisms), range(B.num_morphisms)))
    midx = {m: i for i, m in enumerate(mors)}
    src = [oidx[(A.src[f], B.src[g])] for f, g in mors]
    tgt = [oidx[(A.tgt[f], B.tgt[g])] for f, g in mors]
    comp = {}
    for (f1, g1), (f2, g2) in itertools.product(A.comp, B.comp):
        comp[(midx[(f1, f2)], midx[(g1, g2)])] = midx[(A.comp[(f1, g1)], B.comp[(f2, g2)])]
    ids = [midx[(A.identities[a], B.identities[b])] for a, b in objs]
    return FiniteGroupoid(objs, mors, src, tgt, comp, ids, name=f"{A.name}x{B.name}", check=False)


def groupoid_cardinality(X: FiniteGroupoid) -> Fraction:
    """Sum over isomorphism classes of ``1/|Aut|``."""
    return sum((Fraction(1, len(X.automorphisms(c[0]))) for c in X.components), Fraction(0))


# limits


@dataclass
class Pullback:
    groupoid: FiniteGroupoid
    left: GroupoidFunctor
    right: GroupoidFunctor
    f: GroupoidFunctor
    g: GroupoidFunctor

    def mediate(self, u: GroupoidFunctor, v: GroupoidFunctor) -> GroupoidFunctor:
        """The unique functor ``D -> P`` with ``left o h = u`` and ``right o h = v``.

        Raises :class:`GroupoidError` unless ``(u, v)`` is a cone.
        """
        if u.source is not v.source:
            raise GroupoidError("cone legs have different sources")
        if u.compose(self.f).obj_map != v.compose(self.g).obj_map or u.compose(self.f).mor_map != v.compose(
            self.g
        ).mor_map:
            raise GroupoidError("not a commuting cone")
        P = self.groupoid
        h = GroupoidFunctor(
            u.source,
            P,
            [P.obj_index[(u.obj_map[d], v.obj_map[d])] for d in range(u.source.num_objects)],
            [P.mor_index[(u.mor_map[m], v.mor_map[m])] for m in range(u.source.num_morphisms)],
        )
        return h


def pullback(f: GroupoidFunctor, g: GroupoidFunctor) -> Pullback:
    """Strict pullback ``A x_C B``: matching pairs of objects and morphisms."""
    if not same_groupoid(f.target, g.target):
        raise GroupoidError("pullback needs a shared codomain")
    A, B = f.source, g.source
    by_obj = defaultdict(list)
    for b in range(B.num_objects):
        by_obj[g.obj_map[b]].append(b)
    objs = [(a, b) for a in range(A.num_objects) for b in by_obj[f.obj_map[a]]]
    oidx = {o: i for i, o in enumerate(objs)}
    by_mor = defaultdict(list)
    for n in range(B.num_morphisms):
        by_mor[g.mor_map[n]].append(n)
    mors = [(m, n) for m in range(A.num_morphisms) for n in by_mor[f.mor_map[m]]]
    midx = {m: i for i, m in enumerate(mors)}
    src = [oidx[(A.src[m], B.src[n])] for m, n in mors]
    tgt = [oidx[(A.tgt[m], B.tgt[n])] for m, n in mors]
    out_of = defaultdict(list)
    for i, s in enumerate(src):
        out_of[s].append(i)
    comp = {}
    for i, (m1, n1) in enumerate(mors):
        for j in out_of[tgt[i]]:
            m2, n2 = mors[j]
            comp[(i, j)] = midx[(A.comp[(m1, m2)], B.comp[(n1, n2)])]
    ids = [midx[(A.identities[a], B.identities[b])] for a, b in objs]
    P = FiniteGroupoid(objs, mors, src, tgt, comp, ids, name="pullback", check=False)
    left = GroupoidFunctor(P, A, [a for a, _ in objs], [m for m, _ in mors], check=False)
    right = GroupoidFunctor(P, B, [b for _, b in objs], [n for _, n in mors], check=False)
    return Pullback(P, left, right, f, g)


def homotopy_pullback(f: GroupoidFunctor, g: GroupoidFunctor) -> Pullback:
    """Iso-comma groupoid: objects ``(a, b, phi: f(a) -> g(b))``.

    For two points into BG this is G as a discrete groupoid (the loop
    group of BG).  The ``Pullback.mediate`` helper does not apply here.
    """
    if not same_groupoid(f.target, g.target):
        raise GroupoidError("pullback needs a shared codomain")
    A, B, C = f.source, g.source, f.target
    objs = [
        (a, b, phi)
        for a in range(A.num_objects)
        for b in range(B.num_objects)
        for phi in C.hom_set(f.obj_map[a], g.obj_map[b])
    ]
    oidx = {o: i for i, o in enumerate(objs)}
    mors, src, tgt = [], [], []
    for i, (a, b, phi) in enumerate(objs):
        for (a2, b2, phi2), j in oidx.items():
            for m in A.hom_set(a, a2):
                for n in B.hom_set(b, b2):
                    if C.comp[(f.mor_map[m], phi2)] == C.comp[(phi, g.mor_map[n])]:
                        mors.append((m, n, i))
                        src.append(i)
                        tgt.append(j)
    midx = {(m, n, s): k for k, (m, n, s) in enumerate(mors)}
    out_of = defaultdict(list)
    for k, s in enumerate(src):
        out_of[s].append(k)
    comp = {}
    for k, (m1, n1, s) in enumerate(mors):
        for l in out_of[tgt[k]]:
            m2, n2, _ = mors[l]
            comp[(k, l)] = midx[(A.comp[(m1, m2)], B.comp[(n1, n2)], s)]
    ids = [midx[(A.identities[a], B.identities[b], i)] for i, (a, b, _) in enumerate(objs)]
    P = FiniteGroupoid(objs, mors, src, tgt, comp, ids, name="hpullback", check=False)
    left = GroupoidFunctor(P, A, [o[0] for o in objs], [m[0] for m in mors], check=False)
    right = GroupoidFunctor(P, B, [o[1] for o in objs], [m[1] for m in mors], check=False)
    return Pullback(P, left, right, f, g)


def point_inclusion(X: FiniteGroupoid, obj: int = 0) -> GroupoidFunctor:
    return GroupoidFunctor(point_groupoid(), X, [obj], [X.identities[obj]], check=False)


def fiber(p: GroupoidFunctor, obj: int) -> FiniteGroupoid:
    """Strict fiber of ``p`` over an object: the pullback along the point."""
    return pullback(point_inclusion(p.target, obj), p).groupoid
