"""Isomorphism search between finite groupoids."""

from __future__ import annotations

from .groupoid import FiniteGroupoid, GroupoidFunctor


def _element_order(X: FiniteGroupoid, root: int, g: int) -> int:
    e = X.identities[root]
    k, r = 1, g
    while r != e:
        r = X.comp[(r, g)]
        k += 1
    return k


def _greedy_generators(X: FiniteGroupoid, root: int) -> list[int]:
    elems = X.automorphisms(root)
    gens: list[int] = []
    span = {X.identities[root]}
    for a in elems:
        if a not in span:
            gens.append(a)
            span = _closure(X, root, gens)
    return gens


def _closure(X: FiniteGroupoid, root: int, gens) -> set[int]:
    seen = {X.identities[root]}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = X.comp[(a, g)]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def _vertex_group_iso(A: FiniteGroupoid, ra: int, B: FiniteGroupoid, rb: int) -> dict[int, int] | None:
    ga, gb = A.automorphisms(ra), B.automorphisms(rb)
    if len(ga) != len(gb):
        return None
    gens = _greedy_generators(A, ra)
    orders = [_element_order(A, ra, g) for g in gens]
    cands = [[h for h in gb if _element_order(B, rb, h) == o] for o in orders]

    def extend(images):
        phi = {A.identities[ra]: B.identities[rb]}
        frontier = [A.identities[ra]]
        while frontier:
            nxt = []
            for a in frontier:
                for g, h in zip(gens, images):
                    x, y = A.comp[(a, g)], B.comp[(phi[a], h)]
                    if x in phi:
                        if phi[x] != y:
                            return None
                    else:
                        phi[x] = y
                        nxt.append(x)
            frontier = nxt
        if len(set(phi.values())) != len(ga):
            return None
        for a in ga:
            for b in ga:
                if phi[A.comp[(a, b)]] != B.comp[(phi[a], phi[b])]:
                    return None
        return phi

    def rec(k, images):
        if k == len(gens):
            return extend(images)
        for h in cands[k]:
            r = rec(k + 1, images + [h])
            if r is not None:
                return r
        return None

    return rec(0, [])


def find_isomorphism(A: FiniteGroupoid, B: FiniteGroupoid) -> GroupoidFunctor | None:
    """An isomorphism ``A -> B`` if one exists, else ``None``.

    Components are matched greedily (isomorphism of components is an
    equivalence relation, so greedy matching is complete); within a
    component the functor is fixed by a vertex-group isomorphism and a
    choice of tree arrows.
    """
    if A.num_objects != B.num_objects or A.num_morphisms != B.num_morphisms:
        return None
    used = set()
    obj_map = [None] * A.num_objects
    mor_map = [None] * A.num_morphisms
    for ca in A.components:
        ra = ca[0]
        match = None
        for k, cb in enumerate(B.components):
            if k in used or len(cb) != len(ca):
                continue
            phi = _vertex_group_iso(A, ra, B, cb[0])
            if phi is not None:
                match = (k, cb, phi)
                break
        if match is None:
            return None
        k, cb, phi = match
        used.add(k)
        rb = cb[0]
        tree_a, tree_b = {}, {}
        for a, b in zip(ca, cb):
            obj_map[a] = b
            tree_a[a] = A.hom_set(ra, a)[0] if a != ra else A.identities[ra]
            tree_b[a] = B.hom_set(rb, b)[0] if a != ra else B.identities[rb]
        for a in ca:
            for b in ca:
                for m in A.hom_set(a, b):
                    # m = t_a^-1 ; loop ; t_b
                    loop = A.comp[(A.comp[(tree_a[a], m)], A.inv(tree_a[b]))]
                    img = B.comp[(B.comp[(B.inv(tree_b[a]), phi[loop])], tree_b[b])]
                    mor_map[m] = img
    F = GroupoidFunctor(A, B, obj_map, mor_map, check=False)
    if not F.is_functor() or len(set(mor_map)) != B.num_morphisms:
        return None
    return F


def are_isomorphic(A: FiniteGroupoid, B: FiniteGroupoid) -> bool:
    return find_isomorphism(A, B) is not None
