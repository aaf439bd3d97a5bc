"""Hom-groupoids ``hom(Sigma, X)`` of functors and natural isomorphisms."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .groupoid import FiniteGroupoid, GroupoidError

DEFAULT_CAP = 10**6


class SizeGuardError(RuntimeError):
    """An enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class FreeShape:
    """The free groupoid on a quiver, used as a parameter space.

    Functors out of it are arbitrary assignments of generator images, so
    infinite shapes such as BZ (one object, one generator) stay finite to
    map out of.
    """

    num_objects: int
    generators: tuple[tuple[int, int], ...]
    name: str = "free"


def loop_shape() -> FreeShape:
    """BZ: one object with one free generating loop."""
    return FreeShape(1, ((0, 0),), name="BZ")


def _shape_arrows(shape) -> list[tuple[int, int, int | None]]:
    """(source, target, morphism index or None) for the arrows that
    naturality must be checked against."""
    if isinstance(shape, FreeShape):
        return [(s, t, None) for s, t in shape.generators]
    return [(shape.src[m], shape.tgt[m], m) for m in range(shape.num_morphisms)]


def enumerate_functors(shape, X: FiniteGroupoid, cap: int = DEFAULT_CAP) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All functors ``shape -> X`` as ``(object images, arrow images)``.

    For a :class:`FreeShape` the arrow images are the generator images; for a
    finite groupoid they are the full morphism map.
    """
    nobj = shape.num_objects
    out = []
    budget = [cap]

    def spend(k=1):
        budget[0] -= k
        if budget[0] < 0:
            raise SizeGuardError(f"functor enumeration exceeded cap {cap}")

    if isinstance(shape, FreeShape):
        for objs in itertools.product(range(X.num_objects), repeat=nobj):
            spend()
            choices = [X.hom_set(objs[s], objs[t]) for s, t in shape.generators]
            for imgs in itertools.product(*choices):
                spend()
                out.append((objs, tuple(imgs)))
        return out

    S = shape
    nm = S.num_morphisms
    # check composites as soon as all three morphisms are assigned
    checks = defaultdict(list)
    for (f, g), h in S.comp.items():
        checks[max(f, g, h)].append((f, g, h))
    order = list(range(nm))
    for objs in itertools.product(range(X.num_objects), repeat=nobj):
        spend()
        img = [None] * nm
        fixed = {S.identities[a]: X.identities[objs[a]] for a in range(nobj)}

        def rec(k):
            if k == nm:
                out.append((objs, tuple(img)))
                return
            m = order[k]
            cands = [fixed[m]] if m in fixed else X.hom_set(objs[S.src[m]], objs[S.tgt[m]])
            for c in cands:
                spend()
                img[m] = c
                if all(X.comp[(img[f], img[g])] == img[h] for f, g, h in checks[m]):
                    rec(k + 1)
            img[m] = None

        rec(0)
    return out


def _arrow_image(shape, functor, arrow) -> int:
    objs, imgs = functor
    s, t, m = arrow
    if m is None:
        idx = _shape_arrows(shape).index(arrow)
        return imgs[idx]
    return imgs[m]


def mapping_groupoid(shape, X: FiniteGroupoid, cap: int = DEFAULT_CAP) -> FiniteGroupoid:
    """``hom(shape, X)``: objects are functors, morphisms natural isomorphisms.

    Morphism labels are ``(source functor index, components)``; composition is
    componentwise.
    """
    functors = enumerate_functors(shape, X, cap)
    arrows = _shape_arrows(shape)
    nobj = shape.num_objects
    findex = {f: i for i, f in enumerate(functors)}
    budget = [cap]
    mors, src, tgt = [], [], []
    arrow_imgs = [[_arrow_image(shape, F, a) for a in arrows] for F in functors]
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            comps = [X.hom_set(F[0][a], G[0][a]) for a in range(nobj)]
            total = 1
            for c in comps:
                total *= len(c)
            budget[0] -= total
            if budget[0] < 0:
                raise SizeGuardError(f"natural transformation enumeration exceeded cap {cap}")
            for eta in itertools.product(*comps):
                ok = True
                for k, (s, t, _) in enumerate(arrows):
                    if X.comp[(arrow_imgs[i][k], eta[t])] != X.comp[(eta[s], arrow_imgs[j][k])]:
                        ok = False
                        break
                if ok:
                    mors.append((i, tuple(eta)))
                    src.append(i)
                    tgt.append(j)
    midx = {m: k for k, m in enumerate(mors)}
    out_of = defaultdict(list)
    for k, s in enumerate(src):
        out_of[s].append(k)
    comp = {}
    for k, (i, eta) in enumerate(mors):
        j = tgt[k]
        for l in out_of[j]:
            theta = mors[l][1]
            comp[(k, l)] = midx[(i, tuple(X.comp[(eta[a], theta[a])] for a in range(nobj)))]
    ids = [midx[(i, tuple(X.identities[o] for o in F[0]))] for i, F in enumerate(functors)]
    if len(set(ids)) != len(ids):
        raise GroupoidError("identity natural transformations are not distinct")
    name = f"hom({getattr(shape, 'name', '')},{X.name})"
    G = FiniteGroupoid(functors, mors, src, tgt, comp, ids, name=name, check=False)
    G.functor_index = findex
    return G
