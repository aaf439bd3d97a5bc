"""Scalar bibranes on spans of groupoids: fusion, the monoid product on an
internal category, and graded convolution."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from ..arith.cyclotomic import Cyclotomic
from ..groupoids.group import FiniteGroup
from ..groupoids.groupoid import (
    FiniteGroupoid,
    GroupoidError,
    GroupoidFunctor,
    discrete_groupoid,
    pullback,
    same_groupoid,
)
from .category import CategoryAlgebra, FiniteCategory


class FootMismatchError(GroupoidError):
    pass


def _cyc(v) -> Cyclotomic:
    return v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)


@dataclass(eq=False)
class Bibrane:
    """A span ``X <-s- Q -t-> X'`` with a scalar on each object of ``Q``."""

    s: GroupoidFunctor
    t: GroupoidFunctor
    values: tuple

    def __post_init__(self):
        if self.s.source is not self.t.source and not same_groupoid(self.s.source, self.t.source):
            raise GroupoidError("span legs need a common source")
        if len(self.values) != self.s.source.num_objects:
            raise GroupoidError("need one value per object of the correspondence")
        self.values = tuple(_cyc(v) for v in self.values)

    @property
    def correspondence(self) -> FiniteGroupoid:
        return self.s.source

    def is_invariant(self) -> bool:
        """Values are constant on isomorphism classes of ``Q``."""
        Q = self.correspondence
        return all(self.values[Q.src[m]] == self.values[Q.tgt[m]] for m in range(Q.num_morphisms))

    def to_json(self) -> dict:
        Q = self.correspondence
        return {
            "objects": [repr(o) for o in Q.objects],
            "values": [v.to_json() for v in self.values],
        }


def bibrane_fuse(V: Bibrane, W: Bibrane) -> Bibrane:
    """Composite on the strict fiber product ``Q x_{X'} Q'``; the value at
    a matching pair is the product of the two values."""
    if not same_groupoid(V.t.target, W.s.target):
        raise FootMismatchError("middle feet of the two spans differ")
    pb = pullback(V.t, W.s)
    P = pb.groupoid
    vals = [V.values[a] * W.values[b] for a, b in P.objects]
    return Bibrane(pb.left.compose(V.s), pb.right.compose(W.t), vals)


def unit_bibrane(X: FiniteGroupoid) -> Bibrane:
    from ..groupoids.groupoid import identity_functor

    i = identity_functor(X)
    return Bibrane(i, i, [1] * X.num_objects)


def constant_bibrane(s: GroupoidFunctor, t: GroupoidFunctor, value=1) -> Bibrane:
    return Bibrane(s, t, [value] * s.source.num_objects)


# monoid product on an internal category Q => X in finite sets


@dataclass(eq=False)
class InternalCategory:
    """A finite category viewed as a span ``X <-s- Q -t-> X`` of discrete
    groupoids with ``comp: Q x_{t,s} Q -> Q``."""

    category: FiniteCategory
    Q: FiniteGroupoid
    X: FiniteGroupoid
    s: GroupoidFunctor
    t: GroupoidFunctor
    pairs: FiniteGroupoid
    first: GroupoidFunctor
    second: GroupoidFunctor
    comp: GroupoidFunctor


def internal_category(C: FiniteCategory) -> InternalCategory:
    Q = discrete_groupoid(range(C.num_morphisms))
    X = discrete_groupoid(range(C.num_objects))
    s = GroupoidFunctor(Q, X, C.src, C.src)
    t = GroupoidFunctor(Q, X, C.tgt, C.tgt)
    pb = pullback(t, s)
    P = pb.groupoid
    comp_obj = [C.comp[(f, g)] for f, g in P.objects]
    comp = GroupoidFunctor(P, Q, comp_obj, [Q.identities[c] for c in comp_obj])
    return InternalCategory(C, Q, X, s, t, P, pb.left, pb.right, comp)


def push_forward(f: GroupoidFunctor, values, weighted: bool = False) -> list:
    """Fiberwise sum of ``values`` (on objects of the source) along ``f``.

    With ``weighted`` each object contributes ``|Aut(target)| / |Aut(source)|``
    times its value, the groupoid-cardinality normalization of the fiber.
    """
    S, T = f.source, f.target
    out = [Cyclotomic.zero() for _ in range(T.num_objects)]
    for a, v in enumerate(values):
        b = f.obj_map[a]
        if weighted:
            w = Fraction(len(T.automorphisms(b)), len(S.automorphisms(a)))
            v = v * Cyclotomic.rational(w)
        out[b] = out[b] + v
    return out


def bibrane_monoid_product(C: FiniteCategory | InternalCategory, V, W, weighted: bool = False) -> list:
    """``(V * W)(q) = sum over comp(f, g) = q of V(f) W(g)``.

    ``V`` and ``W`` assign a scalar to each morphism of ``C``.  Built as
    pull back along the two projections, multiply, push forward along comp.
    """
    ic = C if isinstance(C, InternalCategory) else internal_category(C)
    V = [_cyc(v) for v in V]
    W = [_cyc(v) for v in W]
    pulled = [V[ic.first.obj_map[i]] * W[ic.second.obj_map[i]] for i in range(ic.pairs.num_objects)]
    return push_forward(ic.comp, pulled, weighted=weighted)


def monoid_unit(C: FiniteCategory) -> list:
    return [Cyclotomic.one() if f in C.identities else Cyclotomic.zero() for f in range(C.num_morphisms)]


def algebra_product(A: CategoryAlgebra, V, W) -> list:
    """Product of two coefficient vectors in the category algebra."""
    prod = A.multiply(
        {i: _cyc(v) for i, v in enumerate(V) if not _cyc(v).is_zero()},
        {i: _cyc(v) for i, v in enumerate(W) if not _cyc(v).is_zero()},
    )
    return [prod.get(i, Cyclotomic.zero()) for i in range(A.dim)]


# graded vector spaces


def graded_convolution(G: FiniteGroup, d, e) -> list:
    """``(d * e)_x = sum over x = h g of d_g e_h``."""
    out = [0] * G.order
    for g in G:
        for h in G:
            out[G.mul(h, g)] += d[g] * e[h]
    return out


def graded_span(G: FiniteGroup) -> InternalCategory:
    """The span ``pt <- G -> pt`` of G-indexed values, with composition the
    group law (``g then h = hg``)."""
    from .category import category_from_group

    return internal_category(category_from_group(G))


def graded_convolution_via_bibranes(G: FiniteGroup, d, e) -> list:
    """The same convolution computed by the pull-push product on G over a
    point; returned as integers when the inputs are integers."""
    out = bibrane_monoid_product(graded_span(G), d, e)
    return [int(v.as_fraction()) if v.is_rational() and v.as_fraction().denominator == 1 else v for v in out]


def fiber_sizes(f: GroupoidFunctor) -> dict:
    counts = defaultdict(int)
    for b in f.obj_map:
        counts[b] += 1
    return dict(counts)
