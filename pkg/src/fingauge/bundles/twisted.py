"""Twisted Cech vector bundles with monomial transition matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..arith.phase import ZERO, Phase


class TwistedBundleError(ValueError):
    pass


def _key(t) -> tuple[int, ...]:
    if isinstance(t, str):
        return tuple(int(a) for a in t.split(","))
    return tuple(int(a) for a in t)


@dataclass(eq=False)
class CechGerbe:
    """Nerve of a finite cover (listed pair and triple overlaps) with a phase
    ``g_ijk`` per listed ordered triple."""

    opens: tuple
    pairs: tuple
    triples: tuple
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.opens = tuple(self.opens)
        self.pairs = tuple(_key(p) for p in self.pairs)
        self.triples = tuple(_key(t) for t in self.triples)
        vals = {}
        for k, v in self.values.items():
            k = _key(k)
            if k not in self.triples:
                raise TwistedBundleError(f"gerbe value on unlisted triple {k}")
            vals[k] = Phase.coerce(v)
        self.values = vals
        pairset = set(self.pairs)
        for i, j, k in self.triples:
            for p in ((i, j), (j, k), (i, k)):
                if p not in pairset:
                    raise TwistedBundleError(f"triple {(i, j, k)} needs the overlap {p}")

    def __call__(self, i: int, j: int, k: int) -> Phase:
        return self.values.get((i, j, k), ZERO)

    def quadruples(self):
        tri = set(self.triples)
        for q in itertools.product(self.opens, repeat=4):
            i, j, k, l = q
            if {(j, k, l), (i, k, l), (i, j, l), (i, j, k)} <= tri:
                yield q

    def is_cocycle(self) -> bool:
        """``g_jkl - g_ikl + g_ijl - g_ijk == 0`` on every quadruple overlap."""
        for i, j, k, l in self.quadruples():
            if self(j, k, l) - self(i, k, l) + self(i, j, l) - self(i, j, k):
                return False
        return True

    def adjust(self, lam: dict) -> CechGerbe:
        """Add the Cech coboundary of a phase 1-cochain ``lam`` on pairs."""
        lam = {_key(k): Phase.coerce(v) for k, v in lam.items()}
        z = lambda p: lam.get(p, ZERO)  # noqa: E731
        vals = {(i, j, k): self(i, j, k) + z((i, j)) + z((j, k)) - z((i, k)) for i, j, k in self.triples}
        return CechGerbe(self.opens, self.pairs, self.triples, vals)

    @classmethod
    def trivial(cls, opens, pairs, triples) -> CechGerbe:
        return cls(opens, pairs, triples, {})

    @classmethod
    def from_json(cls, data: dict) -> CechGerbe:
        return cls(data["opens"], data["pairs"], data["triples"], data.get("gerbe", {}))

    def to_json(self) -> dict:
        return {
            "opens": list(self.opens),
            "pairs": [list(p) for p in self.pairs],
            "triples": [list(t) for t in self.triples],
            "gerbe": {",".join(map(str, k)): str(v) for k, v in sorted(self.values.items()) if v},
        }


class MonomialMatrix:
    """Generalised permutation matrix: column ``c`` has the single nonzero
    entry ``zeta^phases[c]`` in row ``perm[c]``."""

    __slots__ = ("perm", "phases")

    def __init__(self, perm, phases=None):
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(len(perm))):
            raise TwistedBundleError("perm must be a permutation of 0..n-1")
        phases = [ZERO] * len(perm) if phases is None else [Phase.coerce(p) for p in phases]
        if len(phases) != len(perm):
            raise TwistedBundleError("need one phase per column")
        self.perm = perm
        self.phases = tuple(phases)

    @property
    def rank(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> MonomialMatrix:
        return cls(range(n))

    @classmethod
    def scalar(cls, phase, n: int = 1) -> MonomialMatrix:
        return cls(range(n), [phase] * n)

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        if self.rank != other.rank:
            raise TwistedBundleError("rank mismatch")
        perm = [self.perm[other.perm[c]] for c in range(other.rank)]
        phases = [other.phases[c] + self.phases[other.perm[c]] for c in range(other.rank)]
        return MonomialMatrix(perm, phases)

    def times_phase(self, phase) -> MonomialMatrix:
        p = Phase.coerce(phase)
        return MonomialMatrix(self.perm, [q + p for q in self.phases])

    def inverse(self) -> MonomialMatrix:
        n = self.rank
        perm = [0] * n
        phases = [ZERO] * n
        for c in range(n):
            perm[self.perm[c]] = c
            phases[self.perm[c]] = -self.phases[c]
        return MonomialMatrix(perm, phases)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.perm == other.perm and self.phases == other.phases

    __hash__ = None

    def to_dense(self):
        from ..arith.cyclotomic import Cyclotomic
        from ..arith.linalg import CycMatrix

        n = self.rank
        rows = [[Cyclotomic.zero() for _ in range(n)] for _ in range(n)]
        for c in range(n):
            rows[self.perm[c]][c] = Cyclotomic.from_phase(self.phases[c])
        return CycMatrix(rows, n)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "phases": [str(p) for p in self.phases]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialMatrix:
        return cls(data["perm"], data.get("phases"))

    def __repr__(self) -> str:
        return f"MonomialMatrix({list(self.perm)}, {[str(p) for p in self.phases]})"


TwistedBundle = dict  # ordered pair (i, j) -> MonomialMatrix


def twisted_bundle_from_json(data: dict) -> TwistedBundle:
    return {_key(k): MonomialMatrix.from_json(v) for k, v in data.items()}


def check_twisted_bundle(cover: CechGerbe, tw: TwistedBundle) -> bool:
    """``tw_ij tw_jk == tw_ik * zeta^g_ijk`` on every listed triple."""
    tw = {_key(k): v for k, v in tw.items()}
    missing = [p for p in cover.pairs if p not in tw]
    if missing:
        raise TwistedBundleError(f"no transition matrix on {missing[0]}")
    ranks = {m.rank for m in tw.values()}
    if len(ranks) > 1:
        raise TwistedBundleError(f"rank mismatch across overlaps: {sorted(ranks)}")
    for i, j, k in cover.triples:
        if tw[(i, j)] @ tw[(j, k)] != tw[(i, k)].times_phase(cover(i, j, k)):
            return False
    return True


def check_cech_cocycle(cover: CechGerbe, tw: TwistedBundle) -> bool:
    """Ordinary ``g_ij g_jk == g_ik``, written independently of the twisted
    checker so the two can be compared."""
    tw = {_key(k): v for k, v in tw.items()}
    for i, j, k in cover.triples:
        a, b, c = tw[(i, j)], tw[(j, k)], tw[(i, k)]
        dense = a.to_dense() @ b.to_dense()
        if dense != c.to_dense():
            return False
    return True


def gauge(tw: TwistedBundle, lam: dict) -> TwistedBundle:
    """Multiply each transition matrix by the phase ``lam[(i, j)]``."""
    lam = {_key(k): Phase.coerce(v) for k, v in lam.items()}
    return {p: m.times_phase(lam.get(p, ZERO)) for p, m in tw.items()}


def full_nerve(n: int, distinct: bool = True) -> tuple[list, list, list]:
    """Opens ``0..n-1`` with every ordered pair and triple (of distinct
    indices when ``distinct``)."""
    opens = list(range(n))
    if distinct:
        pairs = [p for p in itertools.permutations(opens, 2)]
        triples = [t for t in itertools.permutations(opens, 3)]
    else:
        pairs = list(itertools.product(opens, repeat=2))
        triples = list(itertools.product(opens, repeat=3))
    return opens, pairs, triples


def rank_one_candidates(cover: CechGerbe, denominator: int):
    """Every rank-1 twisted bundle with phases in ``(1/denominator)Z/Z``."""
    for vals in itertools.product(range(denominator), repeat=len(cover.pairs)):
        yield {p: MonomialMatrix.scalar(Phase(v, denominator)) for p, v in zip(cover.pairs, vals)}
