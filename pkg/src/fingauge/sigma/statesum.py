"""Flat edge colorings and the Dijkgraaf-Witten state sum."""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from ..arith.cyclotomic import Cyclotomic, phase_weight_sum
from ..arith.phase import ZERO
from ..cohomology.cochains import CocycleError, GroupCochain, is_three_cocycle
from ..groupoids.group import FiniteGroup
from ..groupoids.mapping import DEFAULT_CAP, SizeGuardError
from .triangulation import Triangulation3, TriangulationError

NORMALIZATION = "|G|^-v"


class _Search:
    """Depth-first assignment of group elements to edges with propagation
    through the triangle relations ``g_ik = g_jk . g_ij``."""

    def __init__(self, M: Triangulation3, G: FiniteGroup, fixed: dict, cap: int = DEFAULT_CAP):
        self.M, self.G = M, G
        self.budget = cap
        self.by_edge = defaultdict(list)
        for tri in M.triangles:
            for e in set(tri):
                self.by_edge[e].append(tri)
        self.color = [None] * M.num_edges
        self.fixed = fixed

    def _assign(self, e: int, val: int, trail: list) -> bool:
        """Set edge ``e`` and propagate; record assignments on ``trail``."""
        G, color = self.G, self.color
        stack = [(e, val)]
        while stack:
            e, val = stack.pop()
            if color[e] is not None:
                if color[e] != val:
                    return False
                continue
            color[e] = val
            trail.append(e)
            for a, b, c in self.by_edge[e]:
                ga, gb, gc = color[a], color[b], color[c]
                known = (ga is not None) + (gb is not None) + (gc is not None)
                if known == 3:
                    if gc != G.mul(gb, ga):
                        return False
                elif known == 2:
                    if gc is None:
                        stack.append((c, G.mul(gb, ga)))
                    elif gb is None:
                        stack.append((b, G.mul(gc, G.inv(ga))))
                    else:
                        stack.append((a, G.mul(G.inv(gb), gc)))
        return True

    def _undo(self, trail: list) -> None:
        for e in trail:
            self.color[e] = None

    def run(self, visit) -> None:
        trail: list = []
        for e, v in self.fixed.items():
            if not self._assign(e, v, trail):
                self._undo(trail)
                return
        self._rec(visit)
        self._undo(trail)

    def _rec(self, visit) -> None:
        try:
            e = self.color.index(None)
        except ValueError:
            visit(tuple(self.color))
            return
        for val in range(self.G.order):
            self.budget -= 1
            if self.budget < 0:
                raise SizeGuardError("coloring search exceeded its cap")
            trail: list = []
            if self._assign(e, val, trail):
                self._rec(visit)
            self._undo(trail)


def _free_edges(M: Triangulation3, gauge_fix: bool) -> dict:
    return {e: 0 for e in M.spanning_tree()} if gauge_fix else {}


def flat_colorings(
    M: Triangulation3, G: FiniteGroup, gauge_fix: bool = False, check: bool = True, cap: int = DEFAULT_CAP
) -> list[tuple]:
    """All flat colorings (edge index -> element), or only those trivial on a
    spanning tree when ``gauge_fix``."""
    if check:
        M.audit()
    out: list = []
    _Search(M, G, _free_edges(M, gauge_fix), cap).run(out.append)
    return out


def count_flat_colorings(
    M: Triangulation3, G: FiniteGroup, gauge_fix: bool = True, check: bool = True, cap: int = DEFAULT_CAP
) -> int:
    """Number of flat colorings; with ``gauge_fix`` the gauge-fixed count is
    scaled by ``|G|^(v-1)``."""
    if check:
        M.audit()
    n = [0]

    def visit(_):
        n[0] += 1

    _Search(M, G, _free_edges(M, gauge_fix), cap).run(visit)
    return n[0] * G.order ** (M.vertices - 1) if gauge_fix else n[0]


def coloring_phase(M: Triangulation3, alpha: GroupCochain, color) -> object:
    total = ZERO
    for te, eps in zip(M.tet_edges, M.signs):
        # slots 0, 3, 5 are the edges 01, 12, 23
        a = alpha(color[te[0]], color[te[3]], color[te[5]])
        total = total + a if eps > 0 else total - a
    return total


def _phase_histogram(M: Triangulation3, G: FiniteGroup, alpha: GroupCochain, fixed: dict, cap: int = DEFAULT_CAP) -> Counter:
    hist: Counter = Counter()

    def visit(color):
        hist[coloring_phase(M, alpha, color)] += 1

    _Search(M, G, fixed, cap).run(visit)
    return hist


def _worker(args):
    M, G, alpha, fixed, cap = args
    return sorted(_phase_histogram(M, G, alpha, fixed, cap).items(), key=lambda kv: (kv[0].den, kv[0].num))


def dw_state_sum(
    M: Triangulation3,
    G: FiniteGroup,
    alpha: GroupCochain | None = None,
    check: bool = True,
    gauge_fix: bool = True,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
) -> Cyclotomic:
    """``|G|^-v * sum over flat colorings of prod_T zeta^(eps_T alpha(g01, g12, g23))``.

    With ``gauge_fix`` only colorings trivial on a spanning tree are summed
    and the total is scaled by ``|G|^(v-1)``; this relies on ``alpha`` being
    a cocycle, so ``gauge_fix=False`` is needed for non-cocycles (with
    ``check=False``).
    """
    if alpha is None:
        alpha = GroupCochain.zero(G, 3)
    if alpha.degree != 3:
        raise ValueError("the state sum needs a degree-3 cochain")
    if check:
        M.audit()
        if not is_three_cocycle(alpha):
            raise CocycleError("state sum needs a 3-cocycle")
    if not M.is_connected():
        raise TriangulationError("complex is not connected")
    fixed = _free_edges(M, gauge_fix)
    if workers > 1:
        # fan out over the values of the first edge not fixed by the gauge
        split = next((e for e in range(M.num_edges) if e not in fixed), None)
        if split is None:
            jobs = [(M, G, alpha, fixed, cap)]
        else:
            jobs = [(M, G, alpha, {**fixed, split: v}, cap) for v in range(G.order)]
        hist: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_worker, jobs):
                for p, c in part:
                    hist[p] += c
    else:
        hist = _phase_histogram(M, G, alpha, fixed, cap)
    scale = Fraction(1, G.order) if gauge_fix else Fraction(1, G.order**M.vertices)
    if not hist:
        return Cyclotomic.zero()
    return phase_weight_sum(hist) * Cyclotomic.rational(scale)
