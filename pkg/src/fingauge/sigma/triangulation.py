"""Oriented closed 3-dimensional complexes given by ordered tetrahedra.

Each tetrahedron ``[v0, v1, v2, v3]`` is listed in the global vertex order.
Edges are identified by vertex pairs, unless explicit per-tetrahedron edge
ids are supplied (needed for complexes with a single vertex, such as the
3-torus, where many edges share endpoints).  Edge ids are listed in the
order ``01, 02, 03, 12, 13, 23``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

EDGE_SLOTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_SLOT = {p: k for k, p in enumerate(EDGE_SLOTS)}


class TriangulationError(ValueError):
    pass


@dataclass(eq=False)
class Triangulation3:
    vertices: int
    tets: tuple
    signs: tuple
    edge_ids: tuple | None = None
    name: str = "M"

    def __post_init__(self):
        self.tets = tuple(tuple(int(a) for a in t) for t in self.tets)
        self.signs = tuple(int(s) for s in self.signs)
        if self.edge_ids is not None:
            self.edge_ids = tuple(tuple(int(e) for e in es) for es in self.edge_ids)
        self._derive()

    def _derive(self) -> None:
        if len(self.signs) != len(self.tets):
            raise TriangulationError("need one sign per tetrahedron")
        if any(s not in (1, -1) for s in self.signs):
            raise TriangulationError("signs must be +1 or -1")
        explicit = self.edge_ids is not None
        if explicit and len(self.edge_ids) != len(self.tets):
            raise TriangulationError("need six edge ids per tetrahedron")
        ends: dict = {}
        tet_edges = []
        for n, t in enumerate(self.tets):
            if len(t) != 4 or any(not 0 <= a < self.vertices for a in t):
                raise TriangulationError(f"tetrahedron {n} is malformed")
            if explicit:
                if any(t[i] > t[i + 1] for i in range(3)):
                    raise TriangulationError(f"tetrahedron {n} is not listed in vertex order")
                ids = self.edge_ids[n]
                if len(ids) != 6:
                    raise TriangulationError(f"tetrahedron {n} needs six edge ids")
            else:
                if any(t[i] >= t[i + 1] for i in range(3)):
                    raise TriangulationError(f"tetrahedron {n} is not listed in strict vertex order")
                ids = tuple((t[i], t[j]) for i, j in EDGE_SLOTS)
            for (i, j), e in zip(EDGE_SLOTS, ids):
                pair = (t[i], t[j])
                if ends.setdefault(e, pair) != pair:
                    raise TriangulationError(f"edge {e} has inconsistent endpoints")
            tet_edges.append(ids)
        labels = sorted(ends)
        index = {e: k for k, e in enumerate(labels)}
        self.edge_labels = tuple(labels)
        self.edges = tuple(ends[e] for e in labels)
        self.tet_edges = tuple(tuple(index[e] for e in ids) for ids in tet_edges)
        # triangle (i, j, k) of a tet gives the relation g_ik = g_jk . g_ij
        tris = {}
        for te in self.tet_edges:
            for i, j, k in itertools.combinations(range(4), 3):
                key = (te[_SLOT[(i, j)]], te[_SLOT[(j, k)]], te[_SLOT[(i, k)]])
                tris[key] = None
        self.triangles = tuple(tris)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def tet_faces(self, n: int):
        """``(triangle key, induced sign)`` for the four faces of tet ``n``."""
        te = self.tet_edges[n]
        out = []
        for drop in range(4):
            i, j, k = [a for a in range(4) if a != drop]
            key = (te[_SLOT[(i, j)]], te[_SLOT[(j, k)]], te[_SLOT[(i, k)]])
            out.append((key, self.signs[n] * (-1) ** drop))
        return out

    def audit(self) -> None:
        """Every triangle bounds exactly two tetrahedra with opposite induced
        orientations, and the vertex graph is connected."""
        seen = defaultdict(list)
        for n in range(len(self.tets)):
            for key, s in self.tet_faces(n):
                seen[key].append(s)
        for key, ss in seen.items():
            if len(ss) != 2 or sum(ss) != 0:
                raise TriangulationError(f"triangle {key} is not glued to exactly one opposite face")
        if not self.is_connected():
            raise TriangulationError("complex is not connected")

    def is_valid(self) -> bool:
        try:
            self.audit()
        except TriangulationError:
            return False
        return True

    def is_connected(self) -> bool:
        parent = list(range(self.vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.edges:
            parent[find(a)] = find(b)
        used = {a for t in self.tets for a in t}
        return len({find(a) for a in used}) == 1 and len(used) == self.vertices

    def spanning_tree(self) -> list[int]:
        """Edge indices of a spanning tree of the vertex graph (BFS from 0)."""
        adj = defaultdict(list)
        for e, (a, b) in enumerate(self.edges):
            if a != b:
                adj[a].append((b, e))
                adj[b].append((a, e))
        seen = {0}
        tree = []
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for b, e in sorted(adj[a]):
                    if b not in seen:
                        seen.add(b)
                        tree.append(e)
                        nxt.append(b)
            frontier = nxt
        return tree

    def euler_characteristic(self) -> int:
        return self.vertices - self.num_edges + len(self.triangles) - len(self.tets)

    def to_json(self) -> dict:
        out = {"vertices": self.vertices, "tets": [list(t) for t in self.tets], "signs": list(self.signs)}
        if self.edge_ids is not None:
            out["edges"] = [list(es) for es in self.edge_ids]
        return out

    @classmethod
    def from_json(cls, data: dict) -> Triangulation3:
        return cls(int(data["vertices"]), data["tets"], data["signs"], data.get("edges"), data.get("name", "M"))


def boundary_4simplex() -> Triangulation3:
    """The 5 facets of the 4-simplex with the induced boundary orientation."""
    tets = [tuple(a for a in range(5) if a != i) for i in range(5)]
    return Triangulation3(5, tets, [(-1) ** i for i in range(5)], name="boundary4simplex")


def pachner_1_4(M: Triangulation3, n: int) -> Triangulation3:
    """Replace tetrahedron ``n`` by the cone on its boundary from a new,
    last vertex.  Only simplicial complexes (no explicit edge ids)."""
    if M.edge_ids is not None:
        raise TriangulationError("1-4 move is implemented for simplicial complexes")
    t, eps = M.tets[n], M.signs[n]
    v = M.vertices
    tets = [x for k, x in enumerate(M.tets) if k != n]
    signs = [s for k, s in enumerate(M.signs) if k != n]
    for i in range(4):
        face = tuple(a for k, a in enumerate(t) if k != i)
        tets.append(face + (v,))
        signs.append(eps * (-1) ** (i + 1))
    return Triangulation3(v + 1, tets, signs, name=f"{M.name}+1-4")


def torus3_kuhn() -> Triangulation3:
    """One-vertex 3-torus: the Kuhn subdivision of the unit cube into six
    tetrahedra, with opposite faces identified.

    Edges are the seven nonzero 0/1 difference vectors; the tetrahedron of
    a permutation ``p`` walks ``0 -> e_p0 -> e_p0 + e_p1 -> (1, 1, 1)`` and is
    oriented by the sign of ``p``.
    """
    vecs = [v for v in itertools.product((0, 1), repeat=3) if any(v)]
    vid = {v: k for k, v in enumerate(vecs)}
    tets, signs, edges = [], [], []
    for p in itertools.permutations(range(3)):
        pts = [(0, 0, 0)]
        for axis in p:
            q = list(pts[-1])
            q[axis] = 1
            pts.append(tuple(q))
        ids = [vid[tuple(b - a for a, b in zip(pts[i], pts[j]))] for i, j in EDGE_SLOTS]
        inversions = sum(1 for a, b in itertools.combinations(p, 2) if a > b)
        tets.append((0, 0, 0, 0))
        signs.append((-1) ** inversions)
        edges.append(ids)
    return Triangulation3(1, tets, signs, edges, name="T3")
