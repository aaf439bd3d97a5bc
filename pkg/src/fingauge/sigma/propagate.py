"""Discrete charged-particle propagation on a finite directed graph."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith.cyclotomic import Cyclotomic
from ..arith.linalg import CycMatrix
from ..arith.phase import ZERO, Phase


@dataclass(frozen=True)
class Edge:
    src: int
    tgt: int
    phase: Phase = ZERO
    kinetic: Phase = ZERO


@dataclass(eq=False)
class Connection:
    """Vertices ``0..n-1`` and edges carrying a holonomy phase and a kinetic
    action; both enter the amplitude as roots of unity."""

    vertices: int
    edges: tuple

    def __post_init__(self):
        edges = []
        for e in self.edges:
            if not isinstance(e, Edge):
                e = Edge(int(e[0]), int(e[1]), Phase.coerce(e[2]) if len(e) > 2 else ZERO,
                         Phase.coerce(e[3]) if len(e) > 3 else ZERO)
            if not (0 <= e.src < self.vertices and 0 <= e.tgt < self.vertices):
                raise ValueError(f"edge {e.src}->{e.tgt} leaves the graph")
            edges.append(e)
        self.edges = tuple(edges)

    def amplitude(self, e: Edge) -> Cyclotomic:
        return Cyclotomic.from_phase(e.kinetic + e.phase)

    def transfer_matrix(self) -> CycMatrix:
        """``T[y][x] = sum over edges x -> y`` of the edge amplitude."""
        n = self.vertices
        rows = [[Cyclotomic.zero() for _ in range(n)] for _ in range(n)]
        for e in self.edges:
            rows[e.tgt][e.src] = rows[e.tgt][e.src] + self.amplitude(e)
        return CycMatrix(rows, n)

    @classmethod
    def from_json(cls, data: dict) -> Connection:
        edges = [
            Edge(int(e["src"]), int(e["tgt"]), Phase.coerce(e.get("phase", "0")), Phase.coerce(e.get("kinetic", "0")))
            for e in data.get("edges", [])
        ]
        return cls(int(data["vertices"]), edges)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": [{"src": e.src, "tgt": e.tgt, "phase": str(e.phase), "kinetic": str(e.kinetic)} for e in self.edges],
        }


def _state(psi) -> list[Cyclotomic]:
    return [v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in psi]


def propagate(conn: Connection, psi, steps: int = 1) -> list[Cyclotomic]:
    """``psi'(y) = sum over edges x -> y of amplitude * psi(x)``, applied
    ``steps`` times."""
    psi = _state(psi)
    if len(psi) != conn.vertices:
        raise ValueError("state has the wrong length")
    amps = [(e.src, e.tgt, conn.amplitude(e)) for e in conn.edges]
    for _ in range(steps):
        out = [Cyclotomic.zero() for _ in range(conn.vertices)]
        for x, y, a in amps:
            out[y] = out[y] + a * psi[x]
        psi = out
    return psi


def matrix_power(A: CycMatrix, k: int) -> CycMatrix:
    out = CycMatrix.identity(A.rows)
    base = A
    while k:
        if k & 1:
            out = base @ out
        base = base @ base
        k >>= 1
    return out


def propagate_by_matrix(conn: Connection, psi, steps: int = 1) -> list[Cyclotomic]:
    """The same evolution as a matrix power applied to ``psi``."""
    return matrix_power(conn.transfer_matrix(), steps).apply(_state(psi))


def delta(n: int, x: int) -> list[Cyclotomic]:
    return [Cyclotomic.one() if i == x else Cyclotomic.zero() for i in range(n)]


def cycle_graph(n: int, phase) -> Connection:
    return Connection(n, [Edge(i, (i + 1) % n, Phase.coerce(phase)) for i in range(n)])
