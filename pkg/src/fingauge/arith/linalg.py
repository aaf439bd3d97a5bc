"""Dense cyclotomic matrices and exact Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic


def _cyc(v) -> Cyclotomic:
    return v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)


class CycMatrix:
    """Immutable dense matrix with :class:`Cyclotomic` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None) -> None:
        entries = tuple(tuple(_cyc(v) for v in row) for row in entries)
        self.rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> CycMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> CycMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def scalar(cls, value) -> CycMatrix:
        return cls([[value]], 1)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Cyclotomic:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: CycMatrix) -> CycMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix sum")
        return CycMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Cyclotomic.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CycMatrix(out, other.cols)

    def scale(self, c) -> CycMatrix:
        c = _cyc(c)
        return CycMatrix([[c * v for v in r] for r in self.entries], self.cols)

    def kron(self, other: CycMatrix) -> CycMatrix:
        out = []
        for r in self.entries:
            for s in other.entries:
                out.append([a * b for a in r for b in s])
        return CycMatrix(out, self.cols * other.cols)

    def trace(self) -> Cyclotomic:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = Cyclotomic.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def apply(self, vec) -> list[Cyclotomic]:
        return [
            sum((a * _cyc(v) for a, v in zip(row, vec)), Cyclotomic.zero()) for row in self.entries
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    __hash__ = None

    def to_json(self) -> list:
        return [[v.to_json() for v in r] for r in self.entries]

    @classmethod
    def from_json(cls, rows) -> CycMatrix:
        def entry(v):
            if isinstance(v, dict):
                return Cyclotomic.from_json(v)
            return Cyclotomic.rational(Fraction(v))

        return cls([[entry(v) for v in r] for r in rows])

    def __repr__(self) -> str:
        return f"CycMatrix({[[str(v) for v in r] for r in self.entries]})"


def block_diagonal(blocks) -> CycMatrix:
    blocks = list(blocks)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[Cyclotomic.zero()] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return CycMatrix(out, cols)


def row_reduce(rows, ncols: int):
    """Reduced row echelon form of sparse rows ``{col: value}``.

    Returns ``(pivots, reduced)`` where ``reduced[p]`` is the normalized row
    whose pivot column is ``p``.
    """
    reduced: dict[int, dict[int, Cyclotomic]] = {}
    for row in rows:
        row = {c: _cyc(v) for c, v in row.items() if not _cyc(v).is_zero()}
        # reduced rows carry no other pivot columns, so one pass suffices
        for c in [c for c in row if c in reduced]:
            f = row[c]
            for k, v in reduced[c].items():
                nv = row.get(k, Cyclotomic.zero()) - f * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
        if not row:
            continue
        p = min(row)
        inv = row[p].inverse()
        row = {k: v * inv for k, v in row.items()}
        for q, other in reduced.items():
            if p in other:
                f = other[p]
                for k, v in row.items():
                    nv = other.get(k, Cyclotomic.zero()) - f * v
                    if nv.is_zero():
                        other.pop(k, None)
                    else:
                        other[k] = nv
        reduced[p] = row
    return sorted(reduced), reduced


def nullspace(rows, ncols: int) -> list[list[Cyclotomic]]:
    """Basis of ``{x : row . x = 0 for every row}`` (one vector per free column)."""
    pivots, reduced = row_reduce(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Cyclotomic.zero() for _ in range(ncols)]
        vec[free] = Cyclotomic.one()
        for p in pivots:
            v = reduced[p].get(free)
            if v is not None:
                vec[p] = -v
        basis.append(vec)
    return basis


def rank(rows, ncols: int) -> int:
    return len(row_reduce(rows, ncols)[0])
