"""Integer Smith normal form and linear systems over Z/M.

The pivot rule is fixed: smallest absolute value in the active block, ties
broken by lowest row and then lowest column.  Arbitrary-precision Python
integers are used throughout (numpy object arrays drive the row/column
operations).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with unimodular ``U``, ``V``.

    ``U``/``V`` (and their inverses) are ``None`` unless requested.
    """

    D: list[list[int]]
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None
    U_inv: list[list[int]] | None = field(default=None, repr=False)
    V_inv: list[list[int]] | None = field(default=None, repr=False)

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _as_array(A, rows: int | None, cols: int | None) -> np.ndarray:
    A = [list(map(int, r)) for r in A]
    m = len(A) if rows is None else rows
    n = (len(A[0]) if A else 0) if cols is None else cols
    arr = np.zeros((m, n), dtype=object)
    arr[:, :] = 0
    for i, r in enumerate(A):
        for j, v in enumerate(r):
            arr[i, j] = v
    return arr


def _eye(n: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=object)
    e[:, :] = 0
    for i in range(n):
        e[i, i] = 1
    return e


def _tolist(a: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in row] for row in a]


def smith_normal_form(
    A,
    *,
    rows: int | None = None,
    cols: int | None = None,
    left: bool = True,
    right: bool = True,
) -> SNFResult:
    """Smith normal form of an integer matrix.

    ``left``/``right`` control whether ``U``/``V`` (with inverses) are tracked;
    switching them off saves time on large boundary matrices.
    """
    D = _as_array(A, rows, cols)
    m, n = D.shape
    U = _eye(m) if left else None
    Ui = _eye(m) if left else None
    V = _eye(n) if right else None
    Vi = _eye(n) if right else None

    def swap_rows(i, j):
        if i == j:
            return
        D[[i, j], :] = D[[j, i], :]
        if left:
            U[[i, j], :] = U[[j, i], :]
            Ui[:, [i, j]] = Ui[:, [j, i]]

    def swap_cols(i, j):
        if i == j:
            return
        D[:, [i, j]] = D[:, [j, i]]
        if right:
            V[:, [i, j]] = V[:, [j, i]]
            Vi[[i, j], :] = Vi[[j, i], :]

    def pivot_block(t):
        sub = D[t:, t:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            return None
        absvals = np.abs(sub[nz[:, 0], nz[:, 1]])
        best = min(range(len(nz)), key=lambda k: (absvals[k], nz[k][0], nz[k][1]))
        return t + int(nz[best][0]), t + int(nz[best][1])

    t = 0
    while t < min(m, n):
        pos = pivot_block(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # clear the pivot column and pivot row by division
            while True:
                p = D[t, t]
                col = D[t + 1 :, t]
                idx = np.nonzero(col)[0]
                if len(idx):
                    q = col[idx] // p
                    rows_i = idx + t + 1
                    D[rows_i, t:] -= np.outer(q, D[t, t:])
                    if left:
                        U[rows_i, :] -= np.outer(q, U[t, :])
                        Ui[:, t] += Ui[:, rows_i].dot(q)
                row = D[t, t + 1 :]
                jdx = np.nonzero(row)[0]
                if len(jdx):
                    q = row[jdx] // p
                    cols_j = jdx + t + 1
                    D[t:, cols_j] -= np.outer(D[t:, t], q)
                    if right:
                        V[:, cols_j] -= np.outer(V[:, t], q)
                        Vi[t, :] += q.dot(Vi[cols_j, :])
                rest_c = np.nonzero(D[t + 1 :, t])[0]
                rest_r = np.nonzero(D[t, t + 1 :])[0]
                if not len(rest_c) and not len(rest_r):
                    break
                cands = [(abs(D[t + 1 + i, t]), t + 1 + i, t) for i in rest_c]
                cands += [(abs(D[t, t + 1 + j]), t, t + 1 + j) for j in rest_r]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
            p = D[t, t]
            sub = D[t + 1 :, t + 1 :]
            bad = np.argwhere(sub % p != 0) if sub.size else []
            if len(bad) == 0:
                break
            i = t + 1 + int(bad[0][0])
            D[t, :] += D[i, :]
            if left:
                U[t, :] += U[i, :]
                Ui[:, i] -= Ui[:, t]
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            if left:
                U[t, :] = -U[t, :]
                Ui[:, t] = -Ui[:, t]
        t += 1

    return SNFResult(
        D=_tolist(D),
        U=_tolist(U) if left else None,
        V=_tolist(V) if right else None,
        U_inv=_tolist(Ui) if left else None,
        V_inv=_tolist(Vi) if right else None,
    )


def invariant_factors(A, *, rows: int | None = None, cols: int | None = None) -> list[int]:
    """Nonzero diagonal entries of the Smith form (no transforms)."""
    res = smith_normal_form(A, rows=rows, cols=cols, left=False, right=False)
    return [d for d in res.diagonal if d]


@dataclass(frozen=True)
class ModSolution:
    """Solution set of ``A x = 0`` over Z/M.

    ``generators[i]`` has additive order ``orders[i]``; the solution group is
    the direct sum of the cyclic groups they generate.
    """

    modulus: int
    count: int
    generators: list[list[int]]
    orders: list[int]
    snf: SNFResult = field(repr=False)


def solve_linear_mod(A, M: int, *, cols: int | None = None) -> ModSolution:
    if M < 1:
        raise ValueError("modulus must be positive")
    if cols is None:
        cols = len(A[0]) if A else 0
    res = smith_normal_form(A, cols=cols, left=False, right=True)
    diag = res.diagonal + [0] * (cols - len(res.diagonal))
    count = 1
    gens, orders = [], []
    for i, d in enumerate(diag):
        g = gcd(d, M)
        count *= g
        if g == 1:
            continue
        step = M // g
        gens.append([(res.V[r][i] * step) % M for r in range(cols)])
        orders.append(g)
    return ModSolution(M, count, gens, orders, res)


def solve_inhomogeneous_mod(A, b, M: int, *, cols: int | None = None) -> list[int] | None:
    """One solution of ``A x = b (mod M)``, or ``None`` if there is none."""
    if cols is None:
        cols = len(A[0]) if A else 0
    m = len(b)
    res = smith_normal_form(A, rows=m, cols=cols, left=True, right=True)
    ub = [sum(res.U[i][k] * b[k] for k in range(m)) % M for i in range(m)]
    y = [0] * cols
    diag = res.diagonal
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, M)
        if ub[i] % g:
            return None
        if d == 0:
            continue
        mg = M // g
        y[i] = ((ub[i] // g) * pow(d // g, -1, mg)) % mg if mg > 1 else 0
    return [sum(res.V[r][i] * y[i] for i in range(cols)) % M for r in range(cols)]
