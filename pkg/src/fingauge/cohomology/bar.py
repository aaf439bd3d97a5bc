"""Bar-complex linear algebra: homology, cocycle solving, coboundary tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod

from ..arith.phase import Phase, common_order
from ..arith.snf import invariant_factors, smith_normal_form, solve_inhomogeneous_mod, solve_linear_mod
from ..groupoids.group import FiniteGroup
from ..groupoids.mapping import SizeGuardError
from .cochains import CocycleError, GroupCochain, is_cocycle

BAR_GUARD = 10**5


def cochain_basis(G: FiniteGroup, n: int, normalized: bool = True) -> list[tuple[int, ...]]:
    elems = range(1, G.order) if normalized else range(G.order)
    return list(itertools.product(elems, repeat=n))


def _guard(G: FiniteGroup, n: int) -> None:
    if (G.order - 1) ** (n + 1) > BAR_GUARD:
        raise SizeGuardError(f"bar complex of {G.name} in degree {n} exceeds the size guard")


def coboundary_matrix(G: FiniteGroup, n: int, normalized: bool = True) -> tuple[list[list[int]], list, list]:
    """Integer matrix of ``d: C^n -> C^{n+1}`` (rows index (n+1)-tuples).

    Returns ``(matrix, row_basis, col_basis)``.  Over Z it is also the
    transpose of the bar boundary ``C_{n+1} -> C_n``.
    """
    rows_b = cochain_basis(G, n + 1, normalized)
    cols_b = cochain_basis(G, n, normalized)
    cidx = {t: i for i, t in enumerate(cols_b)}
    mat = []
    for t in rows_b:
        row = [0] * len(cols_b)

        def add(key, s):
            j = cidx.get(key)
            if j is not None:
                row[j] += s

        add(t[1:], 1)
        for i in range(1, n + 1):
            add(t[: i - 1] + (G.then(t[i - 1], t[i]),) + t[i + 1 :], -1 if i % 2 else 1)
        add(t[:n], 1 if (n + 1) % 2 == 0 else -1)
        mat.append(row)
    return mat, rows_b, cols_b


def group_homology(G: FiniteGroup, n: int) -> list[int]:
    """Invariant factors of ``H_n(G, Z)`` (a 0 entry stands for a free Z).

    Uses the normalized bar complex: ``H_n = ker d_n / im d_{n+1}`` with
    ``d_{k+1} = (coboundary C^k -> C^{k+1})^T``.
    """
    if not 1 <= n <= 4:
        raise ValueError("homology degree must be between 1 and 4")
    _guard(G, n)
    if G.order == 1:
        return []
    dn, _, cols_n1 = coboundary_matrix(G, n - 1)  # transpose of boundary C_n -> C_{n-1}
    dn1, rows_n1, cols_n = coboundary_matrix(G, n)  # transpose of boundary C_{n+1} -> C_n
    size_n = len(cols_n)
    rank_n = len(invariant_factors(dn, cols=len(cols_n1))) if n > 1 else 0
    facs = invariant_factors(dn1, rows=len(rows_n1), cols=size_n)
    free = size_n - rank_n - len(facs)
    return [d for d in facs if d > 1] + [0] * free


def cohomology_order(G: FiniteGroup, n: int) -> int:
    """``|H^n(G, Q/Z)| = |Hom(H_n(G, Z), Q/Z)|`` (finite groups, n >= 1)."""
    facs = group_homology(G, n)
    if 0 in facs:
        raise ValueError("homology has a free part; H^n(G, Q/Z) is infinite")
    return prod(facs)


def _vector_to_cochain(G, n, basis, vec, M) -> GroupCochain:
    return GroupCochain(G, n, {t: Phase(v, M) for t, v in zip(basis, vec) if v % M})


def _cochain_to_vector(c: GroupCochain, basis, M) -> list[int]:
    out = []
    for t in basis:
        v = c(*t)
        if M % v.den:
            raise ValueError(f"value {v} at {t} does not lie in (1/{M})Z/Z")
        out.append(v.num * (M // v.den))
    return out


@dataclass
class CocycleSolution:
    """Normalized n-cocycles valued in (1/M)Z/Z and their classes in H^n(G, Q/Z).

    Two cocycles are identified when they differ by the coboundary of any
    Q/Z-valued cochain; ``num_classes`` is the size of the image of these
    cocycles in ``H^n(G, Q/Z)``.
    """

    group: FiniteGroup
    degree: int
    modulus: int
    num_cocycles: int
    num_classes: int
    class_invariants: list[int]
    representatives: list[GroupCochain]
    homology_order: int | None = None
    _data: dict = field(default_factory=dict, repr=False)

    @property
    def complete(self) -> bool | None:
        """Whether every class of ``H^n(G, Q/Z)`` was reached (``None`` if unchecked)."""
        if self.homology_order is None:
            return None
        return self.homology_order == self.num_classes

    def class_of(self, c: GroupCochain) -> tuple[int, ...]:
        """Coordinates of a normalized cocycle's class in ``prod Z/k``."""
        d = self._data
        x = _cochain_to_vector(c, d["basis"], self.modulus)
        M = self.modulus
        y = [sum(d["V_inv"][i][r] * x[r] for r in range(len(x))) % M for i in range(len(x))]
        coords = []
        for i, o in zip(d["gen_cols"], d["orders"]):
            step = M // o
            if y[i] % step:
                raise CocycleError("cochain is not a cocycle")
            coords.append((y[i] // step) % o)
        w = [sum(d["U"][i][k] * coords[k] for k in range(len(coords))) for i in range(len(coords))]
        return tuple(wi % D for wi, D in zip(w, d["diag"]) if D > 1)


def solve_cocycles(G: FiniteGroup, n: int, M: int, check_homology: bool = True) -> CocycleSolution:
    _guard(G, n)
    basis = cochain_basis(G, n)
    dn, _, _ = coboundary_matrix(G, n)
    if M == 1 or not basis:
        sol = CocycleSolution(G, n, M, 1, 1, [], [GroupCochain.zero(G, n)])
        if check_homology and G.order > 1:
            sol.homology_order = cohomology_order(G, n)
        elif check_homology:
            sol.homology_order = 1
        return sol
    zsol = solve_linear_mod(dn, M, cols=len(basis))
    V, V_inv = zsol.snf.V, zsol.snf.V_inv
    diag = zsol.snf.diagonal + [0] * (len(basis) - len(zsol.snf.diagonal))
    gen_cols = [i for i, d in enumerate(diag) if gcd(d, M) > 1]
    orders = [gcd(diag[i], M) for i in gen_cols]
    k = len(gen_cols)

    # coboundaries: d(beta) with beta valued in (1/(M*|G|)) and d(beta) in (1/M)
    N = G.order
    prev_basis = cochain_basis(G, n - 1)
    bvecs = []
    if n >= 1 and prev_basis:
        dprev, _, _ = coboundary_matrix(G, n - 1)
        res = smith_normal_form(dprev, rows=len(basis), cols=len(prev_basis), left=False, right=True)
        pdiag = res.diagonal + [0] * (len(prev_basis) - len(res.diagonal))
        for i, d in enumerate(pdiag):
            scale = N // gcd(d, N)
            beta = [res.V[r][i] * scale for r in range(len(prev_basis))]
            img = [sum(a * b for a, b in zip(row, beta)) for row in dprev]
            assert all(v % N == 0 for v in img)
            bvecs.append([(v // N) % M for v in img])

    def coords(x):
        y = [sum(V_inv[i][r] * x[r] for r in range(len(x))) % M for i in range(len(x))]
        return [(y[i] // (M // o)) % o for i, o in zip(gen_cols, orders)]

    rel_cols = [[o if r == c else 0 for r in range(k)] for c, o in enumerate(orders)]
    rel_cols += [coords(b) for b in bvecs]
    R = [[col[r] for col in rel_cols] for r in range(k)]
    if k:
        qres = smith_normal_form(R, rows=k, cols=len(rel_cols), left=True, right=False)
        qdiag = qres.diagonal + [0] * (k - len(qres.diagonal))
        U, U_inv = qres.U, qres.U_inv
    else:
        qdiag, U, U_inv = [], [], []
    if any(d == 0 for d in qdiag):
        raise AssertionError("quotient of a finite group cannot have a free part")
    num_classes = prod(qdiag) if qdiag else 1
    invariants = [d for d in qdiag if d > 1]

    gens = [[(V[r][i] * (M // o)) % M for r in range(len(basis))] for i, o in zip(gen_cols, orders)]
    reps = []
    ranges = [range(d) for d in qdiag]
    for w in itertools.product(*ranges):
        c = [sum(U_inv[i][j] * w[j] for j in range(k)) for i in range(k)]
        x = [0] * len(basis)
        for ci, g in zip(c, gens):
            if ci:
                x = [(a + ci * b) % M for a, b in zip(x, g)]
        reps.append(_vector_to_cochain(G, n, basis, x, M))

    sol = CocycleSolution(
        G,
        n,
        M,
        num_cocycles=zsol.count,
        num_classes=num_classes,
        class_invariants=invariants,
        representatives=reps,
        _data={"basis": basis, "V_inv": V_inv, "gen_cols": gen_cols, "orders": orders, "U": U, "diag": qdiag},
    )
    if check_homology:
        sol.homology_order = cohomology_order(G, n)
    return sol


def is_coboundary(alpha: GroupCochain, M: int) -> GroupCochain | None:
    """A cochain ``beta`` valued in (1/M)Z/Z with ``d beta = alpha``, or ``None``."""
    G, n = alpha.group, alpha.degree
    if n < 1:
        raise ValueError("degree-0 cochains are never coboundaries of anything")
    basis_n = cochain_basis(G, n, normalized=False)
    target = _cochain_to_vector(alpha, basis_n, M)
    mat, _, prev = coboundary_matrix(G, n - 1, normalized=False)
    sol = solve_inhomogeneous_mod(mat, target, M, cols=len(prev))
    if sol is None:
        return None
    return _vector_to_cochain(G, n - 1, prev, sol, M)


def normalize_cocycle(alpha: GroupCochain) -> GroupCochain:
    """A normalized cocycle cohomologous to ``alpha``."""
    if alpha.normalized:
        return alpha
    if not is_cocycle(alpha):
        raise CocycleError("only cocycles can be normalized by a coboundary shift")
    G, n = alpha.group, alpha.degree
    L = common_order(alpha.values.values())
    full = cochain_basis(G, n, normalized=False)
    degenerate = [i for i, t in enumerate(full) if 0 in t]
    mat, _, prev = coboundary_matrix(G, n - 1, normalized=False)
    sub = [mat[i] for i in degenerate]
    for M in (L, L * G.order, L * G.order**2):
        target = [v for i, v in enumerate(_cochain_to_vector(alpha, full, M)) if i in set(degenerate)]
        beta = solve_inhomogeneous_mod(sub, target, M, cols=len(prev))
        if beta is not None:
            from .cochains import differential

            shifted = alpha - differential(_vector_to_cochain(G, n - 1, prev, beta, M))
            assert shifted.normalized
            return shifted
    raise CocycleError("no normalizing coboundary found")
