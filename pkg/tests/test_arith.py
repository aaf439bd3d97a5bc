from __future__ import annotations

import cmath
import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fingauge.arith.cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, phase_weight_sum
from fingauge.arith.linalg import CycMatrix, nullspace, rank
from fingauge.arith.phase import ZERO, Phase, common_order, phase_sum
from fingauge.arith.snf import invariant_factors, smith_normal_form, solve_inhomogeneous_mod, solve_linear_mod

phases = st.builds(Phase, st.integers(-50, 50), st.integers(1, 12))
small_orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


def cyclotomics(order):
    return st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=euler_phi(order)).map(
        lambda cs: Cyclotomic(order, cs)
    )


# Phase


@given(phases, phases, phases)
def test_phase_group_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ZERO == a
    assert a + (-a) == ZERO
    assert a - b == a + (-b)


@given(phases)
def test_phase_canonical_form(a):
    assert 0 <= a.num < a.den
    assert gcd(a.num, a.den) == 1 or a.num == 0
    assert Phase.parse(str(a)) == a
    assert Phase.from_fraction(a.as_fraction()) == a


@given(st.integers(-100, 100), st.integers(1, 30))
def test_phase_reduces_mod_one(p, q):
    assert Phase(p, q) == Phase(p + q, q)
    assert Phase(p, q).as_fraction() == Fraction(p, q) % 1


def test_phase_parsing_and_coercion():
    assert Phase.coerce("3/6") == Phase(1, 2)
    assert Phase.coerce(Fraction(5, 4)) == Phase(1, 4)
    assert Phase.coerce(2) == ZERO
    assert str(Phase(-1, 3)) == "2/3"
    assert not Phase(4, 4)
    assert Phase(1, 2) * 3 == Phase(1, 2)
    with pytest.raises(ZeroDivisionError):
        Phase(1, 0)


def test_phase_sum_and_common_order():
    assert phase_sum([Phase(1, 3)] * 3) == ZERO
    assert common_order([Phase(1, 4), Phase(1, 6), ZERO]) == 12


# Cyclotomic


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15])
def test_cyclotomic_polynomial_degree_and_roots(n):
    poly = cyclotomic_polynomial(n)
    assert len(poly) - 1 == euler_phi(n)
    z = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * z**k for k, c in enumerate(poly))) < 1e-9


@given(small_orders, st.integers(-40, 40))
def test_zeta_power_matches_complex(order, k):
    z = Cyclotomic.zeta_power(order, k)
    assert abs(complex(z) - cmath.exp(2j * cmath.pi * k / order)) < 1e-9
    assert Cyclotomic.zeta_power(order, 1) ** order == Cyclotomic.one(order)


@settings(max_examples=60)
@given(st.data())
def test_cyclotomic_field_axioms(data):
    order = data.draw(small_orders)
    a, b, c = (data.draw(cyclotomics(order)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-6
    if not a.is_zero():
        assert a * a.inverse() == Cyclotomic.one(order)


@given(phases, phases)
def test_from_phase_is_a_homomorphism(a, b):
    lhs = Cyclotomic.from_phase(a + b)
    rhs = Cyclotomic.from_phase(a) * Cyclotomic.from_phase(b)
    assert lhs == rhs


@given(small_orders, st.integers(1, 4), st.integers(0, 30))
def test_lift_preserves_value(order, m, k):
    z = Cyclotomic.zeta_power(order, k)
    assert z.lift(order * m) == z
    assert abs(complex(z.lift(order * m)) - complex(z)) < 1e-9


def test_sum_of_roots_of_unity_vanishes():
    for n in range(2, 13):
        assert sum((Cyclotomic.zeta_power(n, k) for k in range(n)), Cyclotomic.zero()).is_zero()


def test_phase_weight_sum_and_rationality():
    total = phase_weight_sum({Phase(0): 3, Phase(1, 2): 1})
    assert total == Cyclotomic.rational(2)
    assert total.as_fraction() == 2
    with pytest.raises(ValueError):
        Cyclotomic.zeta_power(3, 1).as_fraction()
    z = Cyclotomic.zeta_power(6, 1)
    assert Cyclotomic.from_json(z.to_json()) == z


# exact matrices


def test_cyc_matrix_algebra():
    z = Cyclotomic.zeta_power(3, 1)
    A = CycMatrix([[z, 0], [0, 1]], 2)
    B = CycMatrix([[0, 1], [1, 0]], 2)
    assert (A @ B) @ A == A @ (B @ A)
    assert (A @ A @ A) == CycMatrix.identity(2)
    assert A.kron(B).shape == (4, 4)
    assert A.trace() == z + 1
    assert CycMatrix.from_json(A.to_json()) == A


def test_nullspace_and_rank():
    dense = [[1, 2, 3], [2, 4, 6]]
    rows = [{c: v for c, v in enumerate(r)} for r in dense]
    ns = nullspace(rows, 3)
    assert len(ns) == 2 and rank(rows, 3) == 1
    for v in ns:
        assert all(sum(Fraction(r[i]) * v[i].as_fraction() for i in range(3)) == 0 for r in dense)


# Smith normal form: the oracle is the determinantal-divisor characterisation
# d_1 ... d_k = gcd of all k x k minors.


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1 :] for r in m[1:]]) for j in range(len(m)))


def _determinantal_divisors(A):
    rows, cols = len(A), len(A[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, _det([[A[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g)
    return out


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


@settings(max_examples=150)
@given(matrices)
def test_snf_transform_and_divisibility(A):
    res = smith_normal_form(A, left=True, right=True)
    assert _matmul(_matmul(res.U, A), res.V) == res.D
    assert _matmul(res.U, res.U_inv) == [[int(i == j) for j in range(len(A))] for i in range(len(A))]
    n = len(A[0])
    assert _matmul(res.V, res.V_inv) == [[int(i == j) for j in range(n)] for i in range(n)]
    diag = [d for d in res.diagonal if d]
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    for i, row in enumerate(res.D):
        for j, v in enumerate(row):
            assert i == j or v == 0


@settings(max_examples=100)
@given(matrices)
def test_snf_matches_determinantal_divisors(A):
    divs = _determinantal_divisors(A)
    expect = [divs[0]] + [b // a for a, b in zip(divs, divs[1:])] if divs else []
    assert invariant_factors(A) == expect


def test_snf_known_example():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


@settings(max_examples=60)
@given(matrices, st.integers(2, 8))
def test_mod_solution_count_matches_brute_force(A, M):
    cols = len(A[0])
    brute = sum(
        1
        for x in itertools.product(range(M), repeat=cols)
        if all(sum(a * b for a, b in zip(row, x)) % M == 0 for row in A)
    )
    assert solve_linear_mod(A, M).count == brute


@settings(max_examples=60)
@given(matrices, st.integers(2, 6), st.data())
def test_inhomogeneous_solver(A, M, data):
    cols = len(A[0])
    b = data.draw(st.lists(st.integers(0, M - 1), min_size=len(A), max_size=len(A)))
    sol = solve_inhomogeneous_mod(A, b, M)
    brute = any(
        all((sum(a * v for a, v in zip(row, x)) - bi) % M == 0 for row, bi in zip(A, b))
        for x in itertools.product(range(M), repeat=cols)
    )
    assert (sol is not None) == brute
    if sol is not None:
        assert all((sum(a * v for a, v in zip(row, sol)) - bi) % M == 0 for row, bi in zip(A, b))
