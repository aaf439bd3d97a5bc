from __future__ import annotations

import itertools
import random
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fingauge.arith.phase import ZERO, Phase
from fingauge.cohomology.bar import (
    cohomology_order,
    group_homology,
    is_coboundary,
    normalize_cocycle,
    solve_cocycles,
)
from fingauge.cohomology.cochains import (
    CocycleError,
    GroupCochain,
    cyclic_three_cocycle,
    differential,
    is_cocycle,
    is_three_cocycle,
)
from fingauge.cohomology.loop import (
    LoopTwoCochain,
    is_loop_two_cocycle,
    loop_coboundary_witness,
    loop_differential,
)
from fingauge.groupoids.group import builtin_group, cyclic_group

SMALL = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"]

# Integral homology of small groups, from the standard periodic resolution
# for cyclic groups, the Kunneth formula for Z/2 x Z/2 and the Sylow
# decomposition for S3.
HOMOLOGY = {
    "Z2": [[2], [], [2]],
    "Z3": [[3], [], [3]],
    "Z4": [[4], [], [4]],
    "Z2xZ2": [[2, 2], [2], [2, 2, 2]],
    "S3": [[2], [], [6]],
}


def random_cochain(G, n, rng, den=6):
    vals = {t: Phase(rng.randrange(den), den) for t in itertools.product(range(G.order), repeat=n)}
    return GroupCochain(G, n, vals)


def test_cochain_defaults_and_normalization():
    G = cyclic_group(3)
    c = GroupCochain(G, 2, {(1, 2): Phase(1, 3)})
    assert c(0, 0) == ZERO and c(1, 2) == Phase(1, 3)
    assert c.normalized
    assert not c.with_value((0, 1), "1/2").normalized


def test_differential_of_constants_vanishes():
    G = builtin_group("S3")
    c = GroupCochain(G, 0, {(): Phase(1, 5)})
    assert differential(c).is_zero()


def test_differential_by_hand():
    G = cyclic_group(2)
    beta = GroupCochain.from_function(G, 2, lambda a, b: Phase(a * b, 2))
    assert differential(beta)(1, 1, 1) == ZERO


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_d_squared_is_zero(name, n):
    G = builtin_group(name)
    rng = random.Random(f"{name}{n}")
    for _ in range(3):
        c = random_cochain(G, n, rng)
        assert differential(differential(c)).is_zero()


@pytest.mark.parametrize("name", SMALL)
def test_three_cocycle_identity_agrees_with_differential(name):
    G = builtin_group(name)
    rng = random.Random(name)
    samples = [GroupCochain.zero(G, 3)]
    samples += [differential(random_cochain(G, 2, rng)) for _ in range(3)]
    samples += [random_cochain(G, 3, rng, den=2) for _ in range(3)]
    if G.order > 1 and G.exponent == G.order:
        samples.append(cyclic_three_cocycle(G.order, 1, G))
    for a in samples:
        assert is_three_cocycle(a) == is_cocycle(a)


def test_cyclic_cocycle_values():
    a = cyclic_three_cocycle(2, 1)
    assert a(1, 1, 1) == Phase(1, 2)
    assert {k: v for k, v in a.values.items() if v} == {(1, 1, 1): Phase(1, 2)}
    assert cyclic_three_cocycle(3, 0).is_zero()
    assert cyclic_three_cocycle(3, 1)(1, 2, 2) == Phase(1, 3)
    with pytest.raises(ValueError):
        cyclic_three_cocycle(3, 3)


def test_hand_built_cocycle_equals_builtin():
    G = cyclic_group(2)
    a = GroupCochain(G, 3, {(1, 1, 1): "1/2"})
    assert is_three_cocycle(a)
    assert a == cyclic_three_cocycle(2, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyclic_classes_are_distinct(n):
    for p, q in itertools.combinations(range(n), 2):
        diff = cyclic_three_cocycle(n, p) - cyclic_three_cocycle(n, q)
        assert is_coboundary(diff, n * n) is None


def test_alpha1_not_a_coboundary_by_exhaustion():
    G = cyclic_group(2)
    a = cyclic_three_cocycle(2, 1)
    assert is_coboundary(a, 4) is None
    # normalized 2-cochains on Z/2 have the single free value beta(1, 1)
    for v in range(4):
        beta = GroupCochain(G, 2, {(1, 1): Phase(v, 4)})
        assert differential(beta) != a


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3"])
def test_coboundary_witness(name):
    G = builtin_group(name)
    rng = random.Random(name)
    beta = random_cochain(G, 2, rng, den=G.order)
    alpha = differential(beta)
    w = is_coboundary(alpha, G.order)
    assert w is not None and differential(w) == alpha
    zero_w = is_coboundary(GroupCochain.zero(G, 3), G.order)
    assert zero_w is not None and zero_w.is_zero()


@pytest.mark.parametrize("name", sorted(HOMOLOGY))
def test_group_homology(name):
    G = builtin_group(name)
    assert [group_homology(G, n) for n in (1, 2, 3)] == HOMOLOGY[name]
    assert cohomology_order(G, 3) == prod(HOMOLOGY[name][2])


@pytest.mark.parametrize("name", sorted(HOMOLOGY))
def test_solver_class_count_matches_homology(name):
    G = builtin_group(name)
    sol = solve_cocycles(G, 3, G.order**2)
    assert sol.num_classes == cohomology_order(G, 3)
    assert sol.complete
    for r in sol.representatives:
        assert is_three_cocycle(r) and r.normalized
    classes = {sol.class_of(r) for r in sol.representatives}
    assert len(classes) == sol.num_classes


def test_solver_small_cases():
    assert solve_cocycles(cyclic_group(2), 3, 4).num_classes == 2
    assert solve_cocycles(cyclic_group(3), 3, 9).num_classes == 3
    one = solve_cocycles(builtin_group("S3"), 3, 1)
    assert one.num_cocycles == 1 and one.representatives[0].is_zero()


def test_class_of_is_additive_on_cyclic_family():
    sol = solve_cocycles(cyclic_group(4), 3, 16)
    images = [sol.class_of(cyclic_three_cocycle(4, p)) for p in range(4)]
    assert len(set(images)) == 4


def test_class_of_rejects_non_cocycle():
    G = cyclic_group(2)
    sol = solve_cocycles(G, 3, 4)
    with pytest.raises(CocycleError):
        sol.class_of(GroupCochain(G, 3, {(1, 1, 1): "1/4"}))


def test_normalize_cocycle_shift():
    G = cyclic_group(3)
    rng = random.Random(7)
    beta = random_cochain(G, 2, rng, den=3)
    a = cyclic_three_cocycle(3, 1) + differential(beta)
    assert not a.normalized
    b = normalize_cocycle(a)
    assert b.normalized and is_three_cocycle(b)
    assert is_coboundary(b - cyclic_three_cocycle(3, 1), 9) is not None


def test_size_guard():
    with pytest.raises(ValueError):
        group_homology(builtin_group("S3"), 8)


# loop cochains


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["Z2", "Z3", "S3"]), st.integers(0, 10**6))
def test_loop_coboundaries_are_cocycles(name, seed):
    G = builtin_group(name)
    rng = random.Random(seed)
    theta = {(x, g): Phase(rng.randrange(6), 6) for x in G for g in G}
    w = loop_differential(theta, G)
    assert is_loop_two_cocycle(w)
    witness = loop_coboundary_witness(w, 6)
    assert witness is not None
    dw = loop_differential(witness, G)
    assert all(dw(*k) == w(*k) for k in itertools.product(range(G.order), repeat=3))


def test_single_perturbation_breaks_loop_cocycle():
    G = cyclic_group(3)
    assert is_loop_two_cocycle(LoopTwoCochain.zero(G))
    w = LoopTwoCochain.zero(G).with_value((0, 1, 2), "1/3")
    assert not is_loop_two_cocycle(w)
