from __future__ import annotations

import itertools
import random

import pytest

from fingauge.arith.cyclotomic import Cyclotomic
from fingauge.arith.linalg import CycMatrix
from fingauge.arith.phase import Phase
from fingauge.cohomology.bar import solve_cocycles
from fingauge.cohomology.cochains import CocycleError, GroupCochain, cyclic_three_cocycle, differential
from fingauge.cohomology.loop import LoopTwoCochain, is_loop_two_cocycle, loop_coboundary_witness, loop_differential
from fingauge.double.algebra import (
    NonAssociativeError,
    build_twisted_algebra,
    center_dimension,
    check_associativity,
)
from fingauge.double.reps import (
    LoopRep,
    RepShapeError,
    TwistedFusionError,
    characters_equal,
    convolve_characters,
    convolve_dimensions,
    fuse,
    is_twisted_rep,
    one_dimensional_reps,
    random_untwisted_rep,
    regular_isotypic_dimension,
    rep_character,
    unit_rep,
)
from fingauge.double.transgression import transgress, transgress_coboundary
from fingauge.groupoids.group import builtin_group, cyclic_group


def triples(G):
    return itertools.product(range(G.order), repeat=3)


# transgression


def test_transgression_of_zero():
    G = builtin_group("S3")
    assert transgress(GroupCochain.zero(G, 3)).is_zero()


def test_z2_value():
    w = transgress(cyclic_three_cocycle(2, 1))
    assert w(1, 1, 1) == Phase(1, 2)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z5", "Z6"])
def test_transgressed_solver_representatives_are_loop_cocycles(name):
    G = builtin_group(name)
    for a in solve_cocycles(G, 3, G.order**2, check_homology=False).representatives:
        assert is_loop_two_cocycle(transgress(a))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_abelian_three_term_formula(n):
    for p in range(n):
        a = cyclic_three_cocycle(n, p)
        w = transgress(a)
        for x, g, h in triples(a.group):
            assert w(x, g, h) == a(x, g, h) + a(g, h, x) - a(g, x, h)


def test_printed_middle_term_is_not_a_cocycle_beyond_z2():
    # Reading the middle term as a(h, x, g) agrees on Z/2 but is not a
    # 2-cocycle on Lambda(Z/3); a(g, x, h) is the term that makes it one.
    for n, expect in ((2, True), (3, False), (4, False)):
        a = cyclic_three_cocycle(n, 1)
        G = a.group
        vals = {(x, g, h): a(x, g, h) + a(g, h, x) - a(h, x, g) for x, g, h in triples(G)}
        assert is_loop_two_cocycle(LoopTwoCochain(G, vals)) is expect


def test_transgress_rejects_non_cocycle():
    G = cyclic_group(2)
    with pytest.raises(CocycleError):
        transgress(GroupCochain(G, 3, {(1, 1, 1): "1/4"}))


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3"])
def test_transgression_commutes_with_differential_up_to_sign(name):
    G = builtin_group(name)
    rng = random.Random(name)
    for _ in range(3):
        beta = GroupCochain(G, 2, {t: Phase(rng.randrange(6), 6) for t in itertools.product(range(G.order), repeat=2)})
        lhs = transgress(differential(beta), check=False)
        rhs = loop_differential(transgress_coboundary(beta), G)
        assert all(lhs(*k) == -rhs(*k) for k in triples(G))


@pytest.mark.parametrize("name", ["Z2", "Z3"])
def test_cohomologous_cocycles_transgress_to_cohomologous_twists(name):
    G = builtin_group(name)
    M = G.order**2
    for p in range(G.order):
        a = cyclic_three_cocycle(G.order, p)
        for v in range(1, M):
            # exhaust the one-point 2-cochains with values in (1/M)Z/Z
            for t in itertools.product(range(1, G.order), repeat=2):
                beta = GroupCochain(G, 2, {t: Phase(v, M)})
                diff = transgress(a + differential(beta), check=False) - transgress(a)
                assert loop_coboundary_witness(diff, M) is not None


# algebra


def test_untwisted_z2_algebra():
    G = cyclic_group(2)
    A = build_twisted_algebra(G)
    assert A.dim == 4 and A.is_commutative() and check_associativity(A)
    for i in range(A.dim):
        e = A.basis(i)
        assert A.multiply(A.unit(), e) == e == A.multiply(e, A.unit())


def test_twisted_z2_product():
    G = cyclic_group(2)
    A = build_twisted_algebra(G, transgress(cyclic_three_cocycle(2, 1)))
    i = A.index(1, 1)
    k, c = A.basis_product(i, i)
    assert k == A.index(1, 0) and c == Cyclotomic.rational(-1)
    assert check_associativity(A)


def test_algebra_rejects_foreign_twist():
    with pytest.raises(ValueError):
        build_twisted_algebra(cyclic_group(2), LoopTwoCochain.zero(cyclic_group(3)))


def _perturbed(w, rng):
    G = w.group
    key = tuple(rng.randrange(G.order) for _ in range(3))
    den = rng.choice([2, 3, 4, 6])
    return w.with_value(key, w(*key) + Phase(rng.randrange(1, den), den))


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3"])
def test_associativity_iff_cocycle(name):
    G = builtin_group(name)
    rng = random.Random(name)
    base = [transgress(a) for a in solve_cocycles(G, 3, G.order**2, check_homology=False).representatives]
    seen = set()
    for _ in range(12):
        w = rng.choice(base)
        if rng.random() < 0.3:
            theta = {(x, g): Phase(rng.randrange(4), 4) for x in G for g in G}
            w = w + loop_differential(theta, G)
        else:
            w = _perturbed(w, rng)
        expect = is_loop_two_cocycle(w)
        seen.add(expect)
        assert check_associativity(build_twisted_algebra(G, w)) == expect
    assert seen == {True, False}


def _commuting_pair_orbits(G):
    """Brute-force orbits of commuting pairs under simultaneous conjugation."""
    pairs = {(x, g) for x in G for g in G if G.mul(x, g) == G.mul(g, x)}
    orbits = 0
    while pairs:
        x, g = pairs.pop()
        for k in G:
            pairs.discard((G.conj(k, x), G.conj(k, g)))
        orbits += 1
    return orbits


@pytest.mark.parametrize("name,expect", [("Z1", 1), ("Z2", 4), ("Z3", 9), ("Z4", 16), ("Z2xZ2", 16), ("S3", 8), ("D8", 22), ("Q8", 22)])
def test_center_dimension(name, expect):
    G = builtin_group(name)
    assert _commuting_pair_orbits(G) == expect
    assert center_dimension(build_twisted_algebra(G), check=G.order <= 6) == expect


def test_twisted_center_dimension_z2():
    # D^alpha(Z/2) is still commutative with four simple modules
    A = build_twisted_algebra(cyclic_group(2), transgress(cyclic_three_cocycle(2, 1)))
    assert center_dimension(A) == 4


def test_center_rejects_non_associative():
    G = cyclic_group(2)
    w = LoopTwoCochain.zero(G).with_value((1, 0, 1), "1/2")
    assert not is_loop_two_cocycle(w)
    with pytest.raises(NonAssociativeError):
        center_dimension(build_twisted_algebra(G, w))


# representations


def _scalar_rep(G, x, values):
    mats = {}
    for y, g in itertools.product(range(G.order), repeat=2):
        mats[(y, g)] = CycMatrix.scalar(Cyclotomic.from_phase(Phase.coerce(values[g]))) if y == x else CycMatrix.zeros(0, 0)
    return LoopRep(G, [int(y == x) for y in G], mats)


def test_sign_rep_at_nontrivial_loop():
    G = cyclic_group(2)
    sigma = _scalar_rep(G, 1, {0: 0, 1: "1/2"})
    assert is_twisted_rep(sigma)
    assert rep_character(sigma)[(1, 1)] == Cyclotomic.rational(-1)
    assert not is_twisted_rep(sigma, transgress(cyclic_three_cocycle(2, 1)))


def test_shape_errors():
    G = cyclic_group(2)
    bad = LoopRep(G, [1, 0], {(0, 0): CycMatrix.identity(2)})
    with pytest.raises(RepShapeError):
        is_twisted_rep(bad)


@pytest.mark.parametrize("n", [2, 3])
def test_one_dimensional_fusion_rule(n):
    G = cyclic_group(n)
    reps = one_dimensional_reps(G)
    assert len(reps) == n * n
    for s, t in itertools.product(reps, repeat=2):
        a, b = s.dims.index(1), t.dims.index(1)
        f = fuse(s, t)
        assert is_twisted_rep(f)
        assert f.dims.index(1) == G.mul(a, b) and f.total_dim == 1
        ab = G.mul(a, b)
        for g in G:
            expect = s.mats[(a, g)].trace() * t.mats[(b, g)].trace()
            assert f.mats[(ab, g)].trace() == expect


def test_twisted_one_dimensional_reps_z2():
    w = transgress(cyclic_three_cocycle(2, 1))
    reps = one_dimensional_reps(cyclic_group(2), w)
    assert len(reps) == 4
    assert all(is_twisted_rep(r, w) for r in reps)
    # over the nontrivial loop the generator squares to -1
    at_one = [r for r in reps if r.dims[1]]
    assert len(at_one) == 2
    assert all(r.mats[(1, 1)].trace() ** 2 == Cyclotomic.rational(-1) for r in at_one)


def test_fusion_is_untwisted_only():
    G = cyclic_group(2)
    u = unit_rep(G)
    with pytest.raises(TwistedFusionError):
        fuse(u, u, transgress(cyclic_three_cocycle(2, 1)))


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3"])
def test_unit_and_convolution_identities(name):
    G = builtin_group(name)
    rng = random.Random(name)
    u = unit_rep(G)
    for _ in range(5):
        s = random_untwisted_rep(G, rng)
        t = random_untwisted_rep(G, rng)
        assert is_twisted_rep(s) and is_twisted_rep(t)
        f = fuse(s, t)
        assert is_twisted_rep(f)
        assert list(f.dims) == convolve_dimensions(G, s.dims, t.dims)
        assert characters_equal(rep_character(f), convolve_characters(G, rep_character(s), rep_character(t)))
        assert characters_equal(rep_character(fuse(s, u)), rep_character(s))
        assert characters_equal(rep_character(fuse(u, s)), rep_character(s))


@pytest.mark.parametrize("n", [2, 3])
def test_fusion_associative_on_characters(n):
    G = cyclic_group(n)
    reps = one_dimensional_reps(G)
    for a, b, c in itertools.product(reps, repeat=3):
        left = rep_character(fuse(fuse(a, b), c))
        right = rep_character(fuse(a, fuse(b, c)))
        assert characters_equal(left, right)


def test_regular_module_decomposition_z2():
    G = cyclic_group(2)
    A = build_twisted_algebra(G)
    reps = one_dimensional_reps(G)
    mult = [regular_isotypic_dimension(A, r) for r in reps]
    assert mult == [1, 1, 1, 1]
    assert sum(m * r.total_dim for m, r in zip(mult, reps)) == G.order**2
