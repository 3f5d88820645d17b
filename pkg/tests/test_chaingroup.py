"""Chain groups: pairing, spans, minors, eulerian chains, representation."""

import itertools
import random

import pytest

from sesquimat.chaingroup import (
    Chain,
    ChainGroup,
    b_sigma,
    chain_group_dim_after_single_minor,
    eulerian_chain,
    inner,
    is_eulerian,
    standard_pair,
    to_matrix,
)
from sesquimat.errors import GroundMismatch, NotLagrangian
from sesquimat.field import field_make, identity_sesqui, sesqui_make
from sesquimat.matrix import EpsilonSign, LabeledMatrix, cut_rank, random_sigma_eps_matrix

F4 = field_make(2, 2)
SIG4 = sesqui_make(F4, 1, 1)
A, A2 = 2, 3


def gf4_group():
    m = LabeledMatrix(F4, "xyz", [[0, 1, A], [1, 0, 0], [A2, 0, 1]])
    pair = standard_pair(SIG4, "xyz")
    return m, pair, ChainGroup.from_matrix(m, pair)


def test_pairing_values():
    # b(u, v) = sigma(1) u_a sigma(v_b) - u_b sigma(v_a)
    f = field_make(3)
    sig = identity_sesqui(f)
    assert b_sigma(sig, (1, 0), (0, 1)) == 1
    assert b_sigma(sig, (0, 1), (1, 0)) == 2
    assert b_sigma(sig, (1, 2), (1, 2)) == 0
    neg = sesqui_make(f, 0, 2)
    # with sigma = -id the pairing need not vanish on the diagonal
    assert b_sigma(neg, (2, 2), (2, 2)) == 2


def test_chain_construction():
    ch = Chain(F4, "xy", [(1, 0), (A, A2)])
    assert ch["x"] == (1, 0)
    assert ch.flat() == (1, 0, A, A2)
    assert ch.support() == ("x", "y")
    assert Chain.from_flat(F4, "xy", ch.flat()) == ch
    assert Chain.unit(F4, "xy", "y", (0, 1))["x"] == (0, 0)
    assert ch.scale(A)["y"] == (A2, 1)
    assert ch.add(ch).is_zero()
    assert ch.restricted("y").support() == ("y",)


def test_group_span_and_membership():
    _, _, group = gf4_group()
    assert group.dim == 3
    assert group.is_lagrangian()
    for row in group.basis:
        assert group.contains(Chain.from_flat(F4, group.ground, row))
    assert group.contains(Chain.zero(F4, group.ground))
    assert not group.contains(Chain.unit(F4, group.ground, "x", (1, 0)))


def test_orthogonal_dimension_and_duality():
    rng = random.Random(7)
    for q_args in ((2,), (3,), (2, 2)):
        f = field_make(*q_args)
        sig = identity_sesqui(f)
        ground = tuple(range(4))
        full = ChainGroup.full_group(sig, ground)
        assert full.orthogonal().dim == 0
        m, eps = random_sigma_eps_matrix(f, sig, ground, rng)
        pair = standard_pair(sig, ground, eps)
        group = ChainGroup.from_matrix(m, pair)
        orth = group.orthogonal()
        assert group.dim + orth.dim == 2 * len(ground)
        assert orth.orthogonal() == group


def test_lagrangian_from_matrix_and_roundtrip():
    m, pair, group = gf4_group()
    assert to_matrix(group, pair) == m
    assert group.to_matrix(pair) == m


def test_connectivity_equals_cut_rank():
    m, _, group = gf4_group()
    for r in range(4):
        for sub in itertools.combinations("xyz", r):
            assert group.connectivity(sub) == cut_rank(m, sub)


def test_eulerian_chain_is_valid():
    _, _, group = gf4_group()
    ch = eulerian_chain(group)
    # eulerian: pointwise nonzero and isotropic, and pairing against ch
    # separates the group (no nonzero member is orthogonal to it everywhere)
    assert is_eulerian(group, ch)
    assert all(ch[x] != (0, 0) for x in group.ground)
    zero = Chain.zero(F4, group.ground)
    assert not is_eulerian(group, zero.replace("x", (1, 0)).replace("y", (1, 0)))


def test_eulerian_requires_lagrangian():
    sig = identity_sesqui(field_make(2))
    with pytest.raises(NotLagrangian):
        eulerian_chain(ChainGroup.full_group(sig, "ab"))


def test_minor_drops_constrained_coordinates():
    _, _, group = gf4_group()
    sub = group.minor((1, 0), "z")
    assert sub.ground == ("x", "y")
    assert sub.is_lagrangian()
    # a minor against two disjoint directions commutes
    one = group.minor((1, 0), "y").minor((0, 1), "z")
    other = group.minor((0, 1), "z").minor((1, 0), "y")
    assert one == other
    with pytest.raises(GroundMismatch):
        group.minor((1, 0), "y").minor((0, 1), "y")


def test_single_minor_dimension_trichotomy_gf2():
    # over GF(2) with sigma = id every direction is isotropic, so the
    # predicted dimension matches the actual minor for all gamma
    sig = identity_sesqui(field_make(2))
    rng = random.Random(19)
    ground = tuple(range(4))
    f = field_make(2)
    for _ in range(20):
        m, _ = random_sigma_eps_matrix(f, sig, ground, rng)
        group = ChainGroup.from_matrix(m, standard_pair(sig, ground))
        for x in ground:
            for gamma in ((1, 0), (0, 1), (1, 1)):
                pred = chain_group_dim_after_single_minor(group, gamma, x)
                assert group.minor(gamma, [x]).dim == pred


def test_single_minor_nonisotropic_direction_regression():
    # over GF(3) with sigma = -id the direction (2, 2) pairs to 2 with itself;
    # the kernel of b(., gamma) is then a different line and the dimension
    # prediction for isotropic directions does not apply.  The actual minor
    # is still well defined; freeze one case.
    f = field_make(3)
    neg = sesqui_make(f, 0, 2)
    gamma = (2, 2)
    assert b_sigma(neg, gamma, gamma) == 2
    full = ChainGroup.full_group(neg, "abc")
    sub = full.minor(gamma, "c")
    assert sub.ground == ("a", "b")
    # one linear constraint on a 6-dimensional space: rank drops by exactly 1,
    # then two coordinates project away
    assert sub.dim == 4


def test_inner_product_orthogonality():
    m, _, group = gf4_group()
    chains = [Chain.from_flat(F4, group.ground, row) for row in group.basis]
    # a lagrangian group is self-orthogonal under the summed pairing
    for u in chains:
        for v in chains:
            assert inner(group.sigma, u, v) == 0


def test_restrict_and_confine():
    _, _, group = gf4_group()
    res = group.restrict("xy")
    con = group.confine("xy")
    assert con.dim <= res.dim
    assert res.ground == con.ground == ("x", "y")
    # duality: restriction of the orthogonal equals orthogonal of confinement
    assert group.orthogonal().restrict("xy") == group.confine("xy").orthogonal()
