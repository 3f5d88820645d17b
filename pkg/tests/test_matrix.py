"""Labeled matrix operations: pivots, Schur complements, cut-rank, symmetry."""

import itertools
import random

import pytest

from sesquimat.errors import IncompatibleScalingPair, SingularPivotBlock
from sesquimat.field import field_make, identity_sesqui, sesqui_make, sesqui_morphisms
from sesquimat.matrix import (
    DiagonalTransform,
    EpsilonSign,
    LabeledMatrix,
    canonical_entries,
    cut_rank,
    matrix_isomorphic,
    ppt,
    random_sigma_eps_matrix,
    schur_complement,
    scaling_pair,
    sigma_eps_check,
    tucker_check,
)

F4 = field_make(2, 2)
A, A2 = 2, 3


def gf4_example():
    # hand-checked running example: sigma4-symmetric with eps all plus
    return LabeledMatrix(F4, "xyz", [[0, 1, A], [1, 0, 0], [A2, 0, 1]])


def test_labeled_matrix_basics():
    m = gf4_example()
    assert m.labels == ("x", "y", "z")
    assert m.entry("x", "z") == A
    assert m.principal("xz").rows == ((0, A), (A2, 1))
    assert m.rect(["y"], ["x", "z"]) == [[1, 0]]
    assert m.det() == 1
    assert m.with_zero_diagonal().entry("z", "z") == 0


def test_rank_and_cut_rank():
    m = gf4_example()
    assert m.rank() == 3
    assert cut_rank(m, "x") == 1
    assert cut_rank(m, "yz") == 1
    assert cut_rank(m, "") == 0
    assert cut_rank(m, "xyz") == 0
    # cut-rank is symmetric under complementation
    for r in range(4):
        for sub in itertools.combinations("xyz", r):
            rest = [v for v in "xyz" if v not in sub]
            assert cut_rank(m, sub) == cut_rank(m, rest)


def test_schur_complement_hand_value():
    m = gf4_example()
    out = schur_complement(m, "xy")
    assert out.labels == ("z",)
    # 1 - (a2, 0) * [[0,1],[1,0]] * (a, 0)^T = 1
    assert out.entry("z", "z") == 1
    with pytest.raises(SingularPivotBlock):
        schur_complement(m, "x")


def test_ppt_hand_value():
    m = gf4_example()
    out = ppt(m, "xy")
    expect = LabeledMatrix(F4, "xyz", [[0, 1, 0], [1, 0, A], [0, A2, 1]])
    assert out == expect
    # pivoting twice on the same block returns the original matrix
    assert ppt(out, "xy") == m


def test_ppt_empty_and_full():
    m = gf4_example()
    assert ppt(m, "") == m
    inv = ppt(m, "xyz")
    assert m.mul(inv.principal("xyz")) == LabeledMatrix.from_function(
        F4, "xyz", lambda x, y: 1 if x == y else 0
    )


def test_tucker_identity_exhaustive_small():
    rng = random.Random(3)
    for q_args in ((2,), (3,), (2, 2)):
        f = field_make(*q_args)
        for _ in range(8):
            labels = tuple(range(4))
            m = LabeledMatrix.from_function(
                f, labels, lambda x, y: rng.randrange(f.q)
            )
            for r in range(1, 5):
                for x in itertools.combinations(labels, r):
                    if m.principal(x).det() == 0:
                        continue
                    for rz in range(5):
                        for z in itertools.combinations(labels, rz):
                            assert tucker_check(m, x, z)


def test_sigma_eps_check_finds_signs():
    sig = sesqui_make(F4, 1, 1)
    m = gf4_example()
    eps = sigma_eps_check(m, sig)
    assert eps is not None
    assert eps.minus == frozenset()
    # flipping one off-diagonal entry breaks every sign assignment
    bad = LabeledMatrix(F4, "xyz", [[0, 1, A], [A, 0, 0], [A2, 0, 1]])
    assert sigma_eps_check(bad, sig) is None


def test_sigma_eps_check_with_minus_signs():
    f = field_make(3)
    sig = identity_sesqui(f)
    m = LabeledMatrix(f, "uv", [[0, 1], [2, 0]])  # m[v,u] = -m[u,v]
    eps = sigma_eps_check(m, sig)
    assert eps is not None
    assert eps.minus in ({"u"}, {"v"}, frozenset({"u"}), frozenset({"v"}))


def test_epsilon_sign():
    eps = EpsilonSign("xyz", minus="y")
    assert eps("x") == 1 and eps("y") == -1
    assert eps.in_field(field_make(3), "y") == 2
    assert eps.flip("xy").minus == frozenset({"x"})
    assert EpsilonSign.all_plus("xyz").minus == frozenset()


def test_diagonal_transforms():
    f = field_make(5)
    m = LabeledMatrix(f, "uv", [[1, 2], [3, 4]])
    d = DiagonalTransform.scaling(f, "uv", {"u": 2, "v": 1})
    assert d.apply_left(m).rows == ((2, 4), (3, 4))
    assert d.apply_right(m).rows == ((2, 2), (6 % 5, 4))
    assert d.compose(d.inverse()) == DiagonalTransform.identity(f, "uv")
    flip = DiagonalTransform.sign_flip(f, "uv", "u")
    assert flip.apply_left(m).rows == ((4, 3), (3, 4))


def test_scaling_pair_compatibility():
    f = field_make(3, 2)
    for sig in sesqui_morphisms(f):
        p, q = scaling_pair(sig, "xy", {"x": 3, "y": 1})
        # q(x) = sigma-tilde of p(x): the pair keeps symmetry when applied P M Q^-1
        m, _ = random_sigma_eps_matrix(f, sig, "xy", random.Random(5))
        out = p.apply_left(q.inverse().apply_right(m))
        assert sigma_eps_check(out, sig) is not None
    with pytest.raises(IncompatibleScalingPair):
        from sesquimat.matrix import check_scaling_pair

        f5 = field_make(5)
        sig5 = identity_sesqui(f5)
        check_scaling_pair(
            sig5,
            DiagonalTransform.scaling(f5, "x", {"x": 2}),
            DiagonalTransform.scaling(f5, "x", {"x": 4}),
        )


def test_matrix_isomorphic_and_canonical_entries():
    m = gf4_example()
    relabeled = LabeledMatrix(
        F4, "pqr", [[m.entry(a, b) for b in "xyz"] for a in "xyz"]
    )
    iso = matrix_isomorphic(m, relabeled)
    assert iso == {"x": "p", "y": "q", "z": "r"}
    assert canonical_entries(m) == canonical_entries(relabeled)
    other = LabeledMatrix(F4, "xyz", [[0, 1, A], [1, 0, 1], [A2, 1, 1]])
    assert matrix_isomorphic(m, other) is None
