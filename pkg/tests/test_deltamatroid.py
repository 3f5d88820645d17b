"""Representable delta-matroids: feasibility, twisting, exchange axiom."""

import itertools
import random

import pytest

from sesquimat.deltamatroid import DeltaMatroid, branch_width_bound
from sesquimat.errors import OverlappingMinorSets
from sesquimat.field import field_make, identity_sesqui, sesqui_make
from sesquimat.matrix import DiagonalTransform, LabeledMatrix, ppt, random_sigma_eps_matrix

F4 = field_make(2, 2)
A, A2 = 2, 3


def gf4_dm():
    m = LabeledMatrix(F4, "xyz", [[0, 1, A], [1, 0, 0], [A2, 0, 1]])
    return m, DeltaMatroid.from_matrix(m)


def test_feasible_sets_hand_checked():
    _, dm = gf4_dm()
    assert dm.feasible == (
        (),
        ("x", "y"),
        ("x", "y", "z"),
        ("x", "z"),
        ("z",),
    )
    assert dm.is_feasible("zx")
    assert not dm.is_feasible("y")


def test_empty_set_always_feasible_from_matrix():
    # det of the empty principal block is 1 by convention
    f = field_make(3)
    m = LabeledMatrix(f, "ab", [[0, 1], [2, 0]])
    dm = DeltaMatroid.from_matrix(m)
    assert dm.is_feasible(())


def test_sea_holds_for_representable():
    rng = random.Random(31)
    for q_args in ((2,), (3,), (2, 2), (5,)):
        f = field_make(*q_args)
        sigs = [identity_sesqui(f)]
        if f.q == 4:
            sigs.append(sesqui_make(f, 1, 1))
        for sig in sigs:
            for _ in range(10):
                m, _ = random_sigma_eps_matrix(f, sig, tuple(range(4)), rng)
                assert DeltaMatroid.from_matrix(m).sea_check() is None


def test_sea_detects_violation():
    # {(), {a,b,c}}: for F1 = (), F2 = {a,b,c}, x = a no single or double
    # step ()^{x,y} lands in the family, so the exchange axiom fails
    dm = DeltaMatroid("abc", [(), ("a", "b", "c")])
    bad = dm.sea_check()
    assert bad is not None
    f1, f2, x = bad
    assert x in set(f1) ^ set(f2)
    # {(), {a,b}} is fine: y = b repairs x = a in one step
    ok = DeltaMatroid("ab", [(), ("a", "b")])
    assert ok.sea_check() is None


def test_twist_by_pivot():
    m, dm = gf4_dm()
    sig = sesqui_make(F4, 1, 1)
    for x in dm.feasible:
        if not x:
            continue
        piv = DiagonalTransform.pivot_sign(sig, m.labels, x).apply_left(ppt(m, x))
        assert DeltaMatroid.from_matrix(piv) == dm.twist(x)


def test_twist_involution_and_ground_check():
    _, dm = gf4_dm()
    assert dm.twist("xy").twist("xy") == dm
    with pytest.raises(Exception):
        dm.twist("w")


def test_minor():
    _, dm = gf4_dm()
    out = dm.minor(delete="y", contract="z")
    assert out.ground == ("x",)
    assert out.feasible == ((), ("x",))
    with pytest.raises(OverlappingMinorSets):
        dm.minor("x", "x")
    with pytest.raises(ValueError):
        # after deleting x, no remaining feasible set contains y
        dm.minor("x", "").minor("", "y")


def test_equivalent_finds_least_twist():
    _, dm = gf4_dm()
    assert dm.equivalent(dm.twist("xz")) == frozenset("xz")
    other = DeltaMatroid("xyz", [("x",)])
    assert dm.equivalent(other) is None


def test_to_json_dict():
    _, dm = gf4_dm()
    d = dm.to_json_dict()
    assert d["ground"] == ["x", "y", "z"]
    assert ["x", "y"] in d["feasible"]


def test_trivial_families():
    f2 = field_make(2)
    zero = LabeledMatrix.zeros(f2, "ab")
    assert DeltaMatroid.from_matrix(zero).feasible == ((),)
    ident = LabeledMatrix.from_function(f2, "ab", lambda x, y: 1 if x == y else 0)
    assert len(DeltaMatroid.from_matrix(ident).feasible) == 4
    single_edge = LabeledMatrix(f2, "ab", [[0, 1], [1, 0]])
    assert DeltaMatroid.from_matrix(single_edge).feasible == ((), ("a", "b"))


def test_branch_width_bound_hand_value():
    m, dm = gf4_dm()
    assert branch_width_bound(m) == 1
    assert branch_width_bound(LabeledMatrix.zeros(field_make(2), "ab")) == 0
    f2 = field_make(2)
    c5 = LabeledMatrix.from_function(
        f2,
        range(1, 6),
        lambda x, y: 1 if abs(x - y) in (1, 4) else 0,
    )
    assert branch_width_bound(c5) == 2
    # the bound is invariant under loop pivots at feasible sets
    sig = sesqui_make(F4, 1, 1)
    for x in dm.feasible:
        if not x:
            continue
        piv = DiagonalTransform.pivot_sign(sig, m.labels, x).apply_left(ppt(m, x))
        assert branch_width_bound(piv, sig) == 1
