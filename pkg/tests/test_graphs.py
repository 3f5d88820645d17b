"""Graph encodings, pivots, pivot classes, and rank-width plumbing."""

import itertools
import random

import pytest

from sesquimat.errors import NotSigmaEpsSymmetric, SizeLimitExceeded
from sesquimat.field import field_make, identity_sesqui
from sesquimat.graphs import (
    DirectedGraph,
    FStarGraph,
    conjugation_sesqui,
    digraph_from_gf4,
    digraph_to_gf4,
    embed_quadratic,
    gf4,
    loop_pivot,
    pivot,
    pivot_class,
    pivot_minor_check,
    rank_width,
    sigma4,
)
from sesquimat.matrix import LabeledMatrix, canonical_entries, sigma_eps_check

A, A2 = 2, 3


def all_digraphs(n, include_loops=True):
    verts = tuple(range(1, n + 1))
    pairs = [(u, v) for u in verts for v in verts if include_loops or u != v]
    for r in range(len(pairs) + 1):
        for arcs in itertools.combinations(pairs, r):
            yield DirectedGraph(verts, arcs)


def test_digraph_roundtrip_exhaustive():
    for n in (1, 2, 3):
        for d in all_digraphs(n):
            g = digraph_to_gf4(d)
            assert digraph_from_gf4(g) == d
            # the encoding is sigma4-symmetric with all-plus signs
            eps = sigma_eps_check(g.to_matrix(), sigma4())
            assert eps is not None and eps.minus == frozenset()


def test_encode_after_decode_is_identity():
    # every sigma4-symmetric matrix with entries in {0,1,a,a2} and diagonal
    # in {0,1} is an encoding, and decode then encode reproduces it
    f = gf4()
    sig = sigma4()
    verts = (1, 2, 3)
    off = [(u, v) for u, v in itertools.combinations(verts, 2)]
    for diag in itertools.product((0, 1), repeat=3):
        for uppers in itertools.product((0, 1, A, A2), repeat=3):
            rows = [[0] * 3 for _ in range(3)]
            for i in range(3):
                rows[i][i] = diag[i]
            for (u, v), c in zip(off, uppers):
                rows[u - 1][v - 1] = c
                rows[v - 1][u - 1] = sig(c)
            m = LabeledMatrix(f, verts, rows)
            g = FStarGraph.from_matrix(m)
            d = digraph_from_gf4(g)
            assert digraph_to_gf4(d).to_matrix() == m


def test_decode_rejects_non_encodings():
    f = gf4()
    bad_loop = FStarGraph(f, (1,), {(1, 1): A})
    with pytest.raises(ValueError):
        digraph_from_gf4(bad_loop)
    asym = FStarGraph(f, (1, 2), {(1, 2): A, (2, 1): A})
    with pytest.raises(ValueError):
        digraph_from_gf4(asym)


def test_loop_pivot_identity_parameters():
    d = DirectedGraph(range(1, 4), [(1, 2), (2, 3), (3, 1)])
    g = digraph_to_gf4(d)
    assert loop_pivot(g, sigma4(), ()) == g


def test_pivot_is_an_involution_on_gf2_graphs():
    f = field_make(2)
    sig = identity_sesqui(f)
    rng = random.Random(23)
    verts = tuple(range(1, 6))
    for _ in range(10):
        edges = {}
        for u, v in itertools.combinations(verts, 2):
            if rng.random() < 0.5:
                edges[(u, v)] = 1
                edges[(v, u)] = 1
        g = FStarGraph(f, verts, edges)
        m = g.to_matrix()
        for r in (1, 2):
            for x in itertools.combinations(verts, r):
                if m.principal(x).det() == 0:
                    continue
                assert pivot(pivot(g, sig, x), sig, x) == g
                break
            else:
                continue
            break


def test_pivot_requires_symmetry_and_loop_free():
    f = field_make(3)
    sig = identity_sesqui(f)
    loopy = FStarGraph(f, (1, 2), {(1, 1): 1, (1, 2): 1, (2, 1): 1})
    with pytest.raises(ValueError):
        pivot(loopy, sig, (1,))
    asym = FStarGraph(f, (1, 2, 3), {(1, 2): 1, (2, 1): 1, (2, 3): 1})
    with pytest.raises(NotSigmaEpsSymmetric):
        loop_pivot(asym, sig, ())


def test_pivot_class_membership_is_symmetric():
    rng = random.Random(41)
    verts = tuple(range(1, 5))
    for _ in range(6):
        arcs = [
            (u, v)
            for u in verts
            for v in verts
            if u != v and rng.random() < 0.4
        ]
        g = digraph_to_gf4(DirectedGraph(verts, arcs))
        result = pivot_class(g, sigma4(), "loop", max_class_size=500)
        assert not result.truncated
        member = rng.choice(result.members)
        back = pivot_class(member, sigma4(), "loop", max_class_size=500)
        assert {canonical_entries(x.to_matrix()) for x in result.members} == {
            canonical_entries(x.to_matrix()) for x in back.members
        }


def test_pivot_class_truncation_flag():
    d = DirectedGraph(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    g = digraph_to_gf4(d)
    result = pivot_class(g, sigma4(), "loop", max_class_size=2)
    assert result.truncated
    assert len(result.members) == 2
    with pytest.raises(SizeLimitExceeded):
        big = digraph_to_gf4(DirectedGraph(range(1, 5), [(1, 2)]))
        pivot_minor_check(big, g, sigma4(), "loop", max_class_size=2)


def test_pivot_minor_witness_rank_width_monotone():
    d = DirectedGraph(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)])
    g = digraph_to_gf4(d)
    h = digraph_to_gf4(DirectedGraph(range(1, 3), [(1, 2)]))
    witness = pivot_minor_check(h, g, sigma4(), "loop", max_class_size=500)
    assert witness is not None
    assert rank_width(h) <= rank_width(g)
    # the witness really is an induced subgraph of the named member
    sub = witness.member.to_matrix().principal(witness.subset)
    relabeled = {witness.mapping[x]: x for x in witness.mapping}
    assert len(relabeled) == len(h.vertices)


def test_quadratic_embedding_preserves_symmetry():
    for q_args in ((2,), (3,), (5,)):
        f = field_make(*q_args)
        verts = (1, 2, 3)
        edges = {(1, 2): 1, (2, 1): 1, (2, 3): 1, (3, 2): f.q - 1 if f.q > 2 else 1}
        g = FStarGraph(f, verts, edges)
        emb = embed_quadratic(g)
        assert emb.field.q == f.q**2
        sig = conjugation_sesqui(emb.field)
        eps = sigma_eps_check(emb.to_matrix(), sig)
        assert eps is not None and eps.minus == frozenset()


def test_embed_quadratic_gf2_matches_digraph_encoding():
    d = DirectedGraph(range(1, 4), [(1, 2), (2, 1), (2, 3)])
    g2 = FStarGraph(field_make(2), d.vertices, {(u, v): 1 for u, v in d.arcs})
    emb = embed_quadratic(g2)
    enc = digraph_to_gf4(d)
    assert emb.to_matrix() == enc.to_matrix()
