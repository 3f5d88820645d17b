"""Branch decompositions of symmetric set functions and rank-width."""

import itertools

from sesquimat.field import field_make
from sesquimat.graphs import DirectedGraph, FStarGraph, rank_width, rank_width_layout
from sesquimat.matrix import LabeledMatrix, cut_rank
from sesquimat.width import CutFunction, Layout, enumerate_layouts, layout_width, min_width


def undirected_gf2(n, edges):
    f = field_make(2)
    sym = set()
    for u, v in edges:
        sym.add((u, v))
        sym.add((v, u))
    return FStarGraph(f, range(1, n + 1), {e: 1 for e in sym})


def test_layout_serialize_and_parts():
    lay = Layout((("x", "y"), ("z", "w")))
    # terms are normalized, so serialization is order-independent
    assert lay.serialize() == "((w z) (x y))"
    parts = set(lay.bipartitions())
    assert frozenset({"z", "w"}) in parts
    assert frozenset({"x"}) in parts
    # a layout is an unordered binary tree: mirrored terms are equal
    assert Layout((("z", "w"), ("x", "y"))) == lay


def test_min_width_matches_exhaustive_enumeration():
    # an arbitrary symmetric submodular-looking toy function on 5 elements
    ground = tuple("abcde")

    def fn(subset):
        k = len(subset)
        return min(k, 5 - k) + (1 if "a" in subset and "b" not in subset else 0)

    cut = CutFunction(ground, fn)
    best, lay = min_width(cut)
    assert layout_width(cut, lay) == best
    brute = min(layout_width(cut, l) for l in enumerate_layouts(ground))
    assert best == brute


def test_rank_width_regressions():
    k4 = undirected_gf2(4, [(u, v) for u, v in itertools.combinations(range(1, 5), 2)])
    assert rank_width(k4) == 1
    c5 = undirected_gf2(5, [(i, i % 5 + 1) for i in range(1, 6)])
    assert rank_width(c5) == 2
    directed_c4 = DirectedGraph(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert rank_width(directed_c4) == 2
    directed_p4 = DirectedGraph(range(1, 5), [(1, 2), (2, 3), (3, 4)])
    assert rank_width(directed_p4) == 1


def test_rank_width_layout_is_witnessed():
    c5 = undirected_gf2(5, [(i, i % 5 + 1) for i in range(1, 6)])
    width, lay = rank_width_layout(c5)
    m = c5.to_matrix()
    cut = CutFunction(m.labels, lambda s: cut_rank(m, s))
    assert layout_width(cut, lay) == width
    assert sorted(lay.ground) == list(range(1, 6))


def test_rank_width_small_cases():
    f = field_make(2)
    # below three vertices every layout is trivial
    single = FStarGraph(f, [1], {})
    assert rank_width(single) == 0
    pair = undirected_gf2(2, [(1, 2)])
    assert rank_width(pair) == 1
    empty3 = FStarGraph(f, [1, 2, 3], {})
    assert rank_width(empty3) == 0


def test_directed_encoding_widths_bound_undirected():
    # the GF(4) encoding of an undirected graph has the same rank-width as
    # its GF(2) adjacency version
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]
    und = undirected_gf2(5, edges)
    arcs = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    dig = DirectedGraph(range(1, 6), arcs)
    assert rank_width(dig) == rank_width(und)
