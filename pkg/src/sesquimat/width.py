"""Branch decompositions of a symmetric cut function and their widths.

A layout of a ground set V (|V| >= 2) is an unrooted tree whose internal
nodes all have degree 3 and whose leaves are the elements of V.  Removing an
edge splits V in two; the width of the layout is the maximum of the cut
function over these bipartitions, and the width of V is the minimum over
all layouts.  Ground sets of size <= 1 have width 0 by convention.

Layouts are stored as nested pair terms.  A term is either a single label
or a pair (left, right) of terms; the tree is the union of the two rooted
binary trees hanging off the root edge.  Serialization is the nested-parens
form, e.g. "((x y) (z w))", with children ordered by their serialization so
equal trees print identically.

min_width runs an exact subset dynamic program over the 3^(n-1) pairs
(subset, split) rooted at the least ground element, rather than walking
layouts one by one; enumerate_layouts provides the full layout iterator the
tests use as an independent oracle.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional

from .errors import GroundMismatch, SizeLimitExceeded

MAX_GROUND = 10


class CutFunction:
    """A memoizing wrapper around a symmetric set function on a ground set.

    Subsets are evaluated through bitmasks over the sorted ground, and each
    time both a subset and its complement have been evaluated the symmetry
    requirement is checked opportunistically.
    """

    def __init__(self, ground: Iterable, fn: Callable[[frozenset], int]):
        self.ground = tuple(sorted(ground))
        self.fn = fn
        self._bit = {x: 1 << i for i, x in enumerate(self.ground)}
        self._memo: dict[int, int] = {}
        self._full = (1 << len(self.ground)) - 1

    def mask_of(self, subset: Iterable) -> int:
        m = 0
        for x in subset:
            try:
                m |= self._bit[x]
            except KeyError:
                raise GroundMismatch(f"label {x!r} not in the cut function ground") from None
        return m

    def eval_mask(self, mask: int) -> int:
        v = self._memo.get(mask)
        if v is not None:
            return v
        subset = frozenset(x for x in self.ground if self._bit[x] & mask)
        v = int(self.fn(subset))
        self._memo[mask] = v
        comp = self._memo.get(self._full ^ mask)
        if comp is not None and comp != v:
            raise ValueError("cut function is not symmetric under complementation")
        return v

    def eval(self, subset: Iterable) -> int:
        return self.eval_mask(self.mask_of(subset))


class Layout:
    """An unrooted cubic tree over a ground set, stored as a nested pair term."""

    __slots__ = ("ground", "term")

    def __init__(self, term):
        self.term = _normalize(term)
        leaves = []
        _collect_leaves(self.term, leaves)
        self.ground = tuple(sorted(leaves))
        if len(set(self.ground)) != len(leaves):
            raise ValueError("layout leaves must be distinct")

    def bipartitions(self) -> list[frozenset]:
        """One side of every tree edge (each edge listed once)."""
        if self.term is None or not isinstance(self.term, tuple):
            return []
        full = frozenset(self.ground)
        seen: set[frozenset] = set()
        out: list[frozenset] = []

        def visit(node) -> frozenset:
            if not isinstance(node, tuple):
                s = frozenset((node,))
            else:
                s = visit(node[0]) | visit(node[1])
            key = min(s, full - s, key=lambda fs: (len(fs), sorted(fs)))
            if key not in seen and s != full:
                seen.add(key)
                out.append(s)
            return s

        visit(self.term[0])
        visit(self.term[1])
        return out

    def tree_edges(self) -> tuple[list[tuple[int, int]], dict[int, object]]:
        """The layout as an explicit tree: (edge list, leaf node -> label)."""
        edges: list[tuple[int, int]] = []
        leaf_map: dict[int, object] = {}
        counter = [0]

        def build(node) -> int:
            nid = counter[0]
            counter[0] += 1
            if not isinstance(node, tuple):
                leaf_map[nid] = node
                return nid
            left = build(node[0])
            right = build(node[1])
            edges.append((nid, left))
            edges.append((nid, right))
            return nid

        if self.term is None:
            return [], {}
        if not isinstance(self.term, tuple):
            leaf_map[0] = self.term
            return [], leaf_map
        # the root edge joins the two subtree roots directly
        left = build(self.term[0])
        right = build(self.term[1])
        edges.append((left, right))
        return edges, leaf_map

    def serialize(self) -> str:
        return _serialize(self.term)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Layout) and self.term == other.term

    def __hash__(self) -> int:
        return hash(self.term)

    def __repr__(self) -> str:
        return f"Layout({self.serialize()})"


def _collect_leaves(node, out: list) -> None:
    if node is None:
        return
    if isinstance(node, tuple):
        _collect_leaves(node[0], out)
        _collect_leaves(node[1], out)
    else:
        out.append(node)


def _serialize(node) -> str:
    if node is None:
        return "()"
    if not isinstance(node, tuple):
        return str(node)
    return f"({_serialize(node[0])} {_serialize(node[1])})"


def _normalize(node):
    """Order every pair's children by serialization, recursively."""
    if node is None or not isinstance(node, tuple):
        return node
    left = _normalize(node[0])
    right = _normalize(node[1])
    if _serialize(left) > _serialize(right):
        left, right = right, left
    return (left, right)


def layout_width(cut: CutFunction, layout: Layout) -> int:
    if layout.ground != cut.ground:
        raise GroundMismatch("layout leaves do not match the cut function ground")
    if len(cut.ground) <= 1:
        return 0
    return max(cut.eval(side) for side in layout.bipartitions())


def min_width(cut: CutFunction) -> tuple[int, Layout]:
    """Exact minimum width over all layouts, with one optimal layout.

    Subset DP rooted at the least ground element v0: for S inside V - {v0},
    R(S) = f(S) for singletons and max(f(S), min over proper splits (T, S-T)
    of max(R(T), R(S-T))) otherwise; the width is R(V - {v0}).  Split
    reconstruction always picks the smallest optimal submask, so the
    returned layout is deterministic.
    """
    ground = cut.ground
    n = len(ground)
    if n > MAX_GROUND:
        raise SizeLimitExceeded(f"min_width supports at most {MAX_GROUND} elements")
    if n == 0:
        return 0, Layout(None)
    if n == 1:
        return 0, Layout(ground[0])
    bit = {x: 1 << i for i, x in enumerate(ground)}
    v0 = ground[0]
    rest_mask = ((1 << n) - 1) ^ bit[v0]
    members = [x for x in ground if x != v0]
    rest_bits = [bit[x] for x in members]

    # iterate subsets of rest_mask in increasing popcount so splits are ready
    subsets_by_size: list[list[int]] = [[] for _ in range(n)]
    sub = rest_mask
    masks = []
    m = 0
    # enumerate all submasks of rest_mask
    while True:
        masks.append(m)
        if m == rest_mask:
            break
        m = (m - rest_mask) & rest_mask
    for mm in masks:
        if mm:
            subsets_by_size[bin(mm).count("1") - 1].append(mm)

    r_val: dict[int, int] = {}
    r_split: dict[int, int] = {}
    for size in range(n):
        for s in subsets_by_size[size]:
            fs = cut.eval_mask(s)
            if size == 0:
                r_val[s] = fs
                continue
            low = s & (-s)
            best = None
            best_t = 0
            t = (s - 1) & s
            # submasks of s containing the lowest bit, proper and nonempty
            while t:
                if t & low:
                    cand = max(r_val[t], r_val[s ^ t])
                    if best is None or cand < best:
                        best = cand
                        best_t = t
                t = (t - 1) & s
            r_val[s] = max(fs, best)  # type: ignore[arg-type]
            r_split[s] = best_t

    def build(s: int):
        if s & (s - 1) == 0:
            return members[rest_bits.index(s)] if s in rest_bits else _label_of(s)
        t = r_split[s]
        return (build(t), build(s ^ t))

    def _label_of(s: int):
        for x, b in zip(members, rest_bits):
            if b == s:
                return x
        raise AssertionError("unreachable")

    term = (v0, build(rest_mask)) if n >= 2 else v0
    return r_val[rest_mask], Layout(term)


def enumerate_layouts(ground: Iterable) -> Iterator[Layout]:
    """Every layout of the ground set exactly once (unrooted cubic trees).

    Uses the bijection with rooted binary trees over V - {v0}: the subtree
    containing the least remaining element is always the left child, so no
    tree appears twice.  Counts follow the double factorial (2n-5)!!.
    """
    labs = tuple(sorted(set(ground)))
    n = len(labs)
    if n == 0:
        yield Layout(None)
        return
    if n == 1:
        yield Layout(labs[0])
        return

    def trees(items: tuple):
        if len(items) == 1:
            yield items[0]
            return
        least, rest = items[0], items[1:]
        # choose the rest of the left subtree
        for pick in range(1 << len(rest)):
            left_items = (least,) + tuple(x for i, x in enumerate(rest) if pick >> i & 1)
            right_items = tuple(x for i, x in enumerate(rest) if not pick >> i & 1)
            if not right_items:
                continue
            for lt in trees(left_items):
                for rt in trees(right_items):
                    yield (lt, rt)

    for t in trees(labs[1:]):
        yield Layout((labs[0], t))
