"""Colored directed graphs, pivot operations, pivot classes and rank-width.

An FStarGraph is a directed graph whose arcs carry nonzero field colors,
including loops; it is just the sparse view of a labeled square matrix
(edge (x, y) <-> entry m[x, y] != 0), and the two views convert freely.

Directed (uncolored) graphs embed into GF(4)-colored graphs: with
GF(4) = {0, 1, a, a2}, an ordered pair {x, y} gets color 1 when both arcs
are present, a when only x -> y is, and a2 when only y -> x is; loops map
to diagonal 1.  This encoding is symmetric under the conjugation
sigma4(z) = z^2, and generalizes: any GF(q)-colored graph embeds into its
quadratic extension GF(q^2) via m'[x, y] = phi(l(x, y))*w + phi(l(y, x))^q * w^q
for an embedding phi and a fixed w chosen with {w, w^q} independent over
the embedded subfield.

Pivot operations transform a (sigma, eps)-symmetric graph by a principal
pivot at a nonsingular principal block, framed by sign flips and compatible
diagonal scalings.  The pivot class of a graph is its closure under these
moves (in "loop" mode) or under the same moves followed by clearing the
diagonal ("loop-free" mode, defined for loop-free graphs).  Closure search
uses single-generator scaling moves, which generate exactly the admissible
diagonal factors, so the enumerated set equals the full closure; members
are deduplicated by canonical form (least entry grid over relabelings).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    FieldMismatch,
    FieldTooLarge,
    GroundMismatch,
    NotSigmaEpsSymmetric,
    SizeLimitExceeded,
)
from .field import Field, SesquiMorphism, field_make, sesqui_make, sesqui_morphisms
from .matrix import (
    DiagonalTransform,
    LabeledMatrix,
    canonical_entries,
    check_scaling_pair,
    cut_rank,
    matrix_isomorphic,
    ppt,
    sigma_eps_check,
)
from .width import CutFunction, Layout, min_width

PIVOT_CLASS_MAX_N = 6
PIVOT_CLASS_MAX_Q = 5
RANK_WIDTH_MAX_N = 10
DEFAULT_MAX_CLASS_SIZE = 2000


class DirectedGraph:
    """Plain directed graph; loops allowed, at most one arc per ordered pair."""

    __slots__ = ("vertices", "arcs")

    def __init__(self, vertices: Iterable, arcs: Iterable[tuple]):
        self.vertices = tuple(sorted(set(vertices)))
        vs = set(self.vertices)
        self.arcs = frozenset((u, v) for u, v in arcs)
        for u, v in self.arcs:
            if u not in vs or v not in vs:
                raise GroundMismatch(f"arc ({u!r}, {v!r}) uses an unknown vertex")

    def is_loop_free(self) -> bool:
        return all(u != v for u, v in self.arcs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DirectedGraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"DirectedGraph({len(self.vertices)} vertices, {len(self.arcs)} arcs)"


class FStarGraph:
    """Directed graph with nonzero field colors on arcs (loops included)."""

    __slots__ = ("field", "vertices", "edges")

    def __init__(self, field: Field, vertices: Iterable, edges: Mapping):
        self.field = field
        self.vertices = tuple(sorted(set(vertices)))
        vs = set(self.vertices)
        clean = {}
        for (u, v), c in dict(edges).items():
            if u not in vs or v not in vs:
                raise GroundMismatch(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            c = field.check(c)
            if c == 0:
                raise ValueError("edge colors must be nonzero; omit the edge instead")
            clean[(u, v)] = c
        self.edges = clean

    @classmethod
    def from_matrix(cls, m: LabeledMatrix) -> "FStarGraph":
        edges = {}
        for x in m.labels:
            for y in m.labels:
                c = m.entry(x, y)
                if c:
                    edges[(x, y)] = c
        return cls(m.field, m.labels, edges)

    def to_matrix(self) -> LabeledMatrix:
        return LabeledMatrix.from_function(
            self.field, self.vertices, lambda x, y: self.edges.get((x, y), 0)
        )

    def is_loop_free(self) -> bool:
        return all(u != v for u, v in self.edges)

    def induced(self, subset: Iterable) -> "FStarGraph":
        sub = set(subset)
        return FStarGraph(
            self.field,
            sub,
            {e: c for e, c in self.edges.items() if e[0] in sub and e[1] in sub},
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FStarGraph)
            and self.field == other.field
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.field, self.vertices, frozenset(self.edges.items())))

    def __repr__(self) -> str:
        return f"FStarGraph({len(self.vertices)} vertices, {len(self.edges)} edges, {self.field!r})"


# ---------------------------------------------------------------------------
# encodings
# ---------------------------------------------------------------------------

def gf4() -> Field:
    return field_make(2, 2)


def sigma4() -> SesquiMorphism:
    """The conjugation z -> z^2 on canonical GF(4)."""
    return sesqui_make(gf4(), j=1, s=1)


GF4_A = 2
GF4_A2 = 3


def digraph_to_gf4(d: DirectedGraph) -> FStarGraph:
    """Both arcs -> 1, forward only -> a, backward only -> a2; loops -> 1."""
    edges = {}
    for u, v in d.arcs:
        if u == v:
            edges[(u, u)] = 1
            continue
        back = (v, u) in d.arcs
        if back and (v, u) < (u, v):
            continue  # handled from the other side
        if back:
            edges[(u, v)] = 1
            edges[(v, u)] = 1
        else:
            edges[(u, v)] = GF4_A
            edges[(v, u)] = GF4_A2
    return FStarGraph(gf4(), d.vertices, edges)


def digraph_from_gf4(g: FStarGraph) -> DirectedGraph:
    """Inverse of digraph_to_gf4; ValueError when the coloring is not an encoding."""
    if g.field != gf4():
        raise FieldMismatch("decoding requires the canonical GF(4)")
    arcs = set()
    for (u, v), c in g.edges.items():
        if u == v:
            if c != 1:
                raise ValueError(f"loop at {u!r} must have color 1")
            arcs.add((u, u))
            continue
        back = g.edges.get((v, u), 0)
        if back != sigma4()(c):
            raise ValueError(f"colors at ({u!r}, {v!r}) are not conjugate-symmetric")
        if c == 1:
            arcs.add((u, v))
            arcs.add((v, u))
        elif c == GF4_A:
            arcs.add((u, v))
        elif c == GF4_A2:
            arcs.add((v, u))
        else:
            raise ValueError(f"color {c} at ({u!r}, {v!r}) is not an encoding value")
    return DirectedGraph(g.vertices, arcs)


def quadratic_embedding(base: Field) -> tuple[Field, list[int], int]:
    """(extension field, embedding table, omega) for the quadratic extension.

    The embedding phi maps GF(q) into GF(q^2) by sending the base generator
    class to the least root of the base modulus in the extension; omega is
    the least element outside the embedded subfield with {omega, omega^q}
    independent over it.  Raises FieldTooLarge when q^2 would exceed the
    supported field order.
    """
    q = base.q
    if q * q > 512:
        raise FieldTooLarge(f"quadratic extension of GF({q}) exceeds the supported order")
    ext = field_make(base.p, 2 * base.k)
    if base.k == 1:
        phi = list(range(base.p))
    else:
        root = None
        for z in ext.elements():
            acc = 0
            for c in reversed(base.modulus):
                acc = ext.add(ext.mul(acc, z), c)
            if acc == 0:
                root = z
                break
        assert root is not None, "base modulus must split in the quadratic extension"
        phi = []
        for elem in base.elements():
            coeffs = base.coeffs(elem)
            acc = 0
            for c in reversed(coeffs):
                acc = ext.add(ext.mul(acc, root), c)
            phi.append(acc)
    image = set(phi)
    omega = None
    for w in ext.elements():
        if ext.pow(w, q) == w:
            continue
        if ext.pow(w, q - 1) in image:
            continue
        omega = w
        break
    assert omega is not None, "no admissible omega in the quadratic extension"
    return ext, phi, omega


def conjugation_sesqui(ext: Field) -> SesquiMorphism:
    """The involution z -> z^q on a field of square order q^2."""
    if ext.k % 2 != 0:
        raise ValueError("conjugation needs an even-degree extension")
    return sesqui_make(ext, j=ext.k // 2, s=1)


def embed_quadratic(g: FStarGraph) -> FStarGraph:
    """Re-color a GF(q) graph over GF(q^2) so it is conjugation-symmetric.

    m'[x, y] = phi(l(x, y)) * omega + phi(l(y, x))^q * omega^q, where l is
    the original coloring (0 for absent arcs).  The result is symmetric for
    conjugation_sesqui of the extension with the all-plus sign function, and
    at q = 2 reproduces digraph_to_gf4 on {0,1}-colored graphs.
    """
    ext, phi, omega = quadratic_embedding(g.field)
    q = g.field.q
    omega_q = ext.pow(omega, q)
    edges = {}
    for x in g.vertices:
        for y in g.vertices:
            fwd = phi[g.edges.get((x, y), 0)]
            bwd = ext.pow(phi[g.edges.get((y, x), 0)], q)
            val = ext.add(ext.mul(fwd, omega), ext.mul(bwd, omega_q))
            if val:
                edges[(x, y)] = val
    return FStarGraph(ext, g.vertices, edges)


# ---------------------------------------------------------------------------
# pivots
# ---------------------------------------------------------------------------

DiagLike = Union[DiagonalTransform, Mapping, None]


def _as_diag(field: Field, ground, d: DiagLike) -> Optional[DiagonalTransform]:
    if d is None:
        return None
    if isinstance(d, DiagonalTransform):
        return d
    return DiagonalTransform.scaling(field, ground, dict(d))


def loop_pivot(
    g: FStarGraph,
    sigma: SesquiMorphism,
    pivot_set: Iterable,
    neg_rows: Iterable = (),
    neg_cols: Iterable = (),
    p: DiagLike = None,
    q: DiagLike = None,
) -> FStarGraph:
    """One full pivot step: I_Z P P_X (M*X) Q**-1 I_Z'.

    The scaling pair (P, Q) must be sigma-compatible (identity when omitted);
    the input and the result must both be (sigma, eps)-symmetric for some
    signs, which is validated.
    """
    m = g.to_matrix()
    if sigma_eps_check(m, sigma) is None:
        raise NotSigmaEpsSymmetric("input graph is not symmetric for this sesqui-morphism")
    labs = m.labels
    f = m.field
    pd = _as_diag(f, labs, p)
    qd = _as_diag(f, labs, q)
    if pd is None and qd is None:
        pd = DiagonalTransform.identity(f, labs)
        qd = DiagonalTransform.identity(f, labs)
    elif pd is None or qd is None:
        raise ValueError("p and q must be given together (or both omitted)")
    check_scaling_pair(sigma, pd, qd)
    n = ppt(m, set(pivot_set))
    left = DiagonalTransform.sign_flip(f, labs, set(neg_rows)).compose(pd).compose(
        DiagonalTransform.pivot_sign(sigma, labs, set(pivot_set))
    )
    right = qd.inverse().compose(DiagonalTransform.sign_flip(f, labs, set(neg_cols)))
    out = right.apply_right(left.apply_left(n))
    if sigma_eps_check(out, sigma) is None:
        raise NotSigmaEpsSymmetric("pivot result lost symmetry; input signs were inconsistent")
    return FStarGraph.from_matrix(out)


def pivot(
    g: FStarGraph,
    sigma: SesquiMorphism,
    pivot_set: Iterable,
    neg_rows: Iterable = (),
    neg_cols: Iterable = (),
    p: DiagLike = None,
    q: DiagLike = None,
) -> FStarGraph:
    """Loop-free pivot: the loop pivot followed by clearing the diagonal."""
    if not g.is_loop_free():
        raise ValueError("pivot (loop-free mode) requires a loop-free graph")
    out = loop_pivot(g, sigma, pivot_set, neg_rows, neg_cols, p, q)
    return FStarGraph.from_matrix(out.to_matrix().with_zero_diagonal())


class PivotClassResult:
    """Closure of a graph under pivot moves, up to relabeling.

    members[0] is the canonical form of the base graph; trace(i) lists the
    moves from the base to member i (one entry per BFS edge).  truncated is
    True when the search stopped at max_class_size, in which case members is
    a subset of the class.
    """

    __slots__ = ("base", "mode", "members", "keys", "parents", "moves", "truncated")

    def __init__(self, base, mode, members, keys, parents, moves, truncated):
        self.base = base
        self.mode = mode
        self.members = tuple(members)
        self.keys = tuple(keys)
        self.parents = tuple(parents)
        self.moves = tuple(moves)
        self.truncated = truncated

    def __len__(self) -> int:
        return len(self.members)

    def trace(self, index: int) -> list:
        steps = []
        while self.parents[index] is not None:
            steps.append(self.moves[index])
            index = self.parents[index]
        steps.reverse()
        return steps

    def __repr__(self) -> str:
        t = ", truncated" if self.truncated else ""
        return f"PivotClassResult({len(self.members)} members, mode={self.mode}{t})"


def pivot_class(
    g: FStarGraph,
    sigma: SesquiMorphism,
    mode: str = "loop",
    max_class_size: int = DEFAULT_MAX_CLASS_SIZE,
) -> PivotClassResult:
    """BFS closure of g under pivot moves, deduplicated by canonical form.

    Moves per state: one pivot P_X (M*X) for every nonsingular principal
    block X (followed by diagonal clearing in loop-free mode), one scaling
    generator per vertex (rho on the row, tilde(rho) on the column, rho a
    fixed primitive element), and one sign generator per vertex (column
    negation) in odd characteristic.  These generate all admissible diagonal
    factors, so the closure equals the full pivot class.
    """
    if mode not in ("loop", "loop-free"):
        raise ValueError('mode must be "loop" or "loop-free"')
    n = len(g.vertices)
    if n > PIVOT_CLASS_MAX_N:
        raise SizeLimitExceeded(f"pivot classes support at most {PIVOT_CLASS_MAX_N} vertices")
    if g.field.q > PIVOT_CLASS_MAX_Q:
        raise SizeLimitExceeded(f"pivot classes support field order at most {PIVOT_CLASS_MAX_Q}")
    if sigma.field != g.field:
        raise FieldMismatch("sesqui-morphism field does not match the graph field")
    m0 = g.to_matrix()
    if sigma_eps_check(m0, sigma) is None:
        raise NotSigmaEpsSymmetric("graph is not symmetric for this sesqui-morphism")
    if mode == "loop-free":
        if not g.is_loop_free():
            raise ValueError("loop-free mode requires a loop-free graph")
    f = g.field
    labs = m0.labels
    rho = f.primitive
    vertex_list = list(labs)
    nonempty_subsets = [
        set(c) for size in range(1, n + 1) for c in itertools.combinations(labs, size)
    ]

    def successors(m: LabeledMatrix):
        for x in nonempty_subsets:
            if m.principal(x).det() == 0:
                continue
            step = DiagonalTransform.pivot_sign(sigma, labs, x).apply_left(ppt(m, x))
            if mode == "loop-free":
                step = step.with_zero_diagonal()
            yield ("pivot", tuple(sorted(x))), step
        if f.q > 2:
            tr = sigma.tilde(rho)
            for v in vertex_list:
                left = DiagonalTransform.scaling(f, labs, {v: rho})
                right = DiagonalTransform.scaling(f, labs, {v: tr})
                yield ("scale", v), right.apply_right(left.apply_left(m))
        if f.p != 2:
            for v in vertex_list:
                right = DiagonalTransform.sign_flip(f, labs, (v,))
                yield ("sign", v), right.apply_right(m)

    key0 = canonical_entries(m0)
    members = [FStarGraph.from_matrix(LabeledMatrix(f, labs, key0))]
    keys = [key0]
    seen = {key0: 0}
    parents: list[Optional[int]] = [None]
    moves: list = [None]
    truncated = False
    frontier = [m0]
    frontier_idx = [0]
    while frontier:
        next_frontier = []
        next_idx = []
        for m, idx in zip(frontier, frontier_idx):
            for desc, nm in successors(m):
                key = canonical_entries(nm)
                if key in seen:
                    continue
                if len(members) >= max_class_size:
                    truncated = True
                    break
                seen[key] = len(members)
                members.append(FStarGraph.from_matrix(LabeledMatrix(f, labs, key)))
                keys.append(key)
                parents.append(idx)
                moves.append(desc)
                next_frontier.append(nm)
                next_idx.append(len(members) - 1)
            if truncated:
                break
        if truncated:
            break
        frontier = next_frontier
        frontier_idx = next_idx
    return PivotClassResult(g, mode, members, keys, parents, moves, truncated)


class PivotMinorWitness:
    """Evidence that H appears as an induced subgraph of a pivot-class member."""

    __slots__ = ("member_index", "member", "trace", "subset", "mapping")

    def __init__(self, member_index, member, trace, subset, mapping):
        self.member_index = member_index
        self.member = member
        self.trace = trace
        self.subset = subset
        self.mapping = mapping

    def __repr__(self) -> str:
        return (
            f"PivotMinorWitness(member={self.member_index}, subset={self.subset}, "
            f"mapping={self.mapping}, trace={self.trace})"
        )


def pivot_minor_check(
    h: FStarGraph,
    g: FStarGraph,
    sigma: SesquiMorphism,
    mode: str = "loop",
    max_class_size: int = DEFAULT_MAX_CLASS_SIZE,
) -> Optional[PivotMinorWitness]:
    """Search the pivot class of g for an induced subgraph isomorphic to h.

    A witness is conclusive even if the class enumeration was truncated; a
    truncated enumeration with no witness raises SizeLimitExceeded because
    absence cannot be certified.
    """
    if h.field != g.field:
        raise FieldMismatch("graphs over different fields")
    result = pivot_class(g, sigma, mode, max_class_size)
    mh = h.to_matrix()
    nh = len(h.vertices)
    if nh > len(g.vertices):
        return None
    for idx, member in enumerate(result.members):
        mm = member.to_matrix()
        for subset in itertools.combinations(mm.labels, nh):
            iso = matrix_isomorphic(mh, mm.principal(subset))
            if iso is not None:
                return PivotMinorWitness(idx, member, result.trace(idx), subset, iso)
    if result.truncated:
        raise SizeLimitExceeded(
            "pivot class enumeration was truncated and no witness was found"
        )
    return None


# ---------------------------------------------------------------------------
# rank-width
# ---------------------------------------------------------------------------

def _resolve_graph(g, sigma):
    if isinstance(g, DirectedGraph):
        return digraph_to_gf4(g), sigma4()
    if sigma is None:
        m = g.to_matrix()
        for cand in sesqui_morphisms(g.field):
            if sigma_eps_check(m, cand) is not None:
                return g, cand
        raise NotSigmaEpsSymmetric("no sesqui-morphism makes this graph symmetric")
    return g, sigma


def rank_width_layout(
    g: Union[FStarGraph, DirectedGraph], sigma: Optional[SesquiMorphism] = None
) -> tuple[int, Layout]:
    """Rank-width and an optimal layout; cut values are cut-ranks of the matrix."""
    graph, sig = _resolve_graph(g, sigma)
    m = graph.to_matrix()
    if sigma is not None and sigma_eps_check(m, sig) is None:
        raise NotSigmaEpsSymmetric("graph is not symmetric for this sesqui-morphism")
    if len(m.labels) > RANK_WIDTH_MAX_N:
        raise SizeLimitExceeded(f"rank-width supports at most {RANK_WIDTH_MAX_N} vertices")
    cut = CutFunction(m.labels, lambda s: cut_rank(m, s))
    return min_width(cut)


def rank_width(
    g: Union[FStarGraph, DirectedGraph], sigma: Optional[SesquiMorphism] = None
) -> int:
    return rank_width_layout(g, sigma)[0]
