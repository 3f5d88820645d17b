"""Matrices indexed by a finite label set over a Field, plus the pivot calculus.

A LabeledMatrix stores its labels in canonical sorted order and its entries
as a tuple of int-encoded rows; instances are immutable and hashable.  The
module-level operations implement the calculus used everywhere else:
principal pivot transforms (ppt), Schur complements, cut-rank, the
sign-symmetry test sigma_eps_check, diagonal transforms and matrix
isomorphism.

Sign conventions.  A matrix M is (sigma, eps)-symmetric when
eps(x) * m[x,y] == eps(y) * sigma(m[y,x]) for all x, y, where eps maps each
label to +1 or -1.  EpsilonSign represents such a sign function as the
subset of labels carrying -1.  sigma_eps_check finds the canonical sign
function (first label of every connected component of the nonzero pattern
pinned to +1) or returns None.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .errors import (
    FieldMismatch,
    GroundMismatch,
    IncompatibleScalingPair,
    SingularPivotBlock,
    SizeLimitExceeded,
)
from .field import Field, SesquiMorphism


class LabeledMatrix:
    """Square matrix indexed by sorted labels, entries int-encoded field elements."""

    __slots__ = ("field", "labels", "rows", "_pos")

    def __init__(self, field: Field, labels: Iterable, rows: Sequence[Sequence[int]]):
        given = tuple(labels)
        order = sorted(range(len(given)), key=lambda i: given[i])
        self.field = field
        self.labels = tuple(given[i] for i in order)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        if len(rows) != len(given) or any(len(r) != len(given) for r in rows):
            raise ValueError("entry grid must be square and match the label count")
        self.rows = tuple(
            tuple(field.check(rows[i][j]) for j in order) for i in order
        )
        self._pos = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_function(cls, field: Field, labels: Iterable, fn) -> "LabeledMatrix":
        labs = sorted(labels)
        return cls(field, labs, [[fn(x, y) for y in labs] for x in labs])

    @classmethod
    def zeros(cls, field: Field, labels: Iterable) -> "LabeledMatrix":
        labs = sorted(labels)
        n = len(labs)
        return cls(field, labs, [[0] * n for _ in range(n)])

    def entry(self, x, y) -> int:
        return self.rows[self._pos[x]][self._pos[y]]

    def n(self) -> int:
        return len(self.labels)

    def rect(self, row_labels: Iterable, col_labels: Iterable) -> list[list[int]]:
        """Unlabeled submatrix rows, in sorted label order on both axes."""
        try:
            ri = [self._pos[x] for x in sorted(row_labels)]
            ci = [self._pos[y] for y in sorted(col_labels)]
        except KeyError as exc:
            raise GroundMismatch(f"label {exc.args[0]!r} not in the matrix") from None
        return [[self.rows[i][j] for j in ci] for i in ri]

    def principal(self, sub_labels: Iterable) -> "LabeledMatrix":
        labs = sorted(sub_labels)
        return LabeledMatrix(self.field, labs, self.rect(labs, labs))

    def rank(self, row_labels: Optional[Iterable] = None, col_labels: Optional[Iterable] = None) -> int:
        rl = self.labels if row_labels is None else row_labels
        cl = self.labels if col_labels is None else col_labels
        return linalg.rank(self.field, self.rect(rl, cl))

    def det(self) -> int:
        return linalg.det(self.field, self.rows)

    def inverse(self) -> "LabeledMatrix":
        return LabeledMatrix(self.field, self.labels, linalg.inverse(self.field, self.rows))

    def mul(self, other: "LabeledMatrix") -> "LabeledMatrix":
        self._check_same(other)
        return LabeledMatrix(
            self.field, self.labels, linalg.matmul(self.field, self.rows, other.rows)
        )

    def add(self, other: "LabeledMatrix") -> "LabeledMatrix":
        self._check_same(other)
        f = self.field
        return LabeledMatrix(
            self.field,
            self.labels,
            [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def with_zero_diagonal(self) -> "LabeledMatrix":
        rows = [list(r) for r in self.rows]
        for i in range(len(rows)):
            rows[i][i] = 0
        return LabeledMatrix(self.field, self.labels, rows)

    def _check_same(self, other: "LabeledMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.labels != other.labels:
            raise GroundMismatch("matrices indexed by different label sets")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledMatrix)
            and self.field == other.field
            and self.labels == other.labels
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.labels, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(self.field.format_element(v) for v in row) for row in self.rows
        )
        return f"LabeledMatrix({self.labels}, [{body}])"


class EpsilonSign:
    """A sign function label -> {+1, -1}, stored as the subset mapped to -1."""

    __slots__ = ("ground", "minus")

    def __init__(self, ground: Iterable, minus: Iterable = ()):
        self.ground = tuple(sorted(ground))
        self.minus = frozenset(minus)
        if not self.minus <= set(self.ground):
            raise GroundMismatch("minus set must be a subset of the ground set")

    @classmethod
    def all_plus(cls, ground: Iterable) -> "EpsilonSign":
        return cls(ground)

    def __call__(self, x) -> int:
        return -1 if x in self.minus else 1

    def in_field(self, field: Field, x) -> int:
        return field.minus_one if x in self.minus else 1

    def flip(self, subset: Iterable) -> "EpsilonSign":
        return EpsilonSign(self.ground, self.minus.symmetric_difference(subset))

    def as_dict(self) -> dict:
        return {x: self(x) for x in self.ground}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EpsilonSign)
            and self.ground == other.ground
            and self.minus == other.minus
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.minus))

    def __repr__(self) -> str:
        return f"EpsilonSign(minus={sorted(self.minus)!r} of {self.ground!r})"


class DiagonalTransform:
    """A diagonal matrix over the label set, used as a left or right factor."""

    __slots__ = ("field", "ground", "values")

    def __init__(self, field: Field, ground: Iterable, values: Mapping):
        self.field = field
        self.ground = tuple(sorted(ground))
        if not set(values) <= set(self.ground):
            raise GroundMismatch("diagonal values keyed by labels outside the ground set")
        vals = []
        for x in self.ground:
            v = field.check(values.get(x, 1))
            if v == 0:
                raise ValueError("diagonal transforms must be invertible")
            vals.append(v)
        self.values = tuple(vals)

    @classmethod
    def identity(cls, field: Field, ground: Iterable) -> "DiagonalTransform":
        return cls(field, ground, {})

    @classmethod
    def sign_flip(cls, field: Field, ground: Iterable, subset: Iterable) -> "DiagonalTransform":
        """-1 on the subset, 1 elsewhere (the I_Z factor)."""
        return cls(field, ground, {x: field.minus_one for x in subset})

    @classmethod
    def pivot_sign(cls, sigma: SesquiMorphism, ground: Iterable, subset: Iterable) -> "DiagonalTransform":
        """sigma(-1) on the subset, 1 elsewhere (the left factor of a pivot step)."""
        return cls(sigma.field, ground, {x: sigma.minus_one for x in subset})

    @classmethod
    def scaling(cls, field: Field, ground: Iterable, mapping: Mapping) -> "DiagonalTransform":
        return cls(field, ground, dict(mapping))

    def value(self, x) -> int:
        return self.values[self.ground.index(x)]

    def compose(self, other: "DiagonalTransform") -> "DiagonalTransform":
        if self.field != other.field or self.ground != other.ground:
            raise GroundMismatch("diagonal transforms over different grounds")
        f = self.field
        return DiagonalTransform(
            f, self.ground,
            {x: f.mul(a, b) for x, a, b in zip(self.ground, self.values, other.values)},
        )

    def inverse(self) -> "DiagonalTransform":
        f = self.field
        return DiagonalTransform(
            f, self.ground, {x: f.inv(v) for x, v in zip(self.ground, self.values)}
        )

    def apply_left(self, m: LabeledMatrix) -> LabeledMatrix:
        self._check(m)
        f = self.field
        rows = [
            [f.mul(d, v) for v in row] for d, row in zip(self.values, m.rows)
        ]
        return LabeledMatrix(f, m.labels, rows)

    def apply_right(self, m: LabeledMatrix) -> LabeledMatrix:
        self._check(m)
        f = self.field
        rows = [
            [f.mul(v, d) for v, d in zip(row, self.values)] for row in m.rows
        ]
        return LabeledMatrix(f, m.labels, rows)

    def _check(self, m: LabeledMatrix) -> None:
        if self.field != m.field:
            raise FieldMismatch("transform and matrix over different fields")
        if self.ground != m.labels:
            raise GroundMismatch("transform and matrix over different label sets")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DiagonalTransform)
            and self.field == other.field
            and self.ground == other.ground
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ground, self.values))

    def __repr__(self) -> str:
        vals = ", ".join(
            f"{x}:{self.field.format_element(v)}" for x, v in zip(self.ground, self.values)
        )
        return f"DiagonalTransform({vals})"


def compatible_partner(sigma: SesquiMorphism, p: int) -> int:
    """The unique q with p**-1 == sigma(q) * sigma(1)**-1."""
    f = sigma.field
    return sigma(f.mul(sigma.one, f.inv(p)))


def scaling_pair(sigma: SesquiMorphism, ground: Iterable, p_mapping: Mapping) -> tuple[DiagonalTransform, DiagonalTransform]:
    """Build the compatible pair (P, Q) from the left factors p_x."""
    f = sigma.field
    p = DiagonalTransform.scaling(f, ground, dict(p_mapping))
    q = DiagonalTransform.scaling(
        f, ground, {x: compatible_partner(sigma, v) for x, v in zip(p.ground, p.values)}
    )
    return p, q


def check_scaling_pair(sigma: SesquiMorphism, p: DiagonalTransform, q: DiagonalTransform) -> None:
    """Raise IncompatibleScalingPair unless p_x**-1 == sigma(q_x) * sigma(1)**-1 everywhere."""
    if p.ground != q.ground:
        raise GroundMismatch("scaling pair over different grounds")
    f = sigma.field
    for x, pv, qv in zip(p.ground, p.values, q.values):
        if f.inv(pv) != f.mul(sigma(qv), sigma.one_inv):
            raise IncompatibleScalingPair(
                f"p[{x}] = {f.format_element(pv)} and q[{x}] = {f.format_element(qv)} "
                "do not satisfy the compatibility relation"
            )


def apply_transform(
    m: LabeledMatrix,
    left: Optional[DiagonalTransform] = None,
    right: Optional[DiagonalTransform] = None,
) -> LabeledMatrix:
    out = m
    if left is not None:
        out = left.apply_left(out)
    if right is not None:
        out = right.apply_right(out)
    return out


# ---------------------------------------------------------------------------
# pivot calculus
# ---------------------------------------------------------------------------

def schur_complement(m: LabeledMatrix, pivot_labels: Iterable) -> LabeledMatrix:
    """M / M[X]: the complement block after eliminating X; schur(M, {}) = M."""
    x = sorted(pivot_labels)
    if not set(x) <= set(m.labels):
        raise GroundMismatch("pivot labels not contained in the matrix labels")
    if not x:
        return m
    rest = sorted(set(m.labels) - set(x))
    f = m.field
    a = m.rect(x, x)
    if linalg.det(f, a) == 0:
        raise SingularPivotBlock(f"principal block at {x} is singular")
    if not rest:
        return LabeledMatrix(f, [], [])
    ainv = linalg.inverse(f, a)
    b = m.rect(x, rest)
    c = m.rect(rest, x)
    d = m.rect(rest, rest)
    cab = linalg.matmul(f, linalg.matmul(f, c, ainv), b)
    rows = [[f.sub(dv, cv) for dv, cv in zip(dr, cr)] for dr, cr in zip(d, cab)]
    return LabeledMatrix(f, rest, rows)


def ppt(m: LabeledMatrix, pivot_labels: Iterable) -> LabeledMatrix:
    """Principal pivot transform M * X.

    Blockwise over (X, rest): the X-block becomes A**-1, the off blocks
    A**-1 B and -C A**-1, and the rest block the Schur complement.
    ppt(M, {}) = M and ppt(M, V) = M**-1.
    """
    x = sorted(pivot_labels)
    if not set(x) <= set(m.labels):
        raise GroundMismatch("pivot labels not contained in the matrix labels")
    if not x:
        return m
    rest = sorted(set(m.labels) - set(x))
    f = m.field
    a = m.rect(x, x)
    if linalg.det(f, a) == 0:
        raise SingularPivotBlock(f"principal block at {x} is singular")
    ainv = linalg.inverse(f, a)
    b = m.rect(x, rest)
    c = m.rect(rest, x)
    d = m.rect(rest, rest)
    ainv_b = linalg.matmul(f, ainv, b)
    c_ainv = linalg.matmul(f, c, ainv)
    cab = linalg.matmul(f, c_ainv, b)
    schur = [[f.sub(dv, cv) for dv, cv in zip(dr, cr)] for dr, cr in zip(d, cab)]
    xpos = {lab: i for i, lab in enumerate(x)}
    rpos = {lab: i for i, lab in enumerate(rest)}

    def entry(u, v):
        if u in xpos:
            if v in xpos:
                return ainv[xpos[u]][xpos[v]]
            return ainv_b[xpos[u]][rpos[v]]
        if v in xpos:
            return f.neg(c_ainv[rpos[u]][xpos[v]])
        return schur[rpos[u]][rpos[v]]

    return LabeledMatrix.from_function(f, m.labels, entry)


def tucker_check(m: LabeledMatrix, pivot_labels: Iterable, probe_labels: Iterable) -> bool:
    """Determinant identity relating principal minors of M and of M * X.

    det((M*X)[Z]) must equal +-det(M[X symdiff Z]) / det(M[X]).
    """
    f = m.field
    x = set(pivot_labels)
    z = set(probe_labels)
    n = ppt(m, x)  # raises SingularPivotBlock when M[X] is singular
    lhs = n.principal(z).det()
    rhs = f.div(m.principal(x.symmetric_difference(z)).det(), m.principal(x).det())
    return lhs == rhs or lhs == f.neg(rhs)


def cut_rank(m: LabeledMatrix, subset: Iterable) -> int:
    """Rank of the off-diagonal block M[X, V minus X]; symmetric in X by design."""
    x = set(subset)
    if not x <= set(m.labels):
        raise GroundMismatch("subset not contained in the matrix labels")
    rest = set(m.labels) - x
    if not x or not rest:
        return 0
    return m.rank(x, rest)


def sigma_eps_check(m: LabeledMatrix, sigma: SesquiMorphism) -> Optional[EpsilonSign]:
    """Canonical sign function making M (sigma, eps)-symmetric, or None.

    Signs propagate over connected components of the nonzero pattern; the
    least label of each component (and every isolated label) gets +1.
    """
    if sigma.field != m.field:
        raise FieldMismatch("sesqui-morphism and matrix over different fields")
    f = m.field
    labs = m.labels
    n = len(labs)
    for i in range(n):
        d = m.rows[i][i]
        if sigma(d) != d:
            return None
    # adjacency with the required relative sign on each edge
    rel: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            mij, mji = m.rows[i][j], m.rows[j][i]
            if (mij == 0) != (mji == 0):
                return None
            if mij == 0:
                continue
            r = f.div(sigma(mji), mij)  # eps(i)/eps(j) as a field value
            if r == 1:
                s = 1
            elif r == f.minus_one:
                s = -1
            else:
                return None
            rel[i].append((j, s))
            rel[j].append((i, s))
    sign = [0] * n
    for start in range(n):
        if sign[start]:
            continue
        sign[start] = 1
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v, s in rel[u]:
                want = sign[u] * s
                if sign[v] == 0:
                    sign[v] = want
                    queue.append(v)
                elif sign[v] != want:
                    return None
    eps = EpsilonSign(labs, {labs[i] for i in range(n) if sign[i] < 0})
    # full verification catches anything propagation glossed over
    for i in range(n):
        for j in range(n):
            lhs = f.mul(eps.in_field(f, labs[i]), m.rows[i][j])
            rhs = f.mul(eps.in_field(f, labs[j]), sigma(m.rows[j][i]))
            if lhs != rhs:
                return None
    return eps


def is_sigma_eps_symmetric(m: LabeledMatrix, sigma: SesquiMorphism, eps: EpsilonSign) -> bool:
    """Check M against one given sign function (not the canonical one)."""
    f = m.field
    for x in m.labels:
        for y in m.labels:
            lhs = f.mul(eps.in_field(f, x), m.entry(x, y))
            rhs = f.mul(eps.in_field(f, y), sigma(m.entry(y, x)))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# isomorphism and canonical forms
# ---------------------------------------------------------------------------

ISO_MAX = 10


def matrix_isomorphic(m: LabeledMatrix, other: LabeledMatrix) -> Optional[dict]:
    """Relabeling h with other[h(x), h(y)] == m[x, y], or None.

    Backtracking over labels in sorted order with row/column multiset
    pruning; the returned mapping is the lexicographically first one.
    """
    if m.field != other.field:
        raise FieldMismatch("matrices over different fields")
    n = m.n()
    if n != other.n():
        return None
    if n > ISO_MAX or other.n() > ISO_MAX:
        raise SizeLimitExceeded(f"isomorphism search limited to {ISO_MAX} labels")

    def sig(mat: LabeledMatrix, i: int) -> tuple:
        row = tuple(sorted(mat.rows[i]))
        col = tuple(sorted(r[i] for r in mat.rows))
        return (mat.rows[i][i], row, col)

    sig_m = [sig(m, i) for i in range(n)]
    sig_o = [sig(other, i) for i in range(n)]
    assign: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for b in range(n):
            if used[b] or sig_m[i] != sig_o[b]:
                continue
            ok = True
            for j, bj in enumerate(assign):
                if m.rows[i][j] != other.rows[b][bj] or m.rows[j][i] != other.rows[bj][b]:
                    ok = False
                    break
            if not ok:
                continue
            used[b] = True
            assign.append(b)
            if extend(i + 1):
                return True
            assign.pop()
            used[b] = False
        return False

    if not extend(0):
        return None
    return {m.labels[i]: other.labels[b] for i, b in enumerate(assign)}


def canonical_entries(m: LabeledMatrix) -> tuple:
    """Lexicographically least entry grid over all relabelings (n <= 8)."""
    n = m.n()
    if n > 8:
        raise SizeLimitExceeded("canonical form limited to 8 labels")
    rows = m.rows
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(tuple(rows[i][j] for j in perm) for i in perm)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


# ---------------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------------

def random_sigma_eps_matrix(
    field: Field,
    sigma: SesquiMorphism,
    labels: Iterable,
    rng,
    eps: Optional[EpsilonSign] = None,
    zero_bias: float = 0.4,
) -> tuple[LabeledMatrix, EpsilonSign]:
    """Seeded random (sigma, eps)-symmetric matrix.

    Diagonal entries are drawn from the sigma-fixed elements, the upper
    triangle freely (with a bias towards 0 so sign propagation sees varied
    patterns), and the lower triangle is forced by the symmetry relation.
    """
    labs = tuple(sorted(labels))
    if eps is None:
        eps = EpsilonSign(labs, {x for x in labs if rng.random() < 0.5})
    fixed = sigma.fixed_elements()
    n = len(labs)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.choice(fixed)
        for j in range(i + 1, n):
            v = 0 if rng.random() < zero_bias else rng.randrange(1, field.q)
            rows[i][j] = v
            # eps(j) m[j,i] == eps(i) sigma(m[i,j])
            w = sigma(v)
            if eps(labs[i]) != eps(labs[j]):
                w = field.neg(w)
            rows[j][i] = w
    return LabeledMatrix(field, labs, rows), eps
