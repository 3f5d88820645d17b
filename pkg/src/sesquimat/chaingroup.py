"""Chain groups of K^2-valued functions and their matrix representations.

A chain assigns to each element x of a sorted ground set a pair
f(x) = (a, b) of field elements.  The pairing used everywhere is

    b_sigma(u, v) = sigma(1) * u_a * sigma(v_b)  -  u_b * sigma(v_a)

which is linear in the left slot and semilinear in the right slot through
tilde, the Frobenius part of sigma (b_sigma(u, c*v) = tilde(c) * b_sigma(u, v)).
The inner product of two chains sums the pairing pointwise.

A ChainGroup is a subspace of all chains on a ground set, stored as a
reduced-row-echelon basis over the flattened coordinates

    (x1.a, x1.b, x2.a, x2.b, ...)        labels sorted ascending,

so equal subspaces have equal bases and groups hash and compare directly.

The correspondence with matrices runs through supplementary pairs: chains
f, g with all values pointwise isotropic and b_sigma(f(x), g(x)) =
eps(x) * sigma(1), b_sigma(g(x), f(x)) = -eps(x) * sigma(1)**2 for a sign
function eps.  ChainGroup.from_matrix builds the lagrangian group of a
(sigma, eps)-symmetric matrix; to_matrix inverts it given an eulerian f.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .errors import (
    FieldMismatch,
    GroundMismatch,
    InvalidSupplementaryPair,
    NotEulerian,
    NotLagrangian,
    NotSigmaEpsSymmetric,
    NotSpecialChain,
    ZeroVector,
)
from .field import Field, SesquiMorphism
from .matrix import (
    DiagonalTransform,
    EpsilonSign,
    LabeledMatrix,
    check_scaling_pair,
    is_sigma_eps_symmetric,
    ppt,
)

KVector = tuple[int, int]


def b_sigma(sigma: SesquiMorphism, u: KVector, v: KVector) -> int:
    """The K-vector pairing sigma(1)*u_a*sigma(v_b) - u_b*sigma(v_a)."""
    f = sigma.field
    for w in (u, v):
        f.check(w[0])
        f.check(w[1])
    t1 = f.mul(f.mul(sigma.one, u[0]), sigma(v[1]))
    t2 = f.mul(u[1], sigma(v[0]))
    return f.sub(t1, t2)


class Chain:
    """A K^2-valued function on a sorted ground set."""

    __slots__ = ("field", "ground", "values")

    def __init__(self, field: Field, ground: Iterable, values: Sequence[KVector]):
        given = tuple(ground)
        order = sorted(range(len(given)), key=lambda i: given[i])
        self.field = field
        self.ground = tuple(given[i] for i in order)
        if len(values) != len(given):
            raise ValueError("one K-vector per ground element required")
        self.values = tuple(
            (field.check(values[i][0]), field.check(values[i][1])) for i in order
        )

    @classmethod
    def from_map(cls, field: Field, mapping: Mapping) -> "Chain":
        labs = sorted(mapping)
        return cls(field, labs, [tuple(mapping[x]) for x in labs])

    @classmethod
    def zero(cls, field: Field, ground: Iterable) -> "Chain":
        labs = sorted(ground)
        return cls(field, labs, [(0, 0)] * len(labs))

    @classmethod
    def unit(cls, field: Field, ground: Iterable, x, vec: KVector) -> "Chain":
        """The chain x^vec: vec at x, zero elsewhere."""
        labs = sorted(ground)
        return cls(field, labs, [tuple(vec) if lab == x else (0, 0) for lab in labs])

    @classmethod
    def from_flat(cls, field: Field, ground: Iterable, flat: Sequence[int]) -> "Chain":
        labs = sorted(ground)
        return cls(field, labs, [(flat[2 * i], flat[2 * i + 1]) for i in range(len(labs))])

    def __getitem__(self, x) -> KVector:
        return self.values[self.ground.index(x)]

    def flat(self) -> tuple[int, ...]:
        out: list[int] = []
        for a, b in self.values:
            out.append(a)
            out.append(b)
        return tuple(out)

    def support(self) -> tuple:
        return tuple(x for x, v in zip(self.ground, self.values) if v != (0, 0))

    def is_zero(self) -> bool:
        return all(v == (0, 0) for v in self.values)

    def scale(self, c: int) -> "Chain":
        f = self.field
        return Chain(f, self.ground, [(f.mul(c, a), f.mul(c, b)) for a, b in self.values])

    def add(self, other: "Chain") -> "Chain":
        if self.field != other.field:
            raise FieldMismatch("chains over different fields")
        if self.ground != other.ground:
            raise GroundMismatch("chains over different ground sets")
        f = self.field
        return Chain(
            f,
            self.ground,
            [(f.add(a, c), f.add(b, d)) for (a, b), (c, d) in zip(self.values, other.values)],
        )

    def scale_on(self, factors: Mapping) -> "Chain":
        """Pointwise scaling f'(x) = factors[x] * f(x) (missing labels keep 1)."""
        f = self.field
        return Chain(
            f,
            self.ground,
            [
                (f.mul(factors.get(x, 1), a), f.mul(factors.get(x, 1), b))
                for x, (a, b) in zip(self.ground, self.values)
            ],
        )

    def negate_on(self, subset: Iterable) -> "Chain":
        sub = set(subset)
        return self.scale_on({x: self.field.minus_one for x in sub})

    def replace(self, x, vec: KVector) -> "Chain":
        vals = dict(zip(self.ground, self.values))
        vals[x] = tuple(vec)
        return Chain.from_map(self.field, vals)

    def extended(self, x, vec: KVector) -> "Chain":
        """The chain on ground + {x} taking vec at x."""
        vals = dict(zip(self.ground, self.values))
        if x in vals:
            raise ValueError(f"{x!r} already in the ground set")
        vals[x] = tuple(vec)
        return Chain.from_map(self.field, vals)

    def restricted(self, subset: Iterable) -> "Chain":
        sub = sorted(subset)
        return Chain(self.field, sub, [self[x] for x in sub])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Chain)
            and self.field == other.field
            and self.ground == other.ground
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ground, self.values))

    def __repr__(self) -> str:
        fe = self.field.format_element
        body = ", ".join(
            f"{x}:({fe(a)},{fe(b)})" for x, (a, b) in zip(self.ground, self.values)
        )
        return f"Chain({body})"


def inner(sigma: SesquiMorphism, f: Chain, g: Chain) -> int:
    """Sum of the pairing over the ground set."""
    if f.ground != g.ground:
        raise GroundMismatch("chains over different ground sets")
    if f.field != g.field or f.field != sigma.field:
        raise FieldMismatch("chains and sesqui-morphism must share a field")
    fl = sigma.field
    total = 0
    for u, v in zip(f.values, g.values):
        total = fl.add(total, b_sigma(sigma, u, v))
    return total


def minor_compatible(sigma: SesquiMorphism, gamma: KVector) -> bool:
    """A direction is usable for minors when nonzero and self-orthogonal."""
    if tuple(gamma) == (0, 0):
        return False
    return b_sigma(sigma, gamma, gamma) == 0


class ChainGroup:
    """A subspace of chains with a canonical RREF basis over flat coordinates."""

    __slots__ = ("sigma", "ground", "basis")

    def __init__(self, sigma: SesquiMorphism, ground: Iterable, basis_flat: Sequence[Sequence[int]]):
        self.sigma = sigma
        self.ground = tuple(sorted(ground))
        ncols = 2 * len(self.ground)
        for row in basis_flat:
            if len(row) != ncols:
                raise ValueError("basis rows must have 2 coordinates per ground element")
        reduced, _ = linalg.rref(sigma.field, basis_flat) if basis_flat else ([], [])
        self.basis = tuple(tuple(r) for r in reduced)

    @property
    def field(self) -> Field:
        return self.sigma.field

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, sigma: SesquiMorphism, ground: Iterable, chains: Iterable[Chain]) -> "ChainGroup":
        ground = tuple(sorted(ground))
        rows = []
        for ch in chains:
            if ch.ground != ground:
                raise GroundMismatch("chain ground does not match the group ground")
            rows.append(list(ch.flat()))
        return cls(sigma, ground, rows)

    @classmethod
    def zero_group(cls, sigma: SesquiMorphism, ground: Iterable) -> "ChainGroup":
        return cls(sigma, ground, [])

    @classmethod
    def full_group(cls, sigma: SesquiMorphism, ground: Iterable) -> "ChainGroup":
        n = 2 * len(tuple(ground))
        return cls(sigma, ground, linalg.identity(n))

    @classmethod
    def from_matrix(cls, m: LabeledMatrix, pair: "SupplementaryPair") -> "ChainGroup":
        """The group spanned by the row chains of a (sigma, eps)-symmetric matrix.

        Row x spans m[x,x]*f(x) + g(x) at x and m[x,y]*f(y) at y != x; for a
        symmetric matrix the result is lagrangian.
        """
        sigma = pair.sigma
        if m.field != sigma.field:
            raise FieldMismatch("matrix and pair over different fields")
        if m.labels != pair.ground:
            raise GroundMismatch("matrix labels and pair ground differ")
        if not is_sigma_eps_symmetric(m, sigma, pair.eps):
            raise NotSigmaEpsSymmetric(
                "matrix is not symmetric for the pair's sesqui-morphism and signs"
            )
        f = m.field
        chains = []
        for x in m.labels:
            vals = {}
            for y in m.labels:
                fy = pair.f[y]
                scaled = (f.mul(m.entry(x, y), fy[0]), f.mul(m.entry(x, y), fy[1]))
                if y == x:
                    gy = pair.g[y]
                    scaled = (f.add(scaled[0], gy[0]), f.add(scaled[1], gy[1]))
                vals[y] = scaled
            chains.append(Chain.from_map(f, vals))
        return cls.span(sigma, m.labels, chains)

    def basis_chains(self) -> list[Chain]:
        return [Chain.from_flat(self.field, self.ground, row) for row in self.basis]

    def contains(self, ch: Chain) -> bool:
        if ch.ground != self.ground:
            raise GroundMismatch("chain ground does not match the group ground")
        f = self.field
        vec = list(ch.flat())
        for row in self.basis:
            p = next(i for i, v in enumerate(row) if v != 0)
            if vec[p] != 0:
                c = vec[p]
                vec = [f.sub(v, f.mul(c, r)) for v, r in zip(vec, row)]
        return not any(vec)

    def orthogonal(self) -> "ChainGroup":
        """All chains h with inner(f, h) == 0 for every f in the group."""
        f = self.field
        sigma = self.sigma
        n = len(self.ground)
        rows = []
        for row in self.basis:
            # unknowns are d = tilde(h) flat; coefficient -f_b at d_a, sigma(1)*f_a at d_b
            coeff = [0] * (2 * n)
            for i in range(n):
                fa, fb = row[2 * i], row[2 * i + 1]
                coeff[2 * i] = f.neg(fb)
                coeff[2 * i + 1] = f.mul(sigma.one, fa)
            rows.append(coeff)
        kernel = linalg.nullspace(f, rows, ncols=2 * n)
        basis = [[sigma.tilde(v) for v in vec] for vec in kernel]
        return ChainGroup(sigma, self.ground, basis)

    def is_isotropic(self) -> bool:
        chains = self.basis_chains()
        return all(inner(self.sigma, u, v) == 0 for u in chains for v in chains)

    def is_lagrangian(self) -> bool:
        return self.dim == len(self.ground) and self.is_isotropic()

    def restrict(self, subset: Iterable) -> "ChainGroup":
        """Projections of all chains onto the subset (L | X)."""
        sub = sorted(set(subset))
        self._check_subset(sub)
        idx = [self.ground.index(x) for x in sub]
        rows = []
        for row in self.basis:
            rows.append([row[2 * i + off] for i in idx for off in (0, 1)])
        return ChainGroup(self.sigma, sub, rows)

    def confine(self, subset: Iterable) -> "ChainGroup":
        """Chains vanishing outside the subset, then projected (L ^| X)."""
        sub = sorted(set(subset))
        self._check_subset(sub)
        outside = [i for i, x in enumerate(self.ground) if x not in set(sub)]
        f = self.field
        k = len(self.basis)
        rows = []
        for i in outside:
            for off in (0, 1):
                rows.append([self.basis[j][2 * i + off] for j in range(k)])
        kernel = linalg.nullspace(f, rows, ncols=k)
        chains = []
        for combo in kernel:
            flat = [0] * (2 * len(self.ground))
            for c, row in zip(combo, self.basis):
                if c:
                    flat = [f.add(v, f.mul(c, r)) for v, r in zip(flat, row)]
            chains.append(flat)
        idx = [self.ground.index(x) for x in sub]
        projected = [[fl[2 * i + off] for i in idx for off in (0, 1)] for fl in chains]
        return ChainGroup(self.sigma, sub, projected)

    def minor(self, gamma: KVector, subset: Iterable) -> "ChainGroup":
        """Chains whose values on the subset pair to zero against gamma, projected off it."""
        gamma = (self.field.check(gamma[0]), self.field.check(gamma[1]))
        if gamma == (0, 0):
            raise ZeroVector("minor direction must be nonzero")
        sub = sorted(set(subset))
        self._check_subset(sub)
        if not sub:
            return self
        f = self.field
        sigma = self.sigma
        k = len(self.basis)
        rows = []
        for x in sub:
            i = self.ground.index(x)
            rows.append(
                [b_sigma(sigma, (self.basis[j][2 * i], self.basis[j][2 * i + 1]), gamma) for j in range(k)]
            )
        kernel = linalg.nullspace(f, rows, ncols=k)
        rest = [x for x in self.ground if x not in set(sub)]
        idx = [self.ground.index(x) for x in rest]
        chains = []
        for combo in kernel:
            flat = [0] * (2 * len(self.ground))
            for c, row in zip(combo, self.basis):
                if c:
                    flat = [f.add(v, f.mul(c, r)) for v, r in zip(flat, row)]
            chains.append([flat[2 * i + off] for i in idx for off in (0, 1)])
        return ChainGroup(sigma, rest, chains)

    def connectivity(self, subset: Iterable) -> int:
        """lambda(X) = |X| - dim(L ^| X); defined for lagrangian groups."""
        if not self.is_lagrangian():
            raise NotLagrangian("connectivity is defined for lagrangian groups")
        sub = sorted(set(subset))
        return len(sub) - self.confine(sub).dim

    def to_matrix(self, pair: "SupplementaryPair") -> LabeledMatrix:
        return to_matrix(self, pair)

    def _check_subset(self, sub) -> None:
        if not set(sub) <= set(self.ground):
            raise GroundMismatch("subset not contained in the ground set")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ChainGroup)
            and self.sigma == other.sigma
            and self.ground == other.ground
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.sigma, self.ground, self.basis))

    def __repr__(self) -> str:
        return f"ChainGroup(dim={self.dim}, ground={self.ground})"


class SupplementaryPair:
    """Chains f, g that frame a matrix representation, with their sign function.

    Validated on construction: all values pointwise isotropic, and for every
    x the cross pairings equal eps(x)*sigma(1) and -eps(x)*sigma(1)**2.
    """

    __slots__ = ("sigma", "f", "g", "eps")

    def __init__(self, sigma: SesquiMorphism, f: Chain, g: Chain, eps: EpsilonSign):
        if f.ground != g.ground or f.ground != eps.ground:
            raise GroundMismatch("pair chains and sign function must share a ground set")
        if f.field != sigma.field or g.field != sigma.field:
            raise FieldMismatch("pair chains must live over the sesqui-morphism's field")
        fl = sigma.field
        s1 = sigma.one
        for x in f.ground:
            fu, gu = f[x], g[x]
            if b_sigma(sigma, fu, fu) != 0 or b_sigma(sigma, gu, gu) != 0:
                raise InvalidSupplementaryPair(f"values at {x!r} are not isotropic")
            want_fg = fl.mul(eps.in_field(fl, x), s1)
            if b_sigma(sigma, fu, gu) != want_fg:
                raise InvalidSupplementaryPair(f"forward pairing at {x!r} is off")
            want_gf = fl.neg(fl.mul(eps.in_field(fl, x), fl.mul(s1, s1)))
            if b_sigma(sigma, gu, fu) != want_gf:
                raise InvalidSupplementaryPair(f"backward pairing at {x!r} is off")
        self.sigma = sigma
        self.f = f
        self.g = g
        self.eps = eps

    @property
    def ground(self) -> tuple:
        return self.f.ground

    def is_special(self) -> bool:
        """True when every f and g value lies on a coordinate axis."""
        return all(
            _axis(self.f[x]) is not None and _axis(self.g[x]) is not None
            for x in self.ground
        )

    def __repr__(self) -> str:
        return f"SupplementaryPair(ground={self.ground}, eps={self.eps!r})"


def _axis(vec: KVector) -> Optional[int]:
    """0 for (c, 0), 1 for (0, c) with c != 0, else None."""
    a, b = vec
    if a != 0 and b == 0:
        return 0
    if a == 0 and b != 0:
        return 1
    return None


def standard_pair(sigma: SesquiMorphism, ground: Iterable, eps: Optional[EpsilonSign] = None) -> SupplementaryPair:
    """The pair f(x) = (eps(x), 0), g(x) = (0, sigma(1))."""
    labs = sorted(ground)
    if eps is None:
        eps = EpsilonSign.all_plus(labs)
    fl = sigma.field
    f = Chain(fl, labs, [(eps.in_field(fl, x), 0) for x in labs])
    g = Chain(fl, labs, [(0, sigma.one)] * len(labs))
    return SupplementaryPair(sigma, f, g, eps)


# ---------------------------------------------------------------------------
# eulerian chains and the inverse correspondence
# ---------------------------------------------------------------------------

def is_eulerian(group: ChainGroup, f: Chain) -> bool:
    """Pointwise nonzero and isotropic, and no nonzero member of the group
    pairs to zero against f everywhere."""
    if f.ground != group.ground:
        raise GroundMismatch("chain ground does not match the group ground")
    sigma = group.sigma
    for x in f.ground:
        v = f[x]
        if v == (0, 0) or b_sigma(sigma, v, v) != 0:
            return False
    # constraint matrix over basis coefficients: left slot is linear
    n = len(group.ground)
    k = group.dim
    rows = []
    for i in range(n):
        fv = f.values[i]
        rows.append(
            [b_sigma(sigma, (group.basis[j][2 * i], group.basis[j][2 * i + 1]), fv) for j in range(k)]
        )
    return linalg.rank(group.field, rows) == k if k else True


def eulerian_chain(
    group: ChainGroup,
    alpha: Optional[KVector] = None,
    beta: Optional[KVector] = None,
) -> Chain:
    """An eulerian chain of a lagrangian group, built by minor recursion.

    At the least ground element x the chain takes value alpha or beta
    (defaults (1, 0) and (0, sigma(1))); the rest extends an eulerian chain
    of the corresponding single-element minor.  Each candidate is validated
    before being returned, so the result is always genuinely eulerian.
    """
    sigma = group.sigma
    if alpha is None:
        alpha = (1, 0)
    if beta is None:
        beta = (0, sigma.one)
    alpha = (sigma.field.check(alpha[0]), sigma.field.check(alpha[1]))
    beta = (sigma.field.check(beta[0]), sigma.field.check(beta[1]))
    if not minor_compatible(sigma, alpha) or not minor_compatible(sigma, beta):
        raise ZeroVector("alpha and beta must be nonzero and self-orthogonal")
    if b_sigma(sigma, alpha, beta) == 0:
        raise ValueError("alpha and beta must not be parallel")
    if not group.is_lagrangian():
        raise NotLagrangian("eulerian chains exist only for lagrangian groups")

    def rec(g: ChainGroup) -> Chain:
        if not g.ground:
            return Chain.zero(g.field, ())
        x = g.ground[0]
        cands = []
        if len(g.ground) == 1:
            cands = [
                Chain.unit(g.field, g.ground, x, alpha),
                Chain.unit(g.field, g.ground, x, beta),
            ]
        else:
            for direction in (alpha, beta):
                sub = rec(g.minor(direction, (x,)))
                cands.append(sub.extended(x, direction))
        for cand in cands:
            if is_eulerian(g, cand):
                return cand
        raise NotEulerian("no eulerian extension found; group is not lagrangian?")

    return rec(group)


def to_matrix(group: ChainGroup, pair: SupplementaryPair) -> LabeledMatrix:
    """The matrix representing a lagrangian group in the frame of a pair.

    Requires pair.f to be eulerian for the group.  Row x is recovered by
    solving for the unique member f_x with b(f(y), f_x(y)) = 0 away from x
    and b(f(x), f_x(x)) = eps(x)*sigma(1); then
    m[x, y] = eps(y) * sigma(1)**-1 * b(f_x(y), g(y)).
    """
    sigma = pair.sigma
    if pair.ground != group.ground:
        raise GroundMismatch("pair ground does not match the group ground")
    if sigma != group.sigma:
        raise FieldMismatch("pair and group use different sesqui-morphisms")
    if not is_eulerian(group, pair.f):
        raise NotEulerian("the pair's f chain is not eulerian for this group")
    fl = group.field
    n = len(group.ground)
    k = group.dim
    # A[y][i] = b(f(y), r_i(y)); unknowns d_i = tilde(c_i) by right semilinearity
    a = []
    for i in range(n):
        fv = pair.f.values[i]
        a.append(
            [b_sigma(sigma, fv, (group.basis[j][2 * i], group.basis[j][2 * i + 1])) for j in range(k)]
        )
    rows_out = []
    for xi, x in enumerate(group.ground):
        rhs = [0] * n
        rhs[xi] = fl.mul(pair.eps.in_field(fl, x), sigma.one)
        d = linalg.solve(fl, a, rhs)
        if d is None:
            raise NotEulerian("row system inconsistent; f is not eulerian")
        combo = [sigma.tilde(v) for v in d]
        flat = [0] * (2 * n)
        for c, row in zip(combo, group.basis):
            if c:
                flat = [fl.add(v, fl.mul(c, r)) for v, r in zip(flat, row)]
        f_x = Chain.from_flat(fl, group.ground, flat)
        row_vals = []
        for y in group.ground:
            val = b_sigma(sigma, f_x[y], pair.g[y])
            val = fl.mul(val, sigma.one_inv)
            val = fl.mul(val, pair.eps.in_field(fl, y))
            row_vals.append(val)
        rows_out.append(row_vals)
    return LabeledMatrix(fl, group.ground, rows_out)


def special_eulerian_check(m: LabeledMatrix, pair: SupplementaryPair, fprime: Chain) -> bool:
    """Is the special chain fprime eulerian for the group represented by (m, pair)?

    Both the pair and fprime must take values on the coordinate axes only
    (NotSpecialChain otherwise).
    """
    if not pair.is_special():
        raise NotSpecialChain("pair values must lie on the coordinate axes")
    if fprime.ground != pair.ground:
        raise GroundMismatch("fprime ground does not match the pair ground")
    if any(_axis(fprime[x]) is None for x in fprime.ground):
        raise NotSpecialChain("fprime values must be nonzero and on the coordinate axes")
    group = ChainGroup.from_matrix(m, pair)
    return is_eulerian(group, fprime)


def chain_group_dim_after_single_minor(group: ChainGroup, gamma: KVector, x) -> int:
    """Dimension of the single-element minor.

    For isotropic gamma (b_sigma(gamma, gamma) = 0) this follows the
    membership trichotomy of the unit chain at x: unchanged when the unit
    chain lies in the orthogonal group only, down two when it lies in the
    group but not its orthogonal, down one otherwise.
    """
    return group.minor(gamma, (x,)).dim


# ---------------------------------------------------------------------------
# representation transforms: each returns (new pair, new matrix)
# ---------------------------------------------------------------------------

def _require_representation(m: LabeledMatrix, pair: SupplementaryPair) -> None:
    if m.labels != pair.ground:
        raise GroundMismatch("matrix labels and pair ground differ")
    if m.field != pair.sigma.field:
        raise FieldMismatch("matrix and pair over different fields")
    if not is_sigma_eps_symmetric(m, pair.sigma, pair.eps):
        raise NotSigmaEpsSymmetric("matrix is not symmetric for the pair's signs")


def transform_ppt(pair: SupplementaryPair, m: LabeledMatrix, subset: Iterable) -> tuple[SupplementaryPair, LabeledMatrix]:
    """Pivot the representation at X: swap the frame chains on X and replace
    the matrix by P_X * (M * X); the sign function is unchanged."""
    _require_representation(m, pair)
    sub = set(subset)
    sigma = pair.sigma
    n = ppt(m, sub)
    p_x = DiagonalTransform.pivot_sign(sigma, m.labels, sub)
    n = p_x.apply_left(n)
    fl = sigma.field
    new_f = Chain(
        fl, pair.ground, [pair.g[x] if x in sub else pair.f[x] for x in pair.ground]
    )
    sm1 = sigma.minus_one
    new_g = Chain(
        fl,
        pair.ground,
        [
            (fl.mul(sm1, pair.f[x][0]), fl.mul(sm1, pair.f[x][1])) if x in sub else pair.g[x]
            for x in pair.ground
        ],
    )
    return SupplementaryPair(sigma, new_f, new_g, pair.eps), n


def transform_sign(pair: SupplementaryPair, m: LabeledMatrix, subset: Iterable, side: str) -> tuple[SupplementaryPair, LabeledMatrix]:
    """Negate rows (side="left", flipping g) or columns (side="right",
    flipping f) on a subset; the sign function flips there either way."""
    _require_representation(m, pair)
    sub = set(subset)
    sigma = pair.sigma
    i_z = DiagonalTransform.sign_flip(m.field, m.labels, sub)
    if side == "left":
        n = i_z.apply_left(m)
        new_f = pair.f
        new_g = pair.g.negate_on(sub)
    elif side == "right":
        n = i_z.apply_right(m)
        new_f = pair.f.negate_on(sub)
        new_g = pair.g
    else:
        raise ValueError('side must be "left" or "right"')
    return SupplementaryPair(sigma, new_f, new_g, pair.eps.flip(sub)), n


def transform_scale(
    pair: SupplementaryPair,
    m: LabeledMatrix,
    p: DiagonalTransform,
    q: DiagonalTransform,
) -> tuple[SupplementaryPair, LabeledMatrix]:
    """Rescale rows by P and columns by Q**-1 for a compatible pair (P, Q);
    the frame scales as f -> q*f, g -> p*g and the signs are unchanged."""
    _require_representation(m, pair)
    sigma = pair.sigma
    check_scaling_pair(sigma, p, q)
    n = q.inverse().apply_right(p.apply_left(m))
    new_f = pair.f.scale_on(dict(zip(q.ground, q.values)))
    new_g = pair.g.scale_on(dict(zip(p.ground, p.values)))
    return SupplementaryPair(sigma, new_f, new_g, pair.eps), n


def clear_diagonal(pair: SupplementaryPair, m: LabeledMatrix) -> tuple[SupplementaryPair, LabeledMatrix]:
    """Absorb the diagonal into g (g'(x) = m[x,x]*f(x) + g(x)), zeroing it."""
    _require_representation(m, pair)
    sigma = pair.sigma
    fl = sigma.field
    vals = []
    for x in pair.ground:
        d = m.entry(x, x)
        fx, gx = pair.f[x], pair.g[x]
        vals.append((fl.add(fl.mul(d, fx[0]), gx[0]), fl.add(fl.mul(d, fx[1]), gx[1])))
    new_g = Chain(fl, pair.ground, vals)
    return SupplementaryPair(sigma, pair.f, new_g, pair.eps), m.with_zero_diagonal()
