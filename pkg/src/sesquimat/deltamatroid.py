"""Delta-matroids and the feasible-set systems of symmetric matrices.

A DeltaMatroid is a ground set with a nonempty family of feasible subsets
satisfying the symmetric exchange axiom: for feasible F, F' and any
x in F symdiff F' there is y in F symdiff F' (y = x allowed) with
F symdiff {x, y} feasible.  sea_check verifies the axiom and reports the
first violating triple in canonical order.

DeltaMatroid.from_matrix collects the principal non-singular submatrices of
a labeled matrix (the empty set is always feasible, det of the empty matrix
being 1).  Twisting by X replaces each feasible F by F symdiff X; for a
matrix system and feasible X this is again a matrix system, realized by the
pivot P_X (M*X).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Union

from .errors import (
    GroundMismatch,
    NotSigmaEpsSymmetric,
    OverlappingMinorSets,
    SizeLimitExceeded,
)
from .field import SesquiMorphism
from .matrix import DiagonalTransform, LabeledMatrix, ppt, sigma_eps_check
from .graphs import FStarGraph, rank_width
from .field import sesqui_morphisms

BRANCH_WIDTH_MAX_N = 8


def _canon(sets: Iterable[Iterable]) -> tuple[tuple, ...]:
    return tuple(sorted(set(tuple(sorted(s)) for s in sets)))


class DeltaMatroid:
    """Ground set plus a nonempty feasible-set family (not validated as a
    delta-matroid on construction; run sea_check for that)."""

    __slots__ = ("ground", "feasible")

    def __init__(self, ground: Iterable, feasible: Iterable[Iterable]):
        self.ground = tuple(sorted(set(ground)))
        gs = set(self.ground)
        fam = _canon(feasible)
        if not fam:
            raise ValueError("a delta-matroid needs at least one feasible set")
        for s in fam:
            if not set(s) <= gs:
                raise GroundMismatch(f"feasible set {s!r} not contained in the ground set")
        self.feasible = fam

    @classmethod
    def from_matrix(cls, m: LabeledMatrix) -> "DeltaMatroid":
        """Feasible sets are the X with det M[X] != 0; the empty set always is."""
        feas = [
            x
            for size in range(len(m.labels) + 1)
            for x in itertools.combinations(m.labels, size)
            if m.principal(x).det() != 0
        ]
        return cls(m.labels, feas)

    def is_feasible(self, subset: Iterable) -> bool:
        return tuple(sorted(subset)) in set(self.feasible)

    def sea_check(self) -> Optional[tuple[tuple, tuple, object]]:
        """None when the symmetric exchange axiom holds, else the first
        violating (F, F', x) in canonical (sorted-tuple) order."""
        fam = set(self.feasible)
        for f1 in self.feasible:
            s1 = set(f1)
            for f2 in self.feasible:
                diff = sorted(s1.symmetric_difference(f2))
                for x in diff:
                    ok = False
                    for y in diff:
                        if tuple(sorted(s1.symmetric_difference({x, y}))) in fam:
                            ok = True
                            break
                    if not ok:
                        return (f1, f2, x)
        return None

    def twist(self, subset: Iterable) -> "DeltaMatroid":
        sub = set(subset)
        if not sub <= set(self.ground):
            raise GroundMismatch("twist set not contained in the ground set")
        return DeltaMatroid(
            self.ground, [set(f).symmetric_difference(sub) for f in self.feasible]
        )

    def minor(self, delete: Iterable, contract: Iterable) -> "DeltaMatroid":
        """Delete X, contract Y: keep feasible F disjoint from X containing Y,
        then drop Y.  X and Y must be disjoint subsets of the ground set."""
        dx = set(delete)
        cy = set(contract)
        if dx & cy:
            raise OverlappingMinorSets("deletion and contraction sets overlap")
        if not (dx | cy) <= set(self.ground):
            raise GroundMismatch("minor sets not contained in the ground set")
        new_ground = [x for x in self.ground if x not in dx and x not in cy]
        fam = []
        for f in self.feasible:
            fs = set(f)
            if fs & dx or not cy <= fs:
                continue
            fam.append(fs - cy)
        if not fam:
            # empty family is not a delta-matroid; surface it as a ValueError
            raise ValueError("minor has no feasible sets")
        return DeltaMatroid(new_ground, fam)

    def equivalent(self, other: "DeltaMatroid") -> Optional[frozenset]:
        """Least twist set X (by size, then sorted labels) with self twisted
        by X equal to other, or None."""
        if self.ground != other.ground:
            raise GroundMismatch("delta-matroids over different ground sets")
        target = other.feasible
        for size in range(len(self.ground) + 1):
            for x in itertools.combinations(self.ground, size):
                if self.twist(x).feasible == target:
                    return frozenset(x)
        return None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DeltaMatroid)
            and self.ground == other.ground
            and self.feasible == other.feasible
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.feasible))

    def __repr__(self) -> str:
        return f"DeltaMatroid(|ground|={len(self.ground)}, |feasible|={len(self.feasible)})"

    def to_json_dict(self) -> dict:
        return {
            "ground": list(self.ground),
            "feasible": [list(s) for s in self.feasible],
        }


def branch_width_bound(m: LabeledMatrix, sigma: Optional[SesquiMorphism] = None) -> int:
    """An upper bound for the branch-width of the matrix's delta-matroid:
    the least rank-width over the matrix and its pivots at feasible sets.

    For a (sigma, eps)-symmetric matrix all those rank-widths coincide, so
    the bound equals rank_width of the matrix itself; the minimum is still
    taken explicitly.
    """
    n = len(m.labels)
    if n > BRANCH_WIDTH_MAX_N:
        raise SizeLimitExceeded(f"branch width bound supports at most {BRANCH_WIDTH_MAX_N} labels")
    if sigma is None:
        found = None
        for cand in sesqui_morphisms(m.field):
            if sigma_eps_check(m, cand) is not None:
                found = cand
                break
        if found is None:
            raise NotSigmaEpsSymmetric("no sesqui-morphism makes this matrix symmetric")
        sigma = found
    elif sigma_eps_check(m, sigma) is None:
        raise NotSigmaEpsSymmetric("matrix is not symmetric for this sesqui-morphism")
    best = rank_width(FStarGraph.from_matrix(m), sigma)
    dm = DeltaMatroid.from_matrix(m)
    for x in dm.feasible:
        if not x:
            continue
        piv = DiagonalTransform.pivot_sign(sigma, m.labels, set(x)).apply_left(ppt(m, set(x)))
        best = min(best, rank_width(FStarGraph.from_matrix(piv), sigma))
    return best
