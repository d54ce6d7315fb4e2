"""Neighborhood computation over covering spaces.

The fuzzy gamma-neighborhood of x is the pointwise minimum of all covering
members whose degree at x reaches gamma; the covering condition guarantees at
least one qualifying member, so the neighborhood always exists and keeps
degree >= gamma at x itself.  Tables precompute one row per object plus its
sigma-count; operators never recompute neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import MICRO
from .model import ApproximationSpace, FuzzySet, StructuralError


@dataclass(frozen=True)
class NeighborhoodTable:
    """Per-object neighborhoods and sigma-counts for one covering."""

    space: ApproximationSpace
    rows: tuple[FuzzySet, ...]
    sigma: tuple[int, ...]

    @property
    def universe(self):
        return self.space.universe

    def row(self, name: str) -> FuzzySet:
        return self.rows[self.universe.index(name)]


def qualifying_members(space: ApproximationSpace, index: int) -> tuple[str, ...]:
    """Names of covering members whose degree at the object reaches gamma."""
    c = space.covering
    return tuple(n for n, s in c.members if s.memberships[index] >= c.gamma)


def fuzzy_gamma_neighborhood(space: ApproximationSpace, name: str) -> FuzzySet:
    """Pointwise min of all members with degree >= gamma at the object."""
    index = space.universe.index(name)
    gamma = space.covering.gamma
    vectors = [
        s.memberships
        for s in space.covering.member_sets
        if s.memberships[index] >= gamma
    ]
    # the covering condition guarantees vectors is non-empty
    return FuzzySet(space.universe, tuple(min(col) for col in zip(*vectors)))


def crisp_neighborhood(space: ApproximationSpace, name: str) -> FuzzySet:
    """Intersection of all 0/1 members containing the object."""
    if not space.covering.is_crisp():
        raise StructuralError("crisp neighborhoods need a 0/1-valued covering")
    index = space.universe.index(name)
    vectors = [
        s.memberships
        for s in space.covering.member_sets
        if s.memberships[index] == MICRO
    ]
    return FuzzySet(space.universe, tuple(min(col) for col in zip(*vectors)))


def build_table(space: ApproximationSpace) -> NeighborhoodTable:
    rows = tuple(
        fuzzy_gamma_neighborhood(space, name) for name in space.universe.objects
    )
    sigma = tuple(r.sigma_count() for r in rows)
    return NeighborhoodTable(space, rows, sigma)
