"""Affine closure in hypergraphs, and closure-lines.

A vertex set T is affinely closed when every edge sharing at least two
vertices with T lies fully inside T.  The affine closure aff(S) is the
smallest closed superset of S; closure-lines are the closures of vertex
pairs.  For a metric space the operator acts on its betweenness hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitsets import full_mask, mask_of, pair_list, popcount, vertices_of
from .errors import TheoremViolated
from .hypergraph import Hypergraph, LineFamily, as_hypergraph
from .metric import MetricSpace


def is_affinely_closed(h: Hypergraph, t: Iterable[int]) -> bool:
    """True iff no edge meets t in >= 2 vertices while sticking out of t."""
    tm = mask_of(t)
    return _is_closed_mask(h, tm)


def _is_closed_mask(h: Hypergraph, tm: int) -> bool:
    for e in h.edge_masks:
        if popcount(e & tm) >= 2 and e & ~tm:
            return False
    return True


def closure_mask(h: Hypergraph, sm: int) -> int:
    # Absorb any edge meeting the current set twice; restart after growth.
    # Terminates in <= n rounds since the set only grows, and the limit is
    # order-independent because the closed supersets form an intersection-
    # closed family.
    grown = True
    while grown:
        grown = False
        for e in h.edge_masks:
            if popcount(e & sm) >= 2 and e & ~sm:
                sm |= e
                grown = True
    return sm


def affine_closure(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    """Smallest affinely closed superset of s, by fixed-point absorption."""
    sm = mask_of(s)
    if sm == 0:
        raise ValueError("affine closure of the empty set is not defined here")
    return frozenset(vertices_of(closure_mask(h, sm)))


@dataclass(frozen=True)
class ClosureLineFamily:
    """Deduplicated closures of all vertex pairs."""

    family: LineFamily
    count: int
    max_size: int

    @classmethod
    def from_family(cls, family: LineFamily) -> "ClosureLineFamily":
        return cls(family=family, count=family.count, max_size=family.max_size)

    @property
    def has_universal_line(self) -> bool:
        return self.family.has_universal_line

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "max_size": self.max_size,
            "has_universal_line": self.family.has_universal_line,
            "closure_lines": [list(s) for s in self.family.sets()],
        }


def all_closure_lines(obj) -> ClosureLineFamily:
    """Closure-lines of a hypergraph or of a metric space's betweenness hypergraph."""
    h = as_hypergraph(obj)
    if h.n < 2:
        raise ValueError("need at least 2 vertices to have closure-lines")
    masks = set()
    for u, v in pair_list(h.n):
        masks.add(closure_mask(h, (1 << u) | (1 << v)))
    return ClosureLineFamily.from_family(LineFamily(h.n, frozenset(masks)))


def closure_line_witness(h: Hypergraph) -> frozenset[int] | None:
    """A closure-line of size n or size 2 if one exists, else None.

    On arbitrary hypergraphs existence is not guaranteed; no theorem is
    claimed here, the witness is simply reported when found.
    """
    fm = full_mask(h.n)
    for u, v in pair_list(h.n):
        pm = (1 << u) | (1 << v)
        cm = closure_mask(h, pm)
        if cm == fm or cm == pm:
            return frozenset(vertices_of(cm))
    return None


def check_sylvester_gallai(space: MetricSpace) -> dict:
    """Find a universal or two-point closure-line of a finite metric space.

    One always exists for metric spaces, so coming up empty is reported as
    an implementation bug via TheoremViolated rather than as a finding.
    """
    witness = closure_line_witness(space.as_hypergraph())
    if witness is None:
        raise TheoremViolated(
            f"metric space on {space.n} points has no universal or two-point closure-line"
        )
    kind = "universal" if len(witness) == space.n else "two-point"
    return {"witness": tuple(sorted(witness)), "kind": kind}
