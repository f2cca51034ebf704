"""Hypergraphs and their lines.

The line through two distinct vertices u, v of a hypergraph (X, H) is

    {u, v}  union  {p : some edge T in H contains u, v and p},

i.e. the pair itself plus everything that rides along inside an edge
containing the pair.  Restricting edges to triples loses nothing: replacing
H by all 3-element subsets of its edges leaves every line unchanged, so the
search module only ever enumerates 3-uniform hypergraphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .bitsets import full_mask, mask_of, pair_list, popcount, vertices_of
from .errors import SamePoint


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on vertices 0..n-1 with edges of size >= 2."""

    n: int
    edge_masks: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1 or self.n > 64:
            raise ValueError(f"vertex count {self.n} outside supported range 1..64")
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        if len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")
        fm = full_mask(self.n)
        for m in self.edge_masks:
            if m & ~fm:
                raise ValueError("edge contains a vertex outside the ground set")
            if popcount(m) < 2:
                raise ValueError("edges must have at least 2 vertices")
        object.__setattr__(self, "edge_masks", tuple(sorted(set(self.edge_masks))))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        labels: Sequence[str] | None = None,
    ) -> "Hypergraph":
        masks = tuple(mask_of(e) for e in edges)
        return cls(n, masks, tuple(labels) if labels else ())

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self.edge_masks)

    @property
    def is_3uniform(self) -> bool:
        return all(popcount(m) == 3 for m in self.edge_masks)


@dataclass(frozen=True)
class LineFamily:
    """Deduplicated family of lines over a ground set of size ground_size."""

    ground_size: int
    masks: frozenset[int]

    def __post_init__(self):
        for m in self.masks:
            if popcount(m) < 2:
                raise ValueError("a line must contain at least 2 vertices")

    @property
    def count(self) -> int:
        return len(self.masks)

    @property
    def max_size(self) -> int:
        return max((popcount(m) for m in self.masks), default=0)

    @property
    def has_universal_line(self) -> bool:
        return full_mask(self.ground_size) in self.masks

    def sets(self) -> list[tuple[int, ...]]:
        return sorted(vertices_of(m) for m in self.masks)


@dataclass(frozen=True)
class LineReport:
    """Line family of a hypergraph plus its headline statistics."""

    family: LineFamily
    count: int
    max_line_size: int
    has_universal_line: bool

    @classmethod
    def from_family(cls, family: LineFamily) -> "LineReport":
        return cls(
            family=family,
            count=family.count,
            max_line_size=family.max_size,
            has_universal_line=family.has_universal_line,
        )

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "max_line_size": self.max_line_size,
            "has_universal_line": self.has_universal_line,
            "lines": [list(s) for s in self.family.sets()],
        }


def line_mask_hg(h: Hypergraph, u: int, v: int) -> int:
    if u == v:
        raise SamePoint(f"line through identical vertices {u}")
    pair = (1 << u) | (1 << v)
    m = pair
    for e in h.edge_masks:
        if e & pair == pair:
            m |= e
    return m


def line_hg(h: Hypergraph, u: int, v: int) -> frozenset[int]:
    """Line through u and v: the pair plus co-members of edges containing both."""
    return frozenset(vertices_of(line_mask_hg(h, u, v)))


def reduce_to_3uniform(h: Hypergraph) -> Hypergraph:
    """All 3-element subsets of edges; preserves the line family exactly."""
    triples = set()
    for e in h.edges:
        for t in combinations(e, 3):
            triples.add(mask_of(t))
    return Hypergraph(h.n, tuple(triples), h.labels)


def all_lines_hg(h: Hypergraph) -> LineReport:
    """Deduplicated lines over all vertex pairs, with count/max/universality."""
    if h.n < 2:
        raise ValueError("need at least 2 vertices to have lines")
    masks = set()
    for u, v in pair_list(h.n):
        masks.add(line_mask_hg(h, u, v))
    return LineReport.from_family(LineFamily(h.n, frozenset(masks)))


@dataclass(frozen=True)
class ConjectureCheck:
    """Result of the at-least-n-lines-or-universal-line check."""

    n: int
    count: int
    has_universal_line: bool
    satisfies: bool
    family: LineFamily

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "count": self.count,
            "has_universal_line": self.has_universal_line,
            "satisfies": self.satisfies,
            "lines": [list(s) for s in self.family.sets()],
        }


def as_hypergraph(obj) -> Hypergraph:
    """Accept a Hypergraph directly or anything exposing .as_hypergraph()."""
    if isinstance(obj, Hypergraph):
        return obj
    conv = getattr(obj, "as_hypergraph", None)
    if conv is None:
        raise TypeError(f"cannot interpret {type(obj).__name__} as a hypergraph")
    return conv()


def check_debruijn_erdos(obj) -> ConjectureCheck:
    """Check whether a hypergraph or metric space has a universal line or >= n lines.

    Whether this holds for every finite metric space is an open question;
    this routine only ever certifies single instances.
    """
    h = as_hypergraph(obj)
    report = all_lines_hg(h)
    satisfies = report.has_universal_line or report.count >= h.n
    return ConjectureCheck(
        n=h.n,
        count=report.count,
        has_universal_line=report.has_universal_line,
        satisfies=satisfies,
        family=report.family,
    )


def property3_holds(family: LineFamily) -> bool:
    """For every ordered pair (u, v) some line contains u but not v.

    Guaranteed whenever no line is universal: then the per-vertex sets of
    incident lines are pairwise incomparable (an antichain).  Used as a
    hard assertion on every instance the search module visits.
    """
    n = family.ground_size
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if not any(m >> u & 1 and not m >> v & 1 for m in family.masks):
                return False
    return True
