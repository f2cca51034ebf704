"""Finite metric spaces with exact rational distances.

Betweenness is the exact relation [a b c]: the three points are distinct and
dist(a,b) + dist(b,c) = dist(a,c).  Every betweenness decision here is an
equality of Fractions; floating point would silently corrupt line families,
so no float ever enters a comparison.

The line through distinct points u, v collects every p with [p u v], [u p v]
or [u v p], together with u and v themselves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bitsets import mask_of, pair_list
from .errors import (
    Asymmetric,
    Disconnected,
    NegativeDistance,
    NonzeroDiagonal,
    NotSquare,
    SamePoint,
    TriangleViolation,
    ZeroOffDiagonal,
)
from .hypergraph import Hypergraph, LineFamily


def parse_rational(value) -> Fraction:
    """Accept int, Fraction, or a 'p/q' string; always exact."""
    if isinstance(value, bool):
        raise ValueError("booleans are not distances")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot parse {value!r} as an exact rational")


def format_rational(value: Fraction):
    """Ints stay ints; proper fractions become 'p/q' strings."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class MetricSpace:
    """Validated finite metric space; construct through validate_metric."""

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]
    _hypergraph_cache: list = field(default_factory=list, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def as_hypergraph(self) -> Hypergraph:
        """The 3-uniform hypergraph of all betweenness triples."""
        if not self._hypergraph_cache:
            masks = tuple(mask_of(t) for t in betweenness_set(self))
            self._hypergraph_cache.append(Hypergraph(self.n, masks, self.labels))
        return self._hypergraph_cache[0]


def validate_metric(matrix: Sequence[Sequence], labels: Sequence[str] | None = None) -> MetricSpace:
    """Parse a distance table and enforce all metric axioms exactly."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NotSquare("distance matrix is not square")
    d = [[parse_rational(x) for x in row] for row in matrix]
    for i in range(n):
        if d[i][i] != 0:
            raise NonzeroDiagonal(i)
        for j in range(i + 1, n):
            if d[i][j] != d[j][i]:
                raise Asymmetric(i, j)
            if d[i][j] < 0:
                raise NegativeDistance(i, j)
            if d[i][j] == 0:
                raise ZeroOffDiagonal(i, j)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if i != j and j != k and i != k and d[i][k] > d[i][j] + d[j][k]:
                    raise TriangleViolation(i, j, k)
    if labels is None:
        labels = [f"p{i}" for i in range(n)]
    if len(labels) != n:
        raise ValueError("label count does not match matrix size")
    return MetricSpace(tuple(labels), tuple(tuple(row) for row in d))


def betweenness_set(space: MetricSpace) -> dict[tuple[int, int, int], int]:
    """Triples {a,b,c} admitting a betweenness ordering, mapped to the middle.

    At most one of the three points can be the middle: two simultaneous
    equalities would force a zero distance between distinct points.  That
    uniqueness is asserted here rather than assumed.
    """
    d = space.dist
    out: dict[tuple[int, int, int], int] = {}
    for a, b, c in combinations(range(space.n), 3):
        middles = []
        if d[a][b] + d[b][c] == d[a][c]:
            middles.append(b)
        if d[b][a] + d[a][c] == d[b][c]:
            middles.append(a)
        if d[a][c] + d[c][b] == d[a][b]:
            middles.append(c)
        assert len(middles) <= 1, f"two middles in triple {(a, b, c)}"
        if middles:
            out[(a, b, c)] = middles[0]
    return out


def line_mask(space: MetricSpace, u: int, v: int) -> int:
    if u == v:
        raise SamePoint(f"line through identical points {u}")
    d = space.dist
    duv = d[u][v]
    m = (1 << u) | (1 << v)
    for p in range(space.n):
        if p == u or p == v:
            continue
        if (
            d[p][u] + duv == d[p][v]      # [p u v]
            or d[u][p] + d[p][v] == duv   # [u p v]
            or duv + d[v][p] == d[u][p]   # [u v p]
        ):
            m |= 1 << p
    return m


def line(space: MetricSpace, u: int, v: int) -> frozenset[int]:
    """The line through u and v under exact metric betweenness."""
    mask = line_mask(space, u, v)
    return frozenset(i for i in range(space.n) if mask >> i & 1)


def all_lines(space: MetricSpace) -> LineFamily:
    """Deduplicated family of lines over all unordered pairs."""
    if space.n < 2:
        raise ValueError("need at least 2 points to have lines")
    return LineFamily(
        space.n, frozenset(line_mask(space, u, v) for u, v in pair_list(space.n))
    )


def graph_metric(adjacency: Sequence[Sequence], labels: Sequence[str] | None = None) -> MetricSpace:
    """Shortest-path metric of a connected simple undirected graph."""
    n = len(adjacency)
    if any(len(row) != n for row in adjacency):
        raise NotSquare("adjacency matrix is not square")
    adj = [[bool(x) for x in row] for row in adjacency]
    for i in range(n):
        if adj[i][i]:
            raise ValueError(f"self-loop at vertex {i}")
        for j in range(n):
            if adj[i][j] != adj[j][i]:
                raise ValueError(f"adjacency not symmetric at ({i},{j})")
    dist = [[None] * n for _ in range(n)]
    for src in range(n):
        dist[src][src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in range(n):
                if adj[x][y] and dist[src][y] is None:
                    dist[src][y] = dist[src][x] + 1
                    queue.append(y)
        if any(dist[src][y] is None for y in range(n)):
            raise Disconnected(f"no path from vertex {src} to some vertex")
    matrix = [[Fraction(dist[i][j]) for j in range(n)] for i in range(n)]
    if labels is None:
        labels = [f"p{i}" for i in range(n)]
    return MetricSpace(tuple(labels), tuple(tuple(row) for row in matrix))
