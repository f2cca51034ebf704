"""Metric spaces, betweenness, and metric lines."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from linespace import errors
from linespace.constructions import pentagon
from linespace.hypergraph import all_lines_hg
from linespace.metric import (
    all_lines,
    betweenness_set,
    graph_metric,
    line,
    validate_metric,
)


def cycle_adjacency(n):
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        adj[i][(i + 1) % n] = adj[(i + 1) % n][i] = 1
    return adj


def test_validate_two_point_space():
    s = validate_metric([[0, 1], [1, 0]])
    assert s.n == 2
    assert s.d(0, 1) == Fraction(1)


def test_validate_parses_fraction_strings():
    s = validate_metric([[0, "1/2"], ["1/2", 0]])
    assert s.d(1, 0) == Fraction(1, 2)


def test_validate_rejects_triangle_violation():
    with pytest.raises(errors.TriangleViolation) as exc:
        validate_metric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert len(exc.value.indices) == 3


def test_validate_rejects_asymmetry():
    with pytest.raises(errors.Asymmetric):
        validate_metric([[0, 1], [2, 0]])


def test_validate_rejects_zero_off_diagonal():
    with pytest.raises(errors.ZeroOffDiagonal):
        validate_metric([[0, 0], [0, 0]])


def test_validate_rejects_negative():
    with pytest.raises(errors.NegativeDistance):
        validate_metric([[0, -1], [-1, 0]])


def test_validate_rejects_nonzero_diagonal():
    with pytest.raises(errors.NonzeroDiagonal):
        validate_metric([[1, 1], [1, 0]])


def test_validate_rejects_non_square():
    with pytest.raises(errors.NotSquare):
        validate_metric([[0, 1]])


def test_pentagon_is_valid_and_matches_cycle_metric():
    s = pentagon()
    c5 = graph_metric(cycle_adjacency(5))
    assert s.dist == c5.dist


def test_betweenness_pentagon():
    s = pentagon()
    b = betweenness_set(s)
    # five consecutive triples around the cycle, middles are the centers
    assert b[(1, 2, 3)] == 2
    assert len(b) == 5
    for (a, m, c), mid in b.items():
        assert mid in (a, m, c)


def test_betweenness_two_point_space_empty():
    s = validate_metric([[0, 1], [1, 0]])
    assert betweenness_set(s) == {}


def test_line_examples_pentagon():
    s = pentagon()
    assert line(s, 1, 3) == {1, 2, 3}
    assert line(s, 2, 3) == {1, 2, 3, 4}
    # one line properly contained in another
    assert line(s, 1, 3) < line(s, 2, 3)


def test_line_two_point_space():
    s = validate_metric([[0, 1], [1, 0]])
    assert line(s, 0, 1) == {0, 1}


def test_line_same_point_rejected():
    s = pentagon()
    with pytest.raises(errors.SamePoint):
        line(s, 2, 2)


def test_all_lines_pentagon_golden():
    fam = all_lines(pentagon())
    assert fam.count == 10
    assert fam.max_size == 4
    assert not fam.has_universal_line
    sets = {tuple(sorted(t)) for t in fam.sets()}
    assert (1, 2, 3) in sets and (1, 2, 3, 4) in sets


def test_all_lines_three_collinear_universal():
    s = validate_metric([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    fam = all_lines(s)
    assert fam.count == 1
    assert fam.has_universal_line


def test_graph_metric_path_and_k4():
    path3 = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    s = graph_metric(path3)
    assert s.d(0, 2) == 2
    k4 = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
    assert betweenness_set(graph_metric(k4)) == {}


def test_graph_metric_disconnected():
    with pytest.raises(errors.Disconnected):
        graph_metric([[0, 1, 0], [1, 0, 0], [0, 0, 0]])


def test_metric_lines_match_betweenness_hypergraph_lines():
    # the metric-line family and the hypergraph-line family of the
    # betweenness triples must agree exactly
    rng = random.Random(1007)
    for _ in range(80):
        n = rng.randint(2, 6)
        matrix = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                matrix[i][j] = matrix[j][i] = rng.choice([1, 2])
        s = validate_metric(matrix)
        assert all_lines(s).masks == all_lines_hg(s.as_hypergraph()).family.masks


def test_at_most_one_middle_random_graph_metrics():
    rng = random.Random(4242)
    produced = 0
    while produced < 60:
        n = rng.randint(3, 6)
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                adj[i][j] = adj[j][i] = int(rng.random() < 0.55)
        try:
            s = graph_metric(adj)
        except errors.Disconnected:
            continue
        produced += 1
        betweenness_set(s)  # middle uniqueness asserted internally
        for u in range(n):
            for v in range(u + 1, n):
                assert {u, v} <= line(s, u, v)
