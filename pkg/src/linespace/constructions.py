"""Deterministic builders for the named example structures.

Every builder re-verifies the properties it is advertised to have and raises
SelfCheckFailed otherwise, so a successful return value is a certificate,
not just a data structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .bitsets import full_mask, mask_of, pair_list, popcount
from .closure import all_closure_lines, closure_mask
from .errors import BadParams, NoValidParams, OddP, SelfCheckFailed
from .hypergraph import Hypergraph, all_lines_hg, line_mask_hg
from .metric import MetricSpace, betweenness_set, line, validate_metric


def _check(cond: bool, message: str):
    if not cond:
        raise SelfCheckFailed(message)


# ---------------------------------------------------------------------------
# five-point cycle metric


def pentagon() -> MetricSpace:
    """Five points u,v,x,y,z around a cycle: adjacent distance 1, others 2.

    Demonstrates that one line can be a proper subset of another: the line
    through v and y is {v,x,y} while the line through x and y is {v,x,y,z}.
    """
    labels = ("u", "v", "x", "y", "z")
    n = 5
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                gap = min((i - j) % n, (j - i) % n)
                matrix[i][j] = 1 if gap == 1 else 2
    space = validate_metric(matrix, labels)
    _check(line(space, 1, 3) == frozenset({1, 2, 3}), "line(v,y) is not {v,x,y}")
    _check(line(space, 2, 3) == frozenset({1, 2, 3, 4}), "line(x,y) is not {v,x,y,z}")
    return space


# ---------------------------------------------------------------------------
# projective plane of order two


def fano() -> Hypergraph:
    """The Fano plane: vertices 0..6, edges {i, i+1 mod 7, i+3 mod 7}."""
    edges = [sorted({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]
    h = Hypergraph.from_edges(7, edges)
    _check(len(h.edge_masks) == 7 and h.is_3uniform, "Fano edge set malformed")
    for e, f in combinations(h.edge_masks, 2):
        _check(popcount(e & f) == 1, "two Fano edges do not meet in one vertex")
    for u, v in pair_list(7):
        covering = [e for e in h.edge_masks if e & (1 << u) and e & (1 << v)]
        _check(len(covering) == 1, f"pair ({u},{v}) not in exactly one edge")
    return h


# ---------------------------------------------------------------------------
# few lines from strings over a finite alphabet


def choose_strings(count: int, ell: int, a: int) -> list[tuple[int, ...]]:
    """Pick `count` distinct length-ell strings over alphabet 0..a-1 such that
    every position sees at least two different letters among the chosen strings.

    The all-0 and all-(a-1) strings already differ everywhere, so they are
    always included and the rest is filled in lexicographic order.
    """
    if not (2 <= count <= a**ell):
        raise BadParams(f"need 2 <= count <= a^ell, got count={count}, a^ell={a**ell}")
    lo = tuple([0] * ell)
    hi = tuple([a - 1] * ell)
    chosen = [lo, hi]
    for s in product(range(a), repeat=ell):
        if len(chosen) >= count:
            break
        if s != lo and s != hi:
            chosen.append(s)
    chosen = chosen[:count]
    for i in range(ell):
        _check(
            len({s[i] for s in chosen}) >= 2,
            f"all chosen strings agree at position {i}",
        )
    return chosen


def string_construction(n: int, ell: int, a: int) -> Hypergraph:
    """Hypergraph on position vertices P plus string vertices S with few lines.

    P = {0..ell-1}; S holds n-ell distinct strings of length ell over an
    a-letter alphabet.  Edges are P, S, and for each position i and letter x
    the set {i} + {strings with letter x at position i}.  Every line is then
    P, one of those letter classes, or S plus a proper subset of P, so there
    are at most 2^ell + ell*a distinct lines and none is universal.
    """
    if not (2 <= n - ell <= a**ell):
        raise BadParams(f"need 2 <= n - ell <= a^ell, got n={n}, ell={ell}, a={a}")
    if ell < 1 or a < 2:
        raise BadParams("need ell >= 1 and a >= 2")
    strings = choose_strings(n - ell, ell, a)
    s_index = {s: ell + i for i, s in enumerate(strings)}
    p_mask = full_mask(ell)
    s_mask = full_mask(n) & ~p_mask

    edges = []
    if ell >= 2:
        edges.append(range(ell))
    edges.append(range(ell, n))
    letter_class: dict[tuple[int, int], int] = {}
    for i in range(ell):
        for x in range(a):
            members = [s_index[s] for s in strings if s[i] == x]
            letter_class[(i, x)] = (1 << i) | mask_of(members)
            if members:
                edges.append([i] + members)
    if a <= 10:
        fmt = lambda s: "".join(str(c) for c in s)
    else:
        fmt = lambda s: ".".join(str(c) for c in s)
    labels = [f"i{i + 1}" for i in range(ell)] + [f"s{fmt(s)}" for s in strings]
    h = Hypergraph.from_edges(n, edges, labels)

    # Line anatomy: P-P pairs trace out P, P-S pairs a letter class, and S-S
    # pairs S plus the positions where the two strings agree.
    for u, v in pair_list(n):
        lm = line_mask_hg(h, u, v)
        if u < ell and v < ell:
            _check(lm == p_mask, f"line through positions ({u},{v}) is not P")
        elif u < ell <= v:
            x = strings[v - ell][u]
            _check(lm == letter_class[(u, x)], f"line ({u},{v}) is not its letter class")
        else:
            agree = mask_of(
                i for i in range(ell) if strings[u - ell][i] == strings[v - ell][i]
            )
            _check(agree != p_mask, "two distinct strings agree everywhere")
            _check(lm == (s_mask | agree), f"line ({u},{v}) is not S + agreement set")
    report = all_lines_hg(h)
    _check(not report.has_universal_line, "universal line in string construction")
    _check(
        report.count <= 2**ell + ell * a,
        f"line count {report.count} exceeds 2^ell + ell*a",
    )
    return h


def auto_string_params(n: int) -> tuple[int, int]:
    """Parameter recipe for string_construction: ell ~ sqrt(ln n / ln beta),
    a = floor(gamma^ell) with beta = 3/2, gamma = 19/10.

    The float math only proposes the pair; the precondition
    2 <= n - ell <= a^ell is re-validated in exact integer arithmetic.
    """
    if n < 3:
        raise NoValidParams(f"no valid parameters for n={n}")
    beta = 1.5
    ell = math.ceil(math.sqrt(math.log(n) / math.log(beta)))
    gamma_pow = Fraction(19, 10) ** ell
    a = gamma_pow.numerator // gamma_pow.denominator
    if a < 2 or not (2 <= n - ell <= a**ell):
        raise NoValidParams(f"recipe gives invalid (ell={ell}, a={a}) for n={n}")
    return ell, a


# ---------------------------------------------------------------------------
# metric space with exactly seven closure-lines


def seven_closure_space(n: int) -> MetricSpace:
    """Taxicab metric on n >= 6 planar points with exactly 7 closure-lines.

    Points: x1=(1,3), x2=(2,4), x3=(3,1), x4=(4,2), and xk=(k, n+5-k) for
    k >= 5.  The betweenness triples are {x1,x2,xk} and {x3,x4,xk} for every
    tail point xk, plus all triples within the tail, which pins the closure
    of every pair down to one of seven sets, each missing at least 2 points.
    """
    if n < 6:
        raise BadParams(f"need n >= 6, got {n}")
    coords = [(1, 3), (2, 4), (3, 1), (4, 2)]
    coords += [(k, n + 5 - k) for k in range(5, n + 1)]
    matrix = [
        [abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in coords] for p in coords
    ]
    labels = [f"x{i + 1}" for i in range(n)]
    space = validate_metric(matrix, labels)

    expected = {(0, 1, k) for k in range(4, n)}
    expected |= {(2, 3, k) for k in range(4, n)}
    expected |= set(combinations(range(4, n), 3))
    _check(
        set(betweenness_set(space)) == expected,
        "betweenness triples differ from the advertised pattern",
    )

    h = space.as_hypergraph()
    fm = full_mask(n)
    tail = fm & ~mask_of(range(4))
    no34 = fm & ~mask_of((2, 3))
    no12 = fm & ~mask_of((0, 1))
    _check(closure_mask(h, mask_of((0, 1))) == no34, "closure of {x1,x2} wrong")
    _check(closure_mask(h, mask_of((2, 3))) == no12, "closure of {x3,x4} wrong")
    for i, j in combinations(range(4, n), 2):
        _check(closure_mask(h, mask_of((i, j))) == tail, "tail pair closure wrong")
    for i in (0, 1):
        for j in (2, 3):
            _check(
                closure_mask(h, mask_of((i, j))) == mask_of((i, j)),
                "cross pair is not its own closure",
            )
        for j in range(4, n):
            _check(closure_mask(h, mask_of((i, j))) == no34, "closure wrong")
    for i in (2, 3):
        for j in range(4, n):
            _check(closure_mask(h, mask_of((i, j))) == no12, "closure wrong")

    fam = all_closure_lines(space)
    _check(fam.count == 7, f"expected 7 closure-lines, got {fam.count}")
    _check(fam.max_size <= n - 2, "a closure-line has more than n-2 points")
    return space


# ---------------------------------------------------------------------------
# one-factorization of the complete graph


@dataclass(frozen=True)
class OneFactorization:
    """Partition of the edges of K_p (p even) into p-1 perfect matchings.

    phi maps each unordered pair to its color in 0..p-2; for every vertex i
    and color w there is exactly one j with phi({i,j}) = w.
    """

    p: int
    phi: dict[tuple[int, int], int]

    def matchings(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.p - 1)]
        for pair, color in self.phi.items():
            out[color].append(pair)
        return [sorted(m) for m in out]

    def verify(self):
        for i in range(self.p):
            for w in range(self.p - 1):
                partners = [
                    j
                    for j in range(self.p)
                    if j != i and self.phi[tuple(sorted((i, j)))] == w
                ]
                _check(
                    len(partners) == 1,
                    f"vertex {i} has {len(partners)} partners of color {w}",
                )


def round_robin_factorization(p: int) -> OneFactorization:
    """Circle-method 1-factorization of K_p: vertex p-1 sits in the center,
    the others rotate; round r matches r with the center and (r+i) with (r-i)
    modulo p-1."""
    if p < 2 or p % 2:
        raise OddP(f"need even p >= 2, got {p}")
    phi: dict[tuple[int, int], int] = {}
    m = p - 1
    for r in range(m):
        phi[tuple(sorted((p - 1, r)))] = r
        for i in range(1, p // 2):
            a = (r + i) % m
            b = (r - i) % m
            phi[tuple(sorted((a, b)))] = r
    fact = OneFactorization(p, phi)
    _check(len(phi) == p * (p - 1) // 2, "factorization does not cover all pairs")
    fact.verify()
    return fact


# ---------------------------------------------------------------------------
# recursive partition construction with few closure-lines


def partition_construction(n: int, k: int) -> Hypergraph:
    h, _ = _partition_with_prediction(n, k)
    return h


def predicted_closure_lines(n: int, k: int) -> frozenset[int]:
    """Closure-line family the construction is guaranteed to produce (as masks)."""
    _, fam = _partition_with_prediction(n, k)
    return fam


def _partition_with_prediction(n: int, k: int) -> tuple[Hypergraph, frozenset[int]]:
    """Build the recursive construction and predict its closure-lines exactly.

    Vertices 0..p-2 form the head X0, the rest split into p parts V1..Vp of
    near-equal size.  Edges: a recursively built hypergraph on X0; all
    triples inside a part; and for u, v in different parts Vi, Vj the triple
    {u, v, phi(i,j)} where phi is a 1-factorization of K_p with colors
    identified with X0.  The closure-lines are then exactly the closure-lines
    of the head, the sets Vi + Vj + {phi(i,j)}, and the parts Vi, giving at
    most m(head) + C(p,2) + p of them, each of at most k vertices.
    """
    if k < 2 or n <= k:
        raise BadParams(f"need k >= 2 and n > k, got n={n}, k={k}")
    p = 2 * ((n + 1 + k - 1) // k)
    head = p - 1
    rest = n - head
    if rest < 2 * p:
        raise BadParams(
            f"parts would be too small (n={n}, k={k} gives p={p}); "
            f"the recursion needs every part to have at least 2 vertices"
        )
    sizes = [rest // p] * p
    for i in range(rest % p):
        sizes[i] += 1
    if 2 * max(sizes) > k - 1:
        raise BadParams(
            f"parts would be too large (n={n}, k={k} gives max part {max(sizes)})"
        )

    parts: list[list[int]] = []
    cursor = head
    for s in sizes:
        parts.append(list(range(cursor, cursor + s)))
        cursor += s
    part_masks = [mask_of(v) for v in parts]

    if head <= k:
        head_edges: list[list[int]] = [list(range(head))]
        head_family = frozenset({mask_of(range(head))})
    else:
        sub, head_family = _partition_with_prediction(head, k)
        head_edges = [list(e) for e in sub.edges]

    fact = round_robin_factorization(p)
    edges = list(head_edges)
    for (i, j), w in fact.phi.items():
        for u in parts[i]:
            for v in parts[j]:
                edges.append([u, v, w])
    for part in parts:
        for t in combinations(part, 3):
            edges.append(list(t))
    h = Hypergraph.from_edges(n, edges)

    expected = set(head_family)
    for (i, j), w in fact.phi.items():
        expected.add(part_masks[i] | part_masks[j] | (1 << w))
    for pm in part_masks:
        expected.add(pm)
    expected_frozen = frozenset(expected)

    fam = all_closure_lines(h)
    _check(
        fam.family.masks == expected_frozen,
        "closure-line family differs from the predicted three groups",
    )
    _check(fam.max_size <= k, f"a closure-line exceeds {k} vertices")
    _check(
        Fraction(fam.count) <= Fraction(12 * n * n, k * k),
        f"closure-line count {fam.count} exceeds 12 n^2/k^2",
    )
    return h, expected_frozen


# ---------------------------------------------------------------------------
# greedy packing


def greedy_packing(n: int, k: int) -> Hypergraph:
    """Greedy k-uniform packing: scan k-subsets lexicographically, keep those
    sharing at most one vertex with everything kept so far.

    In the result every line is either an edge or an uncovered pair, so the
    number of lines is exactly |H| + (C(n,2) - |H| * C(k,2)).
    """
    if not (n >= k >= 2):
        raise BadParams(f"need n >= k >= 2, got n={n}, k={k}")
    covered: set[tuple[int, int]] = set()
    edges: list[tuple[int, ...]] = []
    for cand in combinations(range(n), k):
        pairs = list(combinations(cand, 2))
        if any(pr in covered for pr in pairs):
            continue
        edges.append(cand)
        covered.update(pairs)
    h = Hypergraph.from_edges(n, edges)

    for e, f in combinations(h.edge_masks, 2):
        _check(popcount(e & f) <= 1, "two packing edges share 2+ vertices")
    expected = set(h.edge_masks)
    for u, v in pair_list(n):
        if (u, v) not in covered:
            expected.add((1 << u) | (1 << v))
    report = all_lines_hg(h)
    _check(
        report.family.masks == frozenset(expected),
        "lines are not exactly edges plus uncovered pairs",
    )
    formula = len(edges) + (n * (n - 1) // 2 - len(edges) * (k * (k - 1) // 2))
    _check(report.count == formula, f"line count {report.count} != formula {formula}")
    return h


# ---------------------------------------------------------------------------
# dispatch used by the CLI


KINDS = ("pentagon", "fano", "strings", "strings-auto", "seven-closure", "packing", "partition")


@dataclass(frozen=True)
class ConstructionSpec:
    """A construction kind plus its integer parameters, validated on build."""

    kind: str
    params: dict

    def build(self):
        kind, p = self.kind, self.params
        if kind == "pentagon":
            return pentagon()
        if kind == "fano":
            return fano()
        if kind == "strings":
            return string_construction(p["n"], p["ell"], p["a"])
        if kind == "strings-auto":
            ell, a = auto_string_params(p["n"])
            return string_construction(p["n"], ell, a)
        if kind == "seven-closure":
            return seven_closure_space(p["n"])
        if kind == "packing":
            return greedy_packing(p["n"], p["k"])
        if kind == "partition":
            return partition_construction(p["n"], p["k"])
        raise BadParams(f"unknown construction kind {kind!r}; choose from {KINDS}")
