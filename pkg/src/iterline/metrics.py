"""Inner metric parameters: distances, eccentricities, diameter/radii,
mean inner distance, and diameter sequences under line iteration.

All distances are exact BFS distances; "inner" means the maxima range only
over ordered pairs at finite distance.  A vertex that reaches (resp. is
reached by) nothing beyond itself has inner out- (resp. in-) eccentricity 0.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .digraph import DEFAULT_VERTEX_CAP, Digraph, line, longest_path_length, scc
from .errors import EmptyDigraph, ResourceLimit


@dataclass(frozen=True)
class DistanceTable:
    n: int
    entries: tuple[tuple[int | None, ...], ...]  # None marks "unreachable"

    def __getitem__(self, pair):
        u, v = pair
        return self.entries[u][v]


def _bfs_row(adj: list[list[int]], src: int, n: int) -> list[int | None]:
    row: list[int | None] = [None] * n
    row[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        du = row[u]
        for v in adj[u]:
            if row[v] is None:
                row[v] = du + 1
                q.append(v)
    return row


def iter_distance_rows(g: Digraph):
    """Yield BFS rows one source at a time (memory-bounded variant)."""
    adj = g.out_neighbors()
    for src in range(g.n):
        yield _bfs_row(adj, src, g.n)


def distances(g: Digraph) -> DistanceTable:
    return DistanceTable(
        n=g.n, entries=tuple(tuple(row) for row in iter_distance_rows(g))
    )


@dataclass(frozen=True)
class MetricReport:
    inner_diameter: int
    inner_out_radius: int
    inner_in_radius: int
    out_eccentricities: tuple[int, ...]
    in_eccentricities: tuple[int, ...]
    mean_inner_distance: Fraction
    strongly_connected: bool
    is_directed_cycle: bool
    standard_diameter: int | None  # None marks "unreachable"

    def to_json(self) -> str:
        md = self.mean_inner_distance
        return json.dumps(
            {
                "inner_diameter": self.inner_diameter,
                "inner_out_radius": self.inner_out_radius,
                "inner_in_radius": self.inner_in_radius,
                "mean_inner_distance": f"{md.numerator}/{md.denominator}",
                "strongly_connected": self.strongly_connected,
                "is_directed_cycle": self.is_directed_cycle,
                "standard_diameter": self.standard_diameter,
            }
        )


def _is_directed_cycle(g: Digraph, strongly: bool) -> bool:
    if g.n == 0 or g.m != g.n or not strongly:
        return False
    return all(d == 1 for d in g.out_degrees()) and all(
        d == 1 for d in g.in_degrees()
    )


def metric_report(g: Digraph, include_diagonal: bool = True) -> MetricReport:
    if g.n == 0:
        raise EmptyDigraph("metric report of the empty digraph is undefined")
    ecc_out = [0] * g.n
    ecc_in = [0] * g.n
    total = 0
    finite_pairs = 0
    all_finite = True
    for u, row in enumerate(iter_distance_rows(g)):
        for v, d in enumerate(row):
            if d is None:
                all_finite = False
                continue
            if d > ecc_out[u]:
                ecc_out[u] = d
            if d > ecc_in[v]:
                ecc_in[v] = d
            if include_diagonal or u != v:
                total += d
                finite_pairs += 1
    inner_d = max(ecc_out, default=0)
    strongly = all_finite
    mean = Fraction(total, finite_pairs) if finite_pairs else Fraction(0)
    return MetricReport(
        inner_diameter=inner_d,
        inner_out_radius=min(ecc_out),
        inner_in_radius=min(ecc_in),
        out_eccentricities=tuple(ecc_out),
        in_eccentricities=tuple(ecc_in),
        mean_inner_distance=mean,
        strongly_connected=strongly,
        is_directed_cycle=_is_directed_cycle(g, strongly),
        standard_diameter=inner_d if all_finite else None,
    )


def inner_diameter(g: Digraph) -> int:
    return metric_report(g).inner_diameter


def mean_inner_distance(g: Digraph, include_diagonal: bool = True) -> Fraction:
    return metric_report(g, include_diagonal=include_diagonal).mean_inner_distance


def inner_diameter_sequence(
    g: Digraph, K: int, cap: int = DEFAULT_VERTEX_CAP
) -> tuple[list[int], bool]:
    """Inner diameters d(L^0 g)..d(L^K g).

    Returns ``(terms, vanished)``; when an iterate becomes empty the list is
    truncated there and ``vanished`` is True.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    terms: list[int] = []
    cur = g
    for k in range(K + 1):
        if cur.n == 0:
            return terms, True
        terms.append(metric_report(cur).inner_diameter)
        if k == K:
            break
        if cur.m > cap:
            raise ResourceLimit(f"iterate would exceed {cap} vertices")
        cur = line(cur)
    return terms, False


class BehaviorKind(Enum):
    VANISHES = "vanishes"
    EVENTUALLY_PERIODIC = "eventually_periodic"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Behavior:
    kind: BehaviorKind
    vanish_index: int | None = None  # h with d(L^h g)=0 and L^{k}g empty for k>h

    def __str__(self) -> str:
        if self.kind is BehaviorKind.VANISHES:
            return f"vanishes_at({self.vanish_index})"
        return self.kind.value


def classify_behavior(g: Digraph) -> Behavior:
    """Long-run behavior of the inner-diameter / order sequences.

    Unbounded if some nontrivial strongly connected component is not a
    directed cycle; vanishing (at the longest-path length) if there is no
    nontrivial component at all; eventually periodic otherwise.
    """
    if g.n == 0:
        raise EmptyDigraph("cannot classify the empty digraph")
    d = scc(g)
    if not d.has_nontrivial():
        return Behavior(BehaviorKind.VANISHES, vanish_index=longest_path_length(g))
    if d.nontrivial_all_cycles():
        return Behavior(BehaviorKind.EVENTUALLY_PERIODIC)
    return Behavior(BehaviorKind.UNBOUNDED)


def detect_period(terms: list[int]) -> int | None:
    """Smallest p whose p-periodic suffix of ``terms`` spans >= 3p terms.

    Empirical only: a verdict about the computed prefix, never a proof.
    """
    n = len(terms)
    for p in range(1, n // 3 + 1):
        start = n - p
        for i in range(n - p - 1, -1, -1):
            if terms[i] != terms[i + p]:
                break
            start = i
        if n - start >= 3 * p:
            return p
    return None
