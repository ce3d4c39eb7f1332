"""Directed multigraphs, the line-digraph operator, and structural queries.

The :class:`Digraph` type is the substrate for everything else in the
package.  Vertices are integers ``0..n-1``; arcs are an ordered list of
``(tail, head)`` pairs forming a multiset (loops and parallel arcs are
allowed).  Arc order is normative: arc ``i`` of ``G`` becomes vertex ``i``
of ``L(G)``, which keeps labels and sequences bit-reproducible.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field

from .errors import (
    DuplicateLabel,
    IndexOutOfRange,
    LabelCountMismatch,
    NotAcyclic,
    ResourceLimit,
)

DEFAULT_VERTEX_CAP = 10**7


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    name: str | None = None

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, v in self.arcs:
            deg[v] += 1
        return deg

    def out_neighbors(self) -> list[list[int]]:
        """Adjacency lists, with parallel arcs collapsed."""
        seen: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            seen[u].add(v)
        return [sorted(s) for s in seen]

    def label_of(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]


@dataclass(frozen=True)
class SccDecomposition:
    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    is_trivial: tuple[bool, ...]
    is_directed_cycle: tuple[bool, ...]

    def has_nontrivial(self) -> bool:
        return any(not t for t in self.is_trivial)

    def nontrivial_all_cycles(self) -> bool:
        return all(
            t or c for t, c in zip(self.is_trivial, self.is_directed_cycle)
        )


def build(
    n: int,
    arcs,
    labels=None,
    name: str | None = None,
) -> Digraph:
    """Validated constructor: checks index ranges and label distinctness."""
    arcs = tuple((int(u), int(v)) for u, v in arcs)
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc ({u},{v}) out of range for n={n}")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise LabelCountMismatch(f"{len(labels)} labels for {n} vertices")
        if len(set(labels)) != n:
            raise DuplicateLabel("vertex labels must be pairwise distinct")
    return Digraph(n=n, arcs=arcs, labels=labels, name=name)


def _line_labels(g: Digraph) -> tuple[str, ...] | None:
    """Labels of L(g): overlap words when labels encode a shift digraph,
    a tail|head join otherwise, or None if either would collide."""
    if g.labels is None:
        return None
    lengths = {len(s) for s in g.labels}
    overlap = False
    if len(lengths) == 1:
        ell = lengths.pop()
        overlap = all(
            g.labels[v][: ell - 1] == g.labels[u][1:] if ell > 1 else True
            for u, v in g.arcs
        )
    if overlap:
        new = tuple(g.labels[u] + g.labels[v][-1] for u, v in g.arcs)
    else:
        new = tuple(f"{g.labels[u]}|{g.labels[v]}" for u, v in g.arcs)
    if len(set(new)) != len(new):
        return None
    return new


def line(g: Digraph) -> Digraph:
    """The line digraph L(g): one vertex per arc of g (in arc order)."""
    arcs_by_tail: dict[int, list[int]] = {}
    for j, (w, _) in enumerate(g.arcs):
        arcs_by_tail.setdefault(w, []).append(j)
    new_arcs = []
    for i, (_, v) in enumerate(g.arcs):
        for j in arcs_by_tail.get(v, ()):
            new_arcs.append((i, j))
    return Digraph(
        n=g.m,
        arcs=tuple(new_arcs),
        labels=_line_labels(g),
        name=f"L({g.name})" if g.name else None,
    )


def line_iterate(
    g: Digraph, k: int, cap: int = DEFAULT_VERTEX_CAP
) -> tuple[Digraph, list[int]]:
    """Return L^k(g) and the orders n_0..n_k of every iterate."""
    if k < 0:
        raise ValueError("k must be >= 0")
    orders = [g.n]
    cur = g
    for _ in range(k):
        if cur.m > cap:
            raise ResourceLimit(f"next iterate would have {cur.m} > {cap} vertices")
        cur = line(cur)
        orders.append(cur.n)
    return cur, orders


def converse(g: Digraph) -> Digraph:
    return Digraph(
        n=g.n,
        arcs=tuple((v, u) for u, v in g.arcs),
        labels=g.labels,
        name=f"converse({g.name})" if g.name else None,
    )


def scc(g: Digraph) -> SccDecomposition:
    """Tarjan strongly-connected components (iterative), in a deterministic
    order, with per-component cycle/triviality flags."""
    n = g.n
    adj = g.out_neighbors()
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    components: list[tuple[int, ...]] = []
    counter = itertools.count()

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = next(counter)
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                cid = len(components)
                for w in comp:
                    comp_of[w] = cid
                components.append(tuple(sorted(comp)))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    loops_at = {u for u, v in g.arcs if u == v}
    is_trivial = []
    is_cycle = []
    for comp in components:
        members = set(comp)
        internal = [(u, v) for u, v in g.arcs if u in members and v in members]
        trivial = len(comp) == 1 and comp[0] not in loops_at
        indeg = Counter(v for _, v in internal)
        outdeg = Counter(u for u, _ in internal)
        cycle = (
            not trivial
            and len(internal) == len(comp)
            and all(indeg[w] == 1 and outdeg[w] == 1 for w in comp)
        )
        is_trivial.append(trivial)
        is_cycle.append(cycle)
    return SccDecomposition(
        component_of=tuple(comp_of),
        components=tuple(components),
        is_trivial=tuple(is_trivial),
        is_directed_cycle=tuple(is_cycle),
    )


def is_acyclic(g: Digraph) -> bool:
    d = scc(g)
    return not d.has_nontrivial()


def longest_path_length(g: Digraph) -> int:
    """Maximum number of arcs on a directed path; g must be acyclic."""
    if not is_acyclic(g):
        raise NotAcyclic("digraph has a directed cycle or loop")
    indeg = g.in_degrees()
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.arcs:
        adj[u].append(v)
    order = deque(v for v in range(g.n) if indeg[v] == 0)
    dist = [0] * g.n
    best = 0
    while order:
        u = order.popleft()
        for v in adj[u]:
            if dist[u] + 1 > dist[v]:
                dist[v] = dist[u] + 1
                best = max(best, dist[v])
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    return best


def induced_subgraph(g: Digraph, keep) -> Digraph:
    """Induced subdigraph on the given vertex set, preserving arc order."""
    keep = sorted(set(keep))
    remap = {v: i for i, v in enumerate(keep)}
    kset = set(keep)
    arcs = tuple(
        (remap[u], remap[v]) for u, v in g.arcs if u in kset and v in kset
    )
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in keep)
    return Digraph(n=len(keep), arcs=arcs, labels=labels, name=g.name)


def fingerprint(g: Digraph):
    """Cheap isomorphism invariant: order, size, degree-pair multiset, and
    SCC size/cycle profile."""
    outd = g.out_degrees()
    ind = g.in_degrees()
    d = scc(g)
    profile = tuple(
        sorted(
            (len(c), cyc)
            for c, cyc in zip(d.components, d.is_directed_cycle)
        )
    )
    return (
        g.n,
        g.m,
        tuple(sorted(zip(outd, ind))),
        profile,
    )


ISO_EXHAUSTIVE_LIMIT = 8


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    """Exact (exhaustive) isomorphism test for n <= 8; on larger digraphs
    falls back to fingerprint equality, which can give false positives."""
    if g.n != h.n or g.m != h.m:
        return False
    if fingerprint(g) != fingerprint(h):
        return False
    if g.n > ISO_EXHAUSTIVE_LIMIT:
        return True
    target = Counter(h.arcs)
    g_deg = sorted(zip(g.out_degrees(), g.in_degrees(), range(g.n)))
    h_deg = sorted(zip(h.out_degrees(), h.in_degrees(), range(h.n)))
    # only consider maps preserving the (out, in) degree pair
    groups: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    for od, ind, v in g_deg:
        groups.setdefault((od, ind), ([], []))[0].append(v)
    for od, ind, v in h_deg:
        if (od, ind) not in groups:
            return False
        groups[(od, ind)][1].append(v)
    keys = list(groups)
    for perms in itertools.product(
        *(itertools.permutations(groups[k][1]) for k in keys)
    ):
        mapping = [0] * g.n
        for k, perm in zip(keys, perms):
            for src, dst in zip(groups[k][0], perm):
                mapping[src] = dst
        mapped = Counter((mapping[u], mapping[v]) for u, v in g.arcs)
        if mapped == target:
            return True
    return False


def to_text(g: Digraph) -> str:
    """Serialize to the plain-text interchange format (LF line endings)."""
    lines = [f"digraph {g.n} {g.m}"]
    for u, v in g.arcs:
        lines.append(f"{u} {v}")
    if g.labels is not None:
        for i, s in enumerate(g.labels):
            lines.append(f"label {i} {s}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    """Parse the plain-text interchange format; '#' lines are comments."""
    rows = [
        ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty digraph document")
    head = rows[0].split()
    if len(head) != 3 or head[0] != "digraph":
        raise ValueError(f"bad header line: {rows[0]!r}")
    n, m = int(head[1]), int(head[2])
    arcs = []
    for ln in rows[1 : 1 + m]:
        t, h = ln.split()
        arcs.append((int(t), int(h)))
    if len(arcs) != m:
        raise ValueError(f"expected {m} arcs, found {len(arcs)}")
    labels: list[str] | None = None
    rest = rows[1 + m :]
    if rest:
        labels = [""] * n
        seen = set()
        for ln in rest:
            parts = ln.split(maxsplit=2)
            if len(parts) != 3 or parts[0] != "label":
                raise ValueError(f"bad label line: {ln!r}")
            idx = int(parts[1])
            labels[idx] = parts[2]
            seen.add(idx)
        if len(seen) != n:
            raise ValueError("label lines must cover every vertex")
    return build(n, arcs, labels)
