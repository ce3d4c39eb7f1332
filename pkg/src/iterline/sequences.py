"""Sequence production and cross-checking.

Order sequences of iterated line digraphs are computed by up to three
independent routes (direct iteration, walk counts on the adjacency matrix,
and the quotient-matrix recurrence) and must agree exactly; any mismatch is
a hard error.  A brute-force word-enumeration oracle grounds the
forbidden-subword pipeline.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .digraph import DEFAULT_VERTEX_CAP, Digraph, induced_subgraph, line_iterate
from .errors import (
    EnumerationCapExceeded,
    InsufficientTerms,
    MethodDisagreement,
    NoRecurrenceFound,
    ParamOutOfRange,
)
from .exactla import (
    LinearRecurrence,
    adjacency_matrix,
    coarsest_equitable_partition,
    minimal_polynomial,
    minimal_recurrence,
    recurrence_from_minpoly,
    walk_count,
)
from .families import de_bruijn
from .metrics import Behavior, classify_behavior, detect_period, inner_diameter_sequence

DEFAULT_ENUMERATION_CAP = 2**28

ALL_METHODS = ("direct", "walk", "recurrence")


@dataclass(frozen=True)
class ForbiddenWordSpec:
    sigma: int
    window: int  # maximum forbidden-word length; the De Bruijn word length
    forbidden: tuple[str, ...]

    def __post_init__(self):
        for w in self.forbidden:
            if not 1 <= len(w) <= self.window:
                raise ParamOutOfRange(f"forbidden word {w!r} longer than window")
            if any(not c.isalnum() or int(c, 36) >= self.sigma for c in w):
                raise ParamOutOfRange(f"word {w!r} uses symbols >= sigma={self.sigma}")

    def describe(self) -> str:
        return f"B({self.sigma},{self.window}) avoiding {{{','.join(self.forbidden)}}}"


@dataclass(frozen=True)
class SequenceReport:
    source: str
    terms: tuple[int, ...]
    methods: tuple[str, ...]
    recurrence: LinearRecurrence | None
    behavior: Behavior
    period: int | None
    oeis_matches: tuple = ()
    vanished: bool = False

    def to_json(self) -> str:
        rec = None
        if self.recurrence is not None:
            rec = {
                "order": self.recurrence.order,
                "coeffs": [str(c) for c in self.recurrence.coeffs],
                "start": self.recurrence.start,
            }
        return json.dumps(
            {
                "source": self.source,
                "terms": [str(t) for t in self.terms],
                "methods": list(self.methods),
                "recurrence": rec,
                "classification": str(self.behavior),
                "period": self.period,
                "oeis_matches": [
                    {"id": m.ident, "offset": m.offset, "matched": m.matched_length}
                    for m in self.oeis_matches
                ],
            }
        )


def strip_forbidden(g: Digraph, forbidden) -> Digraph:
    """Induced subdigraph on vertices whose label avoids every forbidden
    word as a factor (the label-removal step of the counting method)."""
    if g.labels is None:
        raise ValueError("strip_forbidden requires a labeled digraph")
    keep = [
        v for v, lab in enumerate(g.labels)
        if not any(w in lab for w in forbidden)
    ]
    return induced_subgraph(g, keep)


def forbidden_word_digraph(spec: ForbiddenWordSpec) -> Digraph:
    """De Bruijn digraph on the window length, minus forbidden labels."""
    base = de_bruijn(spec.sigma, spec.window)
    g = strip_forbidden(base, spec.forbidden)
    return Digraph(g.n, g.arcs, g.labels, name=spec.describe())


def count_avoiding_words(
    sigma: int,
    length: int,
    forbidden,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Brute-force oracle: exact count of length-`length` words over
    {0..sigma-1} containing no forbidden factor, by full enumeration."""
    if sigma < 1 or length < 0:
        raise ParamOutOfRange("need sigma >= 1 and length >= 0")
    if sigma**length > cap:
        raise EnumerationCapExceeded(f"{sigma}^{length} exceeds cap {cap}")
    syms = "0123456789abcdefghijklmnopqrstuvwxyz"[:sigma]
    forbidden = tuple(forbidden)
    count = 0
    for tup in itertools.product(syms, repeat=length):
        w = "".join(tup)
        if not any(f in w for f in forbidden):
            count += 1
    return count


def _recurrence_terms(g: Digraph, K: int) -> tuple[list[int], object]:
    """Terms via the quotient-matrix route: coarsest forward-equitable
    partition, minimal polynomial of the quotient, then the recurrence."""
    if g.n == 0:
        return [0] * (K + 1), None
    part = coarsest_equitable_partition(g)
    poly = minimal_polynomial(part.quotient)
    r = poly.degree
    initial = [walk_count(part.quotient, part.sizes, k) for k in range(min(r, K + 1))]
    rec = recurrence_from_minpoly(poly, initial)
    return rec.extend(initial, K), rec


def order_sequence(
    g: Digraph,
    K: int,
    methods=ALL_METHODS,
    cap: int = DEFAULT_VERTEX_CAP,
) -> SequenceReport:
    """Orders n_0..n_K of the iterated line digraphs, computed by every
    requested method and cross-checked term by term."""
    if K < 0:
        raise ValueError("K must be >= 0")
    methods = tuple(methods)
    results: dict[str, list[int]] = {}
    if "direct" in methods:
        _, results["direct"] = line_iterate(g, K, cap=cap)
    if "walk" in methods:
        A = adjacency_matrix(g)
        j = [1] * g.n
        results["walk"] = [walk_count(A, j, k) for k in range(K + 1)]
    if "recurrence" in methods:
        results["recurrence"], _ = _recurrence_terms(g, K)
    if not results:
        raise ValueError("at least one method must be requested")
    for k in range(K + 1):
        values = {name: res[k] for name, res in results.items()}
        if len(set(values.values())) != 1:
            raise MethodDisagreement(k, values)
    terms = next(iter(results.values()))
    try:
        rec = minimal_recurrence(terms)
    except (InsufficientTerms, NoRecurrenceFound):
        rec = None
    behavior = classify_behavior(g) if g.n else None
    period = None
    if behavior is not None and behavior.kind.value == "eventually_periodic":
        period = detect_period(terms)
    return SequenceReport(
        source=g.name or f"digraph(n={g.n}, m={g.m})",
        terms=tuple(terms),
        methods=methods,
        recurrence=rec,
        behavior=behavior,
        period=period,
    )


class _QuadInt:
    """Exact arithmetic in Q(sqrt(delta)): values a + b*sqrt(delta)."""

    __slots__ = ("a", "b", "delta")

    def __init__(self, a, b, delta: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.delta = delta

    def __add__(self, other):
        return _QuadInt(self.a + other.a, self.b + other.b, self.delta)

    def __sub__(self, other):
        return _QuadInt(self.a - other.a, self.b - other.b, self.delta)

    def __mul__(self, other):
        return _QuadInt(
            self.a * other.a + self.delta * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.delta,
        )

    def inverse(self):
        norm = self.a * self.a - self.delta * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("non-invertible quadratic element")
        return _QuadInt(self.a / norm, -self.b / norm, self.delta)

    def __pow__(self, k: int):
        result = _QuadInt(1, 0, self.delta)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def ck4_closed_form(d: int, k: int) -> int:
    """Order of the k-th iterated line digraph of the cyclic Kautz digraph
    on 4-letter windows, via the closed formula over Q(sqrt(d^2-2d+5))."""
    if d < 2 or k < 0:
        raise ParamOutOfRange("ck4_closed_form requires d >= 2 and k >= 0")
    delta = d * d - 2 * d + 5
    sqrt = _QuadInt(0, 1, delta)
    one = _QuadInt(1, 0, delta)

    def q(x) -> _QuadInt:
        return _QuadInt(x, 0, delta)

    big = q(d**3 + d + 2)
    lead = q(d * d + d) * sqrt
    denom_minus = (q(1 - d) - sqrt) ** (k + 1)
    denom_plus = (q(1 - d) + sqrt) ** (k + 1)
    total = (lead - big) * denom_minus.inverse() + (lead + big) * denom_plus.inverse()
    value = q(2**k * d) * sqrt.inverse() * total
    if value.b != 0 or value.a.denominator != 1:
        raise ArithmeticError(f"closed form not an integer for d={d}, k={k}")
    return int(value.a)


def inner_diameter_report(
    g: Digraph, K: int, cap: int = DEFAULT_VERTEX_CAP
) -> SequenceReport:
    """The inner-diameter sequence d(L^0 g)..d(L^K g) with behavior
    classification and, when eventually periodic, the empirical period."""
    terms, vanished = inner_diameter_sequence(g, K, cap=cap)
    behavior = classify_behavior(g)
    period = None
    if behavior.kind.value == "eventually_periodic":
        period = detect_period(terms)
    try:
        rec = minimal_recurrence(terms)
    except (InsufficientTerms, NoRecurrenceFound):
        rec = None
    return SequenceReport(
        source=(g.name or f"digraph(n={g.n}, m={g.m})") + " [inner diameters]",
        terms=tuple(terms),
        methods=("direct",),
        recurrence=rec,
        behavior=behavior,
        period=period,
        vanished=vanished,
    )
