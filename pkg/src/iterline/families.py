"""Deterministic generators for the digraph families under study.

Every word-labeled generator emits vertices in lexicographic label order,
so outputs are byte-stable across runs.
"""

from __future__ import annotations

from .digraph import Digraph, build, converse, line_iterate
from .errors import ParamOutOfRange

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


def _symbols(count: int) -> str:
    if count > len(_ALPHABET):
        raise ParamOutOfRange(f"alphabet size {count} exceeds {len(_ALPHABET)}")
    return _ALPHABET[:count]


def _word_digraph(words: list[str], arc_rule, name: str) -> Digraph:
    """Shift digraph on a sorted word list: arc w -> w[1:]+c per arc_rule."""
    words = sorted(words)
    index = {w: i for i, w in enumerate(words)}
    arcs = []
    for i, w in enumerate(words):
        for c in arc_rule(w):
            tgt = w[1:] + c
            j = index.get(tgt)
            if j is not None:
                arcs.append((i, j))
    return build(len(words), arcs, labels=words, name=name)


def de_bruijn(sigma: int, n: int) -> Digraph:
    """De Bruijn digraph B(sigma, n): all length-n words, arcs by shift."""
    if sigma < 1 or n < 1:
        raise ParamOutOfRange("de_bruijn requires sigma >= 1 and n >= 1")
    syms = _symbols(sigma)
    words = [""]
    for _ in range(n):
        words = [w + c for w in words for c in syms]
    return _word_digraph(words, lambda w: syms, f"B({sigma},{n})")


def _kautz_words(d: int, ell: int) -> list[str]:
    syms = _symbols(d + 1)
    words = list(syms)
    for _ in range(ell - 1):
        words = [w + c for w in words for c in syms if c != w[-1]]
    return words


def kautz(d: int, ell: int) -> Digraph:
    """Kautz digraph K(d, ell) on repetition-free words over d+1 symbols."""
    if d < 1 or ell < 1:
        raise ParamOutOfRange("kautz requires d >= 1 and ell >= 1")
    syms = _symbols(d + 1)
    return _word_digraph(
        _kautz_words(d, ell),
        lambda w: (c for c in syms if c != w[-1]),
        f"K({d},{ell})",
    )


def cyclic_kautz(d: int, ell: int) -> Digraph:
    """Cyclic Kautz digraph CK(d, ell): Kautz words with first != last,
    arcs when the new symbol differs from both the last and second symbols."""
    if d < 2 or ell < 3:
        raise ParamOutOfRange("cyclic_kautz requires d >= 2 and ell >= 3")
    syms = _symbols(d + 1)
    words = [w for w in _kautz_words(d, ell) if w[0] != w[-1]]
    return _word_digraph(
        words,
        lambda w: (c for c in syms if c != w[-1] and c != w[1]),
        f"CK({d},{ell})",
    )


def sub_kautz(d: int, ell: int) -> Digraph:
    """SubKautz digraph sK(d, ell): Kautz vertex set, arcs when the new
    symbol differs from both the first and last symbols."""
    if d < 2 or ell < 2:
        raise ParamOutOfRange("sub_kautz requires d >= 2 and ell >= 2")
    syms = _symbols(d + 1)
    return _word_digraph(
        _kautz_words(d, ell),
        lambda w: (c for c in syms if c != w[-1] and c != w[0]),
        f"sK({d},{ell})",
    )


def _has_square(w: str, max_len: int) -> bool:
    for size in range(1, max_len + 1):
        for i in range(len(w) - 2 * size + 1):
            if w[i : i + size] == w[i + size : i + 2 * size]:
                return True
    return False


def square_free(d: int, ell: int) -> Digraph:
    """Square-free digraph SF(d, ell): length-ell words over d+1 symbols with
    no factor ww; arcs are shifts whose target is again a vertex."""
    if d < 1 or ell < 2:
        raise ParamOutOfRange("square_free requires d >= 1 and ell >= 2")
    syms = _symbols(d + 1)
    words = [""]
    for _ in range(ell):
        words = [w + c for w in words for c in syms]
    words = [w for w in words if not _has_square(w, ell // 2)]
    return _word_digraph(words, lambda w: syms, f"SF({d},{ell})")


def star_cycle(n: int) -> Digraph:
    """The digraph C_n^*: directed n-cycle plus chords 0 -> j for j=2..n-1."""
    if n < 3:
        raise ParamOutOfRange("star_cycle requires n >= 3")
    arcs = [(i, (i + 1) % n) for i in range(n)]
    arcs += [(0, j) for j in range(2, n)]
    return build(n, arcs, name=f"C{n}*")


def pendant_cycle(n: int) -> Digraph:
    """The digraph G_{n,2}: directed n-cycle v0..v_{n-1} plus a pendant
    path v0 -> u -> z, so the extra vertex u has exactly one in-adjacency
    and one out-adjacency.

    The cycle is then the unique nontrivial strongly connected piece, so
    the inner-diameter sequence under line iteration is eventually
    periodic: 2,2,2,... for n = 1 and the constant n+1 for n >= 2.
    """
    if n < 1:
        raise ParamOutOfRange("pendant_cycle requires n >= 1")
    u, z = n, n + 1
    arcs = [(i, (i + 1) % n) for i in range(n)]
    arcs += [(0, u), (u, z)]
    return build(n + 2, arcs, name=f"G({n},2)")


def unicyclic(n: int, d: int) -> Digraph:
    """The unicyclic digraph G_{n,d}: each vertex of C_n carries an out-tree
    with one center and d leaves; n(d+2) vertices in total."""
    if n < 1 or d < 1:
        raise ParamOutOfRange("unicyclic requires n >= 1 and d >= 1")
    # vertex layout: 0..n-1 cycle, n..2n-1 tree centers, then leaves
    arcs = [(i, (i + 1) % n) for i in range(n)]
    leaf = 2 * n
    for i in range(n):
        center = n + i
        arcs.append((i, center))
        for _ in range(d):
            arcs.append((center, leaf))
            leaf += 1
    return build(n * (d + 2), arcs, name=f"G({n},{d})")


def radii_digraph(r1: int, r2: int) -> Digraph:
    """A strongly connected digraph with inner out-radius r1 and inner
    in-radius r2.

    Built as a directed m-cycle plus a fan of chords 0 -> j for
    j = 2..c: vertex 0 then has the smallest out-eccentricity while the
    fan's far entry point keeps the in-radius large.  Taking m = 2*r2 and
    c = 2*r2 - r1 yields radii (r1, r2) when r1 < r2; for r1 = r2 a single
    chord on a cycle of length r1 + 2 suffices, and r1 > r2 is the
    converse of the swapped case.
    """
    if r1 < 1 or r2 < 1:
        raise ParamOutOfRange("radii_digraph requires r1, r2 >= 1")
    if r1 > r2:
        return converse(radii_digraph(r2, r1))
    if r1 == r2:
        m, c = r1 + 2, 2
    else:
        m, c = 2 * r2, 2 * r2 - r1
    arcs = [(i, (i + 1) % m) for i in range(m)]
    arcs += [(0, j) for j in range(2, c + 1)]
    return build(m, arcs, name=f"R({r1},{r2})")
