#!/usr/bin/env python3
"""Regenerate tests/data/oeis_stripped.txt.

The fixture is a small local snapshot in the OEIS "stripped" format. Every
entry is computed here from its mathematical definition (recurrence,
generating function, or brute-force word count), so the file can be rebuilt
from scratch at any time. A few decoy entries are included so that lookups
exercise real discrimination.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oeis_stripped.txt"
N_TERMS = 40


def constant(c):
    return [c] * N_TERMS


def naturals():
    return list(range(1, N_TERMS + 1))


def odds():
    return [2 * n + 1 for n in range(N_TERMS)]


def not_multiples_of_3():
    out = []
    n = 1
    while len(out) < N_TERMS:
        if n % 3:
            out.append(n)
        n += 1
    return out


def by_recurrence(initial, coeffs):
    """coeffs maps a(n) = sum coeffs[i] * a(n-1-i)."""
    terms = list(initial)
    while len(terms) < N_TERMS:
        terms.append(sum(c * terms[-1 - i] for i, c in enumerate(coeffs)))
    return terms


def gf_expansion(num, den):
    """Taylor coefficients of num(x)/den(x), both lowest-degree first."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    assert den[0] != 0
    out = []
    for n in range(N_TERMS):
        acc = num[n] if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        c = acc / den[0]
        assert c.denominator == 1
        out.append(int(c))
    return out


def pisot_e(a0, a1):
    terms = [a0, a1]
    while len(terms) < N_TERMS:
        prev, cur = terms[-2], terms[-1]
        terms.append((cur * cur * 2 + prev) // (2 * prev))
    return terms


def binary_avoiding(forbidden, max_len=24):
    """Counts of binary strings of length n with none of the given factors."""
    out = []
    for n in range(max_len):
        cnt = 0
        for w in itertools.product("01", repeat=n):
            s = "".join(w)
            if not any(f in s for f in forbidden):
                cnt += 1
        out.append(cnt)
    return out


ENTRIES = [
    # decoys
    ("A000004", constant(0)),
    ("A000012", constant(1)),
    ("A000079", [2 ** n for n in range(N_TERMS)]),
    ("A000142", [math.factorial(n) for n in range(18)]),
    # cited in the package's golden tables
    ("A000027", naturals()),
    ("A000045", by_recurrence([0, 1], [1, 1])),
    ("A000930", by_recurrence([1, 1, 1], [1, 0, 1])),
    ("A000931", by_recurrence([1, 0, 0], [0, 1, 1])),
    ("A001651", not_multiples_of_3()),
    ("A003269", by_recurrence([0, 1, 1, 1], [1, 0, 0, 1])),
    ("A005408", odds()),
    ("A010716", constant(5)),
    ("A020711", pisot_e(5, 7)),
    ("A052954", gf_expansion([2, -1, -1, -1], [1, -1, -1, 0, 1])),
    ("A101101", [1, 5] + constant(6)[:-2]),
    ("A164316", binary_avoiding(["000", "001", "010"])),
    ("A164317", binary_avoiding(["000", "010", "111"])),
]


def main() -> None:
    OUT.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        "# OEIS-style stripped snapshot (generated by scripts/make_oeis_fixture.py)",
        "# one sequence per line: A-number, then comma-delimited terms",
    ]
    for ident, terms in sorted(ENTRIES):
        lines.append(f"{ident} ,{','.join(str(t) for t in terms)},")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT} ({len(ENTRIES)} entries)")


if __name__ == "__main__":
    main()
