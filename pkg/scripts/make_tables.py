#!/usr/bin/env python3
"""Regenerate the forbidden-subword sequence tables.

Emits one Markdown table per base digraph: the binary window-3 table with
its OEIS verdicts, and the three "new sequences" tables (binary window-4
with 10 and 11 starting vertices, and the ternary square-free window-4
table).  Pass --oeis-db to fill the last column from a local snapshot.

Usage:
    python3 scripts/make_tables.py [--oeis-db tests/data/oeis_stripped.txt]
"""

from __future__ import annotations

import argparse
import sys

from iterline import (
    ForbiddenWordSpec,
    forbidden_word_digraph,
    match_local,
    order_sequence,
    square_free,
    strip_forbidden,
)

BINARY3 = [
    ("000", "010", "011"),
    ("000", "001", "101"),
    ("001", "010", "011"),
    ("000", "010", "111"),
    ("000", "011", "110"),
    ("000", "010", "101"),
    ("001", "010", "100"),
    ("000", "001", "010"),
    ("000", "001", "011"),
    ("001", "010", "101"),
    ("000", "001", "111"),
    ("000", "001", "100"),
]

BINARY4_10 = [
    ("000", "1001", "1011", "1101"),
    ("0001", "0010", "0110", "111"),
    ("0010", "0101", "0110", "111"),
    ("0000", "0101", "0110", "111"),
    ("000", "0111", "1010", "1011"),
    ("000", "0111", "1100", "1101"),
    ("0000", "0100", "0101", "111"),
]

BINARY4_11 = [
    ("0111", "100"),
    ("000", "0110", "1001"),
    ("000", "0101", "0110"),
    ("000", "0011", "1011"),
    ("0001", "011"),
    ("000", "0010", "1001"),
    ("010", "1001"),
]

TERNARY4 = [
    ("0120", "0121", "0210"),
    ("0102", "0120", "0210"),
    ("0102", "0120", "0121"),
    ("0120", "0121", "0212"),
    ("0120", "0201", "0212"),
    ("020", "1021"),
    ("1201", "2102"),
]


def verdict(terms, db_path: str | None) -> str:
    if db_path is None:
        return "-"
    matches = match_local(terms, db_path)
    if not matches:
        return "not in OEIS"
    return ", ".join(m.ident for m in matches)


def emit_table(title: str, rows, digraph_for, k: int, db_path: str | None) -> None:
    print(f"## {title}\n")
    print("| forbidden words | sequence | OEIS |")
    print("| --- | --- | --- |")
    for forbidden in rows:
        g = digraph_for(forbidden)
        terms = order_sequence(g, k).terms
        seq = ", ".join(str(t) for t in terms)
        print(f"| {', '.join(forbidden)} | {seq}, ... | {verdict(terms, db_path)} |")
    print()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--oeis-db", default=None, help="local snapshot path")
    parser.add_argument("--k", type=int, default=9, help="last iterate index")
    args = parser.parse_args(argv)

    def binary(window):
        return lambda forbidden: forbidden_word_digraph(
            ForbiddenWordSpec(2, window, forbidden)
        )

    def ternary(forbidden):
        return strip_forbidden(square_free(2, 4), forbidden)

    emit_table("Binary, window 3", BINARY3, binary(3), args.k, args.oeis_db)
    emit_table(
        "Binary, window 4 (10 starting vertices)",
        BINARY4_10, binary(4), args.k, args.oeis_db,
    )
    emit_table(
        "Binary, window 4 (11 starting vertices)",
        BINARY4_11, binary(4), args.k, args.oeis_db,
    )
    emit_table(
        "Ternary square-free, window 4", TERNARY4, ternary, args.k, args.oeis_db
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
