from __future__ import annotations

import json
import random

import pytest

from iterline import (
    ForbiddenWordSpec,
    build,
    ck4_closed_form,
    count_avoiding_words,
    cyclic_kautz,
    de_bruijn,
    forbidden_word_digraph,
    inner_diameter_report,
    order_sequence,
    strip_forbidden,
)
from iterline.errors import EnumerationCapExceeded, ParamOutOfRange


def cycle(n: int):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


class TestForbiddenWordSpec:
    def test_describe(self):
        spec = ForbiddenWordSpec(2, 3, ("000", "101"))
        assert spec.describe() == "B(2,3) avoiding {000,101}"

    def test_rejects_long_words(self):
        with pytest.raises(ParamOutOfRange):
            ForbiddenWordSpec(2, 3, ("0000",))

    def test_rejects_foreign_symbols(self):
        with pytest.raises(ParamOutOfRange):
            ForbiddenWordSpec(2, 3, ("012",))

    def test_digraph_construction(self):
        g = forbidden_word_digraph(ForbiddenWordSpec(2, 3, ("000", "111")))
        assert g.n == 6
        assert all("000" not in w and "111" not in w for w in g.labels)


class TestStripForbidden:
    def test_strips_by_factor(self):
        g = strip_forbidden(de_bruijn(2, 3), ("00",))
        assert sorted(g.labels) == ["010", "011", "101", "110", "111"]

    def test_requires_labels(self):
        with pytest.raises(ValueError):
            strip_forbidden(build(2, [(0, 1)]), ("0",))


class TestCountAvoidingWords:
    def test_no_constraints(self):
        assert count_avoiding_words(2, 3, ()) == 8

    def test_simple_factor(self):
        # binary words of length 3 avoiding "11": 000,001,010,100,101
        assert count_avoiding_words(2, 3, ("11",)) == 5

    def test_zero_length(self):
        assert count_avoiding_words(3, 0, ("0",)) == 1

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            count_avoiding_words(2, 40, ("01",), cap=1000)

    def test_param_validation(self):
        with pytest.raises(ParamOutOfRange):
            count_avoiding_words(0, 3, ())


class TestOrderSequence:
    def test_methods_agree_on_de_bruijn(self):
        rep = order_sequence(de_bruijn(2, 2), 5)
        assert rep.terms == (4, 8, 16, 32, 64, 128)
        assert rep.methods == ("direct", "walk", "recurrence")

    def test_cycle_sequence_is_constant(self):
        rep = order_sequence(cycle(4), 6)
        assert rep.terms == (4,) * 7
        assert rep.period == 1
        assert rep.recurrence is not None and rep.recurrence.order == 1

    def test_counts_match_bruteforce_oracle(self):
        rng = random.Random(65537)
        words = ["".join(rng.choice("01") for _ in range(rng.randint(1, 3))) for _ in range(12)]
        for i in range(0, len(words), 3):
            forbidden = tuple(sorted(set(words[i : i + 3])))
            spec = ForbiddenWordSpec(2, 3, forbidden)
            rep = order_sequence(forbidden_word_digraph(spec), 5)
            for k, term in enumerate(rep.terms):
                assert term == count_avoiding_words(2, 3 + k, forbidden)

    def test_empty_digraph_yields_zeros(self):
        g = forbidden_word_digraph(ForbiddenWordSpec(2, 1, ("0", "1")))
        rep = order_sequence(g, 4)
        assert rep.terms == (0,) * 5

    def test_to_json_keys(self):
        rep = order_sequence(de_bruijn(2, 2), 4)
        payload = json.loads(rep.to_json())
        assert payload["terms"] == [str(t) for t in (4, 8, 16, 32, 64)]
        assert payload["classification"] == "unbounded"
        assert payload["recurrence"]["order"] == 1

    def test_subset_of_methods(self):
        rep = order_sequence(de_bruijn(2, 2), 3, methods=("direct",))
        assert rep.terms == (4, 8, 16, 32)
        with pytest.raises(ValueError):
            order_sequence(de_bruijn(2, 2), 3, methods=())


class TestCk4ClosedForm:
    def test_first_terms_match_direct_iteration(self):
        want = order_sequence(cyclic_kautz(2, 4), 6).terms
        got = tuple(ck4_closed_form(2, k) for k in range(7))
        assert got == want

    def test_values_are_increasing(self):
        for d in (2, 3, 4):
            vals = [ck4_closed_form(d, k) for k in range(10)]
            assert vals == sorted(vals) and len(set(vals)) == len(vals)


class TestInnerDiameterReport:
    def test_cycle(self):
        rep = inner_diameter_report(cycle(3), 8)
        assert rep.terms == (2,) * 9
        assert rep.period == 1
        assert not rep.vanished

    def test_vanishing_path(self):
        rep = inner_diameter_report(build(3, [(0, 1), (1, 2)]), 8)
        assert rep.terms == (2, 1, 0)
        assert rep.vanished
        assert str(rep.behavior) == "vanishes_at(2)"
