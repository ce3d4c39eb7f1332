from __future__ import annotations

import os
import random

import pytest
from hypothesis import HealthCheck, settings

from iterline import Digraph, build

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def random_digraph(
    rng: random.Random,
    max_n: int = 10,
    min_n: int = 1,
    loops: bool = True,
) -> Digraph:
    """A uniform-ish random digraph for property tests."""
    n = rng.randint(min_n, max_n)
    pairs = [
        (u, v) for u in range(n) for v in range(n) if loops or u != v
    ]
    m = rng.randint(0, min(len(pairs), 2 * n))
    return build(n, rng.sample(pairs, m))


@pytest.fixture(scope="session")
def oeis_db() -> str:
    return os.path.join(DATA_DIR, "oeis_stripped.txt")


@pytest.fixture
def four_vertex_example() -> Digraph:
    """Vertices u,v,w,x (= 0,1,2,3) with arcs uv, vw, wx, vu, wu, xu.

    Strongly connected but lopsided: inner out-radius 2 (attained at v)
    and inner in-radius 1 (attained at u).
    """
    return build(4, [(0, 1), (1, 2), (2, 3), (1, 0), (2, 0), (3, 0)])
