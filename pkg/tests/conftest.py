"""Shared fixtures and instance builders."""

from __future__ import annotations

import random

import pytest

from qxor.gen import GenConfig, derive_seed, generate
from qxor.model import QxorInstance

# Known-false instance: seven existential vertices, eight edges, containing
# one zero-weight four-cycle and one triangle whose weight is a lone
# universal variable (hence unbeatable for some assignment).
KNOWN_FALSE_CLAUSES = [
    ((1,), (1, 2), 0),
    ((2,), (1, 7), 0),
    ((3,), (2, 3), 0),
    ((2,), (2, 6), 1),
    ((2,), (3, 4), 1),
    ((3,), (3, 5), 0),
    ((3,), (4, 5), 1),
    ((1,), (6, 7), 1),
]


def known_false_instance() -> QxorInstance:
    return QxorInstance.from_clauses(3, 7, 1, 2, KNOWN_FALSE_CLAUSES)


@pytest.fixture
def false_instance() -> QxorInstance:
    return known_false_instance()


def tiny_corpus(count: int, master: int = 20250810,
                a_max: int = 2, e_max: int = 3):
    """Deterministic stream of small random instances (m<=3, n<=4, L<=6)."""
    picker = random.Random(master)
    out = []
    for i in range(count):
        while True:
            m = picker.randint(0, 3)
            n = picker.randint(1, 4)
            a = picker.randint(0, min(a_max, m))
            e = picker.randint(1, min(e_max, n))
            L = picker.randint(0, 6)
            if a <= m and 1 <= e <= n:
                break
        out.append(generate(GenConfig(m, n, L, a, e, derive_seed(master, "tiny", i))))
    return out


def pair_corpus(count: int, n_max: int = 50, master: int = 777):
    """Deterministic stream of e = 2 instances for graph-engine checks."""
    picker = random.Random(master)
    out = []
    for i in range(count):
        n = picker.randint(2, n_max)
        m = picker.randint(1, 6)
        a = picker.randint(0, min(3, m))
        c = picker.choice([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
        L = int(c * n + 0.5)
        out.append(generate(GenConfig(m, n, L, a, 2, derive_seed(master, "pair", i))))
    return out
