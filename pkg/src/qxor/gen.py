"""Seeded, reproducible uniform sampling of random quantified xor instances.

Each clause draws an a-subset of the universal variables, an independent
e-subset of the existential variables and a fair constant bit, uniformly
and with replacement across clauses. Everything is a pure function of the
config, so identical configs give bit-identical instances regardless of
platform or thread count.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .model import QxorInstance


@dataclass(frozen=True)
class GenConfig:
    m: int
    n: int
    L: int
    a: int
    e: int
    seed: int

    def __post_init__(self):
        if self.m < 0 or self.n < 1 or self.L < 0:
            raise InputError("need m >= 0, n >= 1, L >= 0")
        if not (0 <= self.a <= self.m):
            raise InputError(f"a={self.a} out of range for m={self.m}")
        if not (1 <= self.e <= self.n):
            raise InputError(f"e={self.e} out of range for n={self.n}")


def clause_space_size(m: int, n: int, a: int, e: int) -> int:
    """Number of distinct clauses: C(m,a) * C(n,e) * 2, exact."""
    if a > m or e > n or min(m, n, a, e) < 0:
        raise InputError("arity exceeds variable count")
    return math.comb(m, a) * math.comb(n, e) * 2


def derive_seed(master: int, stream, index: int) -> int:
    """Derive an independent 64-bit seed from (master, stream, index).

    Keyed hash of the triple; deterministic and collision-free in
    practice, so concurrent consumers can pre-derive their streams.
    """
    msg = f"{master}|{stream}|{index}".encode()
    return int.from_bytes(hashlib.blake2b(msg, digest_size=8).digest(), "big")


def _sample_subsets(rng: np.random.Generator, n_rows: int, k: int, space: int) -> np.ndarray:
    """(n_rows, k) array of sorted 0-based k-subsets of range(space).

    Exact uniform: iid index tuples, redrawing any row that contains a
    duplicate until all rows are duplicate-free.
    """
    if k == 0 or n_rows == 0:
        return np.zeros((n_rows, k), dtype=np.int64)
    draw = rng.integers(0, space, size=(n_rows, k), dtype=np.int64)
    if k > 1:
        while True:
            srt = np.sort(draw, axis=1)
            bad = (np.diff(srt, axis=1) == 0).any(axis=1)
            if not bad.any():
                break
            idx = np.flatnonzero(bad)
            draw[idx] = rng.integers(0, space, size=(idx.size, k), dtype=np.int64)
    return np.sort(draw, axis=1)


def generate(cfg: GenConfig) -> QxorInstance:
    """Draw an instance; deterministic function of the config."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    univ0 = _sample_subsets(rng, cfg.L, cfg.a, cfg.m)
    exist0 = _sample_subsets(rng, cfg.L, cfg.e, cfg.n)
    if cfg.L:
        rhs = rng.integers(0, 2, size=cfg.L, dtype=np.uint8)
    else:
        rhs = np.zeros(0, dtype=np.uint8)
    return QxorInstance(cfg.m, cfg.n, cfg.a, cfg.e, univ0, exist0, rhs, validate=False)
