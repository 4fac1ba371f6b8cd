#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot loops (bit-packed elimination, parity union-find) on
representative workloads and prints per-instance times plus speedups.

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import qxor._kernels.pure as pure
from qxor._kernels import available_backends
from qxor.gen import GenConfig, generate
from qxor.gf2 import n_words, pack_bits
from qxor.solver import packed_system


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_elim(kernels, n: int, m: int, c: float, repeat: int) -> dict[str, float]:
    inst = generate(GenConfig(m, n, int(c * n), 1, 3, 12345))
    mat = packed_system(inst)
    out = {}
    for name, impl in kernels.items():
        def run():
            work = mat.copy()
            impl.elim(work, 0, n, 0)
        out[name] = _time(run, repeat)
    return out


def bench_forest(kernels, n: int, m: int, c: float, repeat: int) -> dict[str, float]:
    inst = generate(GenConfig(m, n, int(c * n), 1, 2, 999))
    us = np.ascontiguousarray(inst.exist0[:, 0])
    vs = np.ascontiguousarray(inst.exist0[:, 1])
    labels = np.zeros((inst.L, n_words(m + 1)), dtype=np.uint64)
    labels[:, 0] |= inst.rhs.astype(np.uint64)
    pack_bits(labels, inst.univ0 + 1)
    out = {}
    for name, impl in kernels.items():
        out[name] = _time(lambda: impl.parity_forest_run(n, us, vs, labels), repeat)
    return out


def report(title: str, times: dict[str, float]) -> None:
    print(f"\n{title}")
    base = times.get("pure")
    for name, t in times.items():
        speed = f"  ({base / t:5.1f}x vs pure)" if base and name != "pure" else ""
        print(f"  {name:8s} {t * 1000:10.2f} ms{speed}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    kernels = available_backends()
    print("backends:", ", ".join(kernels))
    if args.quick:
        elim_sizes = [(400, 400, 0.9)]
        forest_sizes = [(20_000, 20_000, 0.45)]
        repeat = 3
    else:
        elim_sizes = [(1000, 1000, 0.9), (2000, 2000, 1.0)]
        forest_sizes = [(100_000, 100, 0.45), (10_000, 10_000, 0.45)]
        repeat = 3

    for n, m, c in elim_sizes:
        report(f"elimination  n={n} m={m} L={int(c * n)} (e=3, a=1)",
               bench_elim(kernels, n, m, c, repeat))
    for n, m, c in forest_sizes:
        report(f"parity forest  n={n} m={m} L={int(c * n)} (e=2, a=1)",
               bench_forest(kernels, n, m, c, repeat))


if __name__ == "__main__":
    main()
