"""Pure-Python kernels over big-int bitsets.

Reference implementations of the two hot loops. The compiled module
``_gf2core`` mirrors these exactly; ``qxor._kernels`` picks one at import
time. Rows of a packed matrix are 64-bit words, least-significant word
first, bit ``j`` of a row stored in word ``j // 64`` at bit ``j % 64``.
"""

from __future__ import annotations

import numpy as np


def _rows_to_ints(mat: np.ndarray) -> list[int]:
    stride = mat.shape[1] * 8
    buf = mat.tobytes()
    return [int.from_bytes(buf[r * stride:(r + 1) * stride], "little") for r in range(mat.shape[0])]


def _write_rows(mat: np.ndarray, rows: list[int]) -> None:
    n_bytes = mat.shape[1] * 8
    for r, value in enumerate(rows):
        mat[r] = np.frombuffer(value.to_bytes(n_bytes, "little"), dtype=np.uint64)


def elim(mat: np.ndarray, pivot_col_start: int, pivot_col_end: int, start_row: int) -> int:
    """Forward elimination in place, pivoting on columns [start, end).

    Requires every row at index >= start_row to be zero in all columns
    below pivot_col_start (true for fresh matrices and for staged calls).
    Returns start_row plus the number of pivots found; afterwards every
    row past the returned index is zero throughout [0, pivot_col_end).
    """
    n_rows = mat.shape[0]
    if n_rows == 0 or mat.shape[1] == 0:
        return start_row
    rows = _rows_to_ints(mat)
    rank_row = start_row
    for col in range(pivot_col_start, pivot_col_end):
        if rank_row >= n_rows:
            break
        bit = 1 << col
        pivot = -1
        for r in range(rank_row, n_rows):
            if rows[r] & bit:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank_row], rows[pivot] = rows[pivot], rows[rank_row]
        prow = rows[rank_row]
        for r in range(rank_row + 1, n_rows):
            if rows[r] & bit:
                rows[r] ^= prow
        rank_row += 1
    _write_rows(mat, rows)
    return rank_row


def parity_forest_run(n: int, us: np.ndarray, vs: np.ndarray,
                      labels: np.ndarray) -> tuple[int, int, int]:
    """Insert all edges into a parity-labelled union-find, in order.

    ``labels`` holds one packed label per edge, bit 0 being the constant
    part. Returns (number of edges that closed a cycle, number of those
    whose cycle weight was nonzero, number whose weight had bit 0 set).
    Counts depend only on the edge sequence, not on union or compression
    strategy.
    """
    n_edges = us.shape[0]
    if n_edges == 0:
        return 0, 0, 0
    parent = list(range(n))
    size = [1] * n
    pot = [0] * n
    lab = _rows_to_ints(labels)

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        path = []
        while x != root:
            path.append(x)
            x = parent[x]
        acc = 0
        for node in reversed(path):
            acc ^= pot[node]
            pot[node] = acc
            parent[node] = root
        return root

    cycles = 0
    bad = 0
    bad_const = 0
    for i in range(n_edges):
        u = int(us[i])
        v = int(vs[i])
        w = lab[i]
        ru = find(u)
        rv = find(v)
        if ru == rv:
            cycles += 1
            weight = pot[u] ^ pot[v] ^ w
            if weight:
                bad += 1
                if weight & 1:
                    bad_const += 1
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            pot[rv] = pot[u] ^ pot[v] ^ w
            size[ru] += size[rv]
    return cycles, bad, bad_const
