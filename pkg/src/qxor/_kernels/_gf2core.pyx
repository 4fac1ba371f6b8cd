# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: word-packed GF(2) elimination and parity union-find.

Same contracts as ``qxor._kernels.pure``; see that module for the packed
row layout and the semantics of each function.
"""

from libc.stdint cimport uint64_t, int64_t

import numpy as np


def elim(uint64_t[:, ::1] mat, Py_ssize_t pivot_col_start, Py_ssize_t pivot_col_end,
         Py_ssize_t start_row):
    cdef Py_ssize_t n_rows = mat.shape[0]
    cdef Py_ssize_t n_words = mat.shape[1]
    cdef Py_ssize_t rank_row = start_row
    cdef Py_ssize_t col, w, r, k, pivot
    cdef uint64_t bit, tmp
    if n_rows == 0 or n_words == 0:
        return start_row
    with nogil:
        for col in range(pivot_col_start, pivot_col_end):
            if rank_row >= n_rows:
                break
            w = col >> 6
            bit = (<uint64_t>1) << (col & 63)
            pivot = -1
            for r in range(rank_row, n_rows):
                if mat[r, w] & bit:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank_row:
                # words below w are zero in both rows, skip them
                for k in range(w, n_words):
                    tmp = mat[rank_row, k]
                    mat[rank_row, k] = mat[pivot, k]
                    mat[pivot, k] = tmp
            for r in range(rank_row + 1, n_rows):
                if mat[r, w] & bit:
                    for k in range(w, n_words):
                        mat[r, k] ^= mat[rank_row, k]
            rank_row += 1
    return rank_row


cdef inline int64_t _find(int64_t x, int64_t* parent, uint64_t* pot, Py_ssize_t lw,
                          int64_t* path, uint64_t* acc) noexcept nogil:
    cdef int64_t root = x, node
    cdef Py_ssize_t plen = 0, i, k
    while parent[root] != root:
        root = parent[root]
    node = x
    while node != root:
        path[plen] = node
        plen += 1
        node = parent[node]
    for k in range(lw):
        acc[k] = 0
    for i in range(plen - 1, -1, -1):
        node = path[i]
        for k in range(lw):
            acc[k] ^= pot[node * lw + k]
            pot[node * lw + k] = acc[k]
        parent[node] = root
    return root


def parity_forest_run(Py_ssize_t n, int64_t[::1] us, int64_t[::1] vs,
                      uint64_t[:, ::1] labels):
    cdef Py_ssize_t n_edges = us.shape[0]
    cdef Py_ssize_t lw = labels.shape[1]
    if n_edges == 0:
        return 0, 0, 0
    parent_arr = np.arange(n, dtype=np.int64)
    size_arr = np.ones(n, dtype=np.int64)
    pot_arr = np.zeros((n, lw), dtype=np.uint64)
    path_arr = np.empty(n, dtype=np.int64)
    acc_arr = np.empty(lw, dtype=np.uint64)
    cdef int64_t[::1] parent_mv = parent_arr
    cdef int64_t[::1] size_mv = size_arr
    cdef uint64_t[:, ::1] pot_mv = pot_arr
    cdef int64_t[::1] path_mv = path_arr
    cdef uint64_t[::1] acc_mv = acc_arr
    cdef int64_t* parent = &parent_mv[0]
    cdef int64_t* size = &size_mv[0]
    cdef uint64_t* pot = &pot_mv[0, 0]
    cdef int64_t* path = &path_mv[0]
    cdef uint64_t* acc = &acc_mv[0]
    cdef Py_ssize_t i, k
    cdef int64_t u, v, ru, rv, swap
    cdef Py_ssize_t cycles = 0, bad = 0, bad_const = 0
    cdef uint64_t word0
    cdef bint nonzero
    with nogil:
        for i in range(n_edges):
            u = us[i]
            v = vs[i]
            ru = _find(u, parent, pot, lw, path, acc)
            rv = _find(v, parent, pot, lw, path, acc)
            if ru == rv:
                cycles += 1
                word0 = pot[u * lw] ^ pot[v * lw] ^ labels[i, 0]
                nonzero = word0 != 0
                for k in range(1, lw):
                    if nonzero:
                        break
                    if pot[u * lw + k] ^ pot[v * lw + k] ^ labels[i, k]:
                        nonzero = True
                if nonzero:
                    bad += 1
                    if word0 & 1:
                        bad_const += 1
            else:
                if size[ru] < size[rv]:
                    swap = ru
                    ru = rv
                    rv = swap
                parent[rv] = ru
                for k in range(lw):
                    pot[rv * lw + k] = pot[u * lw + k] ^ pot[v * lw + k] ^ labels[i, k]
                size[ru] += size[rv]
    return cycles, bad, bad_const
