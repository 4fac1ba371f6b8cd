"""Dense linear algebra over the two-element field on bit-packed rows.

Supports rank, row-space membership and column-space containment checks,
all through one staged forward elimination. Matrices are immutable as far
as the public operations are concerned: every query works on a scratch
copy.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InputError

WORD_BITS = 64


def n_words(cols: int) -> int:
    """Number of 64-bit words needed to hold ``cols`` bits."""
    return (cols + WORD_BITS - 1) >> 6


def pack_bits(mat: np.ndarray, col_idx: np.ndarray) -> None:
    """Set bit ``col_idx[r, j]`` in packed row ``r``, for all r and j.

    ``col_idx`` is (rows, k) with 0-based column indices; indices within a
    row must be distinct only for the caller's sake, repeated bits OR to
    the same value.
    """
    if col_idx.size == 0:
        return
    rows = np.arange(mat.shape[0])
    one = np.uint64(1)
    for j in range(col_idx.shape[1]):
        col = col_idx[:, j]
        mat[rows, col >> 6] |= one << (col & 63).astype(np.uint64)


class BitMatrix:
    """Dense 0/1 matrix with rows packed into 64-bit words.

    Bit ``j`` of a row lives in word ``j // 64`` at position ``j % 64``
    (LSB first). Bits past ``cols`` in the last word are kept at zero.
    """

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, n_words(cols)), dtype=np.uint64)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            if words.shape != (rows, n_words(cols)):
                raise InputError(
                    f"packed data shape {words.shape} does not match {rows}x{cols}"
                )
        self.words = words

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def from_int_rows(cls, values: Iterable[int], cols: int) -> "BitMatrix":
        """Rows given as integers, bit ``j`` holding column ``j``."""
        values = list(values)
        m = cls(len(values), cols)
        limit = 1 << cols
        nb = n_words(cols) * 8
        for r, v in enumerate(values):
            if v < 0 or v >= limit:
                raise InputError(f"row {r} does not fit in {cols} columns")
            m.words[r] = np.frombuffer(v.to_bytes(nb, "little"), dtype=np.uint64)
        return m

    @classmethod
    def from_bit_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        """Rows as strings of 0/1, leftmost character being column 0."""
        rows = list(rows)
        cols = len(rows[0]) if rows else 0
        ints = []
        for s in rows:
            if len(s) != cols or set(s) - {"0", "1"}:
                raise InputError(f"bad bit string {s!r}")
            ints.append(sum(1 << j for j, ch in enumerate(s) if ch == "1"))
        return cls.from_int_rows(ints, cols)

    @classmethod
    def from_column_indices(cls, rows: int, cols: int, col_idx: np.ndarray) -> "BitMatrix":
        """Row r gets ones exactly at the 0-based columns ``col_idx[r]``."""
        col_idx = np.asarray(col_idx, dtype=np.int64)
        if col_idx.size and (col_idx.min() < 0 or col_idx.max() >= cols):
            raise InputError("column index out of range")
        m = cls(rows, cols)
        pack_bits(m.words, col_idx)
        return m

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise InputError("index out of range")
        return int((self.words[r, c >> 6] >> np.uint64(c & 63)) & np.uint64(1))

    def set(self, r: int, c: int, value: int) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise InputError("index out of range")
        bit = np.uint64(1) << np.uint64(c & 63)
        if value:
            self.words[r, c >> 6] |= bit
        else:
            self.words[r, c >> 6] &= ~bit

    def row_int(self, r: int) -> int:
        return int.from_bytes(self.words[r].tobytes(), "little")

    def column_bits(self, c: int) -> list[int]:
        return [self.get(r, c) for r in range(self.rows)]

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.words.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _augmented_words(blocks: Sequence) -> tuple[np.ndarray, int]:
    """Pack [B0 | B1 | ...] into one scratch array of words.

    Each block is a BitMatrix or a sequence of bits (one extra column).
    Returns (words, total_cols).
    """
    rows = None
    for b in blocks:
        r = b.rows if isinstance(b, BitMatrix) else len(b)
        if rows is None:
            rows = r
        elif rows != r:
            raise InputError(f"row count mismatch: {rows} vs {r}")
    assert rows is not None
    ints = [0] * rows
    offset = 0
    for b in blocks:
        if isinstance(b, BitMatrix):
            for r in range(rows):
                ints[r] |= b.row_int(r) << offset
            offset += b.cols
        else:
            for r, bit in enumerate(b):
                if bit not in (0, 1):
                    raise InputError(f"bit vector entry {bit!r} is not 0/1")
                ints[r] |= int(bit) << offset
            offset += 1
    nw = max(n_words(offset), 1)
    out = np.zeros((rows, nw), dtype=np.uint64)
    nb = nw * 8
    for r, v in enumerate(ints):
        out[r] = np.frombuffer(v.to_bytes(nb, "little"), dtype=np.uint64)
    return out, offset


def rank(m: BitMatrix) -> int:
    """Dimension of the row space; the input is left untouched."""
    scratch = m.words.copy()
    return _kernels.elim(scratch, 0, m.cols, 0)


def is_full_row_rank(m: BitMatrix) -> bool:
    """True iff the rows are linearly independent (vacuously for 0 rows)."""
    return rank(m) == m.rows


def consistent(e: BitMatrix, c: Sequence[int]) -> bool:
    """True iff the system E y = c has a solution over GF(2)."""
    if len(c) != e.rows:
        raise InputError(f"right-hand side has length {len(c)}, expected {e.rows}")
    scratch, _ = _augmented_words([e, c])
    r = _kernels.elim(scratch, 0, e.cols, 0)
    return not scratch[r:].any()


def image_contains(e: BitMatrix, a: BitMatrix) -> bool:
    """True iff every column of ``a`` lies in the column space of ``e``."""
    if a.rows != e.rows:
        raise InputError(f"row count mismatch: {e.rows} vs {a.rows}")
    scratch, _ = _augmented_words([e, a])
    r = _kernels.elim(scratch, 0, e.cols, 0)
    return not scratch[r:].any()
