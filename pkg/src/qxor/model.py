"""Formula data model: clauses, closed quantified instances, text format.

An instance is a closed formula with one universal block of ``m``
variables, one existential block of ``n`` variables and ``L`` xor
clauses, each using exactly ``a`` universal and ``e`` existential
variables. Clauses are kept in canonical form with every variable on the
left and the constant on the right, so the whole formula is the linear
system ``A x + E y = c`` over GF(2).

Text format (UTF-8, line oriented)::

    c optional comments
    p qxor <m> <n> <L> <a> <e>
    <u_1> ... <u_a> | <v_1> ... <v_e> | <rhs>

with 1-based variable indices; an ``a = 0`` clause line starts with
``|``. The writer emits indices in ascending order, the parser accepts
any order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ParseError
from .gf2 import BitMatrix


@dataclass(frozen=True)
class Clause:
    """One xor clause in canonical form, indices 1-based and ascending."""

    universal_vars: tuple[int, ...]
    existential_vars: tuple[int, ...]
    rhs: int


class QxorInstance:
    """A closed quantified xor formula.

    Clause data is held as 0-based, row-sorted index arrays; the
    :class:`Clause` view and the text format use 1-based indices.
    Duplicate clauses are legal and preserved, as is clause order.
    """

    __slots__ = ("m", "n", "a", "e", "univ0", "exist0", "rhs")

    def __init__(self, m: int, n: int, a: int, e: int,
                 univ0: np.ndarray, exist0: np.ndarray, rhs: np.ndarray,
                 validate: bool = True):
        self.m = m
        self.n = n
        self.a = a
        self.e = e
        self.rhs = np.ascontiguousarray(rhs, dtype=np.uint8).reshape(-1)
        L = self.rhs.shape[0]
        self.univ0 = np.ascontiguousarray(univ0, dtype=np.int64).reshape(L, a)
        self.exist0 = np.ascontiguousarray(exist0, dtype=np.int64).reshape(L, e)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.m < 0 or self.n < 1:
            raise InputError("need m >= 0 and n >= 1")
        if not (0 <= self.a <= self.m):
            raise InputError(f"universal arity a={self.a} out of range for m={self.m}")
        if not (1 <= self.e <= self.n):
            raise InputError(f"existential arity e={self.e} out of range for n={self.n}")
        L = self.rhs.shape[0]
        if self.univ0.shape != (L, self.a) or self.exist0.shape != (L, self.e):
            raise InputError("clause array shapes disagree with L, a, e")
        for arr, count, what in ((self.univ0, self.m, "universal"),
                                 (self.exist0, self.n, "existential")):
            if arr.size == 0:
                continue
            if arr.min() < 0 or arr.max() >= count:
                raise InputError(f"{what} index out of range")
            if arr.shape[1] > 1 and not (np.diff(arr, axis=1) > 0).all():
                raise InputError(f"{what} indices must be distinct within a clause")
        if self.rhs.size and self.rhs.max() > 1:
            raise InputError("rhs entries must be 0 or 1")

    @property
    def L(self) -> int:
        return self.rhs.shape[0]

    @property
    def clauses(self) -> list[Clause]:
        return [
            Clause(
                tuple(int(i) + 1 for i in self.univ0[k]),
                tuple(int(j) + 1 for j in self.exist0[k]),
                int(self.rhs[k]),
            )
            for k in range(self.L)
        ]

    @classmethod
    def from_clauses(cls, m: int, n: int, a: int, e: int,
                     clauses: Iterable[Clause | tuple]) -> "QxorInstance":
        univ, exist, rhs = [], [], []
        for cl in clauses:
            if isinstance(cl, Clause):
                u, v, r = cl.universal_vars, cl.existential_vars, cl.rhs
            else:
                u, v, r = cl
            univ.append(sorted(int(i) - 1 for i in u))
            exist.append(sorted(int(j) - 1 for j in v))
            rhs.append(int(r))
        L = len(rhs)
        return cls(
            m, n, a, e,
            np.asarray(univ, dtype=np.int64).reshape(L, a),
            np.asarray(exist, dtype=np.int64).reshape(L, e),
            np.asarray(rhs, dtype=np.uint8),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QxorInstance):
            return NotImplemented
        return (
            (self.m, self.n, self.a, self.e) == (other.m, other.n, other.a, other.e)
            and np.array_equal(self.univ0, other.univ0)
            and np.array_equal(self.exist0, other.exist0)
            and np.array_equal(self.rhs, other.rhs)
        )

    def __repr__(self) -> str:
        return f"QxorInstance(m={self.m}, n={self.n}, L={self.L}, a={self.a}, e={self.e})"


def _parse_block(tokens: list[str], count: int, limit: int, what: str,
                 line_no: int) -> list[int]:
    if len(tokens) != count:
        raise ParseError(f"expected {count} {what} indices, got {len(tokens)}", line_no)
    out = []
    for t in tokens:
        try:
            idx = int(t)
        except ValueError:
            raise ParseError(f"bad {what} index {t!r}", line_no) from None
        if not (1 <= idx <= limit):
            raise ParseError(f"{what} index {idx} out of range 1..{limit}", line_no)
        out.append(idx - 1)
    if len(set(out)) != len(out):
        raise ParseError(f"duplicate {what} index", line_no)
    return sorted(out)


def parse(text: str) -> QxorInstance:
    """Parse instance text; raises :class:`ParseError` with a line number."""
    header = None
    univ: list[list[int]] = []
    exist: list[list[int]] = []
    rhs: list[int] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if header is None:
            if len(tokens) != 7 or tokens[0] != "p" or tokens[1] != "qxor":
                raise ParseError("malformed header, expected 'p qxor m n L a e'", line_no)
            try:
                m, n, L, a, e = (int(t) for t in tokens[2:])
            except ValueError:
                raise ParseError("non-integer field in header", line_no) from None
            if min(m, n, L, a, e) < 0:
                raise ParseError("negative field in header", line_no)
            if a > m:
                raise ParseError(f"a={a} exceeds m={m}", line_no)
            if not (1 <= e <= n):
                raise ParseError(f"e={e} out of range 1..n={n}", line_no)
            header = (m, n, L, a, e)
            continue
        m, n, L, a, e = header
        if len(rhs) == L:
            raise ParseError(f"more than {L} clause lines", line_no)
        bars = [i for i, t in enumerate(tokens) if t == "|"]
        if len(bars) != 2:
            raise ParseError("clause line must contain exactly two '|' separators", line_no)
        u_tok = tokens[:bars[0]]
        v_tok = tokens[bars[0] + 1:bars[1]]
        r_tok = tokens[bars[1] + 1:]
        univ.append(_parse_block(u_tok, a, m, "universal", line_no))
        exist.append(_parse_block(v_tok, e, n, "existential", line_no))
        if len(r_tok) != 1 or r_tok[0] not in ("0", "1"):
            raise ParseError("right-hand side must be a single 0 or 1", line_no)
        rhs.append(int(r_tok[0]))
    if header is None:
        raise ParseError("missing header", last_line or 1)
    m, n, L, a, e = header
    if len(rhs) != L:
        raise ParseError(f"header announces {L} clauses, found {len(rhs)}", last_line)
    return QxorInstance(
        m, n, a, e,
        np.asarray(univ, dtype=np.int64).reshape(L, a),
        np.asarray(exist, dtype=np.int64).reshape(L, e),
        np.asarray(rhs, dtype=np.uint8),
        validate=False,
    )


def serialize(inst: QxorInstance) -> str:
    """Canonical text form; ``parse(serialize(x)) == x``."""
    lines = [f"p qxor {inst.m} {inst.n} {inst.L} {inst.a} {inst.e}"]
    for k in range(inst.L):
        parts = [str(int(i) + 1) for i in inst.univ0[k]]
        parts.append("|")
        parts.extend(str(int(j) + 1) for j in inst.exist0[k])
        parts.append("|")
        parts.append(str(int(inst.rhs[k])))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def to_matrices(inst: QxorInstance) -> tuple[BitMatrix, BitMatrix, np.ndarray]:
    """The system ``A x + E y = c``: (A of shape L x m, E of L x n, c of length L)."""
    A = BitMatrix.from_column_indices(inst.L, inst.m, inst.univ0)
    E = BitMatrix.from_column_indices(inst.L, inst.n, inst.exist0)
    return A, E, inst.rhs.copy()
