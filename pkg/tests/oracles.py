"""Independent brute-force oracles used to derive expected test values.

Everything here enumerates assignments or subsets directly from clause
data; nothing touches the packed-matrix or union-find machinery under
test.
"""

from __future__ import annotations

from itertools import combinations

from qxor.model import QxorInstance


def brute_rank(int_rows: list[int]) -> int:
    """Rank from the size of the row span (all subset XORs)."""
    span = {0}
    for row in int_rows:
        span |= {row ^ s for s in span}
    return len(span).bit_length() - 1


def brute_solvable(int_rows: list[int], cols: int, targets: list[int]) -> bool:
    """Does some y satisfy parity(row & y) == target for every row?"""
    for y in range(1 << cols):
        if all(((row & y).bit_count() & 1) == t for row, t in zip(int_rows, targets)):
            return True
    return False


def _clause_holds(clause, x: int, y: int) -> bool:
    s = clause.rhs
    for i in clause.universal_vars:
        s ^= (x >> (i - 1)) & 1
    for j in clause.existential_vars:
        s ^= (y >> (j - 1)) & 1
    return s == 0


def brute_forall_exists(inst: QxorInstance) -> bool:
    """Quantified truth straight from the clause list."""
    cls = inst.clauses
    for x in range(1 << inst.m):
        if not any(all(_clause_holds(c, x, y) for c in cls) for y in range(1 << inst.n)):
            return False
    return True


def brute_exists_y(inst: QxorInstance) -> bool:
    """Solvability of the existential system alone (universal part dropped)."""
    cls = inst.clauses
    return any(all(_reduced_holds(c, y) for c in cls) for y in range(1 << inst.n))


def _reduced_holds(clause, y: int) -> bool:
    s = clause.rhs
    for j in clause.existential_vars:
        s ^= (y >> (j - 1)) & 1
    return s == 0


def enumerate_clauses(m: int, n: int, a: int, e: int):
    """All possible clauses as (universal tuple, existential tuple, rhs)."""
    out = []
    for u in combinations(range(1, m + 1), a):
        for v in combinations(range(1, n + 1), e):
            for rhs in (0, 1):
                out.append((u, v, rhs))
    return out
