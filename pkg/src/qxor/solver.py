"""Decision engines for the three nested instance properties.

The quantified system ``forall X exists Y (AX + EY = C)`` holds iff C lies
in the column space of E and so does every column of A. One elimination
over the packed block matrix [E | A | C], pivoting on E's columns only,
answers everything: rank(E) settles the full-rank property, a residual
row that is nonzero anywhere refutes the quantified formula, and a
residual row with its C bit set refutes even the existential system
``EY = C`` (plain satisfiability, the weakest of the three). The chain
full rank => quantified truth => satisfiability therefore holds on every
single instance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapabilityError
from .gf2 import n_words, pack_bits
from .model import QxorInstance

BRUTE_FORCE_VAR_LIMIT = 16


@dataclass(frozen=True)
class Verdicts:
    """All three properties of one instance, from a single elimination."""

    rank_e: int
    qxor: bool
    xorsat: bool
    L: int

    @property
    def maxrank(self) -> bool:
        return self.rank_e == self.L


def packed_system(inst: QxorInstance) -> np.ndarray:
    """[E | A | C] rows packed into words; E at columns [0, n), A at [n, n+m)."""
    total_cols = inst.n + inst.m + 1
    mat = np.zeros((inst.L, n_words(total_cols)), dtype=np.uint64)
    pack_bits(mat, inst.exist0)
    if inst.a:
        pack_bits(mat, inst.univ0 + inst.n)
    c_col = inst.n + inst.m
    mat[:, c_col >> 6] |= np.left_shift(
        inst.rhs.astype(np.uint64), np.uint64(c_col & 63)
    )
    return mat


def analyze(inst: QxorInstance) -> Verdicts:
    """Decide all three properties with one elimination pass."""
    mat = packed_system(inst)
    rank_e = _kernels.elim(mat, 0, inst.n, 0)
    residual = mat[rank_e:]
    qxor = not residual.any()
    c_col = inst.n + inst.m
    c_bits = (residual[:, c_col >> 6] >> np.uint64(c_col & 63)) & np.uint64(1)
    xorsat = not c_bits.any()
    return Verdicts(rank_e, bool(qxor), bool(xorsat), inst.L)


def decide_qxor(inst: QxorInstance) -> bool:
    """Truth of the closed formula: every X admits a Y solving the system."""
    return analyze(inst).qxor


def decide_xorsat(inst: QxorInstance) -> bool:
    """Solvability of the existential system EY = C, the universal part set aside."""
    return analyze(inst).xorsat


def decide_maxrank(inst: QxorInstance) -> bool:
    """True iff E has full row rank L."""
    return analyze(inst).maxrank


def brute_force_decide(inst: QxorInstance) -> bool:
    """Reference oracle: exhaustive search over both quantifier blocks.

    Guarded to at most 16 variables per block.
    """
    if inst.m > BRUTE_FORCE_VAR_LIMIT or inst.n > BRUTE_FORCE_VAR_LIMIT:
        raise CapabilityError(
            f"brute force limited to {BRUTE_FORCE_VAR_LIMIT} variables per block"
        )
    amasks = [sum(1 << int(i) for i in row) for row in inst.univ0]
    emasks = [sum(1 << int(j) for j in row) for row in inst.exist0]
    rhs = [int(r) for r in inst.rhs]
    L = inst.L
    for x in range(1 << inst.m):
        targets = [rhs[k] ^ ((amasks[k] & x).bit_count() & 1) for k in range(L)]
        witness = False
        for y in range(1 << inst.n):
            if all((emasks[k] & y).bit_count() & 1 == targets[k] for k in range(L)):
                witness = True
                break
        if not witness:
            return False
    return True
