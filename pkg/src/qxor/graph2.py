"""Fast path for two existential variables per clause.

Such an instance is a multigraph on the existential variables: each
clause is an edge whose label collects the clause's universal variables
plus the constant bit. The formula is true exactly when no cycle has a
nonzero label sum, which a union-find with per-node label potentials
detects in near-linear time. The same pass counts independent cycles, so
acyclicity (full rank of E) and cycle statistics come for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .errors import CapabilityError, InputError
from .gf2 import n_words, pack_bits
from .model import QxorInstance


@dataclass(frozen=True)
class EdgeLabel:
    """(m+1)-bit label: bit 0 is the constant, bit i the i-th universal var."""

    m: int
    bits: int

    @classmethod
    def from_clause(cls, universal_vars: Iterable[int], rhs: int, m: int) -> "EdgeLabel":
        bits = int(rhs) & 1
        for i in universal_vars:
            if not (1 <= i <= m):
                raise InputError(f"universal index {i} out of range 1..{m}")
            bits |= 1 << i
        return cls(m, bits)

    def __xor__(self, other: "EdgeLabel") -> "EdgeLabel":
        if self.m != other.m:
            raise InputError("label widths differ")
        return EdgeLabel(self.m, self.bits ^ other.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0


class CycleStats(NamedTuple):
    independent_cycle_count: int
    first_bad_found: bool


class ParityForest:
    """Union-find whose nodes carry label potentials relative to their root.

    Potentials are plain ints with the :class:`EdgeLabel` bit layout. For
    any two vertices of one component, ``potential(u) ^ potential(v)`` is
    the label sum along every tree path between them, as long as no
    conflict has been reported. Conflicts leave the forest usable, so one
    pass over all edges also yields cycle statistics.
    """

    def __init__(self, n_vertices: int):
        self._parent = list(range(n_vertices))
        self._size = [1] * n_vertices
        self._pot = [0] * n_vertices
        self.cycle_count = 0
        self.bad_cycle_count = 0

    def find(self, v: int) -> tuple[int, int]:
        """Root of v's component and v's potential relative to it."""
        parent, pot = self._parent, self._pot
        root = v
        while parent[root] != root:
            root = parent[root]
        path = []
        x = v
        while x != root:
            path.append(x)
            x = parent[x]
        acc = 0
        for node in reversed(path):
            acc ^= pot[node]
            pot[node] = acc
            parent[node] = root
        return root, pot[v]

    def add_edge(self, u: int, v: int, label: int | EdgeLabel):
        """Insert an edge; returns None, or the nonzero cycle weight on conflict.

        A cycle-closing edge whose weight cancels (a good cycle) also
        returns None; counters record both kinds.
        """
        if u == v:
            raise InputError("self-loops are not valid edges")
        w = label.bits if isinstance(label, EdgeLabel) else int(label)
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            self.cycle_count += 1
            weight = pu ^ pv ^ w
            if weight:
                self.bad_cycle_count += 1
                return weight
            return None
        if self._size[ru] < self._size[rv]:
            ru, rv = rv, ru
        self._parent[rv] = ru
        self._pot[rv] = pu ^ pv ^ w
        self._size[ru] += self._size[rv]
        return None


def _require_pair_form(inst: QxorInstance) -> None:
    if inst.e != 2:
        raise CapabilityError(f"graph engine needs e = 2, got e = {inst.e}")


def cycle_scan(inst: QxorInstance, with_labels: bool = True) -> tuple[int, int, int]:
    """One pass over all edges: (cycles closed, bad ones, constant-bad ones).

    A cycle is bad when its label sum is nonzero anywhere, constant-bad
    when the sum's constant bit is set; the latter decides satisfiability
    of the existential system alone. ``with_labels=False`` skips label
    packing (bad counts come back 0); use it when only acyclicity matters
    and labels would be wide.
    """
    _require_pair_form(inst)
    us = np.ascontiguousarray(inst.exist0[:, 0])
    vs = np.ascontiguousarray(inst.exist0[:, 1])
    if with_labels:
        labels = np.zeros((inst.L, n_words(inst.m + 1)), dtype=np.uint64)
        labels[:, 0] |= inst.rhs.astype(np.uint64)
        if inst.a:
            pack_bits(labels, inst.univ0 + 1)
    else:
        labels = np.zeros((inst.L, 1), dtype=np.uint64)
    cycles, bad, bad_const = _kernels.parity_forest_run(inst.n, us, vs, labels)
    return int(cycles), int(bad), int(bad_const)


def decide_qxor_graph(inst: QxorInstance) -> bool:
    """Graph-engine truth decision; agrees with the elimination engine."""
    return cycle_scan(inst)[1] == 0


def decide_xorsat_graph(inst: QxorInstance) -> bool:
    """Solvability of the existential system: no cycle with odd constant sum."""
    return cycle_scan(inst)[2] == 0


def is_acyclic(inst: QxorInstance) -> bool:
    """True iff no edge closes a cycle; equivalent to E having full row rank."""
    return cycle_scan(inst, with_labels=False)[0] == 0


def cycle_stats(inst: QxorInstance) -> CycleStats:
    cycles, bad, _ = cycle_scan(inst)
    return CycleStats(cycles, bad > 0)
