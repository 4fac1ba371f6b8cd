"""Parity forest unit behavior and graph-vs-elimination engine equivalence."""

import time

import numpy as np
import pytest

from conftest import known_false_instance, pair_corpus
from qxor.errors import CapabilityError, InputError
from qxor.gen import GenConfig, generate
from qxor.graph2 import (CycleStats, EdgeLabel, ParityForest, cycle_scan,
                         cycle_stats, decide_qxor_graph, decide_xorsat_graph,
                         is_acyclic)
from qxor.model import QxorInstance
from qxor.solver import analyze


class TestEdgeLabel:
    def test_from_clause(self):
        lab = EdgeLabel.from_clause((2,), 1, 3)
        assert lab.bits == 0b101  # constant bit plus x2

    def test_xor(self):
        a = EdgeLabel.from_clause((1,), 0, 3)
        b = EdgeLabel.from_clause((1,), 1, 3)
        assert (a ^ b).bits == 1
        assert (a ^ a).is_zero

    def test_range_check(self):
        with pytest.raises(InputError):
            EdgeLabel.from_clause((4,), 0, 3)


class TestParityForest:
    def test_parallel_identical_edges_close_good_cycle(self):
        f = ParityForest(3)
        assert f.add_edge(0, 1, 0b10) is None
        assert f.add_edge(0, 1, 0b10) is None
        assert f.cycle_count == 1 and f.bad_cycle_count == 0

    def test_contradictory_parallel_edges_conflict(self):
        f = ParityForest(3)
        lab = EdgeLabel.from_clause((1,), 0, 1)
        assert f.add_edge(0, 1, lab) is None
        witness = f.add_edge(0, 1, lab ^ EdgeLabel(1, 1))
        assert witness == 1
        assert f.bad_cycle_count == 1

    def test_known_instance_triangle_conflict(self, false_instance):
        f = ParityForest(false_instance.n)
        conflicts = []
        for k in range(false_instance.L):
            u, v = (int(x) for x in false_instance.exist0[k])
            lab = EdgeLabel.from_clause(
                tuple(int(i) + 1 for i in false_instance.univ0[k]),
                int(false_instance.rhs[k]), false_instance.m)
            res = f.add_edge(u, v, lab)
            if res is not None:
                conflicts.append(res)
        # exactly the triangle conflicts, with weight x2
        assert conflicts == [0b0100]
        assert (f.cycle_count, f.bad_cycle_count) == (2, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            ParityForest(2).add_edge(1, 1, 0)

    def test_find_is_repeatable(self):
        f = ParityForest(4)
        f.add_edge(0, 1, 0b1)
        f.add_edge(1, 2, 0b10)
        first = f.find(2)
        assert f.find(2) == first
        root0, pot0 = f.find(0)
        root2, pot2 = f.find(2)
        assert root0 == root2
        assert pot0 ^ pot2 == 0b11  # path weight between vertices 0 and 2

    def test_conflict_leaves_forest_usable(self):
        f = ParityForest(3)
        f.add_edge(0, 1, 1)
        assert f.add_edge(0, 1, 0) is not None
        assert f.add_edge(1, 2, 0) is None
        assert f.cycle_count == 1


class TestCapabilityGuards:
    def test_wrong_arity_rejected(self):
        inst = generate(GenConfig(2, 5, 4, 1, 3, 0))
        for fn in (decide_qxor_graph, is_acyclic, cycle_stats):
            with pytest.raises(CapabilityError):
                fn(inst)


class TestWholeInstance:
    def test_known_false_instance(self, false_instance):
        assert decide_qxor_graph(false_instance) is False
        assert is_acyclic(false_instance) is False
        assert cycle_stats(false_instance) == CycleStats(2, True)
        assert decide_xorsat_graph(false_instance) is True

    def test_forest_instance(self):
        inst = QxorInstance.from_clauses(
            1, 4, 1, 2,
            [((1,), (1, 2), 0), ((1,), (1, 3), 1), ((1,), (1, 4), 0)])
        assert decide_qxor_graph(inst) is True
        assert is_acyclic(inst) is True
        assert cycle_stats(inst) == CycleStats(0, False)

    def test_empty_instance(self):
        inst = QxorInstance.from_clauses(1, 2, 1, 2, [])
        assert decide_qxor_graph(inst) is True
        assert is_acyclic(inst) is True

    def test_zero_weight_triangle(self):
        # labels must cancel: with one universal variable per clause every
        # odd cycle is bad, so a good triangle needs a = 0
        inst = QxorInstance.from_clauses(
            0, 3, 0, 2,
            [((), (1, 2), 0), ((), (2, 3), 0), ((), (1, 3), 0)])
        assert cycle_stats(inst) == CycleStats(1, False)
        assert decide_qxor_graph(inst) is True
        assert is_acyclic(inst) is False

    def test_every_odd_cycle_is_bad_with_single_universal(self):
        inst = QxorInstance.from_clauses(
            2, 3, 1, 2,
            [((1,), (1, 2), 0), ((1,), (2, 3), 0), ((2,), (1, 3), 0)])
        assert cycle_stats(inst) == CycleStats(1, True)
        assert decide_qxor_graph(inst) is False


class TestEngineEquivalence:
    def test_graph_matches_elimination_on_corpus(self):
        for inst in pair_corpus(2500):
            v = analyze(inst)
            cycles, bad, bad_const = cycle_scan(inst)
            assert (bad == 0) == v.qxor
            assert (bad_const == 0) == v.xorsat
            assert (cycles == 0) == v.maxrank

    def test_cycle_count_identity(self):
        # cycles == L - n + number of components over all n vertices
        import networkx as nx
        for inst in pair_corpus(200, n_max=20, master=11):
            g = nx.MultiGraph()
            g.add_nodes_from(range(inst.n))
            g.add_edges_from((int(u), int(v)) for u, v in inst.exist0)
            expected = inst.L - inst.n + nx.number_connected_components(g)
            assert cycle_scan(inst)[0] == expected

    def test_insertion_order_invariance(self):
        rng = np.random.default_rng(8)
        for inst in pair_corpus(120, n_max=25, master=99):
            base = (decide_qxor_graph(inst), is_acyclic(inst),
                    cycle_scan(inst)[0], cycle_stats(inst).first_bad_found)
            perm = rng.permutation(inst.L)
            shuffled = QxorInstance(inst.m, inst.n, inst.a, inst.e,
                                    inst.univ0[perm], inst.exist0[perm],
                                    inst.rhs[perm])
            other = (decide_qxor_graph(shuffled), is_acyclic(shuffled),
                     cycle_scan(shuffled)[0], cycle_stats(shuffled).first_bad_found)
            assert base == other


def test_near_linear_smoke():
    inst = generate(GenConfig(3, 100_000, 40_000, 1, 2, 4242))
    t0 = time.perf_counter()
    decide_qxor_graph(inst)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"graph decision took {elapsed:.1f}s at n=1e5"
