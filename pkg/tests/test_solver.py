"""Decision engines against the exhaustive oracle and each other."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import known_false_instance, tiny_corpus
from oracles import brute_exists_y, brute_forall_exists
from qxor.errors import CapabilityError
from qxor.gen import GenConfig, generate
from qxor.model import QxorInstance
from qxor.solver import (analyze, brute_force_decide, decide_maxrank,
                         decide_qxor, decide_xorsat)


def empty_instance():
    return QxorInstance.from_clauses(1, 2, 1, 2, [])


class TestDecideQxor:
    def test_known_false_instance(self, false_instance):
        assert decide_qxor(false_instance) is False

    def test_empty_conjunction_true(self):
        assert decide_qxor(empty_instance()) is True

    def test_single_mixed_clause_true(self):
        inst = QxorInstance.from_clauses(1, 2, 1, 2, [((1,), (1, 2), 0)])
        assert decide_qxor(inst) is True
        assert brute_forall_exists(inst) is True

    def test_reorder_invariance(self):
        inst = known_false_instance()
        rng = np.random.default_rng(3)
        for _ in range(10):
            perm = rng.permutation(inst.L)
            shuffled = QxorInstance(inst.m, inst.n, inst.a, inst.e,
                                    inst.univ0[perm], inst.exist0[perm],
                                    inst.rhs[perm])
            assert decide_qxor(shuffled) is False


class TestDecideXorsat:
    def test_contradictory_duplicates(self):
        inst = QxorInstance.from_clauses(0, 3, 0, 2,
                                         [((), (1, 2), 0), ((), (1, 2), 1)])
        assert decide_xorsat(inst) is False

    def test_empty_true(self):
        assert decide_xorsat(empty_instance()) is True

    def test_known_instance_existential_system_solvable(self, false_instance):
        assert decide_xorsat(false_instance) is True
        assert brute_exists_y(false_instance) is True

    def test_matches_existential_bruteforce(self):
        for inst in tiny_corpus(400, master=31):
            assert decide_xorsat(inst) == brute_exists_y(inst), inst.clauses


class TestDecideMaxrank:
    def test_empty_vacuous(self):
        assert decide_maxrank(empty_instance()) is True

    def test_duplicate_clause_rows(self):
        inst = QxorInstance.from_clauses(1, 3, 1, 2,
                                         [((1,), (1, 2), 0), ((1,), (1, 2), 1)])
        assert decide_maxrank(inst) is False

    def test_independent_rows(self):
        inst = QxorInstance.from_clauses(0, 3, 0, 2,
                                         [((), (1, 2), 0), ((), (2, 3), 0)])
        assert decide_maxrank(inst) is True


class TestBruteForce:
    def test_known_false_instance(self, false_instance):
        assert brute_force_decide(false_instance) is False

    def test_empty_true(self):
        assert brute_force_decide(empty_instance()) is True

    def test_guard(self):
        inst = QxorInstance.from_clauses(17, 2, 1, 2, [])
        with pytest.raises(CapabilityError):
            brute_force_decide(inst)

    def test_agrees_with_clause_level_oracle(self):
        for inst in tiny_corpus(300, master=77):
            assert brute_force_decide(inst) == brute_forall_exists(inst)


class TestOracleEquivalence:
    def test_gauss_matches_bruteforce_on_corpus(self):
        for inst in tiny_corpus(1500):
            assert decide_qxor(inst) == brute_force_decide(inst), inst.clauses


class TestSandwich:
    def test_implication_chain_on_random_instances(self):
        for inst in tiny_corpus(800, master=54321):
            v = analyze(inst)
            assert not v.maxrank or v.qxor
            assert not v.qxor or v.xorsat

    def test_chain_on_medium_instances(self):
        for seed in range(60):
            inst = generate(GenConfig(20, 40, 25, 2, 3, seed))
            v = analyze(inst)
            assert not v.maxrank or v.qxor
            assert not v.qxor or v.xorsat


class TestMonotoneFalsity:
    @settings(deadline=None, max_examples=40)
    @given(st.integers(0, 2 ** 62))
    def test_appending_clauses_never_revives_truth(self, seed):
        inst = generate(GenConfig(2, 3, 8, 1, 2, seed))
        previous = True
        for prefix in range(inst.L + 1):
            sub = QxorInstance(inst.m, inst.n, inst.a, inst.e,
                               inst.univ0[:prefix], inst.exist0[:prefix],
                               inst.rhs[:prefix])
            now = decide_qxor(sub)
            assert previous or not now
            previous = now
