"""Generator determinism, exact arities and uniformity over the clause space."""

import numpy as np
import pytest
from scipy import stats

from oracles import enumerate_clauses
from qxor.errors import InputError
from qxor.gen import GenConfig, clause_space_size, derive_seed, generate
from qxor.model import serialize


class TestClauseSpaceSize:
    def test_small_enumeration(self):
        assert clause_space_size(3, 7, 1, 2) == 126 == len(enumerate_clauses(3, 7, 1, 2))

    def test_two_clause_space(self):
        assert clause_space_size(1, 2, 1, 2) == 2 == len(enumerate_clauses(1, 2, 1, 2))

    def test_degenerate_binomials(self):
        assert clause_space_size(4, 3, 4, 3) == 2
        assert clause_space_size(0, 1, 0, 1) == 2

    def test_exact_big_integers(self):
        from math import comb
        assert clause_space_size(100, 200, 3, 4) == comb(100, 3) * comb(200, 4) * 2

    def test_arity_overflow_rejected(self):
        with pytest.raises(InputError):
            clause_space_size(3, 7, 4, 2)


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(1, "sweep", 0) == derive_seed(1, "sweep", 0)

    def test_distinct_streams(self):
        assert derive_seed(1, "sweep", 0) != derive_seed(1, "sweep", 1)
        assert derive_seed(1, "sweep", 0) != derive_seed(1, "gen", 0)
        assert derive_seed(1, "sweep", 0) != derive_seed(2, "sweep", 0)

    def test_no_collisions_in_scan(self):
        seen = {derive_seed(42, s, i) for s in ("a", "b", "gen", 0, 1)
                for i in range(2000)}
        assert len(seen) == 5 * 2000

    def test_64_bit_range(self):
        s = derive_seed(2 ** 63, "x", 3)
        assert 0 <= s < 2 ** 64


class TestGenerate:
    def test_empty(self):
        inst = generate(GenConfig(1, 2, 0, 1, 2, 7))
        assert inst.L == 0

    def test_determinism(self):
        cfg = GenConfig(6, 11, 25, 2, 3, 987654321)
        assert generate(cfg) == generate(cfg)
        assert serialize(generate(cfg)) == serialize(generate(cfg))

    def test_different_seeds_differ(self):
        a = generate(GenConfig(6, 11, 25, 2, 3, 1))
        b = generate(GenConfig(6, 11, 25, 2, 3, 2))
        assert a != b

    def test_instances_validate(self):
        for seed in range(30):
            inst = generate(GenConfig(7, 9, 15, 3, 2, seed))
            inst._validate()

    def test_exact_arities_across_configs(self):
        total = 0
        for seed, (m, n, a, e) in enumerate([(4, 6, 2, 2), (1, 3, 1, 3),
                                             (0, 5, 0, 1), (8, 8, 3, 2)]):
            inst = generate(GenConfig(m, n, 2500, a, e, seed))
            assert inst.univ0.shape == (2500, a)
            assert inst.exist0.shape == (2500, e)
            inst._validate()
            total += inst.L
        assert total == 10_000

    def test_invalid_config_rejected(self):
        with pytest.raises(InputError):
            GenConfig(3, 7, 5, 4, 2, 0)
        with pytest.raises(InputError):
            GenConfig(3, 7, 5, 1, 8, 0)
        with pytest.raises(InputError):
            GenConfig(3, 0, 5, 1, 1, 0)

    def test_two_clause_frequencies(self):
        inst = generate(GenConfig(1, 2, 100_000, 1, 2, 2024))
        ones = int(inst.rhs.sum())
        assert abs(ones / 100_000 - 0.5) <= 0.01

    def test_uniform_over_full_clause_space(self):
        # chi-squared goodness of fit over all 126 clauses at the 0.001 level
        m, n, a, e = 3, 7, 1, 2
        space = enumerate_clauses(m, n, a, e)
        index = {cl: i for i, cl in enumerate(space)}
        inst = generate(GenConfig(m, n, 100_000, a, e, 314159))
        counts = np.zeros(len(space), dtype=int)
        for k in range(inst.L):
            key = (tuple(int(i) + 1 for i in inst.univ0[k]),
                   tuple(int(j) + 1 for j in inst.exist0[k]),
                   int(inst.rhs[k]))
            counts[index[key]] += 1
        assert counts.sum() == 100_000
        _, p_value = stats.chisquare(counts)
        assert p_value >= 0.001

    def test_pair_subsets_uniform(self):
        # every 2-subset of 5 equally likely
        inst = generate(GenConfig(0, 5, 50_000, 0, 2, 5150))
        pairs = {}
        for k in range(inst.L):
            key = (int(inst.exist0[k, 0]), int(inst.exist0[k, 1]))
            pairs[key] = pairs.get(key, 0) + 1
        assert len(pairs) == 10
        _, p_value = stats.chisquare(np.array(list(pairs.values())))
        assert p_value >= 0.001
