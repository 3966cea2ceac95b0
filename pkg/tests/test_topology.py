import itertools
import random

import pytest

from parcal.partition import HalfGraphConfig, find_config, verify_config
from parcal.topology import (MODES, DiscreteFamily, ExtractionInvariantError,
                             FiniteSpace, SeparationSystem, TopologyError,
                             closure, coloring_from_system, density,
                             discrete_from_config, generate_system,
                             hL_number, hL_witness, hereditary_density,
                             invariants_report, is_discrete, spread,
                             subspace)


@pytest.fixture(scope="module")
def sier():
    # two points, one proper open
    return FiniteSpace.from_basis([0, 1], [{0}])


class TestFiniteSpace:
    def test_opens_closed_under_ops(self, sier):
        for a in sier.opens:
            for b in sier.opens:
                assert a | b in sier.opens
                assert a & b in sier.opens
        assert frozenset() in sier.opens
        assert frozenset(sier.points) in sier.opens

    def test_basis_outside_points(self):
        with pytest.raises(TopologyError):
            FiniteSpace.from_basis([0, 1], [{5}])

    def test_doc_round_trip(self, sier):
        again = FiniteSpace.from_doc(sier.to_doc())
        assert again.opens == sier.opens


class TestClosure:
    def test_examples(self, sier):
        assert closure({0}, sier) == {0, 1}
        assert closure(set(), sier) == frozenset()
        disc = FiniteSpace.discrete(4)
        assert closure({1, 3}, disc) == {1, 3}

    def test_operator_laws(self):
        rng = random.Random(1)
        for _ in range(30):
            n = rng.randint(1, 5)
            basis = [frozenset(p for p in range(n) if rng.random() < 0.5)
                     for _ in range(rng.randint(0, 4))]
            space = FiniteSpace.from_basis(range(n), basis)
            subsets = [frozenset(s) for r in range(n + 1)
                       for s in itertools.combinations(range(n), r)]
            for s in subsets:
                cl = closure(s, space)
                assert s <= cl
                assert closure(cl, space) == cl
            for s in subsets:
                for t in subsets:
                    if s <= t:
                        assert closure(s, space) <= closure(t, space)


class TestInvariants:
    def test_discrete_space(self):
        disc = FiniteSpace.discrete(4)
        assert density(disc) == 4 and spread(disc) == 4

    def test_indiscrete_space(self):
        ind = FiniteSpace.indiscrete(4)
        assert density(ind) == 1 and spread(ind) == 1

    def test_sier(self, sier):
        assert density(sier) == 1 and spread(sier) == 1

    def test_is_discrete(self, sier):
        disc = FiniteSpace.discrete(3)
        ind = FiniteSpace.indiscrete(3)
        assert is_discrete({0}, ind)
        assert is_discrete({0, 1, 2}, disc)
        assert not is_discrete({0, 1}, ind)

    def test_hL_witness(self):
        disc = FiniteSpace.discrete(3)
        got = hL_witness(disc, 3)
        assert got is not None and len(got) == 3
        for k, (x, u) in enumerate(got):
            assert x in u
            for x2, _ in got[k + 1:]:
                assert x2 not in u
        assert hL_witness(FiniteSpace.indiscrete(3), 2) is None

    def test_witness_length_at_least_spread(self):
        rng = random.Random(2)
        for _ in range(20):
            n = rng.randint(1, 5)
            basis = [frozenset(p for p in range(n) if rng.random() < 0.5)
                     for _ in range(rng.randint(0, 4))]
            space = FiniteSpace.from_basis(range(n), basis)
            s = spread(space)
            assert hL_number(space) >= s
            assert density(space) >= 1
            rep = invariants_report(space)
            assert rep["spread_plus"] == s + 1
            assert rep["hd"] >= rep["density"]

    def test_t1_finite_is_discrete(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(1, 5)
            basis = [frozenset(p for p in range(n) if rng.random() < 0.5)
                     for _ in range(rng.randint(0, 5))]
            space = FiniteSpace.from_basis(range(n), basis)
            t1 = all(
                any(x in o and y not in o for o in space.opens)
                for x in space.points for y in space.points if x != y)
            if t1:
                assert spread(space) == n

    def test_hereditary_density_via_subspaces(self, sier):
        assert hereditary_density(sier) == 1
        two = subspace(FiniteSpace.discrete(4), {1, 2})
        assert density(two) == 2


def nested_interval_system() -> SeparationSystem:
    # deterministic rightward march with full-reach small opens
    size = 26
    carrier = range(size)
    xs = tuple(1 + 3 * a for a in range(8))
    u1 = [frozenset(range(0 if a == 0 else xs[a - 1] + 1, size))
          for a in range(8)]
    u2 = [frozenset(range(x, size)) for x in xs]
    basis = [frozenset(range(a, b + 1)) for a in range(size)
             for b in range(a, size)]
    return SeparationSystem.make(carrier, xs, u1, u2, basis)


class TestSeparationSystem:
    def test_invariants(self):
        sys_ = nested_interval_system()
        assert sys_.violations("density") == []

    def test_closure_oracle(self):
        sys_ = nested_interval_system()
        got = sys_.cl({3, 7})
        assert got == frozenset(range(3, 8))
        assert sys_.cl(got) == got
        assert sys_.cl(frozenset()) <= got

    def test_doc_round_trip(self):
        sys_ = nested_interval_system()
        assert SeparationSystem.from_doc(sys_.to_doc()) == sys_

    def test_mode_violations(self):
        sys_ = nested_interval_system()
        # full-reach large opens meet later points, breaking lindelof mode
        assert sys_.violations("lindelof") != []

    def test_coloring_rules(self):
        sys_ = nested_interval_system()
        col = coloring_from_system(sys_, "density")
        for a, b in itertools.combinations(range(len(sys_.xs)), 2):
            assert col.get(a, b) == (1 if sys_.xs[b] in sys_.u2[a] else 0)

    def test_disjoint_small_opens_give_zero(self):
        carrier = range(12)
        xs = (1, 4, 7, 10)
        u2 = [frozenset({x}) for x in xs]
        u1 = [frozenset(range(0 if a == 0 else xs[a - 1] + 1, 12))
              for a in range(4)]
        basis = [frozenset(range(a, b + 1)) for a in range(12)
                 for b in range(a, 12)]
        sys_ = SeparationSystem.make(carrier, xs, u1, u2, basis)
        col = coloring_from_system(sys_, "density")
        assert set(col.values) == {0}


class TestDiscreteFromConfig:
    def test_case1_disjoint(self):
        carrier = range(12)
        xs = (1, 4, 7, 10)
        u2 = [frozenset({x}) for x in xs]
        u1 = [frozenset(range(0 if a == 0 else xs[a - 1] + 1, 12))
              for a in range(4)]
        basis = [frozenset(range(a, b + 1)) for a in range(12)
                 for b in range(a, 12)]
        sys_ = SeparationSystem.make(carrier, xs, u1, u2, basis)
        col = coloring_from_system(sys_, "density")
        cfg = find_config(col, 3, "mixed")
        assert cfg is not None and cfg.epsilon == 0
        fam = discrete_from_config(sys_, cfg, "density")
        assert fam.violations() == []
        assert [y for y, _ in fam.pairs] == [xs[a] for a in cfg.alphas]

    def test_case2_nested_intervals(self):
        sys_ = nested_interval_system()
        col = coloring_from_system(sys_, "density")
        cfg = find_config(col, 4, "mixed")
        assert cfg is not None and cfg.epsilon == 1
        fam = discrete_from_config(sys_, cfg, "density")
        assert fam.violations() == []
        assert len(fam.pairs) == 2
        for y, u3 in fam.pairs:
            assert y in u3

    def test_wrong_config_rejected(self):
        sys_ = nested_interval_system()
        cfg = HalfGraphConfig("mixed", 0, (0, 1, 2), ())
        with pytest.raises(TopologyError):
            discrete_from_config(sys_, cfg, "density")

    def test_round_trip_both_modes(self):
        rng = random.Random(5)
        for mode in MODES:
            for _ in range(200):
                sys_ = generate_system(rng, mode)
                assert sys_.violations(mode) == []
                col = coloring_from_system(sys_, mode)
                cfg = find_config(col, 2, "mixed")
                assert cfg is not None
                fam = discrete_from_config(sys_, cfg, mode)
                assert fam.violations() == []

    def test_family_violations_detected(self):
        fam = DiscreteFamily(((0, frozenset({0, 1})), (1, frozenset({1}))))
        assert fam.violations() != []
