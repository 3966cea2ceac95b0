import itertools
import random

import pytest

from parcal.core import Lex, lex_compare
from parcal.partition import Coloring, verify_config
from parcal.reductions import (ExtractionSizeError, LabeledColoring,
                               ReductionError, ValueHypothesisError,
                               build_d, extract_polarized, extract_ramsey,
                               generate_instance)


def lc_from(colors, table, labels):
    n = len(labels)
    c = Coloring.from_function(n, colors,
                               lambda i, j: table.get((i, j), 0))
    return LabeledColoring(c, tuple(labels))


class TestLabeledColoring:
    def test_rejects_bad_labels(self):
        c = Coloring.constant(2, 1, 0)
        with pytest.raises(ReductionError):
            LabeledColoring(c, ("0", "0"))
        with pytest.raises(ReductionError):
            LabeledColoring(c, ("0", "01"))
        with pytest.raises(ReductionError):
            LabeledColoring(c, ("0x", "01"))

    def test_doc_round_trip(self):
        lc = lc_from(2, {(0, 1): 1}, ["00", "01"])
        assert LabeledColoring.from_doc(lc.to_doc()) == lc


class TestBuildD:
    def test_increasing_pair(self):
        lc = lc_from(2, {(0, 1): 1}, ["00", "01"])
        assert build_d(lc).get(0, 1) == 3

    def test_decreasing_pair(self):
        lc = lc_from(2, {(0, 1): 0}, ["01", "00"])
        assert build_d(lc).get(0, 1) == 0

    def test_constant_increasing(self):
        lc = lc_from(2, {}, ["00", "01", "10", "11"])
        assert set(build_d(lc).values) == {1}

    def test_parity_law(self):
        rng = random.Random(0)
        for _ in range(50):
            labels = rng.sample([format(k, "04b") for k in range(16)], 5)
            c = Coloring.from_code(5, 3, rng.randrange(3 ** 10))
            d = build_d(LabeledColoring(c, tuple(labels)))
            for i, j in itertools.combinations(range(5), 2):
                assert d.get(i, j) // 2 == c.get(i, j)
                inc = lex_compare(labels[i], labels[j]) is Lex.LESS
                assert d.get(i, j) % 2 == (1 if inc else 0)


class TestExtractPolarized:
    def test_constant_zero(self):
        lc = lc_from(2, {}, ["00", "01", "10", "11"])
        cfg = extract_polarized(lc, (0, 1, 2, 3), 2)
        assert cfg.epsilon == 0 and cfg.alphas == (0, 1)

    def test_constant_positive(self):
        c = Coloring.constant(4, 2, 1)
        lc = LabeledColoring(c, ("00", "01", "10", "11"))
        cfg = extract_polarized(lc, (0, 1, 2, 3), 2)
        assert cfg.epsilon == 1
        assert verify_config(c, cfg)

    def test_alternating_groups(self):
        # vertices alternate prefix groups; cross pairs are colored by
        # orientation, giving a two-value doubled coloring
        labels = ["000", "100", "001", "101", "010", "110"]
        table = {}
        for i, j in itertools.combinations(range(6), 2):
            inc = lex_compare(labels[i], labels[j]) is Lex.LESS
            table[(i, j)] = 2 if inc else 1
        lc = lc_from(3, table, labels)
        cfg = extract_polarized(lc, tuple(range(6)), 2)
        assert cfg.epsilon == 2
        assert verify_config(lc.coloring, cfg)

    def test_swapped_orientation(self):
        # odd value decodes to color 0, even to a positive color: the
        # decreasing cross pairs carry the witness
        labels = ["000", "100", "001", "101", "010", "110"]
        table = {}
        for i, j in itertools.combinations(range(6), 2):
            inc = lex_compare(labels[i], labels[j]) is Lex.LESS
            table[(i, j)] = 0 if inc else 2
        lc = lc_from(3, table, labels)
        cfg = extract_polarized(lc, tuple(range(6)), 2)
        assert cfg.epsilon == 2
        assert verify_config(lc.coloring, cfg)

    def test_three_values_rejected(self):
        c = Coloring.from_function(4, 3, lambda i, j: (i + j) % 3)
        lc = LabeledColoring(c, ("00", "01", "10", "11"))
        with pytest.raises(ValueHypothesisError):
            extract_polarized(lc, (0, 1, 2, 3), 1)

    def test_equal_parity_rejected(self):
        # labels decrease with the index, so every pair is even-valued
        labels = ["11", "10", "01", "00"]
        table = {(0, 1): 1, (2, 3): 1}
        lc = lc_from(2, table, labels)
        with pytest.raises(ValueHypothesisError):
            extract_polarized(lc, (0, 1, 2, 3), 1)

    def test_too_small_reports_counts(self):
        lc = lc_from(2, {}, ["00", "01"])
        with pytest.raises(ExtractionSizeError) as err:
            extract_polarized(lc, (0, 1), 3)
        assert err.value.needed == 3


class TestExtractRamsey:
    def test_increasing_constant(self):
        c = Coloring.constant(4, 3, 2)
        lc = LabeledColoring(c, ("00", "01", "10", "11"))
        assert extract_ramsey(lc, (0, 1, 2, 3), 4) == ((0, 1, 2, 3), 2)

    def test_singleton(self):
        c = Coloring.constant(4, 3, 2)
        lc = LabeledColoring(c, ("00", "01", "10", "11"))
        verts, _ = extract_ramsey(lc, (0, 1, 2, 3), 1)
        assert len(verts) == 1

    def test_decreasing_reports_longest(self):
        c = Coloring.constant(4, 3, 2)
        lc = LabeledColoring(c, ("11", "10", "01", "00"))
        with pytest.raises(ExtractionSizeError) as err:
            extract_ramsey(lc, (0, 1, 2, 3), 2)
        assert err.value.achieved == 1

    def test_color_is_odd_decoded(self):
        labels = ["000", "100", "001", "101"]
        table = {}
        for i, j in itertools.combinations(range(4), 2):
            inc = lex_compare(labels[i], labels[j]) is Lex.LESS
            table[(i, j)] = 2 if inc else 1
        lc = lc_from(3, table, labels)
        verts, color = extract_ramsey(lc, (0, 1, 2, 3), 2)
        assert color == 2
        for a, b in itertools.combinations(verts, 2):
            assert lc.coloring.get(a, b) == 2


class TestRoundTrip:
    def test_thousand_instances(self):
        rng = random.Random(42)
        for _ in range(1000):
            inst = generate_instance(rng)
            cfg = extract_polarized(inst.lc, inst.universe, inst.m)
            assert verify_config(inst.lc.coloring, cfg)
            verts, color = extract_ramsey(inst.lc, inst.universe, inst.g)
            assert len(verts) == inst.g
            for a, b in itertools.combinations(verts, 2):
                assert inst.lc.coloring.get(a, b) == color

    def test_orientation_split_exclusion(self):
        # on any set whose labels realize both orientations, a two-value
        # doubled restriction must show one even and one odd value
        rng = random.Random(43)
        checked = 0
        for _ in range(300):
            inst = generate_instance(rng)
            labels = [inst.lc.labels[v] for v in inst.universe]
            ups = any(lex_compare(a, b) is Lex.LESS
                      for a, b in itertools.combinations(labels, 2))
            downs = any(lex_compare(a, b) is Lex.GREATER
                        for a, b in itertools.combinations(labels, 2))
            if not (ups and downs):
                continue
            d = build_d(inst.lc)
            vals = {d.get(a, b) for a, b in
                    itertools.combinations(inst.universe, 2)}
            assert len(vals) <= 2
            assert any(v % 2 == 0 for v in vals)
            assert any(v % 2 == 1 for v in vals)
            checked += 1
        assert checked > 100

    def test_generator_determinism(self):
        a = [generate_instance(random.Random(9)).lc for _ in range(1)]
        b = [generate_instance(random.Random(9)).lc for _ in range(1)]
        assert a == b
