"""Doubled colorings over labeled vertices and the two extraction routes.

Doubling a coloring folds the lexicographic order of the vertex labels into
the color: the doubled color is twice the original color, plus one exactly
on label-increasing pairs.  A vertex set on which the doubled coloring
shows at most two values then yields either a half-graph witness or a
monochromatic label-increasing set, by splitting the label prefix tree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from parcal.core import find_incomparable_pair, lex_compare, Lex, \
    longest_lex_increasing
from parcal.partition import Coloring, HalfGraphConfig, verify_config


class ReductionError(ValueError):
    pass


class ValueHypothesisError(ReductionError):
    """The doubled coloring shows too many values, or the wrong parities."""


class ExtractionSizeError(ReductionError):
    """The vertex set is too small for the requested output length."""

    def __init__(self, message: str, achieved: int, needed: int):
        self.achieved = achieved
        self.needed = needed
        super().__init__(f"{message} (achieved {achieved}, needed {needed})")


@dataclass(frozen=True)
class LabeledColoring:
    """Coloring together with one distinct equal-length 0/1 label per vertex."""

    coloring: Coloring
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.coloring.n:
            raise ReductionError("one label per vertex")
        if len(set(self.labels)) != len(self.labels):
            raise ReductionError("labels must be pairwise distinct")
        lengths = {len(s) for s in self.labels}
        if len(lengths) > 1:
            raise ReductionError("labels must share one length")
        if any(ch not in "01" for s in self.labels for ch in s):
            raise ReductionError("labels must be 0/1 strings")

    def to_doc(self) -> dict:
        return {"coloring": self.coloring.to_doc(),
                "labels": list(self.labels)}

    @classmethod
    def from_doc(cls, doc) -> "LabeledColoring":
        return cls(Coloring.from_doc(doc["coloring"]),
                   tuple(doc["labels"]))


def build_d(lc: LabeledColoring) -> Coloring:
    """The doubled coloring: twice the color, plus one on increasing pairs."""
    labels = lc.labels

    def double(i: int, j: int) -> int:
        inc = lex_compare(labels[i], labels[j]) is Lex.LESS
        return 2 * lc.coloring.get(i, j) + (1 if inc else 0)

    return Coloring.from_function(lc.coloring.n, 2 * lc.coloring.colors,
                                  double)


def _doubled_values(lc: LabeledColoring, universe) -> list[int]:
    d = build_d(lc)
    vals = {d.get(a, b) for k, a in enumerate(universe)
            for b in universe[k + 1:]}
    if len(vals) > 2:
        raise ValueHypothesisError(
            f"doubled coloring shows {len(vals)} values on the vertex set")
    return sorted(vals)


def _interleave_groups(universe, in_first, m: int) -> tuple[tuple, tuple]:
    """Greedy index-interleave: alpha from the first group, beta from the second."""
    alphas, betas = [], []
    want_alpha = True
    for v in universe:
        if want_alpha and in_first(v):
            alphas.append(v)
            want_alpha = False
        elif not want_alpha and not in_first(v):
            betas.append(v)
            want_alpha = True
            if len(betas) == m:
                break
    return tuple(alphas[:len(betas)]), tuple(betas)


def extract_polarized(lc: LabeledColoring, universe, m: int) -> HalfGraphConfig:
    """Mixed-variant witness from a set with at most two doubled values.

    One value, or both colors zero: a homogeneous increasing set.  A
    positive odd-decoded color: interleave label groups under the two sides
    of a prefix split, smaller side first.  A positive even-decoded color
    with odd-decoded zero: the same interleave with the sides swapped, so
    the cross pairs decrease and carry the even value; if the groups are
    too thin, fall back to a label-increasing homogeneous set.  The witness
    is re-verified before returning.
    """
    universe = tuple(sorted(universe))
    if m < 1:
        raise ReductionError("need at least one output pair")
    vals = _doubled_values(lc, universe)
    cfg = _extract_cases(lc, universe, m, vals)
    if not verify_config(lc.coloring, cfg):
        raise ReductionError("internal: extracted witness failed verification")
    return cfg


def _extract_cases(lc, universe, m, vals) -> HalfGraphConfig:
    labels = lc.labels
    if not vals:
        # no pairs at all: only the vacuous homogeneous case can apply
        return _homogeneous_head(universe, m)
    evens = [v for v in vals if v % 2 == 0]
    odds = [v for v in vals if v % 2 == 1]
    if len(vals) == 2 and (not evens or not odds):
        raise ValueHypothesisError(
            "two doubled values of equal parity: the labels are monotone "
            "on the set, no split is available")

    if len(vals) == 1:
        eps = vals[0] // 2
        if eps == 0:
            return _homogeneous_head(universe, m)
        return _any_interleave(universe, m, eps)

    eps0 = evens[0] // 2
    eps1 = (odds[0] - 1) // 2
    if eps0 == 0 and eps1 == 0:
        return _homogeneous_head(universe, m)

    pair = find_incomparable_pair([labels[v] for v in universe],
                                  min_count=m)
    if pair is None:
        raise ExtractionSizeError(
            "no prefix split heads enough labels", 0, m)
    lo, hi = pair

    if eps1 >= 1:
        alphas, betas = _interleave_groups(
            universe, lambda v: labels[v].startswith(lo), m)
        if len(betas) < m:
            raise ExtractionSizeError("prefix groups do not interleave",
                                      len(betas), m)
        return HalfGraphConfig("mixed", eps1, alphas, betas)

    # odd value decodes to 0: decreasing cross pairs carry the even color
    alphas, betas = _interleave_groups(
        universe, lambda v: labels[v].startswith(hi), m)
    if len(betas) >= m:
        return HalfGraphConfig("mixed", eps0, alphas, betas)
    lis = longest_lex_increasing([labels[v] for v in universe])
    if len(lis) >= m:
        return HalfGraphConfig("mixed", 0,
                               tuple(universe[i] for i in lis[:m]), ())
    raise ExtractionSizeError("prefix groups do not interleave",
                              max(len(betas), len(lis)), m)


def _homogeneous_head(universe, m) -> HalfGraphConfig:
    if len(universe) < m:
        raise ExtractionSizeError("vertex set smaller than request",
                                  len(universe), m)
    return HalfGraphConfig("mixed", 0, tuple(universe[:m]), ())


def _any_interleave(universe, m, eps) -> HalfGraphConfig:
    if len(universe) < 2 * m:
        raise ExtractionSizeError("vertex set smaller than request",
                                  len(universe), 2 * m)
    head = universe[:2 * m]
    return HalfGraphConfig("mixed", eps, head[0::2], head[1::2])


def extract_ramsey(lc: LabeledColoring, universe,
                   g: int) -> tuple[tuple[int, ...], int]:
    """Label-increasing monochromatic subset from a two-value set.

    Returns the chosen vertices (index- and label-increasing) and the
    constant color, which is the one decoded from the odd doubled value
    since increasing pairs carry odd values.
    """
    universe = tuple(sorted(universe))
    if g < 1:
        raise ReductionError("need at least one vertex")
    vals = _doubled_values(lc, universe)
    odds = [v for v in vals if v % 2 == 1]
    lis = longest_lex_increasing([lc.labels[v] for v in universe])
    if len(lis) < g:
        raise ExtractionSizeError("no label-increasing run long enough",
                                  len(lis), g)
    chosen = tuple(universe[i] for i in lis[:g])
    if odds:
        color = (odds[0] - 1) // 2
    elif vals:
        color = vals[0] // 2
    else:
        color = 0
    for k, a in enumerate(chosen):
        for b in chosen[k + 1:]:
            if lc.coloring.get(a, b) != color:
                raise ReductionError(
                    "internal: extracted set is not monochromatic")
    return chosen, color


# -- instance generation -------------------------------------------------------

SHAPES = ("constant", "two-value", "zero-zero", "odd-zero")


@dataclass(frozen=True)
class ReductionInstance:
    """Generated labeled coloring with a designated two-value vertex set."""

    lc: LabeledColoring
    universe: tuple[int, ...]
    m: int
    g: int
    shape: str


def generate_instance(rng: random.Random,
                      colors: int = 3,
                      label_len: int = 7) -> ReductionInstance:
    """One seeded instance satisfying the two-value hypothesis by construction.

    The designated set alternates between two prefix groups; colors on its
    pairs are set from the pair's label orientation, which pins the doubled
    coloring to at most two values.  Labels outside the set and colors on
    other pairs are random.
    """
    shape = rng.choice(SHAPES)
    m = rng.randint(1, 3)
    size = 2 * m + 2
    w = "".join(rng.choice("01") for _ in range(rng.randint(0, 2)))
    lo, hi = w + "0", w + "1"
    suffix_len = label_len - len(lo)
    all_suffixes = [format(k, f"0{suffix_len}b") for k in range(2 ** suffix_len)]
    rng.shuffle(all_suffixes)
    lo_suffixes = sorted(all_suffixes[:size])
    hi_suffixes = sorted(all_suffixes[size:2 * size])

    extra = rng.randint(0, 2)
    n = size + extra
    labels: list[str | None] = [None] * n
    universe = tuple(sorted(rng.sample(range(n), size)))

    if shape == "constant":
        run = iter(sorted(lo + s for s in lo_suffixes))
        for v in universe:
            labels[v] = next(run)
    else:
        lo_run, hi_run = iter(lo_suffixes), iter(hi_suffixes)
        for k, v in enumerate(universe):
            if k % 2 == 0:
                labels[v] = lo + next(lo_run)
            else:
                labels[v] = hi + next(hi_run)

    used = {s for s in labels if s is not None}
    pool = (s for k in range(2 ** label_len)
            if (s := format(k, f"0{label_len}b")) not in used)
    for v in range(n):
        if labels[v] is None:
            labels[v] = next(pool)

    if shape == "constant":
        eps_inc = eps_dec = rng.randrange(colors)
    elif shape == "zero-zero":
        eps_inc = eps_dec = 0
    elif shape == "odd-zero":
        eps_inc, eps_dec = 0, rng.randint(1, colors - 1)
    else:
        eps_inc = rng.randint(1, colors - 1)
        eps_dec = rng.randrange(colors)

    uni = set(universe)

    def color(i: int, j: int) -> int:
        if i in uni and j in uni:
            inc = lex_compare(labels[i], labels[j]) is Lex.LESS
            return eps_inc if inc else eps_dec
        return rng.randrange(colors)

    lc = LabeledColoring(
        Coloring.from_function(n, colors, color), tuple(labels))
    lis = longest_lex_increasing([labels[v] for v in universe])
    g = max(1, min(len(lis), 2 * m))
    return ReductionInstance(lc, universe, m, g, shape)
