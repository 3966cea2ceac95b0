"""Half-graph configurations and exhaustive pair-coloring relation checks.

A coloring assigns a color to every unordered pair of an initial segment of
the integers.  The plain relation asks, per coloring, for an interleaved
sequence of pairs monochromatic on the forward cross pairs; the mixed
relation additionally accepts a color-0 homogeneous increasing set when the
color is 0.  Checks are exhaustive under a cap and seeded-sampled above it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

VARIANTS = ("plain", "mixed")

DEFAULT_CAP = 1 << 25


class PartitionError(ValueError):
    pass


class CapExceededError(PartitionError):
    """Search space exceeds the cap; pass a sample size to switch modes."""


@lru_cache(maxsize=128)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=128)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(_pairs(n))}


@dataclass(frozen=True)
class Coloring:
    """Symmetric color table on pairs from [0, n), stored pair-lex order."""

    n: int
    colors: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(_pairs(self.n)):
            raise PartitionError("value vector length must be C(n, 2)")
        if any(not 0 <= v < self.colors for v in self.values):
            raise PartitionError("colors must lie in [0, colors)")

    def get(self, i: int, j: int) -> int:
        if i == j:
            raise PartitionError("pairs are unordered and irreflexive")
        if i > j:
            i, j = j, i
        return self.values[_pair_index(self.n)[(i, j)]]

    @classmethod
    def from_function(cls, n: int, colors: int, fn) -> "Coloring":
        return cls(n, colors, tuple(fn(i, j) for i, j in _pairs(n)))

    @classmethod
    def constant(cls, n: int, colors: int, color: int = 0) -> "Coloring":
        return cls.from_function(n, colors, lambda i, j: color)

    @classmethod
    def from_code(cls, n: int, colors: int, code: int) -> "Coloring":
        vals = []
        for _ in _pairs(n):
            vals.append(code % colors)
            code //= colors
        return cls(n, colors, tuple(vals))

    def code(self) -> int:
        out = 0
        for v in reversed(self.values):
            out = out * self.colors + v
        return out

    def to_doc(self) -> dict:
        return {"n": self.n, "colors": self.colors,
                "values": list(self.values)}

    @classmethod
    def from_doc(cls, doc) -> "Coloring":
        return cls(int(doc["n"]), int(doc["colors"]),
                   tuple(int(v) for v in doc["values"]))


@dataclass(frozen=True)
class HalfGraphConfig:
    """Witness for one coloring: color, alpha row, beta row, variant."""

    variant: str
    epsilon: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise PartitionError(f"unknown variant {self.variant!r}")

    def to_doc(self) -> dict:
        return {"variant": self.variant, "epsilon": self.epsilon,
                "alphas": list(self.alphas), "betas": list(self.betas)}

    @classmethod
    def from_doc(cls, doc) -> "HalfGraphConfig":
        return cls(doc["variant"], int(doc["epsilon"]),
                   tuple(int(a) for a in doc["alphas"]),
                   tuple(int(b) for b in doc["betas"]))


def _interleaved(alphas, betas) -> bool:
    if len(alphas) != len(betas):
        return False
    seq = [v for pair in zip(alphas, betas) for v in pair]
    return all(a < b for a, b in zip(seq, seq[1:]))


def verify_config(c: Coloring, cfg: HalfGraphConfig) -> bool:
    """Re-check a witness against a coloring.

    Malformed witnesses (out-of-range vertices, bad color index, broken
    row shapes) raise; a well-formed witness that merely fails the color
    clauses returns False.
    """
    pts = cfg.alphas + cfg.betas
    if any(not 0 <= v < c.n for v in pts):
        raise PartitionError("config vertices outside the coloring")
    if not 0 <= cfg.epsilon < c.colors:
        raise PartitionError("config color outside the palette")
    if not cfg.alphas:
        raise PartitionError("config must place at least one vertex")
    m = len(cfg.alphas)
    if cfg.variant == "mixed" and cfg.epsilon == 0:
        if any(a >= b for a, b in zip(cfg.alphas, cfg.alphas[1:])):
            return False
        return all(c.get(cfg.alphas[i], cfg.alphas[j]) == 0
                   for i in range(m) for j in range(i + 1, m))
    if not _interleaved(cfg.alphas, cfg.betas):
        return False
    return all(c.get(cfg.alphas[i], cfg.betas[j]) == cfg.epsilon
               for i in range(m) for j in range(i, m))


def find_config(c: Coloring, m: int, variant: str) -> HalfGraphConfig | None:
    """First witness in (color, vertex-tuple) lexicographic order, or None."""
    if m < 1:
        raise PartitionError("need at least one pair")
    if variant not in VARIANTS:
        raise PartitionError(f"unknown variant {variant!r}")
    for eps in range(c.colors):
        if variant == "mixed" and eps == 0:
            got = _find_homogeneous_increasing(c, m, 0)
            if got is not None:
                return HalfGraphConfig("mixed", 0, got, ())
            continue
        got = _find_interleaved(c, m, eps)
        if got is not None:
            alphas = got[0::2]
            betas = got[1::2]
            return HalfGraphConfig(variant, eps, alphas, betas)
    return None


def _find_homogeneous_increasing(c: Coloring, m: int,
                                 color: int) -> tuple[int, ...] | None:
    def rec(chosen: list[int], start: int):
        if len(chosen) == m:
            return tuple(chosen)
        for v in range(start, c.n):
            if all(c.get(u, v) == color for u in chosen):
                chosen.append(v)
                got = rec(chosen, v + 1)
                if got is not None:
                    return got
                chosen.pop()
        return None

    return rec([], 0)


def _find_interleaved(c: Coloring, m: int,
                      eps: int) -> tuple[int, ...] | None:
    # positions alternate alpha, beta, alpha, beta, ...
    def rec(seq: list[int], start: int):
        if len(seq) == 2 * m:
            return tuple(seq)
        placing_beta = len(seq) % 2 == 1
        for v in range(start, c.n):
            if placing_beta:
                # v is beta_j: all earlier alphas must match the color
                if any(c.get(seq[2 * i], v) != eps
                       for i in range((len(seq) + 1) // 2)):
                    continue
            seq.append(v)
            got = rec(seq, v + 1)
            if got is not None:
                return got
            seq.pop()
        return None

    return rec([], 0)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of an exhaustive or sampled per-coloring search."""

    holds: bool
    counterexample: Coloring | None
    mode: str
    checked: int

    def to_doc(self) -> dict:
        return {
            "holds": self.holds,
            "mode": self.mode,
            "checked": self.checked,
            "counterexample": (None if self.counterexample is None
                               else self.counterexample.to_doc()),
        }


def _coloring_stream(n: int, colors: int, cap: int, sample: int | None,
                     seed: int | None) -> tuple[Iterator[Coloring], str, int]:
    total = colors ** len(_pairs(n))
    if total <= cap:
        return (Coloring.from_code(n, colors, code)
                for code in range(total)), "exhaustive", total
    if sample is None:
        raise CapExceededError(
            f"{total} colorings exceed cap {cap}; pass a sample size")
    rng = random.Random(seed)
    return (Coloring.from_code(n, colors, rng.randrange(total))
            for _ in range(sample)), "sampled", sample


def relation_holds(n: int, m: int, colors: int, variant: str,
                   cap: int = DEFAULT_CAP, sample: int | None = None,
                   seed: int | None = None) -> SearchOutcome:
    """Does every coloring admit a witness?  First counterexample otherwise."""
    stream, mode, count = _coloring_stream(n, colors, cap, sample, seed)
    for c in stream:
        if find_config(c, m, variant) is None:
            return SearchOutcome(False, c, mode, count)
    return SearchOutcome(True, None, mode, count)


def ramsey_holds(n: int, m: int, colors: int, cap: int = DEFAULT_CAP,
                 sample: int | None = None,
                 seed: int | None = None) -> SearchOutcome:
    """Does every coloring contain a monochromatic m-set?"""
    subsets = tuple(itertools.combinations(range(n), m))
    pair_lists = tuple(tuple(_pair_index(n)[p]
                             for p in itertools.combinations(s, 2))
                       for s in subsets)
    stream, mode, count = _coloring_stream(n, colors, cap, sample, seed)
    for c in stream:
        vals = c.values
        if not any(len({vals[k] for k in pl}) <= 1 for pl in pair_lists):
            return SearchOutcome(False, c, mode, count)
    return SearchOutcome(True, None, mode, count)


def square_bracket_holds(n: int, setsize: int, colors: int, bound: int = 2,
                         cap: int = DEFAULT_CAP, sample: int | None = None,
                         seed: int | None = None) -> SearchOutcome:
    """Does every coloring have a set of the given size showing few colors?"""
    subsets = tuple(itertools.combinations(range(n), setsize))
    pair_lists = tuple(tuple(_pair_index(n)[p]
                             for p in itertools.combinations(s, 2))
                       for s in subsets)
    stream, mode, count = _coloring_stream(n, colors, cap, sample, seed)
    for c in stream:
        vals = c.values
        if not any(len({vals[k] for k in pl}) <= bound for pl in pair_lists):
            return SearchOutcome(False, c, mode, count)
    return SearchOutcome(True, None, mode, count)


def polarized_11_check(rect: Sequence[Sequence[int]],
                       xi: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Constant xi-by-xi sub-rectangle of a rectangular coloring, or None."""
    rows = len(rect)
    cols = len(rect[0]) if rows else 0
    if rows < xi or cols < xi:
        raise PartitionError("rectangle smaller than the requested square")
    for rsub in itertools.combinations(range(rows), xi):
        for csub in itertools.combinations(range(cols), xi):
            cells = {rect[r][c] for r in rsub for c in csub}
            if len(cells) == 1:
                return rsub, csub
    return None
