"""Parameter sets, block machinery, sunflower search, and 0/1-string utilities.

The ground set is the integer interval [0, mu).  Each width in ``thetas``
slices it into aligned blocks of that width; ``budgets`` cap how much of any
single block a partial assignment may touch.  Widths must form a divisor
chain so that finer blocks tile coarser ones exactly.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class Lex(enum.Enum):
    """Outcome of comparing two 0/1 strings position by position."""

    LESS = "less"
    GREATER = "greater"
    PREFIX = "prefix"
    EQUAL = "equal"


@dataclass(frozen=True)
class Block:
    """Aligned interval [width*index, width*(index+1)) of the ground set."""

    width: int
    index: int

    @property
    def start(self) -> int:
        return self.width * self.index

    @property
    def stop(self) -> int:
        return self.width * (self.index + 1)

    def members(self) -> range:
        return range(self.start, self.stop)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members())

    def __contains__(self, i: int) -> bool:
        return self.start <= i < self.stop


@dataclass(frozen=True)
class ParamSet:
    """Ground-set size with a divisor chain of block widths and per-width budgets.

    ``thetas`` runs from ``lam`` up to ``mu``; ``budgets[k]`` is the cap for
    width ``thetas[k]`` (strictly fewer than that many points of any single
    block of that width may be used).
    """

    lam: int
    mu: int
    thetas: tuple[int, ...]
    budgets: tuple[int, ...]

    @classmethod
    def make(cls, lam: int, mu: int, thetas: Sequence[int],
             budgets: Mapping[int, int]) -> "ParamSet":
        ts = tuple(int(t) for t in thetas)
        return cls(int(lam), int(mu), ts,
                   tuple(int(budgets[t]) for t in ts))

    @classmethod
    def from_config(cls, doc: Mapping) -> "ParamSet":
        budgets = {int(k): int(v) for k, v in doc["budgets"].items()}
        return cls.make(doc["lambda"], doc["mu"], doc["theta_list"], budgets)

    def to_config(self) -> dict:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "theta_list": list(self.thetas),
            "budgets": {str(t): b for t, b in zip(self.thetas, self.budgets)},
        }

    def budget_of(self, theta: int) -> int:
        try:
            return self.budgets[self.thetas.index(theta)]
        except ValueError:
            raise KeyError(f"{theta} is not a listed width") from None

    def require_width(self, kappa: int) -> None:
        if kappa not in self.thetas:
            raise KeyError(f"{kappa} is not a listed width")

    def require_valid(self) -> None:
        bad = validate_params(self)
        if bad:
            raise ValueError("invalid parameter set: " + "; ".join(bad))


#: Validation codes, in report order.
PARAM_CHECKS = (
    "positivity",
    "endpoints",
    "width-increasing",
    "nesting",
    "budget-alignment",
    "budget-increasing",
    "budget-above-width",
    "budget-below-lower-width",
    "base-budget",
)


def validate_params(ps: ParamSet) -> list[str]:
    """Return the violated invariant clauses of a parameter set.

    The report is data, not an exception: an empty list means valid.
    """
    out = []
    vals = (ps.lam, ps.mu) + ps.thetas + ps.budgets
    if not all(isinstance(v, int) and v >= 1 for v in vals) or not ps.thetas:
        out.append("positivity: all entries must be positive integers")
        return out
    if ps.thetas[0] != ps.lam or ps.thetas[-1] != ps.mu:
        out.append("endpoints: widths must start at lam and end at mu")
    if any(a >= b for a, b in zip(ps.thetas, ps.thetas[1:])):
        out.append("width-increasing: widths must be strictly increasing")
    if any(b % a for a, b in zip(ps.thetas, ps.thetas[1:])):
        out.append("nesting: each width must divide its successor")
    if len(ps.budgets) != len(ps.thetas):
        out.append("budget-alignment: one budget per width")
        return out
    if any(a >= b for a, b in zip(ps.budgets, ps.budgets[1:])):
        out.append("budget-increasing: budgets must be strictly increasing")
    for t, b in zip(ps.thetas, ps.budgets):
        if b > t:
            out.append(f"budget-above-width: budget {b} exceeds width {t}")
        low = [k for k in ps.thetas if k < t]
        if low and b < max(low):
            out.append(
                f"budget-below-lower-width: budget {b} of width {t} is below "
                f"smaller width {max(low)}")
    if ps.thetas[0] == ps.lam and ps.budgets[0] != ps.lam:
        out.append("base-budget: the budget of the least width must equal lam")
    return out


def class_of(i: int, kappa: int, ps: ParamSet) -> Block:
    """The width-``kappa`` block containing point ``i``."""
    ps.require_width(kappa)
    if not 0 <= i < ps.mu:
        raise ValueError(f"point {i} outside [0, {ps.mu})")
    return Block(kappa, i // kappa)


def class_below(i: int, kappa: int, ps: ParamSet) -> frozenset[int]:
    """Points related to ``i`` below level ``kappa``.

    This is the union of the listed-width relations strictly under ``kappa``;
    when no listed width sits below, points are related only to themselves.
    """
    if not 0 <= i < ps.mu:
        raise ValueError(f"point {i} outside [0, {ps.mu})")
    lower = [t for t in ps.thetas if t < kappa]
    if not lower:
        return frozenset((i,))
    return class_of(i, max(lower), ps).member_set()


def kappa_of(i: int, j: int, ps: ParamSet) -> int:
    """Smallest listed width whose blocks put ``i`` and ``j`` together."""
    for kappa in ps.thetas:
        if i // kappa == j // kappa:
            return kappa
    raise ValueError(f"points {i}, {j} outside [0, {ps.mu})")


def partial_sup(kappa: int, ps: ParamSet) -> int:
    """Minimum budget over widths strictly above ``kappa``; ``mu`` at the top."""
    ps.require_width(kappa)
    if kappa == ps.mu:
        return ps.mu
    return min(b for t, b in zip(ps.thetas, ps.budgets) if t > kappa)


def grows(block: Block, a: Iterable[int], b: Iterable[int]) -> bool:
    """Whether a block represented in ``a`` gains members passing to ``b``.

    Requires a ⊆ b; blocks first represented in ``b`` never grow.
    """
    sa, sb = set(a), set(b)
    if not sa <= sb:
        raise ValueError("first set must be contained in the second")
    ia = sa & set(block.members())
    return bool(ia) and ia != sb & set(block.members())


def omega_set(ps: ParamSet) -> frozenset[int]:
    """Levels in (lam, mu] not covered by any width's budget interval.

    A level t is covered by width k when budget(k) <= t <= partial_sup(k).
    """
    ps.require_valid()
    uncovered = []
    for t in range(ps.lam + 1, ps.mu + 1):
        if not any(ps.budget_of(k) <= t <= partial_sup(k, ps)
                   for k in ps.thetas):
            uncovered.append(t)
    return frozenset(uncovered)


def omega_prime_set(ps: ParamSet) -> frozenset[int]:
    """Companion gap set; empty at finite scale.

    The defining condition asks for a width below which the listed widths
    have no last member, which no finite chain satisfies, so the set is
    always empty and reported as such.
    """
    ps.require_valid()
    return frozenset()


# -- sunflower (common-kernel) search ---------------------------------------

_EXHAUSTIVE_LIMIT = 20


def find_delta_system(sets: Sequence[Iterable[int]],
                      target: int) -> tuple[frozenset[int], list[int]] | None:
    """Find >= ``target`` sets whose pairwise intersections all coincide.

    Exhaustive over index combinations for small families, greedy by
    candidate kernel above that.  Returns the kernel and the chosen indices,
    or ``None`` when no qualifying subfamily exists.
    """
    if target < 2:
        raise ValueError("target must be at least 2")
    fam = [frozenset(s) for s in sets]
    n = len(fam)
    if n < target:
        return None
    if n <= _EXHAUSTIVE_LIMIT:
        for combo in itertools.combinations(range(n), target):
            kernel = fam[combo[0]] & fam[combo[1]]
            if all(fam[a] & fam[b] == kernel
                   for a, b in itertools.combinations(combo, 2)):
                return kernel, _extend_sunflower(fam, kernel, list(combo))
        return None
    kernels: list[frozenset[int]] = []
    seen = set()
    for a, b in itertools.combinations(range(n), 2):
        k = fam[a] & fam[b]
        if k not in seen:
            seen.add(k)
            kernels.append(k)
    for kernel in kernels:
        picked = _extend_sunflower(fam, kernel, [])
        if len(picked) >= target:
            return kernel, picked
    return None


def _extend_sunflower(fam: list[frozenset[int]], kernel: frozenset[int],
                      picked: list[int]) -> list[int]:
    chosen = list(picked)
    petals = [fam[i] - kernel for i in chosen]
    for idx, s in enumerate(fam):
        if idx in chosen or not kernel <= s:
            continue
        petal = s - kernel
        if all(petal.isdisjoint(p) for p in petals):
            chosen.append(idx)
            petals.append(petal)
    return sorted(chosen)


# -- 0/1 string utilities ----------------------------------------------------


def lex_compare(a: str, b: str) -> Lex:
    """Compare at the first disagreement; extensions compare as PREFIX."""
    for x, y in zip(a, b):
        if x != y:
            return Lex.LESS if x < y else Lex.GREATER
    return Lex.EQUAL if len(a) == len(b) else Lex.PREFIX


def _prefix_counts(strings: Sequence[str]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for s in strings:
        for end in range(len(s) + 1):
            p = s[:end]
            counts[p] = counts.get(p, 0) + 1
    return counts


def find_incomparable_pair(strings: Sequence[str], threshold: int = 2,
                           min_count: int | None = None,
                           ) -> tuple[str, str] | None:
    """A shallowest prefix-tree split whose sides each head enough inputs.

    Each returned prefix heads at least ``min_count`` inputs (default
    ceil(len(strings)/threshold)); the pair is returned in lexicographic
    order.  ``None`` when every adequately heavy set of common prefixes
    forms a chain.
    """
    if not strings:
        return None
    required = min_count if min_count is not None else math.ceil(
        len(strings) / threshold)
    counts = _prefix_counts(strings)
    nodes = sorted(counts, key=lambda p: (len(p), p))
    for node in nodes:
        c0 = counts.get(node + "0", 0)
        c1 = counts.get(node + "1", 0)
        if c0 >= required and c1 >= required:
            return node + "0", node + "1"
    return None


def longest_lex_increasing(strings: Sequence[str]) -> list[int]:
    """Indices of a longest subsequence that is strictly lex-increasing.

    Standard quadratic longest-increasing-subsequence under ``lex_compare``;
    duplicate inputs are rejected.
    """
    n = len(strings)
    if len(set(strings)) != n:
        raise ValueError("strings must be pairwise distinct")
    if n == 0:
        return []
    best = [1] * n
    prev = [-1] * n
    for i in range(n):
        for j in range(i):
            if (lex_compare(strings[j], strings[i]) is Lex.LESS
                    and best[j] + 1 > best[i]):
                best[i] = best[j] + 1
                prev[i] = j
    end = max(range(n), key=lambda i: best[i])
    out = []
    while end != -1:
        out.append(end)
        end = prev[end]
    return out[::-1]


# -- named parameter presets -------------------------------------------------

PRESETS: dict[str, ParamSet] = {
    "base8": ParamSet.make(2, 8, (2, 4, 8), {2: 2, 4: 3, 8: 5}),
    "two-level": ParamSet.make(3, 9, (3, 9), {3: 3, 9: 4}),
    "three-level": ParamSet.make(3, 18, (3, 9, 18), {3: 3, 9: 4, 18: 9}),
    "unit": ParamSet.make(1, 1, (1,), {1: 1}),
}


def full_budget_params(lam: int, mu: int) -> ParamSet:
    """The preset family with every budget equal to its width.

    Widths are the divisor chain lam, 2*lam, 4*lam, ..., mu (mu must be
    lam times a power of two).
    """
    if mu % lam or (mu // lam) & (mu // lam - 1):
        raise ValueError("mu must be lam times a power of two")
    thetas = []
    t = lam
    while t <= mu:
        thetas.append(t)
        t *= 2
    return ParamSet.make(lam, mu, thetas, {t: t for t in thetas})
