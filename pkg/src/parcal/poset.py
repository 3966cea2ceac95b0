"""Budgeted partial 0/1 assignments on the ground set and their orderings.

A condition assigns bits to finitely many points subject to every per-block
budget.  Plain extension additionally bounds, per width, how many
represented blocks gain points.  Pure extension (at a width) forbids any
represented block of that width from gaining points; apure extension
forbids representing new blocks of that width.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from parcal.core import Block, ParamSet


class PosetError(ValueError):
    pass


class ClashError(PosetError):
    """Two parts assign different bits to the same point."""

    def __init__(self, point: int):
        self.point = point
        super().__init__(f"contradictory bits at point {point}")


class BudgetError(PosetError):
    """A block of some width holds too many assigned points."""

    def __init__(self, kappa: int, block_index: int):
        self.kappa = kappa
        self.block_index = block_index
        super().__init__(
            f"budget exceeded on width-{kappa} block {block_index}")


class EnumerationCapError(PosetError):
    pass


@dataclass(frozen=True)
class Condition:
    """Immutable partial 0/1 map, stored as index-sorted (point, bit) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        dom = [i for i, _ in self.pairs]
        if dom != sorted(set(dom)):
            raise PosetError("points must be sorted and distinct")
        if any(b not in (0, 1) for _, b in self.pairs):
            raise PosetError("bits must be 0 or 1")

    @classmethod
    def make(cls, mapping: Mapping[int, int] | None = None,
             **_ignored) -> "Condition":
        mapping = mapping or {}
        return cls(tuple(sorted((int(i), int(b)) for i, b in mapping.items())))

    @classmethod
    def from_pairs(cls, pairs) -> "Condition":
        return cls.make(dict(pairs))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    @property
    def domain_set(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def value(self, i: int) -> int:
        for j, b in self.pairs:
            if j == i:
                return b
        raise KeyError(i)

    def extends(self, other: "Condition") -> bool:
        """Function extension: same bits wherever the other is defined."""
        mine = self.as_dict()
        return all(mine.get(i) == b for i, b in other.pairs)

    def restrict(self, points) -> "Condition":
        pts = set(points)
        return Condition(tuple(p for p in self.pairs if p[0] in pts))

    def sort_key(self) -> tuple:
        return (self.domain, tuple(b for _, b in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def to_doc(self) -> list[list[int]]:
        return [[i, b] for i, b in self.pairs]

    @classmethod
    def from_doc(cls, doc) -> "Condition":
        return cls.from_pairs((int(i), int(b)) for i, b in doc)


EMPTY = Condition(())


@lru_cache(maxsize=1 << 17)
def _as_dict(cond: Condition) -> dict[int, int]:
    return dict(cond.pairs)


@lru_cache(maxsize=1 << 18)
def _block_counts(cond: Condition, kappa: int) -> dict[int, int]:
    return dict(Counter(i // kappa for i, _ in cond.pairs))


def _extends(small: Condition, big: Condition) -> bool:
    bd = _as_dict(big)
    return all(bd.get(i) == b for i, b in small.pairs)


def is_condition(f: Mapping[int, int] | Condition, ps: ParamSet) -> bool:
    """Whether every per-block budget is respected at every width."""
    items = f.pairs if isinstance(f, Condition) else sorted(f.items())
    for i, b in items:
        if not 0 <= i < ps.mu:
            raise PosetError(f"point {i} outside [0, {ps.mu})")
        if b not in (0, 1):
            raise PosetError(f"bit {b} at point {i} is not 0/1")
    dom = [i for i, _ in items]
    for kappa, budget in zip(ps.thetas, ps.budgets):
        counts = Counter(i // kappa for i in dom)
        if counts and max(counts.values()) >= budget:
            return False
    return True


def _require_extension(p: Condition, q: Condition) -> None:
    if not _extends(p, q):
        raise PosetError("second condition does not extend the first")


def _growing_blocks(p: Condition, q: Condition, kappa: int) -> list[int]:
    cp = _block_counts(p, kappa)
    cq = _block_counts(q, kappa)
    return [b for b, c in cp.items() if cq.get(b, 0) != c]


def growth_profile(p: Condition, q: Condition,
                   ps: ParamSet) -> dict[int, tuple[int, ...]]:
    """Per width, the indices of blocks that gain points from p to q.

    Requires p ⊆ q; blocks first represented in q are not counted.
    """
    _require_extension(p, q)
    return {kappa: tuple(sorted(_growing_blocks(p, q, kappa)))
            for kappa in ps.thetas}


def le(p: Condition, q: Condition, ps: ParamSet) -> bool:
    """Extension with, per width, strictly fewer growing blocks than budget."""
    if not _extends(p, q):
        return False
    return all(len(_growing_blocks(p, q, kappa)) < budget
               for kappa, budget in zip(ps.thetas, ps.budgets))


def le_pr(kappa: int, p: Condition, q: Condition, ps: ParamSet) -> bool:
    """Pure extension at a width: no represented block of it gains points.

    At the top width this degenerates to equality.
    """
    ps.require_width(kappa)
    if kappa == ps.mu:
        return p == q
    return le(p, q, ps) and not _growing_blocks(p, q, kappa)


def le_ap(kappa: int, p: Condition, q: Condition, ps: ParamSet) -> bool:
    """Apure extension at a width: exactly the same represented blocks.

    At the top width this coincides with the plain ordering.
    """
    ps.require_width(kappa)
    if kappa == ps.mu:
        return le(p, q, ps)
    if not le(p, q, ps):
        return False
    return (_block_counts(p, kappa).keys()
            == _block_counts(q, kappa).keys())


def supp(kappa: int, p: Condition, q: Condition,
         ps: ParamSet) -> frozenset[int]:
    """Union of the width-``kappa`` blocks of points new in q over p."""
    ps.require_width(kappa)
    _require_extension(p, q)
    new = q.domain_set - p.domain_set
    out: set[int] = set()
    for b in {i // kappa for i in new}:
        out.update(Block(kappa, b).members())
    return frozenset(out)


def union_lub(parts: Sequence[Condition], ps: ParamSet) -> Condition:
    """Union of compatible conditions.

    Raises ClashError on a bit conflict and BudgetError when the union
    breaks a block budget.  The union is an upper bound of each part
    exactly when that part has bounded growth to it, which ``le`` checks.
    """
    merged: dict[int, int] = {}
    for part in parts:
        for i, b in part.pairs:
            if merged.setdefault(i, b) != b:
                raise ClashError(i)
    dom = sorted(merged)
    for kappa, budget in zip(ps.thetas, ps.budgets):
        counts = Counter(i // kappa for i in dom)
        for block, c in counts.items():
            if c >= budget:
                raise BudgetError(kappa, block)
    return Condition.make(merged)


def _blocks_restriction(q: Condition, kappa: int, block_indices) -> Condition:
    wanted = set(block_indices)
    return Condition(tuple(p for p in q.pairs if p[0] // kappa in wanted))


def decompose(kappa: int, p: Condition, q: Condition,
              ps: ParamSet) -> tuple[Condition, Condition]:
    """Split an extension into a pure part and an apure part.

    Returns (r, s) with p pure-below r apure-below q and p apure-below s
    pure-below q, and q = r ∪ s.  The four order facts and the union
    identity are asserted before returning.
    """
    ps.require_width(kappa)
    if not le(p, q, ps):
        raise PosetError("decompose requires the pair to be ordered")
    if kappa == ps.mu:
        # pure extension at the top width is equality, so the split is fixed
        r, s = p, q
    else:
        repr_blocks = {i // kappa for i in p.domain}
        s = union_lub(
            [p, _blocks_restriction(q, kappa, repr_blocks)], ps)
        other = {i // kappa for i in q.domain} - repr_blocks
        r = union_lub([p, _blocks_restriction(q, kappa, other)], ps)
    assert le_pr(kappa, p, r, ps) and le_ap(kappa, r, q, ps)
    assert le_ap(kappa, p, s, ps) and le_pr(kappa, s, q, ps)
    assert union_lub([r, s], ps) == q
    return r, s


def witness_pair(kappa: int, p1: Condition, p2: Condition, r: Condition,
                 ps: ParamSet) -> tuple[Condition, Condition]:
    """Witness for two conditions below a common extension.

    Returns (q, t): q extends p1 purely by transferring only blocks that do
    not grow from p1 to r, and t extends p2 apurely by transferring exactly
    the blocks growing from p2 to r.  Asserted: p1 pure-below q, p2
    apure-below t, and q ∪ t is a condition; p1 ⊆ q holds by construction,
    so any common extension of q and t extends p1 as a function.
    """
    ps.require_width(kappa)
    if not (le(p1, r, ps) and le(p2, r, ps)):
        raise PosetError("witness_pair requires both conditions below r")
    grow2 = _growing_blocks(p2, r, kappa)
    t = union_lub([p2, _blocks_restriction(r, kappa, grow2)], ps)
    grow1 = _growing_blocks(p1, r, kappa)
    keep = {i // kappa for i in r.domain} - set(grow1)
    q = union_lub([p1, _blocks_restriction(r, kappa, keep)], ps)
    assert le_pr(kappa, p1, q, ps)
    assert le_ap(kappa, p2, t, ps)
    union_lub([q, t], ps)
    return q, t


DEFAULT_ENUMERATION_CAP = 12


def enumerate_conditions(ps: ParamSet,
                         cap: int = DEFAULT_ENUMERATION_CAP,
                         ) -> Iterator[Condition]:
    """Every condition exactly once, ordered by (domain, bit vector).

    Refuses ground sets above ``cap``: the stream is meant for exhaustive
    property suites on tiny instances.
    """
    ps.require_valid()
    if ps.mu > cap:
        raise EnumerationCapError(
            f"ground set {ps.mu} exceeds enumeration cap {cap}")

    def admissible(counts: dict, i: int) -> bool:
        return all(counts[kappa][i // kappa] + 1 < budget
                   for kappa, budget in zip(ps.thetas, ps.budgets))

    def domains(start: int, chosen: list[int], counts) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        for i in range(start, ps.mu):
            if admissible(counts, i):
                for kappa in ps.thetas:
                    counts[kappa][i // kappa] += 1
                chosen.append(i)
                yield from domains(i + 1, chosen, counts)
                chosen.pop()
                for kappa in ps.thetas:
                    counts[kappa][i // kappa] -= 1

    counts = {kappa: Counter() for kappa in ps.thetas}
    for dom in domains(0, [], counts):
        k = len(dom)
        for code in range(1 << k):
            yield Condition(tuple(
                (dom[j], (code >> (k - 1 - j)) & 1) for j in range(k)))
