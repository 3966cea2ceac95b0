"""Brute-force invariants of tiny spaces and discrete-family extractions.

Honest finite spaces with separation are discrete, so the extraction
procedures run on abstract separation systems instead: a carrier with
marked points, two open-set lists, and a closure operator generated by a
finite closed-set basis.  These carry exactly the structure the
extractions consume.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from parcal.partition import Coloring, HalfGraphConfig, verify_config

MODES = ("density", "lindelof")

BRUTE_CAP = 16


class TopologyError(ValueError):
    pass


class ExtractionInvariantError(TopologyError):
    """The extracted family failed discreteness; the system is at fault."""


@dataclass(frozen=True)
class FiniteSpace:
    """Points with an open-set family generated from a basis.

    Opens are closed under union and intersection and always include the
    empty set and the whole point set; construction fails otherwise.
    """

    points: tuple[int, ...]
    opens: frozenset[frozenset[int]]

    @classmethod
    def from_basis(cls, points: Iterable[int],
                   basis: Iterable[Iterable[int]]) -> "FiniteSpace":
        pts = tuple(sorted(set(points)))
        pset = frozenset(pts)
        fam = {frozenset(), pset}
        for b in basis:
            fb = frozenset(b)
            if not fb <= pset:
                raise TopologyError("basis set leaves the point set")
            fam.add(fb)
        while True:
            extra = set()
            for a, b in itertools.combinations(fam, 2):
                for c in (a | b, a & b):
                    if c not in fam:
                        extra.add(c)
            if not extra:
                break
            fam |= extra
        return cls(pts, frozenset(fam))

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls.from_basis(range(n), [{i} for i in range(n)])

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls.from_basis(range(n), [])

    def to_doc(self) -> dict:
        return {"points": list(self.points),
                "basis": sorted([sorted(o) for o in self.opens])}

    @classmethod
    def from_doc(cls, doc) -> "FiniteSpace":
        return cls.from_basis(doc["points"], doc["basis"])

    def min_open(self, x: int) -> frozenset[int]:
        out = frozenset(self.points)
        for o in self.opens:
            if x in o and o < out:
                out = o
        return out


def closure(s: Iterable[int], space: FiniteSpace) -> frozenset[int]:
    """Complement of the union of opens disjoint from the set."""
    fs = frozenset(s)
    if not fs <= frozenset(space.points):
        raise TopologyError("set leaves the point set")
    avoid: set[int] = set()
    for o in space.opens:
        if not o & fs:
            avoid |= o
    return frozenset(space.points) - avoid


def _require_small(space: FiniteSpace, cap: int) -> None:
    if len(space.points) > cap:
        raise TopologyError(
            f"{len(space.points)} points exceed the brute-force cap {cap}")


def density(space: FiniteSpace, cap: int = BRUTE_CAP) -> int:
    """Least size of a set whose closure is everything."""
    _require_small(space, cap)
    pts = space.points
    if not pts:
        return 0
    whole = frozenset(pts)
    for k in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, k):
            if closure(sub, space) == whole:
                return k
    raise TopologyError("no dense subset found")  # unreachable


def is_discrete(s: Iterable[int], space: FiniteSpace) -> bool:
    """Each member has an open meeting the set only in itself."""
    fs = frozenset(s)
    return all(space.min_open(x) & fs == {x} for x in fs)


def spread(space: FiniteSpace, cap: int = BRUTE_CAP) -> int:
    """Largest size of a discrete subset, by exhaustion."""
    _require_small(space, cap)
    pts = space.points
    for k in range(len(pts), 0, -1):
        for sub in itertools.combinations(pts, k):
            if is_discrete(sub, space):
                return k
    return 0


def hL_witness(space: FiniteSpace, length: int,
               cap: int = BRUTE_CAP) -> list[tuple[int, frozenset[int]]] | None:
    """Right-separated point/open sequence of the requested length, or None.

    Each later point avoids every earlier open; minimal opens suffice, so
    the search runs over point orderings only.
    """
    _require_small(space, cap)
    if length == 0:
        return []

    pts = space.points

    def rec(chosen: list[int], forbidden: frozenset[int]):
        if len(chosen) == length:
            return list(chosen)
        for x in pts:
            if x in chosen or x in forbidden:
                continue
            chosen.append(x)
            got = rec(chosen, forbidden | space.min_open(x))
            if got is not None:
                return got
            chosen.pop()
        return None

    seq = rec([], frozenset())
    if seq is None:
        return None
    return [(x, space.min_open(x)) for x in seq]


def hL_number(space: FiniteSpace, cap: int = BRUTE_CAP) -> int:
    """Longest right-separated sequence length."""
    _require_small(space, cap)
    for length in range(len(space.points), 0, -1):
        if hL_witness(space, length, cap) is not None:
            return length
    return 0


def subspace(space: FiniteSpace, points: Iterable[int]) -> FiniteSpace:
    pts = frozenset(points)
    return FiniteSpace(tuple(sorted(pts)),
                       frozenset(o & pts for o in space.opens))


def hereditary_density(space: FiniteSpace, cap: int = BRUTE_CAP) -> int:
    """Largest subspace density, by exhaustion over subspaces."""
    _require_small(space, cap)
    best = 0
    pts = space.points
    for k in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, k):
            best = max(best, density(subspace(space, sub), cap))
    return best


def invariants_report(space: FiniteSpace, cap: int = BRUTE_CAP) -> dict:
    """Exact invariants at brute-force scale; plus-variants are max + 1."""
    d = density(space, cap)
    s = spread(space, cap)
    hl = hL_number(space, cap)
    hd = hereditary_density(space, cap)
    return {
        "density": d,
        "spread": s,
        "hL": hl,
        "hd": hd,
        "spread_plus": s + 1,
        "hL_plus": hl + 1,
        "hd_plus": hd + 1,
    }


# -- separation systems --------------------------------------------------------


@dataclass(frozen=True)
class SeparationSystem:
    """Marked points with shrinking opens and a closed-set-basis closure.

    Every marked point sits in its small open, whose closure stays inside
    the large open; the large opens avoid earlier marked points (density
    mode, via the closure) or later marked points (lindelof mode).
    """

    carrier: tuple[int, ...]
    xs: tuple[int, ...]
    u1: tuple[frozenset[int], ...]
    u2: tuple[frozenset[int], ...]
    closed_basis: tuple[frozenset[int], ...]

    @classmethod
    def make(cls, carrier, xs, u1, u2, closed_basis) -> "SeparationSystem":
        return cls(tuple(carrier), tuple(xs),
                   tuple(frozenset(u) for u in u1),
                   tuple(frozenset(u) for u in u2),
                   tuple(frozenset(c) for c in closed_basis))

    def __len__(self) -> int:
        return len(self.xs)

    def cl(self, s: Iterable[int]) -> frozenset[int]:
        """Intersection of all basis closed sets containing the set."""
        fs = frozenset(s)
        out = frozenset(self.carrier)
        for c in self.closed_basis:
            if fs <= c:
                out &= c
        return out

    def violations(self, mode: str) -> list[str]:
        if mode not in MODES:
            raise TopologyError(f"unknown mode {mode!r}")
        out = []
        n = len(self.xs)
        if not (len(self.u1) == len(self.u2) == n):
            return ["point and open lists must share one length"]
        for a in range(n):
            if self.xs[a] not in self.u2[a]:
                out.append(f"point {a} outside its small open")
            if not self.cl(self.u2[a]) <= self.u1[a]:
                out.append(f"closure of small open {a} leaves the large open")
        for a in range(n):
            if mode == "density":
                earlier = self.cl(self.xs[:a]) if a else frozenset()
                if self.u1[a] & earlier:
                    out.append(f"large open {a} meets the earlier closure")
            else:
                if self.u1[a] & set(self.xs[a + 1:]):
                    out.append(f"large open {a} meets a later point")
        return out

    def to_doc(self) -> dict:
        return {
            "carrier": list(self.carrier),
            "points": list(self.xs),
            "u1": [sorted(u) for u in self.u1],
            "u2": [sorted(u) for u in self.u2],
            "closed_basis": [sorted(c) for c in self.closed_basis],
        }

    @classmethod
    def from_doc(cls, doc) -> "SeparationSystem":
        return cls.make(doc["carrier"], doc["points"], doc["u1"], doc["u2"],
                        doc["closed_basis"])


@dataclass(frozen=True)
class DiscreteFamily:
    """Points paired with sets such that no point lies in another's set."""

    pairs: tuple[tuple[int, frozenset[int]], ...]

    def violations(self) -> list[str]:
        out = []
        for e, (y, u) in enumerate(self.pairs):
            if y not in u:
                out.append(f"point {e} outside its own set")
        for e, (y, _) in enumerate(self.pairs):
            for f, (_, u) in enumerate(self.pairs):
                if e != f and y in u:
                    out.append(f"point {e} inside set {f}")
        return out

    def to_doc(self) -> list:
        return [[y, sorted(u)] for y, u in self.pairs]


def coloring_from_system(sys: SeparationSystem, mode: str) -> Coloring:
    """Two-coloring of index pairs by small-open membership.

    Density mode colors a pair 1 when the later point lies in the earlier
    small open; lindelof mode transposes the test.
    """
    bad = sys.violations(mode)
    if bad:
        raise TopologyError("invalid system: " + "; ".join(bad))

    if mode == "density":
        fn = lambda a, b: 1 if sys.xs[b] in sys.u2[a] else 0
    else:
        fn = lambda a, b: 1 if sys.xs[a] in sys.u2[b] else 0
    return Coloring.from_function(len(sys), 2, fn)


def discrete_from_config(sys: SeparationSystem, cfg: HalfGraphConfig,
                         mode: str) -> DiscreteFamily:
    """Discrete family extracted from a verified witness.

    Color 0 (homogeneous increasing set): each chosen point with its own
    small open.  Color 1 (half-graph): pair up consecutive witness columns
    and subtract one column's small-open closure from the other's.  In
    density mode the even beta keeps its open minus the odd alpha's
    closure.  In lindelof mode the roles that make all three exclusion
    arguments go through are the odd alpha minus the even beta's closure
    (the even-alpha pairing would put the point inside the subtracted
    closure, since the witness colors that very pair).  The family
    invariant is re-checked and a failure raises.
    """
    coloring = coloring_from_system(sys, mode)
    if not verify_config(coloring, cfg):
        raise TopologyError("witness does not verify against the system")
    if cfg.epsilon == 0:
        fam = tuple((sys.xs[a], sys.u2[a]) for a in cfg.alphas)
    else:
        m2 = len(cfg.alphas) // 2
        if m2 == 0:
            raise TopologyError("half-graph witness too short to pair up")
        pairs = []
        for e in range(m2):
            if mode == "density":
                y = sys.xs[cfg.betas[2 * e]]
                u3 = sys.u2[cfg.betas[2 * e]] - sys.cl(
                    sys.u2[cfg.alphas[2 * e + 1]])
            else:
                y = sys.xs[cfg.alphas[2 * e + 1]]
                u3 = sys.u2[cfg.alphas[2 * e + 1]] - sys.cl(
                    sys.u2[cfg.betas[2 * e]])
            pairs.append((y, u3))
        fam = tuple(pairs)
    family = DiscreteFamily(fam)
    bad = family.violations()
    if bad:
        raise ExtractionInvariantError(
            "extracted family not discrete: " + "; ".join(bad))
    return family


# -- instance generation -------------------------------------------------------


def _interval(lo: int, hi: int) -> frozenset[int]:
    return frozenset(range(lo, hi + 1))


def generate_system(rng: random.Random, mode: str,
                    n: int = 6, gap: int = 4) -> SeparationSystem:
    """Seeded separation system over an integer carrier.

    Marked points march rightward with room between them; closed basis
    sets are all integer intervals, so interval closures are themselves.
    Small opens either stay tight around their point or reach across
    enough later (density) or earlier (lindelof) points to force
    half-graph patterns in the derived coloring.
    """
    if mode not in MODES:
        raise TopologyError(f"unknown mode {mode!r}")
    size = n * gap + 2
    carrier = tuple(range(size))
    xs = tuple(1 + a * gap + rng.randrange(gap - 2) for a in range(n))
    reach_style = rng.choice(("tight", "full", "partial"))
    u1, u2 = [], []
    for a in range(n):
        x = xs[a]
        if mode == "density":
            lo_limit = xs[a - 1] + 1 if a else 0
            if reach_style == "tight":
                hi = x
            elif reach_style == "full":
                hi = size - 1
            else:
                hi = min(size - 1, xs[min(n - 1, a + rng.randint(1, 2))])
            big = _interval(lo_limit, size - 1)
            small = _interval(x, hi)
        else:
            hi_limit = xs[a + 1] - 1 if a + 1 < n else size - 1
            if reach_style == "tight":
                lo = x
            elif reach_style == "full":
                lo = 0
            else:
                lo = max(0, xs[max(0, a - rng.randint(1, 2))])
            big = _interval(0, hi_limit)
            small = _interval(lo, x)
        u1.append(big)
        u2.append(small)
    basis = tuple(_interval(a, b) for a in range(size)
                  for b in range(a, size))
    return SeparationSystem.make(carrier, xs, u1, u2, basis)
