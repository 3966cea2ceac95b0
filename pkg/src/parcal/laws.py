"""Order-law battery over an exhaustively enumerated condition poset.

Pair laws run over every nested pair (each condition against all of its
restrictions); laws that quantify over three or more conditions run over a
seeded uniform sample.  Each law reports how many instances were applicable
and how many violated it, with one witness kept per violated law.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from parcal.core import ParamSet
from parcal.poset import (EMPTY, BudgetError, ClashError, Condition,
                          PosetError, decompose, enumerate_conditions,
                          growth_profile, le, le_ap, le_pr, supp, union_lub,
                          witness_pair)


@dataclass
class LawTally:
    checked: int = 0
    violations: int = 0
    witness: tuple = ()

    def hit(self, ok: bool, *witness) -> None:
        self.checked += 1
        if not ok:
            self.violations += 1
            if not self.witness:
                self.witness = witness

    def to_doc(self) -> dict:
        doc = {"checked": self.checked, "violations": self.violations}
        if self.witness:
            doc["witness"] = [repr(w) for w in self.witness]
        return doc


LAWS = (
    "order-reflexive",
    "order-antisymmetric",
    "pure-apure-imply-plain",
    "width-monotone",
    "growth-subadditive",
    "union-pair-lub",
    "decompose-split",
    "empty-bottom",
    "mix-pure-apure",
    "pure-join",
    "apure-join",
    "union-upper-bound",
    "new-point-bound",
    "sandwich",
    "cross-join",
    "witness-pair",
    "chain-union-apure",
)


def _try_union(parts, ps):
    try:
        return union_lub(parts, ps)
    except (ClashError, BudgetError):
        return None


def poset_law_tally(ps: ParamSet, triple_samples: int = 10_000,
                    seed: int = 0, cap: int = 12) -> dict[str, LawTally]:
    """Run the whole battery; see LAWS for the clause names."""
    ps.require_valid()
    conditions = tuple(enumerate_conditions(ps, cap))
    rng = random.Random(seed)
    t = {name: LawTally() for name in LAWS}
    widths = ps.thetas
    sub_widths = [k for k in widths if k < ps.mu]

    nested = []
    for q in conditions:
        dom = q.domain
        for r in range(len(dom) + 1):
            for keep in itertools.combinations(dom, r):
                nested.append((q.restrict(keep), q))

    # reflexivity, and antisymmetry over nested pairs
    for q in conditions:
        ok = le(q, q, ps)
        for k in sub_widths:
            ok = ok and le_pr(k, q, q, ps) and le_ap(k, q, q, ps)
        t["order-reflexive"].hit(ok, q)

    for p, q in nested:
        if le(p, q, ps) and le(q, p, ps):
            t["order-antisymmetric"].hit(p == q, p, q)

    # implications and width monotonicity over nested pairs
    for p, q in nested:
        for k in widths:
            pr = le_pr(k, p, q, ps)
            ap = le_ap(k, p, q, ps)
            if pr or ap:
                t["pure-apure-imply-plain"].hit(le(p, q, ps), k, p, q)
        for k1, k2 in itertools.combinations(widths, 2):
            ok = True
            if le_pr(k2, p, q, ps) and not le_pr(k1, p, q, ps):
                ok = False
            if le_ap(k1, p, q, ps) and not le_ap(k2, p, q, ps):
                ok = False
            t["width-monotone"].hit(ok, k1, k2, p, q)

    # empty condition is a bottom element
    for q in conditions:
        ok = le(EMPTY, q, ps)
        for k in sub_widths:
            ok = ok and le_pr(k, EMPTY, q, ps)
            if len(q) and le_ap(k, EMPTY, q, ps):
                ok = False
        t["empty-bottom"].hit(ok, q)

    # decompose over nested ordered pairs, all widths
    for p, q in nested:
        if not le(p, q, ps):
            continue
        for k in widths:
            try:
                r, s = decompose(k, p, q, ps)
            except (PosetError, AssertionError):
                t["decompose-split"].hit(False, k, p, q)
                continue
            t["decompose-split"].hit(union_lub([r, s], ps) == q, k, p, q)

    # new-point bound under apure extension
    for p, q in nested:
        for k in sub_widths:
            if not le_ap(k, p, q, ps):
                continue
            new = q.domain_set - p.domain_set
            blocks = {i // k for i in new}
            budget = ps.budget_of(k)
            ok = len(blocks) < budget and all(
                sum(1 for i in new if i // k == b) < budget for b in blocks)
            t["new-point-bound"].hit(ok, k, p, q)

    # chain-union law on two-step chains built from decompositions
    for p, q in nested:
        if not le(p, q, ps) or p == q:
            continue
        for k in sub_widths:
            r, s = decompose(k, p, q, ps)
            ok = (union_lub([p, r], ps) == r
                  and union_lub([s, q], ps) == q
                  and le_ap(k, r, q, ps))
            t["chain-union-apure"].hit(ok, k, p, q)

    # sampled laws: scenarios grown from one uniformly drawn root condition,
    # with uniformly drawn restrictions, so every law's hypothesis is hit
    n = len(conditions)
    for _ in range(triple_samples):
        w = conditions[rng.randrange(n)]
        p1 = _rand_restrict(rng, w)
        p2 = _rand_restrict(rng, w)

        # pairwise union of compatible conditions is a least upper bound
        u = _try_union([p1, p2], ps)
        if u is not None:
            t["union-upper-bound"].hit(le(p1, u, ps) and le(p2, u, ps),
                                       p1, p2)
            r = _try_union([u, _rand_restrict(rng, w)], ps)
            if (r is not None and le(p1, r, ps) and le(p2, r, ps)
                    and le(p1, u, ps) and le(p2, u, ps)):
                t["union-pair-lub"].hit(le(u, r, ps), p1, p2, r)

        # growth subadditivity along a nested chain below the root
        q = _rand_restrict(rng, w)
        p = _rand_restrict(rng, q)
        gpq = growth_profile(p, q, ps)
        gqw = growth_profile(q, w, ps)
        gpw = growth_profile(p, w, ps)
        ok = all(len(gpw[k]) <= len(gpq[k]) + len(gqw[k])
                 for k in widths)
        t["growth-subadditive"].hit(ok, p, q, w)

        for k in sub_widths:
            in_blocks, out_blocks = _split_points(w, p, k)
            q_ap = _try_union(
                [p, Condition.make(_rand_subset(rng, in_blocks))], ps)
            r_pr = _try_union(
                [p, Condition.make(_rand_subset(rng, out_blocks))], ps)

            # mixing a pure with an apure extension over a shared base
            if (q_ap is not None and r_pr is not None
                    and le_ap(k, p, q_ap, ps) and le_pr(k, p, r_pr, ps)):
                u = _try_union([q_ap, r_pr], ps)
                if u is not None and le(q_ap, u, ps) and le(r_pr, u, ps):
                    ok = (le(p, u, ps) and le_pr(k, q_ap, u, ps)
                          and le_ap(k, r_pr, u, ps))
                    t["mix-pure-apure"].hit(ok, k, p, q_ap, r_pr)

            # joins preserve pure extensions
            r2 = _try_union(
                [p, Condition.make(_rand_subset(rng, out_blocks))], ps)
            if (r_pr is not None and r2 is not None
                    and le_pr(k, p, r_pr, ps) and le_pr(k, p, r2, ps)):
                u = _try_union([r_pr, r2], ps)
                if u is not None and le(r_pr, u, ps) and le(r2, u, ps):
                    t["pure-join"].hit(le_pr(k, p, u, ps), k, p, r_pr, r2)

            # joins preserve apure extensions, from either side
            q2 = _try_union(
                [p, Condition.make(_rand_subset(rng, in_blocks))], ps)
            if (q_ap is not None and q2 is not None
                    and le_ap(k, p, q_ap, ps) and le_ap(k, p, q2, ps)):
                u = _try_union([q_ap, q2], ps)
                if u is not None and le(q_ap, u, ps) and le(q2, u, ps):
                    ok = le_ap(k, q_ap, u, ps) and le_ap(k, q2, u, ps)
                    t["apure-join"].hit(ok, k, p, q_ap, q2)

            # sandwich: an apure span pins the middle
            mid = _try_union(
                [p, Condition.make(dict(_rand_pairs(rng, w, p)))], ps)
            if (mid is not None and le_ap(k, p, w, ps) and le(p, mid, ps)
                    and le(mid, w, ps)):
                ok = le_ap(k, p, mid, ps) and le_ap(k, mid, w, ps)
                t["sandwich"].hit(ok, k, p, mid, w)

            # witness construction for two conditions below the root
            if le(p1, w, ps) and le(p2, w, ps):
                try:
                    witness_pair(k, p1, p2, w, ps)
                    t["witness-pair"].hit(True, k, p1, p2, w)
                except (PosetError, AssertionError):
                    t["witness-pair"].hit(False, k, p1, p2, w)

            # cross-join: apure extensions over the two ends of a pure pair
            if r_pr is not None and le_pr(k, p, r_pr, ps):
                qa = _try_union(
                    [p, Condition.make(_rand_subset(rng, in_blocks))], ps)
                in2, _ = _split_points(w, r_pr, k)
                qb = _try_union(
                    [r_pr, Condition.make(_rand_subset(rng, in2))], ps)
                if (qa is not None and qb is not None
                        and le_ap(k, p, qa, ps) and le_ap(k, r_pr, qb, ps)):
                    u = _try_union([qa, qb], ps)
                    if u is not None and le(qa, u, ps) and le(qb, u, ps):
                        t["cross-join"].hit(le_ap(k, qb, u, ps),
                                            k, p, r_pr, qa, qb)

    return t


def _rand_restrict(rng: random.Random, w: Condition) -> Condition:
    mask = rng.getrandbits(len(w)) if len(w) else 0
    return Condition(tuple(pair for j, pair in enumerate(w.pairs)
                           if (mask >> j) & 1))


def _rand_pairs(rng: random.Random, w: Condition, p: Condition):
    extra = [pair for pair in w.pairs if pair[0] not in p.domain_set]
    mask = rng.getrandbits(len(extra)) if extra else 0
    return [pair for j, pair in enumerate(extra) if (mask >> j) & 1]


def _split_points(w: Condition, p: Condition,
                  kappa: int) -> tuple[dict, dict]:
    """Root points beyond p, split by whether their block is p-represented."""
    blocks = {i // kappa for i in p.domain}
    inside, outside = {}, {}
    for i, b in w.pairs:
        if i in p.domain_set:
            continue
        (inside if i // kappa in blocks else outside)[i] = b
    return inside, outside


def _rand_subset(rng: random.Random, points: dict) -> dict:
    items = sorted(points.items())
    mask = rng.getrandbits(len(items)) if items else 0
    return {i: b for j, (i, b) in enumerate(items) if (mask >> j) & 1}


def counts_by_domain_size(ps: ParamSet, cap: int = 12) -> dict[int, int]:
    out: dict[int, int] = {}
    for q in enumerate_conditions(ps, cap):
        out[len(q)] = out.get(len(q), 0) + 1
    return out
