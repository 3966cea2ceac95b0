"""Chain-and-support carved sub-posets and their quadruple axioms.

A reasonable parameter picks a width, an increasing chain of conditions,
and a chain of allowed support sets; together they carve a sub-poset out
of the full condition poset.  The checker verifies the quadruple axioms on
that sub-poset: exactly where finite exhaustion is possible, and as
bounded finite-chain analogues where the original statements quantify over
long sequences (those are reported as bounded-skip, never as the infinite
claim).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal

from parcal.core import Block, ParamSet, find_delta_system
from parcal.poset import (EMPTY, BudgetError, ClashError, Condition,
                          PosetError, is_condition, le, le_ap, le_pr, supp,
                          union_lub)

Granularity = Literal["kappa", "theta"]


class SubposetError(ValueError):
    pass


class NotAMemberError(SubposetError):
    pass


class MixError(SubposetError):
    """A mix postcondition failed; the instance witnesses the failure."""


@dataclass(frozen=True)
class ReasonableParam:
    """Width, condition chain, and support-set chain carving a sub-poset."""

    kappa: int
    p_chain: tuple[Condition, ...]
    u_chain: tuple[frozenset[int], ...]

    @classmethod
    def make(cls, kappa, p_chain, u_chain) -> "ReasonableParam":
        return cls(int(kappa), tuple(p_chain),
                   tuple(frozenset(u) for u in u_chain))

    def to_doc(self) -> dict:
        return {
            "kappa": self.kappa,
            "p_chain": [p.to_doc() for p in self.p_chain],
            "u_chain": [sorted(u) for u in self.u_chain],
        }

    @classmethod
    def from_doc(cls, doc) -> "ReasonableParam":
        return cls.make(doc["kappa"],
                        [Condition.from_doc(p) for p in doc["p_chain"]],
                        doc["u_chain"])


def theta_of(y: ReasonableParam, ps: ParamSet) -> int:
    """The smallest listed width strictly above the parameter's width."""
    above = [t for t in ps.thetas if t > y.kappa]
    if not above:
        raise SubposetError("parameter width must sit below the top width")
    return above[0]


def reasonable_violations(y: ReasonableParam, ps: ParamSet) -> list[str]:
    """Invariant check for a reasonable parameter; empty when valid."""
    out = []
    if y.kappa not in ps.thetas or y.kappa >= ps.mu:
        return [f"width {y.kappa} must be listed and below the top width"]
    if not y.p_chain:
        out.append("condition chain must be nonempty")
    if len(y.p_chain) != len(y.u_chain):
        out.append("condition and support chains must have equal length")
        return out
    theta = theta_of(y, ps)
    for p in y.p_chain:
        if not is_condition(p, ps):
            out.append("chain entries must be conditions")
            break
    for a in range(len(y.p_chain)):
        for b in range(a + 1, len(y.p_chain)):
            if not le_pr(theta, y.p_chain[a], y.p_chain[b], ps):
                out.append(
                    f"condition chain not pure-increasing at {a} <= {b}")
    for a, b in zip(y.u_chain, y.u_chain[1:]):
        if not a <= b:
            out.append("support chain must be inclusion-increasing")
            break
    bound = _sup_budget(y.kappa, ps)
    for idx, (p, u) in enumerate(zip(y.p_chain, y.u_chain)):
        allowed = set()
        for i in p.domain:
            allowed.update(Block(y.kappa, i // y.kappa).members())
        if not u <= allowed:
            out.append(f"support set {idx} leaves the chain's blocks")
        if len(u) > bound:
            out.append(f"support set {idx} exceeds size bound {bound}")
    return out


def _sup_budget(kappa: int, ps: ParamSet) -> int:
    if kappa == ps.mu:
        return ps.mu
    return min(b for t, b in zip(ps.thetas, ps.budgets) if t > kappa)


def _require_reasonable(y: ReasonableParam, ps: ParamSet) -> None:
    bad = reasonable_violations(y, ps)
    if bad:
        raise SubposetError("invalid parameter: " + "; ".join(bad))


def _witness_alpha(q: Condition, y: ReasonableParam, ps: ParamSet,
                   granularity: Granularity) -> int | None:
    theta = theta_of(y, ps)
    g = y.kappa if granularity == "kappa" else theta
    for alpha, (p, u) in enumerate(zip(y.p_chain, y.u_chain)):
        if le_ap(theta, p, q, ps) and supp(g, p, q, ps) <= u:
            return alpha
    return None


def in_Qy(q: Condition, y: ReasonableParam, ps: ParamSet,
          granularity: Granularity = "kappa") -> bool:
    """Membership in the carved sub-poset.

    Some chain index must witness the condition: an apure extension one
    width up whose new points keep their supports inside the allowed set.
    The support width defaults to the parameter's own width; pass
    ``granularity="theta"`` for the one-width-up reading.
    """
    return _witness_alpha(q, y, ps, granularity) is not None


def alpha_y(q: Condition, y: ReasonableParam, ps: ParamSet,
            granularity: Granularity = "kappa") -> int:
    """Least chain index witnessing membership."""
    alpha = _witness_alpha(q, y, ps, granularity)
    if alpha is None:
        raise NotAMemberError("condition is not in the sub-poset")
    return alpha


@lru_cache(maxsize=64)
def members(y: ReasonableParam, ps: ParamSet,
            granularity: Granularity = "kappa") -> tuple[Condition, ...]:
    """Every member of the sub-poset, in deterministic order.

    Enumerates directly from the chain: candidate new points are those
    whose support block fits inside the allowed set, so the full condition
    poset is never enumerated.
    """
    _require_reasonable(y, ps)
    theta = theta_of(y, ps)
    g = y.kappa if granularity == "kappa" else theta
    found: set[Condition] = set()
    for p, u in zip(y.p_chain, y.u_chain):
        dom = p.domain_set
        theta_blocks = {i // theta for i in dom}
        cands = sorted(
            i for i in u
            if i not in dom
            and i // theta in theta_blocks
            and Block(g, i // g).member_set() <= u)
        for k in range(len(cands) + 1):
            for subset in itertools.combinations(cands, k):
                for code in range(1 << k):
                    extra = {subset[j]: (code >> j) & 1 for j in range(k)}
                    try:
                        q = union_lub([p, Condition.make(extra)], ps)
                    except (ClashError, BudgetError):
                        continue
                    if le_ap(theta, p, q, ps) and supp(g, p, q, ps) <= u:
                        found.add(q)
    return tuple(sorted(found, key=Condition.sort_key))


def ap_y(q: Condition, y: ReasonableParam, ps: ParamSet,
         granularity: Granularity = "kappa") -> frozenset[Condition]:
    """Apure extensions of a member whose new supports stay in its footprint.

    The footprint is the one-width-up support of the member over its least
    chain witness; the result always contains the member itself.
    """
    alpha = alpha_y(q, y, ps, granularity)
    theta = theta_of(y, ps)
    bound = supp(theta, y.p_chain[alpha], q, ps)
    out = set()
    for r in members(y, ps, granularity):
        if le_ap(y.kappa, q, r, ps) and supp(y.kappa, q, r, ps) <= bound:
            out.add(r)
    return frozenset(out)


def pure_le(p: Condition, q: Condition, y: ReasonableParam, ps: ParamSet,
            granularity: Granularity = "kappa") -> bool:
    """The sub-poset's pure order: membership plus pure extension."""
    return (in_Qy(p, y, ps, granularity) and in_Qy(q, y, ps, granularity)
            and le_pr(y.kappa, p, q, ps))


def pure_mix(p: Condition, r: Condition, q: Condition, y: ReasonableParam,
             ps: ParamSet, granularity: Granularity = "kappa") -> Condition:
    """Join an apure extension of a member with a pure extension of it.

    Requires p pure-below r in the sub-poset and q in the member's ap set.
    Returns s = q ∪ r and checks that s is a member, lies in ap of r, is a
    pure extension of q, and has the same least witness as r; a failure
    raises MixError carrying the failed fact.
    """
    if not pure_le(p, r, y, ps, granularity):
        raise SubposetError("first argument must be pure-below the second")
    if q not in ap_y(p, y, ps, granularity):
        raise SubposetError("third argument must lie in the ap set of the first")
    s = union_lub([q, r], ps)
    if not in_Qy(s, y, ps, granularity):
        raise MixError("mix left the sub-poset")
    if s not in ap_y(r, y, ps, granularity):
        raise MixError("mix is not an ap extension of the pure part")
    if not pure_le(q, s, y, ps, granularity):
        raise MixError("mix is not a pure extension of the ap part")
    if alpha_y(s, y, ps, granularity) != alpha_y(r, y, ps, granularity):
        raise MixError("mix changed the least chain witness")
    return s


# -- axiom checking -----------------------------------------------------------

CLAUSES = tuple("abcdefghij")

CLAUSE_MEANINGS = {
    "a": "components form a quadruple over a nonempty member set",
    "b": "plain order is reflexive and transitive on members",
    "c": "pure order is reflexive, transitive, and implies plain order",
    "d": "ap sets contain their base, stay inside the member set, and mix "
         "with pure extensions",
    "e": "finite pure chains have their union as a pure upper bound",
    "f": "oversized member families yield a compatible pair by the "
         "common-kernel step",
    "g": "finite pure chains have exact pure upper bounds",
    "h": "ap choices along finite pure chains admit a compatible pair",
    "i": "ap sets are smaller than the budget one width up",
    "j": "every ordered member pair splits into a pure/apure witness pair "
         "inside the member set",
}

VERIFIED = "verified"
VIOLATED = "violated"
BOUNDED_SKIP = "bounded-skip"


@dataclass(frozen=True)
class ClauseStatus:
    status: str
    detail: str
    witness: tuple = ()

    def to_doc(self) -> dict:
        doc = {"status": self.status, "detail": self.detail}
        if self.witness:
            doc["witness"] = [repr(w) for w in self.witness]
        return doc


@dataclass(frozen=True)
class CheckBudget:
    chain_cap: int = 6
    chain_samples: int = 200
    family_samples: int = 50
    member_cap: int = 400
    seed: int = 0


@dataclass
class QuadrupleReport:
    clauses: dict[str, ClauseStatus]
    member_count: int
    granularity: str
    chain_cap: int

    def violations(self) -> list[str]:
        return [c for c in CLAUSES if self.clauses[c].status == VIOLATED]

    def to_doc(self) -> dict:
        return {
            "member_count": self.member_count,
            "granularity": self.granularity,
            "chain_cap": self.chain_cap,
            "clauses": {c: self.clauses[c].to_doc() for c in CLAUSES},
            "meanings": CLAUSE_MEANINGS,
        }


def _le_masks(mem, ps) -> list[int]:
    n = len(mem)
    masks = [0] * n
    for i, p in enumerate(mem):
        for j, q in enumerate(mem):
            if le(p, q, ps):
                masks[i] |= 1 << j
    return masks


def _pr_masks(mem, ps, kappa) -> list[int]:
    n = len(mem)
    masks = [0] * n
    for i, p in enumerate(mem):
        for j, q in enumerate(mem):
            if le_pr(kappa, p, q, ps):
                masks[i] |= 1 << j
    return masks


def _pure_chains(mem, pr_mask, cap: int,
                 limit: int) -> Iterator[list[int]]:
    """Strictly pure-increasing index chains, DFS, up to length ``cap``."""
    n = len(mem)
    emitted = 0

    def rec(chain: list[int]) -> Iterator[list[int]]:
        nonlocal emitted
        if emitted >= limit:
            return
        if len(chain) >= 2:
            emitted += 1
            yield list(chain)
        if len(chain) >= cap:
            return
        last = chain[-1]
        for j in range(n):
            if j != last and (pr_mask[last] >> j) & 1:
                chain.append(j)
                yield from rec(chain)
                chain.pop()

    for i in range(n):
        yield from rec([i])


def _compatible_in(mem_set, i_cond, j_cond, ps) -> Condition | None:
    try:
        u = union_lub([i_cond, j_cond], ps)
    except (ClashError, BudgetError):
        return None
    if u in mem_set and le(i_cond, u, ps) and le(j_cond, u, ps):
        return u
    return None


def check_quadruple_axioms(y: ReasonableParam, ps: ParamSet,
                           budget: CheckBudget = CheckBudget(),
                           granularity: Granularity = "kappa",
                           ) -> QuadrupleReport:
    """Verify the quadruple axioms on the carved sub-poset.

    Order, ap, and witness clauses (a-d, i, j) are checked exactly over the
    whole member set.  The sequence clauses (e-h) are checked on all pure
    chains up to the budgeted length and reported bounded-skip: the finite
    run never claims the unbounded statement.
    """
    _require_reasonable(y, ps)
    mem = members(y, ps, granularity)
    if len(mem) > budget.member_cap:
        raise SubposetError(
            f"member set of size {len(mem)} exceeds budget {budget.member_cap}")
    mem_set = set(mem)
    kappa, theta = y.kappa, theta_of(y, ps)
    index = {q: i for i, q in enumerate(mem)}
    le_mask = _le_masks(mem, ps)
    pr_mask = _pr_masks(mem, ps, kappa)
    ap_sets = {q: ap_y(q, y, ps, granularity) for q in mem}
    rng = random.Random(budget.seed)
    clauses: dict[str, ClauseStatus] = {}

    # (a) structural form
    clauses["a"] = ClauseStatus(
        VERIFIED, f"member set of size {len(mem)} with orders and ap defined")

    # (b) plain order quasi-order
    bad = next((q for i, q in enumerate(mem) if not (le_mask[i] >> i) & 1),
               None)
    if bad is None:
        bad_pair = None
        for i in range(len(mem)):
            m = le_mask[i]
            j = 0
            mm = m
            while mm:
                if mm & 1 and le_mask[j] & ~m:
                    k = (le_mask[j] & ~m).bit_length() - 1
                    bad_pair = (mem[i], mem[j], mem[k])
                    break
                mm >>= 1
                j += 1
            if bad_pair:
                break
        if bad_pair:
            clauses["b"] = ClauseStatus(VIOLATED, "transitivity failed",
                                        bad_pair)
        else:
            clauses["b"] = ClauseStatus(
                VERIFIED, "reflexive and transitive on all members")
    else:
        clauses["b"] = ClauseStatus(VIOLATED, "reflexivity failed", (bad,))

    # (c) pure order quasi-order, contained in plain order
    issues = []
    for i in range(len(mem)):
        if not (pr_mask[i] >> i) & 1:
            issues.append(("reflexivity", mem[i]))
        if pr_mask[i] & ~le_mask[i]:
            j = (pr_mask[i] & ~le_mask[i]).bit_length() - 1
            issues.append(("containment", mem[i], mem[j]))
        m = pr_mask[i]
        j = 0
        mm = m
        while mm:
            if mm & 1 and j != i and pr_mask[j] & ~m:
                k = (pr_mask[j] & ~m).bit_length() - 1
                issues.append(("transitivity", mem[i], mem[j], mem[k]))
            mm >>= 1
            j += 1
    if issues:
        clauses["c"] = ClauseStatus(VIOLATED, issues[0][0] + " failed",
                                    tuple(issues[0][1:]))
    else:
        clauses["c"] = ClauseStatus(
            VERIFIED, "quasi-order contained in the plain order")

    # (d) ap structure and mixing
    d_viol = None
    for q in mem:
        aps = ap_sets[q]
        if q not in aps or not aps <= mem_set:
            d_viol = ("ap set must contain its base inside the member set", q)
            break
        for r in aps:
            if not le(q, r, ps):
                d_viol = ("ap member must extend its base", q, r)
                break
        if d_viol:
            break
    if d_viol is None:
        for p in mem:
            for q in ap_sets[p]:
                for ridx in range(len(mem)):
                    if not (pr_mask[index[p]] >> ridx) & 1:
                        continue
                    r = mem[ridx]
                    try:
                        pure_mix(p, r, q, y, ps, granularity)
                    except MixError as exc:
                        d_viol = (str(exc), p, q, r)
                        break
                if d_viol:
                    break
            if d_viol:
                break
    if d_viol:
        clauses["d"] = ClauseStatus(VIOLATED, d_viol[0], tuple(d_viol[1:]))
    else:
        clauses["d"] = ClauseStatus(
            VERIFIED, "ap sets well-formed; all pure mixes verified")

    # (e) unions of budgeted pure chains are pure upper bounds
    e_viol = None
    checked = 0
    for chain in _pure_chains(mem, pr_mask, budget.chain_cap,
                              budget.chain_samples):
        checked += 1
        top = mem[chain[-1]]
        union = union_lub([mem[i] for i in chain], ps)
        if union != top or any(
                not (pr_mask[i] >> chain[-1]) & 1 for i in chain):
            e_viol = tuple(mem[i] for i in chain)
            break
    if e_viol:
        clauses["e"] = ClauseStatus(VIOLATED, "chain union not an upper bound",
                                    e_viol)
    else:
        clauses["e"] = ClauseStatus(
            BOUNDED_SKIP,
            f"no violations on {checked} pure chains through length "
            f"{budget.chain_cap}; longer sequences skipped")

    # (f) oversized families: the common-kernel step finds a compatible pair
    fam_size = ps.budget_of(theta) + 1
    found, inconclusive, f_viol = 0, 0, None
    if len(mem) >= fam_size:
        for _ in range(budget.family_samples):
            fam = rng.sample(range(len(mem)), fam_size)
            pair = _kernel_pair(mem, fam, y, ps, granularity)
            if pair is None:
                inconclusive += 1
                continue
            i, j = pair
            if _compatible_in(mem_set, mem[i], mem[j], ps) is None:
                f_viol = (mem[i], mem[j])
                break
            found += 1
    if f_viol:
        clauses["f"] = ClauseStatus(
            VIOLATED, "constructed pair failed compatibility", f_viol)
    else:
        clauses["f"] = ClauseStatus(
            BOUNDED_SKIP,
            f"compatible pair construction verified on {found} sampled "
            f"families of size {fam_size}; {inconclusive} inconclusive; "
            "the unbounded statement is not claimed")

    # (g) exactness of budgeted chain unions
    g_viol = None
    checked_g = 0
    for chain in _pure_chains(mem, pr_mask, budget.chain_cap,
                              budget.chain_samples):
        checked_g += 1
        q = mem[chain[-1]]
        for p in ap_sets[q]:
            if not _exact_bound_witness(q, p, chain, mem, le_mask, index,
                                        ap_sets, mem_set, ps):
                g_viol = (q, p)
                break
        if g_viol:
            break
    if g_viol:
        clauses["g"] = ClauseStatus(VIOLATED, "no exactness witness", g_viol)
    else:
        clauses["g"] = ClauseStatus(
            BOUNDED_SKIP,
            f"exactness verified on {checked_g} pure chains through length "
            f"{budget.chain_cap}; longer sequences skipped")

    # (h) ap choices along chains: the common-kernel pair construction
    h_viol = None
    ran = found_h = 0
    for chain in _pure_chains(mem, pr_mask, budget.chain_cap,
                              budget.chain_samples):
        choices = [sorted(ap_sets[mem[i]], key=Condition.sort_key)
                   for i in chain]
        for picks in itertools.islice(itertools.product(*choices), 8):
            ran += 1
            pair = _kernel_pair_over_bases(
                picks, [mem[i] for i in chain], kappa)
            if pair is None:
                continue
            qa, qb = pair
            try:
                u = union_lub([qa, qb], ps)
            except (ClashError, BudgetError):
                h_viol = (qa, qb)
                break
            if not (le(qa, u, ps) and le(qb, u, ps)
                    and le_ap(kappa, qb, u, ps)):
                h_viol = (qa, qb)
                break
            found_h += 1
        if h_viol:
            break
    if h_viol:
        clauses["h"] = ClauseStatus(
            VIOLATED, "constructed pair failed compatibility", h_viol)
    else:
        clauses["h"] = ClauseStatus(
            BOUNDED_SKIP,
            f"pair construction verified on {found_h} of {ran} chain choice "
            f"vectors through length {budget.chain_cap}; the unbounded "
            "statement is not claimed")

    # (i) ap cardinality strictly below the budget one width up
    i_bound = ps.budget_of(theta)
    i_viol = next(((q,) for q in mem if len(ap_sets[q]) >= i_bound), None)
    if i_viol:
        clauses["i"] = ClauseStatus(
            VIOLATED, f"ap set reaches the bound {i_bound}", i_viol)
    else:
        clauses["i"] = ClauseStatus(
            VERIFIED, f"all ap sets smaller than {i_bound}")

    # (j) witness split for every ordered pair
    j_viol = None
    for i, q_star in enumerate(mem):
        m = le_mask[i]
        for j in range(len(mem)):
            if not (m >> j) & 1:
                continue
            r = mem[j]
            try:
                pure_part, ap_part = _split(kappa, q_star, r, ps)
            except PosetError as exc:
                j_viol = (str(exc), q_star, r)
                break
            if (not in_Qy(pure_part, y, ps, granularity)
                    or not in_Qy(ap_part, y, ps, granularity)):
                j_viol = ("witness parts left the member set", q_star, r)
                break
            if union_lub([pure_part, ap_part], ps) != r:
                j_viol = ("witness parts do not rejoin", q_star, r)
                break
        if j_viol:
            break
    if j_viol:
        clauses["j"] = ClauseStatus(VIOLATED, j_viol[0], tuple(j_viol[1:]))
    else:
        clauses["j"] = ClauseStatus(
            VERIFIED, "pure/apure witness split verified for all ordered pairs")

    return QuadrupleReport(clauses, len(mem), granularity, budget.chain_cap)


def _split(kappa, p, q, ps) -> tuple[Condition, Condition]:
    from parcal.poset import decompose
    return decompose(kappa, p, q, ps)


def _kernel_pair(mem, fam, y, ps, granularity):
    """Pick two family members joinable by the common-kernel argument.

    New-point sets over the least chain witness are searched for a
    two-member common-kernel family whose members agree on the kernel and
    whose leftover points sit in distinct support blocks.
    """
    infos = []
    for idx in fam:
        q = mem[idx]
        alpha = alpha_y(q, y, ps, granularity)
        new = q.domain_set - y.p_chain[alpha].domain_set
        infos.append((idx, q, frozenset(new)))
    sets = [info[2] for info in infos]
    hit = find_delta_system(sets, 2)
    if hit is None:
        return None
    kernel, _ = hit
    for (ai, aq, aset), (bi, bq, bset) in itertools.combinations(infos, 2):
        if aset & bset != kernel:
            continue
        if any(aq.value(i) != bq.value(i) for i in kernel):
            continue
        extra_a = {i // y.kappa for i in aset - kernel}
        extra_b = {i // y.kappa for i in bset - kernel}
        if extra_a & extra_b:
            continue
        return (ai, bi)
    return None


def _kernel_pair_over_bases(picks, bases, kappa):
    """Common-kernel pair among ap choices, new points taken over their bases."""
    infos = [(picks[k], picks[k].domain_set - bases[k].domain_set)
             for k in range(len(picks))]
    hit = find_delta_system([s for _, s in infos], 2)
    if hit is None:
        return None
    kernel, _ = hit
    for (qa, sa), (qb, sb) in itertools.combinations(infos, 2):
        if sa & sb != kernel:
            continue
        if any(qa.value(i) != qb.value(i) for i in kernel):
            continue
        if {i // kappa for i in sa - kernel} & {i // kappa for i in sb - kernel}:
            continue
        if any(qa.as_dict().get(i, qb.value(i)) != qb.value(i)
               for i in qb.domain_set & qa.domain_set):
            continue
        return (qa, qb)
    return None


def _exact_bound_witness(q, p, chain, mem, le_mask, index, ap_sets, mem_set,
                         ps) -> bool:
    """Exactness: some chain stage has an ap member routing p through q."""
    qi = index[q]
    for stage in chain:
        for p_prime in ap_sets[mem[stage]]:
            ok = True
            ppi = index.get(p_prime)
            if ppi is None:
                continue
            for ei in range(len(mem)):
                if (le_mask[qi] >> ei) & 1 and (le_mask[ppi] >> ei) & 1:
                    e = mem[ei]
                    if _compatible_in(mem_set, e, p, ps) is None:
                        ok = False
                        break
            if ok:
                return True
    return False


# -- companion support laws ---------------------------------------------------


def check_support_laws(y: ReasonableParam, ps: ParamSet,
                       budget: CheckBudget = CheckBudget(),
                       granularity: Granularity = "kappa") -> dict[str, str]:
    """Exhaustive/sampled checks of the support calculus on the sub-poset.

    Covers support monotonicity, support additivity along extensions,
    totality and monotonicity of the least chain witness, and the pure mix
    law.  Returns law -> "verified" or a violation description.
    """
    _require_reasonable(y, ps)
    mem = members(y, ps, granularity)
    rng = random.Random(budget.seed)
    out: dict[str, str] = {}

    le_pairs = [(p, q) for p in mem for q in mem if le(p, q, ps)]

    # support monotonicity across nested pairs and widths
    viol = None
    pool = le_pairs if len(le_pairs) ** 2 <= 40000 else None
    samples = (itertools.product(pool, pool) if pool is not None else
               ((rng.choice(le_pairs), rng.choice(le_pairs))
                for _ in range(budget.chain_samples * 10)))
    for (p2, q2), (p1, q1) in samples:
        if not (le(p1, p2, ps) and le(q2, q1, ps)):
            continue
        for k2 in ps.thetas:
            for k1 in ps.thetas:
                if k1 < k2:
                    continue
                if not supp(k2, p2, q2, ps) <= supp(k1, p1, q1, ps):
                    viol = (p1, p2, q2, q1, k1, k2)
                    break
            if viol:
                break
        if viol:
            break
    out["support-monotone"] = ("verified" if viol is None
                               else f"violated: {viol!r}")

    # support additivity along two-step extensions
    viol = None
    for p1, p2 in le_pairs:
        for p3 in mem:
            if not le(p2, p3, ps):
                continue
            for k in ps.thetas:
                lhs = supp(k, p1, p3, ps)
                rhs = supp(k, p1, p2, ps) | supp(k, p2, p3, ps)
                if lhs != rhs:
                    viol = (p1, p2, p3, k)
                    break
            if viol:
                break
        if viol:
            break
    out["support-additive"] = ("verified" if viol is None
                               else f"violated: {viol!r}")

    # least witness is total on members
    viol = None
    for q in mem:
        try:
            alpha_y(q, y, ps, granularity)
        except NotAMemberError:
            viol = (q,)
            break
    out["witness-total"] = ("verified" if viol is None
                            else f"violated: {viol!r}")

    # least witness is monotone along the plain order
    viol = None
    for p, q in le_pairs:
        if (alpha_y(p, y, ps, granularity)
                > alpha_y(q, y, ps, granularity)):
            viol = (p, q)
            break
    out["witness-monotone"] = ("verified" if viol is None
                               else f"violated: {viol!r}")

    # pure mix law over all admissible triples
    viol = None
    for p in mem:
        for q in ap_y(p, y, ps, granularity):
            for r in mem:
                if not pure_le(p, r, y, ps, granularity):
                    continue
                try:
                    pure_mix(p, r, q, y, ps, granularity)
                except MixError as exc:
                    viol = (p, q, r, str(exc))
                    break
            if viol:
                break
        if viol:
            break
    out["pure-mix"] = "verified" if viol is None else f"violated: {viol!r}"
    return out


# -- instance generation -------------------------------------------------------


def generate_reasonable_params(ps: ParamSet, count: int = 3,
                               seed: int = 0) -> list[ReasonableParam]:
    """Seeded reasonable parameters over a parameter set.

    Shapes cycle through a one-entry chain, a two-step chain adding a fresh
    one-width-up block, and a chain starting from the empty condition; the
    allowed support set is always a full block of the parameter's width
    around a chain point, which keeps the carved sub-poset small enough
    for exact checking.
    """
    ps.require_valid()
    rng = random.Random(seed)
    kappa = ps.thetas[0]
    if kappa == ps.mu:
        raise SubposetError("need at least two listed widths")
    theta = [t for t in ps.thetas if t > kappa][0]
    n_theta = ps.mu // theta
    out = []
    attempt = 0
    while len(out) < count:
        shape = ("singleton", "two-step", "from-empty")[
            (len(out) + attempt) % 3]
        attempt += 1
        tb = rng.randrange(n_theta)
        base_pt = tb * theta + rng.randrange(theta)
        bit = rng.randrange(2)
        p0 = Condition.make({base_pt: bit})
        u0 = Block(kappa, base_pt // kappa).member_set()
        if shape == "singleton":
            y = ReasonableParam.make(kappa, [p0], [u0])
        elif shape == "two-step":
            other = [b for b in range(n_theta) if b != tb]
            if not other:
                continue
            tb2 = rng.choice(other)
            pt2 = tb2 * theta + rng.randrange(theta)
            p1 = union_lub([p0, Condition.make({pt2: rng.randrange(2)})], ps)
            u1 = u0
            if _sup_budget(kappa, ps) - len(u0) >= 1:
                u1 = u0 | {pt2}
            y = ReasonableParam.make(kappa, [p0, p1], [u0, u1])
        else:
            y = ReasonableParam.make(kappa, [EMPTY, p0],
                                     [frozenset(), u0])
        if reasonable_violations(y, ps):
            continue
        out.append(y)
    return out
