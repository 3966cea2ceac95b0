"""Independent oracles the tests check the library against.

Everything here recomputes results by a route disjoint from the library's:
generating-function counting for the condition poset, ternary-vector
filtering for a second recount, brute-force subsequence search, and a
direct enumerate-and-intersect relation checker.
"""

import itertools
from collections import Counter

from parcal.core import Lex, ParamSet, lex_compare
from parcal.partition import Coloring
from parcal.poset import is_condition


def count_conditions_gf(ps: ParamSet) -> int:
    """Count conditions by nested truncated generating functions.

    Per block of the smallest width, choosing k points with bits
    contributes C(width, k) * 2^k; blocks combine by polynomial product
    truncated at each enclosing width's budget.
    """

    def choose(n, k):
        out = 1
        for i in range(k):
            out = out * (n - i) // (i + 1)
        return out

    def level_poly(width_idx: int, start: int, stop: int) -> list[int]:
        width = ps.thetas[width_idx]
        cap = ps.budgets[width_idx] - 1
        if width_idx == 0:
            return [choose(width, k) * 2 ** k for k in range(cap + 1)]
        inner_width = ps.thetas[width_idx - 1]
        poly = [1]
        for lo in range(start, stop, inner_width):
            sub = level_poly(width_idx - 1, lo, lo + inner_width)
            poly = _poly_mul(poly, sub, cap)
        return poly

    top = level_poly(len(ps.thetas) - 1, 0, ps.mu)
    return sum(top)


def _poly_mul(a, b, cap):
    out = [0] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= cap:
                out[i + j] += x * y
    return out


def count_conditions_ternary(ps: ParamSet) -> int:
    """Recount by filtering every partial map given as a ternary vector."""
    count = 0
    for vec in itertools.product((None, 0, 1), repeat=ps.mu):
        f = {i: b for i, b in enumerate(vec) if b is not None}
        if is_condition(f, ps):
            count += 1
    return count


def lis_length_brute(strings) -> int:
    """Longest strictly lex-increasing subsequence length, by full search."""
    best = 0
    n = len(strings)
    for r in range(n, 0, -1):
        for combo in itertools.combinations(range(n), r):
            if all(lex_compare(strings[a], strings[b]) is Lex.LESS
                   for a, b in zip(combo, combo[1:])):
                return r
    return best


def delta_check(sets, kernel, indices) -> bool:
    fam = [frozenset(sets[i]) for i in indices]
    return all(a & b == frozenset(kernel)
               for a, b in itertools.combinations(fam, 2))


def all_configs_direct(n: int, m: int, colors: int, variant: str):
    """Every witness shape for the given frame, enumerated directly.

    For interleaved shapes the vertices of a 2m-subset interleave in
    exactly one way, so witnesses are (color, 2m-subset) pairs; the
    homogeneous shape contributes (0, m-subset) pairs in the mixed
    variant.
    """
    shapes = []
    for verts in itertools.combinations(range(n), 2 * m):
        alphas, betas = verts[0::2], verts[1::2]
        for eps in range(colors):
            if variant == "mixed" and eps == 0:
                continue
            shapes.append((eps, alphas, betas))
    if variant == "mixed":
        for verts in itertools.combinations(range(n), m):
            shapes.append((0, verts, ()))
    return shapes


def holds_direct(n: int, m: int, colors: int, variant: str) -> bool:
    """Relation check that intersects direct shape enumeration over colorings."""
    shapes = all_configs_direct(n, m, colors, variant)
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(colors ** len(pairs)):
        c = Coloring.from_code(n, colors, code)
        if not any(_shape_fits(c, eps, alphas, betas, variant)
                   for eps, alphas, betas in shapes):
            return False
    return True


def _shape_fits(c, eps, alphas, betas, variant) -> bool:
    if variant == "mixed" and eps == 0:
        return all(c.get(a, b) == 0
                   for a, b in itertools.combinations(alphas, 2))
    m = len(alphas)
    return all(c.get(alphas[i], betas[j]) == eps
               for i in range(m) for j in range(i, m))


def mono_subset_exists(c: Coloring, m: int) -> bool:
    for verts in itertools.combinations(range(c.n), m):
        if len({c.get(a, b)
                for a, b in itertools.combinations(verts, 2)}) <= 1:
            return True
    return False
