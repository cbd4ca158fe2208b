"""Shared test helpers: system sweeps and independent brute-force oracles."""

import itertools
from fractions import Fraction
from functools import lru_cache

from adideals import affine as A


def systems_up_to(max_rank, exceptional=True):
    """(label, rank) for every simple type of rank <= max_rank."""
    out = [("A", n) for n in range(1, max_rank + 1)]
    out += [("B", n) for n in range(2, max_rank + 1)]
    out += [("C", n) for n in range(2, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    if exceptional:
        for label, rank in (("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)):
            if rank <= max_rank:
                out.append((label, rank))
    return out


def extreme_parts(allowed, target, pick):
    """Best (per `pick`) number of parts writing target as a sum over `allowed`.

    Pure multiset-sum search over coordinate vectors; no root-string
    shortcuts, so it is an independent oracle for the l/k dynamic
    programs.  Returns None when no decomposition exists.
    """
    allowed = tuple(sorted(set(allowed)))
    allowed_set = set(allowed)

    @lru_cache(maxsize=None)
    def rec(t):
        best = 1 if t in allowed_set else None
        for a in allowed:
            rest = tuple(x - y for x, y in zip(t, a))
            if any(r < 0 for r in rest) or not any(rest):
                continue
            sub = rec(rest)
            if sub is not None:
                cand = 1 + sub
                best = cand if best is None else pick(best, cand)
        return best

    return rec(tuple(target))


def brute_l(ideal, gamma):
    """Max parts of gamma as a sum of ideal members."""
    return extreme_parts([r.coords for r in ideal.members()], gamma.coords, max)


def brute_k(ideal, gamma):
    """Min parts of gamma as a sum of non-members."""
    rs = ideal.rs
    outside = [r.coords for r in rs.positive_roots if r not in ideal]
    return extreme_parts(outside, gamma.coords, min)


def coroot_points_in_dilated_alcove(rs, t):
    """Count Q^vee points x with (x, alpha) >= 0 for all simple alpha and
    (x, theta) <= t, by direct sweep over coroot coordinates."""
    p = rs.rank
    # (sum n_i alpha_i^vee, alpha_j) = sum_i n_i cartan[j][i]
    # upper bounds from the dilated alcove's vertices t varpi_j^vee / c_j,
    # whose coroot coordinates are t * inv_cartan[:, j] / c_j
    inv = _invert(rs.cartan)
    bounds = []
    for i in range(p):
        m = max(Fraction(t) * inv[i][j] / rs.theta_coords[j] for j in range(p))
        bounds.append(int(m))
    count = 0
    for n in itertools.product(*(range(0, b + 1) for b in bounds)):
        vals = [sum(n[i] * rs.cartan[j][i] for i in range(p)) for j in range(p)]
        if any(v < 0 for v in vals):
            continue
        if sum(c * v for c, v in zip(rs.theta_coords, vals)) <= t:
            count += 1
    return count


def _invert(matrix):
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def full_weyl_group(rs):
    """All finite Weyl elements, by closure over the simple reflections."""
    gens = [A.simple_reflection(rs, i) for i in range(rs.rank)]
    seen = {A.identity_finite(rs.rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for s in gens:
                w = s * v
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def all_words(rs, max_len):
    """Every word over the affine alphabet up to the given length."""
    alphabet = range(rs.rank + 1)
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)
