"""Ideals of the positive-root poset and their antichains of generators.

An ideal is an upward closed subset of Delta^+; its minimal elements
form an antichain, and the correspondence ideal <-> antichain is a
bijection, so ideals are serialised by their generator lists.
Internally an ideal is a bitmask over the ambient system's root order,
which keeps the exhaustive sweeps cheap.

The numbers attached to a root gamma of an ideal I:

  l(gamma, I) = largest m with gamma a sum of m members of I,
  k(gamma, I) = smallest n with gamma a sum of n members of Delta^+ \\ I
                (only defined when I contains no simple root).

Both are computed by dynamic programming over two-root decompositions;
any longer decomposition of a root can be reordered so that every
partial sum is again a root, so binary splits lose nothing.
"""

from collections import namedtuple

from .rootsys import Root, RootSystem, build

__all__ = [
    "Ideal", "Antichain", "empty_ideal", "full_ideal", "ideal_from_roots",
    "generators", "ideal_of", "xi", "is_strictly_positive", "is_abelian",
    "power", "l_value", "k_value", "is_minimax", "enumerate_ideals",
    "shi_inequalities", "shi_region_contains", "ideal_to_record",
    "ideal_from_record", "heisenberg_root_mask",
]


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Ideal:
    """An upward closed set of positive roots, stored as an index bitmask."""

    __slots__ = ("rs", "mask")

    def __init__(self, rs: RootSystem, mask: int):
        for i in _iter_bits(mask):
            if rs.up_masks[i] & ~mask:
                raise ValueError(
                    "not an ideal: contains %r but not every root above it"
                    % (rs.positive_roots[i],)
                )
        self.rs = rs
        self.mask = mask

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def members(self):
        return [self.rs.positive_roots[i] for i in _iter_bits(self.mask)]

    def __contains__(self, root: Root) -> bool:
        i = self.rs._index.get(root.coords)
        return i is not None and self.mask >> i & 1 == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal) and self.rs is other.rs and self.mask == other.mask
        )

    def __hash__(self):
        return hash((id(self.rs), self.mask))

    def __repr__(self):
        gens = [list(r.coords) for r in generators(self).roots]
        return "Ideal(%s%d, generators=%s)" % (self.rs.type_label, self.rs.rank, gens)


class Antichain:
    """Pairwise incomparable positive roots, kept in the root order."""

    __slots__ = ("rs", "roots")

    def __init__(self, rs: RootSystem, roots):
        idx = sorted(rs.index_of(r) for r in roots)
        if len(set(idx)) != len(idx):
            raise ValueError("antichain has repeated roots")
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                if rs.up_masks[i] >> j & 1 or rs.up_masks[j] >> i & 1:
                    raise ValueError(
                        "not an antichain: %r and %r are comparable"
                        % (rs.positive_roots[i], rs.positive_roots[j])
                    )
        self.rs = rs
        self.roots = tuple(rs.positive_roots[i] for i in idx)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __eq__(self, other):
        return (
            isinstance(other, Antichain)
            and self.rs is other.rs
            and self.roots == other.roots
        )

    def __hash__(self):
        return hash((id(self.rs), self.roots))

    def __repr__(self):
        return "Antichain(%s)" % (list(list(r.coords) for r in self.roots),)


def empty_ideal(rs: RootSystem) -> Ideal:
    return Ideal(rs, 0)


def full_ideal(rs: RootSystem) -> Ideal:
    return Ideal(rs, (1 << rs.num_positive) - 1)


def ideal_from_roots(rs: RootSystem, roots) -> Ideal:
    """Build an ideal from an explicit member list (must be upward closed)."""
    mask = 0
    for r in roots:
        mask |= 1 << rs.index_of(r)
    return Ideal(rs, mask)


def generators(ideal: Ideal) -> Antichain:
    """The minimal elements of the ideal."""
    rs = ideal.rs
    gens = [
        rs.positive_roots[i]
        for i in _iter_bits(ideal.mask)
        if not rs.strict_down_masks[i] & ideal.mask
    ]
    return Antichain(rs, gens)


def ideal_of(gamma: Antichain) -> Ideal:
    """Upward closure of an antichain; inverse of `generators`."""
    rs = gamma.rs
    mask = 0
    for r in gamma.roots:
        mask |= rs.up_masks[rs.index_of(r)]
    return Ideal(rs, mask)


def xi(ideal: Ideal) -> Antichain:
    """The maximal elements of the complement Delta^+ \\ I."""
    rs = ideal.rs
    comp = ~ideal.mask & ((1 << rs.num_positive) - 1)
    outs = [
        rs.positive_roots[i]
        for i in _iter_bits(comp)
        if not rs.strict_up_masks[i] & comp
    ]
    return Antichain(rs, outs)


def is_strictly_positive(ideal: Ideal) -> bool:
    """True iff the ideal contains no simple root."""
    return not ideal.mask & ideal.rs.simple_mask


def is_abelian(ideal: Ideal) -> bool:
    """True iff no two members (repeats allowed) sum to a root."""
    rs = ideal.rs
    members = list(_iter_bits(ideal.mask))
    for a, i in enumerate(members):
        row = rs.sum_index[i]
        for j in members[a:]:
            if row[j] >= 0:
                return False
    return True


def power(ideal: Ideal, k: int) -> Ideal:
    """I^k, defined inductively by I^k = (I^{k-1} + I) cap Delta."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    rs = ideal.rs
    base = list(_iter_bits(ideal.mask))
    cur = ideal.mask
    for _ in range(k - 1):
        if not cur:
            break
        nxt = 0
        for i in _iter_bits(cur):
            row = rs.sum_index[i]
            for j in base:
                s = row[j]
                if s >= 0:
                    nxt |= 1 << s
        cur = nxt
    return Ideal(rs, cur)


def _l_table(ideal: Ideal):
    """l(gamma, I) for every member, indexed by root index (None outside I)."""
    rs = ideal.rs
    mask = ideal.mask
    table = [None] * rs.num_positive
    for m in _iter_bits(mask):
        best = 1
        for a, b in rs.decompositions[m]:
            if mask >> a & 1 and mask >> b & 1:
                cand = table[a] + table[b]
                if cand > best:
                    best = cand
        table[m] = best
    return table


def _k_table(ideal: Ideal):
    """k(gamma, I) for every positive root; needs a strictly positive ideal."""
    rs = ideal.rs
    mask = ideal.mask
    if mask & rs.simple_mask:
        raise ValueError("k-values are defined only for strictly positive ideals")
    table = [0] * rs.num_positive
    for m in range(rs.num_positive):
        if not mask >> m & 1:
            table[m] = 1
        else:
            table[m] = min(table[a] + table[b] for a, b in rs.decompositions[m])
    return table


def l_value(gamma: Root, ideal: Ideal) -> int:
    if gamma not in ideal:
        raise ValueError("l(gamma, I) requires gamma in I")
    return _l_table(ideal)[ideal.rs.index_of(gamma)]


def k_value(gamma: Root, ideal: Ideal) -> int:
    return _k_table(ideal)[ideal.rs.index_of(gamma)]


def is_minimax(ideal: Ideal) -> bool:
    """Strictly positive with k(gamma,I) - 1 = l(gamma,I) for every member."""
    if ideal.mask & ideal.rs.simple_mask:
        return False
    lt = _l_table(ideal)
    kt = _k_table(ideal)
    return all(kt[m] - 1 == lt[m] for m in _iter_bits(ideal.mask))


def heisenberg_root_mask(rs: RootSystem) -> int:
    """Bitmask of the roots not orthogonal to the highest root."""
    t = rs.theta_index
    mask = 0
    for i in range(rs.num_positive):
        if rs.pairing_table[i][t] > 0:
            mask |= 1 << i
    return mask


def _antichain_masks(rs: RootSystem):
    incomp = rs.incomparability_masks
    full = (1 << rs.num_positive) - 1

    def rec(mask, cand):
        yield mask
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            yield from rec(mask | low, rest & incomp[low.bit_length() - 1])

    yield from rec(0, full)


_FILTERS = ("all", "strictly_positive", "abelian", "minimax", "heisenberg_contained")


def enumerate_ideals(rs: RootSystem, which: str = "all"):
    """Yield every ideal exactly once, in a fixed deterministic order.

    The order is depth-first over antichains sorted by generator index,
    so identical calls always produce the identical stream.
    """
    if which not in _FILTERS:
        raise ValueError("unknown filter %r; expected one of %s" % (which, _FILTERS))
    heis = heisenberg_root_mask(rs) if which == "heisenberg_contained" else 0
    for amask in _antichain_masks(rs):
        imask = 0
        for i in _iter_bits(amask):
            imask |= rs.up_masks[i]
        if which == "strictly_positive" and imask & rs.simple_mask:
            continue
        if which == "heisenberg_contained" and imask & ~heis:
            continue
        ideal = Ideal(rs, imask)
        if which == "abelian" and not is_abelian(ideal):
            continue
        if which == "minimax" and not is_minimax(ideal):
            continue
        yield ideal


ShiConstraint = namedtuple("ShiConstraint", "root relation bound")


def shi_inequalities(ideal: Ideal):
    """Defining constraints of the dominant region attached to the ideal.

    (x, alpha) > 0 for simple alpha; (x, gamma) > 1 on members and
    (x, gamma) < 1 off members.  Meant for membership tests of rational
    points, not for geometry.
    """
    rs = ideal.rs
    cons = [ShiConstraint(a, ">", 0) for a in rs.simple_roots()]
    for i, r in enumerate(rs.positive_roots):
        if ideal.mask >> i & 1:
            cons.append(ShiConstraint(r, ">", 1))
        else:
            cons.append(ShiConstraint(r, "<", 1))
    return cons


def shi_region_contains(ideal: Ideal, x) -> bool:
    """Whether the rational point x satisfies every Shi inequality of I."""
    rs = ideal.rs
    for root, relation, bound in shi_inequalities(ideal):
        val = rs.bilinear(x, root.coords)
        if relation == ">" and not val > bound:
            return False
        if relation == "<" and not val < bound:
            return False
    return True


def ideal_to_record(ideal: Ideal) -> dict:
    """Canonical serialisation: the system plus the generator list."""
    return {
        "type": ideal.rs.type_label,
        "rank": ideal.rs.rank,
        "generators": [list(r.coords) for r in generators(ideal).roots],
    }


def ideal_from_record(record: dict, rs: RootSystem = None) -> Ideal:
    if rs is None:
        rs = build(record["type"], record["rank"])
    roots = [Root(tuple(c)) for c in record["generators"]]
    return ideal_of(Antichain(rs, roots))
