"""Matrix-coordinate descriptions of minimax ideals in types A and C.

Positive roots of A_n are the pairs (a, b) with 1 <= a < b <= n+1,
where (a, b) = alpha_a + ... + alpha_{b-1}.  An ideal of A_n is minimax
exactly when its generator pairs are "non-meeting": b_j != a_i + 1 for
all i, j.  Positive roots of C_n are the pairs (i, j) with i < j and
i + j <= 2n+1; ideals of C_n correspond to the self-conjugate ideals of
A_{2n-1} (their symmetrisations), and minimaxity is read off from the
symmetrisation.  Counting non-meeting antichains recovers the Motzkin
and directed-animal numbers, refined by the number of generators.
"""

import math

from .rootsys import Root, RootSystem, build
from .ideals import Antichain, Ideal, generators
from .lattice_count import catalan

__all__ = [
    "PairAntichain", "to_pairs", "from_pairs", "has_non_meeting_generators",
    "count_non_meeting", "ballot_count", "count_sp_minimax",
    "sp_pair_to_root", "sp_root_to_pair", "fold_pair",
    "symmetrize", "sp_restriction", "is_self_conjugate", "sp_is_minimax",
    "generating_function_Fmm", "minimax_generator_distribution",
]


class PairAntichain:
    """An antichain of A_n in pair coordinates, sorted by first entry."""

    __slots__ = ("n", "pairs")

    def __init__(self, n: int, pairs):
        pairs = sorted(tuple(p) for p in pairs)
        for a, b in pairs:
            if not 1 <= a < b <= n + 1:
                raise ValueError("pair (%d, %d) is out of range for A_%d" % (a, b, n))
        firsts = [p[0] for p in pairs]
        seconds = [p[1] for p in pairs]
        if sorted(set(firsts)) != firsts or sorted(set(seconds)) != seconds:
            raise ValueError("pair antichain needs strictly increasing a's and b's")
        self.n = n
        self.pairs = tuple(pairs)

    def __eq__(self, other):
        return (
            isinstance(other, PairAntichain)
            and self.n == other.n
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self):
        return "PairAntichain(n=%d, %s)" % (self.n, list(self.pairs))


def _require_type_a(rs: RootSystem):
    if rs.type_label != "A":
        raise ValueError("pair coordinates are defined for type A only (got %s)"
                         % rs.type_label)


def to_pairs(antichain: Antichain) -> PairAntichain:
    """(a, b) encoding of a type-A antichain: support [a, b-1] of each root."""
    rs = antichain.rs
    _require_type_a(rs)
    pairs = []
    for r in antichain.roots:
        support = [i for i, c in enumerate(r.coords) if c]
        pairs.append((support[0] + 1, support[-1] + 2))
    return PairAntichain(rs.rank, pairs)


def from_pairs(pa: PairAntichain, rs: RootSystem = None) -> Antichain:
    if rs is None:
        rs = build("A", pa.n)
    _require_type_a(rs)
    if rs.rank != pa.n:
        raise ValueError("rank mismatch: pairs for A_%d, system A_%d" % (pa.n, rs.rank))
    roots = [
        Root(tuple(1 if a <= i + 1 < b else 0 for i in range(pa.n))) for a, b in pa.pairs
    ]
    return Antichain(rs, roots)


def has_non_meeting_generators(pa: PairAntichain) -> bool:
    """b_j != a_i + 1 for all i, j; in particular no generator is simple."""
    firsts = {a + 1 for a, _ in pa.pairs}
    return not any(b in firsts for _, b in pa.pairs)


def count_non_meeting(n: int, k: int) -> int:
    """Ideals of A_n with exactly k non-meeting generators: C(n, 2k) Catalan(k)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return math.comb(n, 2 * k) * catalan(k)


def ballot_count(k: int) -> int:
    """Number of +-1 sequences of length k with all partial sums >= 0."""
    return math.comb(k, k // 2)


def count_sp_minimax(n: int, q: int) -> int:
    """Minimax ideals of C_n with q generators.

    C(2q-1, q-1) C(n-1, 2q-1) + C(2q, q) C(n-1, 2q); the total over q
    is the directed-animal number dir_n.
    """
    if n < 2 or q < 0:
        raise ValueError("need n >= 2 and q >= 0")
    if q == 0:
        return 1
    return math.comb(2 * q - 1, q - 1) * math.comb(n - 1, 2 * q - 1) + math.comb(
        2 * q, q
    ) * math.comb(n - 1, 2 * q)


# -- type C pair coordinates ---------------------------------------------------


def _require_type_c(rs: RootSystem):
    if rs.type_label != "C":
        raise ValueError("expected a type C system (got %s)" % rs.type_label)


def _sp_pair_coords(n: int, i: int, j: int):
    v = [0] * n
    if j <= n + 1:
        for t in range(i, j):
            v[t - 1] += 1
    else:
        for t in range(i, 2 * n - j + 1):
            v[t - 1] += 1
        for t in range(2 * n - j + 1, n):
            v[t - 1] += 2
        v[n - 1] += 1
    return tuple(v)


def sp_pair_to_root(rs: RootSystem, pair) -> Root:
    _require_type_c(rs)
    n = rs.rank
    i, j = pair
    if not (1 <= i < j and i + j <= 2 * n + 1):
        raise ValueError("(%d, %d) is not a positive-root pair of C_%d" % (i, j, n))
    return Root(_sp_pair_coords(n, i, j))


def sp_root_to_pair(rs: RootSystem, root: Root):
    _require_type_c(rs)
    n = rs.rank
    rs.index_of(root)
    for i in range(1, 2 * n):
        for j in range(i + 1, 2 * n + 2 - i):
            if _sp_pair_coords(n, i, j) == root.coords:
                return (i, j)
    raise ValueError("no pair found for %r" % (root,))


def fold_pair(n: int, i: int, j: int):
    """The surjection from A_{2n-1} pairs onto C_n pairs."""
    if i + j <= 2 * n + 1:
        return (i, j)
    return (2 * n + 1 - j, 2 * n + 1 - i)


def symmetrize(ideal: Ideal) -> Ideal:
    """The self-conjugate ideal of A_{2n-1} restricting to a C_n ideal."""
    rs = ideal.rs
    _require_type_c(rs)
    n = rs.rank
    rs_a = build("A", 2 * n - 1)
    pair_bit = {}
    for idx, r in enumerate(rs.positive_roots):
        pair_bit[sp_root_to_pair(rs, r)] = idx
    mask = 0
    for a_idx, a_root in enumerate(rs_a.positive_roots):
        support = [i for i, c in enumerate(a_root.coords) if c]
        i, j = support[0] + 1, support[-1] + 2
        if ideal.mask >> pair_bit[fold_pair(n, i, j)] & 1:
            mask |= 1 << a_idx
    return Ideal(rs_a, mask)


def sp_restriction(bar_ideal: Ideal) -> Ideal:
    """Inverse of `symmetrize`: keep the pairs with i + j <= 2n + 1."""
    rs_a = bar_ideal.rs
    _require_type_a(rs_a)
    if rs_a.rank % 2 == 0:
        raise ValueError("restriction needs A_{2n-1}, an odd rank")
    n = (rs_a.rank + 1) // 2
    rs_c = build("C", n)
    mask = 0
    for a_idx, a_root in enumerate(rs_a.positive_roots):
        if not bar_ideal.mask >> a_idx & 1:
            continue
        support = [i for i, c in enumerate(a_root.coords) if c]
        i, j = support[0] + 1, support[-1] + 2
        if i + j <= 2 * n + 1:
            mask |= 1 << rs_c.index_of(sp_pair_to_root(rs_c, (i, j)))
    return Ideal(rs_c, mask)


def is_self_conjugate(bar_ideal: Ideal) -> bool:
    """Generators (i_m, j_m), sorted by i, satisfy i_m + j_{k+1-m} = 2n+1."""
    rs_a = bar_ideal.rs
    _require_type_a(rs_a)
    if rs_a.rank % 2 == 0:
        raise ValueError("self-conjugacy is about A_{2n-1}, an odd rank")
    two_n = rs_a.rank + 1
    pairs = to_pairs(generators(bar_ideal)).pairs
    k = len(pairs)
    return all(pairs[m][0] + pairs[k - 1 - m][1] == two_n + 1 for m in range(k))


def sp_is_minimax(ideal: Ideal) -> bool:
    """Minimaxity of a C_n ideal via its symmetrisation's generators."""
    return has_non_meeting_generators(to_pairs(generators(symmetrize(ideal))))


# -- generating functions ------------------------------------------------------


def generating_function_Fmm(type_label: str, rank: int):
    """Coefficients of F_mm: entry k counts minimax ideals with k generators.

    Closed forms exist for types A and C only; ask
    `minimax_generator_distribution` for an enumeration-based answer in
    the other types.
    """
    if type_label == "A":
        return [count_non_meeting(rank, k) for k in range(rank // 2 + 1)]
    if type_label == "C":
        return [count_sp_minimax(rank, q) for q in range(rank // 2 + 1)]
    raise ValueError("no closed form for type %s; only A and C are covered"
                     % type_label)


def minimax_generator_distribution(rs: RootSystem):
    """Generator-count histogram over the minimax ideals, by enumeration."""
    from .ideals import enumerate_ideals

    hist = {}
    for ideal in enumerate_ideals(rs, "minimax"):
        k = len(generators(ideal))
        hist[k] = hist.get(k, 0) + 1
    return [hist.get(k, 0) for k in range(max(hist) + 1)]
