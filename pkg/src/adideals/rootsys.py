"""Root systems of the simple Lie types, in simple-root coordinates.

A root is an integer vector over the simple roots alpha_1..alpha_p, and
Delta^+ carries the usual root order: mu <= gamma iff gamma - mu has
nonnegative coordinates.  The invariant inner product is normalised so
that long roots have squared length 2; then nu^vee = nu for long nu and
every pairing (gamma, nu^vee) between two roots is an integer.

Simple roots are numbered as in the Vinberg-Onishchik reference tables,
which differs from Bourbaki for E6, E7, E8 and F4 (the README has the
dictionary).  The counting congruences in `lattice_count` are stated in
this numbering, so the numbering is load-bearing, not cosmetic.

Positive roots are stored sorted by (height, coords), which fixes the
index of every root; all set-valued data elsewhere in the package is
held as bitmasks over this order.
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Root", "AffineRoot", "RootSystem", "build"]

# (min rank, max rank); None means unbounded above
_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E6": (6, 6),
    "E7": (7, 7),
    "E8": (8, 8),
    "F4": (4, 4),
    "G2": (2, 2),
}


@dataclass(frozen=True)
class Root:
    """A root, stored as its coordinate vector over the simple roots."""

    coords: tuple

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coords))

    def __repr__(self) -> str:
        return "Root[%s]" % ",".join(map(str, self.coords))


@dataclass(frozen=True)
class AffineRoot:
    """An affine real root k*delta + mu; `finite` holds the coords of mu."""

    level: int
    finite: tuple

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return any(c > 0 for c in self.finite)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-self.level, tuple(-a for a in self.finite))

    def __repr__(self) -> str:
        return "AffineRoot(%d,[%s])" % (self.level, ",".join(map(str, self.finite)))


def _cartan_data(type_label, rank):
    """Cartan matrix a[i][j] = (alpha_i, alpha_j^vee) and squared lengths."""
    try:
        lo, hi = _RANK_RANGES[type_label]
    except KeyError:
        raise ValueError(
            "unknown type %r; valid types: A (rank>=1), B (rank>=2), C (rank>=2), "
            "D (rank>=4), E6, E7, E8, F4, G2" % (type_label,)
        ) from None
    if rank < lo or (hi is not None and rank > hi):
        bound = ">= %d" % lo if hi is None else "= %d" % lo
        raise ValueError("type %s requires rank %s (got %d)" % (type_label, bound, rank))

    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    lengths = [Fraction(2)] * n

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if type_label == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif type_label == "B":
        for i in range(n - 1):
            bond(i, i + 1)
        a[n - 2][n - 1] = -2
        lengths[n - 1] = Fraction(1)
    elif type_label == "C":
        for i in range(n - 1):
            bond(i, i + 1)
        a[n - 1][n - 2] = -2
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif type_label == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif type_label in ("E6", "E7", "E8"):
        edges = {
            "E6": [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
            "E7": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
            "E8": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
        }[type_label]
        for i, j in edges:
            bond(i, j)
    elif type_label == "F4":
        for i in range(3):
            bond(i, i + 1)
        a[2][1] = -2
        lengths = [Fraction(1), Fraction(1), Fraction(2), Fraction(2)]
    elif type_label == "G2":
        a = [[2, -1], [-3, 2]]
        lengths = [Fraction(2, 3), Fraction(2)]
    return tuple(tuple(row) for row in a), tuple(lengths)


def _positive_root_coords(cartan, rank):
    """Generate Delta^+ from the Cartan matrix by root-string closure."""

    def pair_simple(coords, j):
        # (x, alpha_j^vee)
        return sum(c * cartan[i][j] for i, c in enumerate(coords) if c)

    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    known = set(simples)
    out = list(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for coords in layer:
            for i in range(rank):
                if coords == simples[i]:
                    continue
                # alpha_i-string through coords: p = steps down that stay roots
                p = 0
                down = tuple(c - (k == i) for k, c in enumerate(coords))
                while down in known:
                    p += 1
                    down = tuple(c - (k == i) for k, c in enumerate(down))
                if p - pair_simple(coords, i) >= 1:
                    up = tuple(c + (k == i) for k, c in enumerate(coords))
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
                        out.append(up)
        layer = nxt
    return out


def _det_int(m):
    """Exact integer determinant (Bareiss)."""
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _invert_fraction_matrix(m):
    """Inverse of a square matrix over the rationals (Gauss-Jordan)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


class RootSystem:
    """Immutable Cartan/root data for one simple type.

    Everything is computed once at construction: the positive roots in
    their deterministic order, the highest root, exponents, the poset
    masks, the root-addition table, and exact coroot pairings.  Use the
    module-level `build` (which caches) rather than the constructor.
    """

    def __init__(self, type_label: str, rank: int):
        cartan, lengths = _cartan_data(type_label, rank)
        self.type_label = type_label
        self.rank = rank
        self.cartan = cartan
        self.lengths = lengths

        gram = tuple(
            tuple(Fraction(cartan[i][j]) * lengths[j] / 2 for j in range(rank))
            for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                assert gram[i][j] == gram[j][i], "Cartan data is not symmetrisable"
        self.gram = gram
        den = 1
        for row in gram:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        self._gram_den = den
        self._gram_num = tuple(tuple(int(x * den) for x in row) for row in gram)

        coords_list = _positive_root_coords(cartan, rank)
        coords_list.sort(key=lambda c: (sum(c), c))
        self.positive_roots = tuple(Root(c) for c in coords_list)
        n = len(self.positive_roots)
        self.num_positive = n
        self._index = {r.coords: i for i, r in enumerate(self.positive_roots)}
        self.simple_indices = tuple(
            self._index[tuple(1 if k == i else 0 for k in range(rank))] for i in range(rank)
        )
        self.simple_mask = 0
        for i in self.simple_indices:
            self.simple_mask |= 1 << i

        heights = [r.height for r in self.positive_roots]
        hmax = heights[-1]
        tops = [i for i in range(n) if heights[i] == hmax]
        assert len(tops) == 1, "highest root is not unique"
        self.theta_index = tops[0]
        self.theta = self.positive_roots[self.theta_index]
        self.theta_coords = self.theta.coords
        self.c0 = 1
        self.coxeter_number = hmax + 1
        assert 2 * n == rank * self.coxeter_number
        assert sum(self.theta_coords) == self.coxeter_number - 1

        # exponents = conjugate partition of the height distribution
        by_height = Counter(heights)
        layer_sizes = [by_height[m] for m in range(1, hmax + 1)]
        assert all(layer_sizes[i] >= layer_sizes[i + 1] for i in range(hmax - 1))
        exps = sorted(sum(1 for s in layer_sizes if s >= j) for j in range(1, rank + 1))
        self.exponents = tuple(exps)
        assert sum(exps) == n and max(exps) == hmax

        self.index_of_connection = _det_int(cartan)
        ones = 1 + sum(1 for c in self.theta_coords if c == 1)
        assert self.index_of_connection == ones, "det(Cartan) != number of marks equal to 1"

        self._norm2 = tuple(self.bilinear(r.coords, r.coords) for r in self.positive_roots)
        assert max(self._norm2) == 2 and self._norm2[self.theta_index] == 2
        self.long_mask = 0
        for i, q in enumerate(self._norm2):
            if q == 2:
                self.long_mask |= 1 << i

        # (gamma_s, gamma_t^vee) for all positive s, t; always integral
        rows = []
        for t in range(n):
            nt = self._norm2[t]
            tc = self.positive_roots[t].coords
            row = []
            for j in range(rank):
                val = 2 * self.bilinear(
                    tuple(1 if k == j else 0 for k in range(rank)), tc
                ) / nt
                assert val.denominator == 1
                row.append(int(val))
            rows.append(tuple(row))
        self._coroot_rows = tuple(rows)
        self.pairing_table = tuple(
            tuple(
                sum(cs * rows[t][j] for j, cs in enumerate(self.positive_roots[s].coords))
                for t in range(n)
            )
            for s in range(n)
        )

        # addition table and two-root decompositions
        sum_index = [[-1] * n for _ in range(n)]
        for i in range(n):
            ci = self.positive_roots[i].coords
            for j in range(i, n):
                cj = self.positive_roots[j].coords
                k = self._index.get(tuple(x + y for x, y in zip(ci, cj)), -1)
                sum_index[i][j] = k
                sum_index[j][i] = k
        self.sum_index = tuple(tuple(row) for row in sum_index)
        decs = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                k = sum_index[i][j]
                if k >= 0:
                    decs[k].append((i, j))
        self.decompositions = tuple(tuple(d) for d in decs)

        # order masks over the deterministic index
        up = [0] * n
        strict_up = [0] * n
        strict_down = [0] * n
        for i in range(n):
            ci = self.positive_roots[i].coords
            for j in range(n):
                cj = self.positive_roots[j].coords
                if all(b - a >= 0 for a, b in zip(ci, cj)):
                    up[i] |= 1 << j
                    if i != j:
                        strict_up[i] |= 1 << j
                        strict_down[j] |= 1 << i
        self.up_masks = tuple(up)
        self.strict_up_masks = tuple(strict_up)
        self.strict_down_masks = tuple(strict_down)
        full = (1 << n) - 1
        self.incomparability_masks = tuple(
            full & ~(up[i] | strict_down[i] | (1 << i)) for i in range(n)
        )

        inv_gram = _invert_fraction_matrix(gram)
        # varpi_i^vee is the i-th column of gram^{-1}
        self.coweight_basis = tuple(
            tuple(inv_gram[j][i] for j in range(rank)) for i in range(rank)
        )
        self.rho = tuple(
            Fraction(sum(r.coords[j] for r in self.positive_roots), 2) for j in range(rank)
        )

    # -- basic queries ----------------------------------------------------

    def alpha(self, i: int) -> Root:
        """The i-th simple root (0-based)."""
        return self.positive_roots[self.simple_indices[i]]

    def simple_roots(self):
        return [self.alpha(i) for i in range(self.rank)]

    def highest_root(self) -> Root:
        return self.theta

    def long_positive_roots(self):
        return [r for i, r in enumerate(self.positive_roots) if self.long_mask >> i & 1]

    def index_of(self, root: Root) -> int:
        try:
            return self._index[root.coords]
        except KeyError:
            raise ValueError("%r is not a positive root of %s" % (root, self)) from None

    def is_positive_root(self, coords) -> bool:
        return tuple(coords) in self._index

    def is_root(self, coords) -> bool:
        c = tuple(coords)
        return c in self._index or tuple(-x for x in c) in self._index

    def root_order_leq(self, mu: Root, gamma: Root) -> bool:
        """mu <= gamma iff gamma - mu has nonnegative coordinates."""
        return all(b - a >= 0 for a, b in zip(mu.coords, gamma.coords))

    # -- exact arithmetic --------------------------------------------------

    def bilinear(self, x, y) -> Fraction:
        """Invariant inner product of two coordinate vectors."""
        g = self.gram
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                total += xi * sum(g[i][j] * yj for j, yj in enumerate(y) if yj)
        return total

    def pairing(self, gamma: Root, nu: Root) -> int:
        """(gamma, nu^vee); an integer for any two roots."""
        val = 2 * self.bilinear(gamma.coords, nu.coords) / self.bilinear(nu.coords, nu.coords)
        assert val.denominator == 1
        return int(val)

    def pair_root_coroot(self, mu, r) -> int:
        """(mu, r) for a root-coordinate vector mu and a coroot-lattice vector r."""
        num = 0
        gn = self._gram_num
        for i, mi in enumerate(mu):
            if mi:
                row = gn[i]
                num += mi * sum(row[j] * rj for j, rj in enumerate(r) if rj)
        q, rem = divmod(num, self._gram_den)
        assert rem == 0, "pairing with a non-coroot-lattice vector"
        return q

    def norm2(self, root: Root) -> Fraction:
        return self.bilinear(root.coords, root.coords)

    def in_coroot_lattice(self, x) -> bool:
        """Whether the coordinate vector x lies in the coroot lattice."""
        for j, xj in enumerate(x):
            if (Fraction(xj) * self.lengths[j] / 2).denominator != 1:
                return False
        return True

    # -- debug dump ---------------------------------------------------------

    def describe(self) -> str:
        """Structured text dump of Delta^+ with indices, heights and lengths."""
        lines = [
            "%s (rank %d): %d positive roots, h=%d, exponents=%s, f=%d"
            % (self.type_label, self.rank, self.num_positive, self.coxeter_number,
               list(self.exponents), self.index_of_connection)
        ]
        for i, r in enumerate(self.positive_roots):
            tag = "long" if self.long_mask >> i & 1 else "short"
            lines.append(
                "%3d  [%s]  height=%d  norm2=%s  %s"
                % (i, ",".join(map(str, r.coords)), r.height, self._norm2[i], tag)
            )
        return "\n".join(lines)

    def __repr__(self) -> str:
        return "RootSystem(%s, rank=%d)" % (self.type_label, self.rank)


_CACHE: dict = {}


def build(type_label: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given simple type."""
    key = (type_label, rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(type_label, rank)
    return _CACHE[key]
