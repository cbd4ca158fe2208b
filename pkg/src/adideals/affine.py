"""Affine Weyl group elements and the ideal <-> element bijections.

An element is stored in the decomposition w = v . t_r with v in the
finite Weyl group (an integer matrix on root coordinates) and r in the
coroot lattice.  The linear action on affine roots is

    w(k*delta + mu) = (k - (mu, r))*delta + v(mu),

and the affine-linear action on V is w * x = v(x + r).  Inversion sets
are computed in closed form from (mu, r) and the sign of v(mu), with no
level scanning.

The minimal element of an ideal I is the one whose inversion set is
{m*delta - gamma : gamma in I, 1 <= m <= l(gamma, I)}; the maximal
element of a strictly positive I uses k(gamma, I) - 1 instead.  Both
are reconstructed from these prescribed inversion sets by peeling
affine simple reflections.
"""

from fractions import Fraction
from functools import lru_cache

from .rootsys import AffineRoot, Root, RootSystem
from . import ideals as _ideals
from .ideals import Antichain, Ideal, is_minimax  # noqa: F401  (re-export)

__all__ = [
    "FiniteWeylElement", "AffineWeylElement", "identity_finite",
    "simple_reflection", "reflection", "finite_inversions", "finite_length",
    "identity_element", "finite_element", "translation",
    "affine_simple_reflection", "simple_affine_root",
    "act_affine_root", "act_point", "inversion_set", "length",
    "is_dominant", "is_minimal", "is_maximal", "is_minimax_element",
    "is_minimax", "reduced_word", "element_from_word",
    "element_from_inversions", "w_min", "w_max", "rootlet",
    "first_layer_ideal", "generators_via_w", "xi_via_w", "lattice_image",
    "alcove_barycenter", "alcove_image_barycenter",
    "element_to_record", "element_from_record",
]


class FiniteWeylElement:
    """A finite Weyl group element as its matrix on root coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(row) for row in matrix)

    def act(self, vec):
        return tuple(
            sum(row[j] * vec[j] for j in range(len(vec)) if vec[j]) for row in self.matrix
        )

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        a, b = self.matrix, other.matrix
        n = len(a)
        return FiniteWeylElement(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        )

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(_int_matrix_inverse(self.matrix))

    def is_identity(self) -> bool:
        return all(
            x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row)
        )

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "FiniteWeylElement(%r)" % (self.matrix,)


@lru_cache(maxsize=None)
def _int_matrix_inverse(matrix):
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
    out = []
    for row in aug:
        ints = []
        for x in row[n:]:
            assert x.denominator == 1, "Weyl matrix is not invertible over Z"
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)


def identity_finite(rank: int) -> FiniteWeylElement:
    return FiniteWeylElement(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)))


def simple_reflection(rs: RootSystem, i: int) -> FiniteWeylElement:
    """s_i sends alpha_j to alpha_j - (alpha_j, alpha_i^vee) alpha_i."""
    n = rs.rank
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        rows[i][c] -= rs.cartan[c][i]
    return FiniteWeylElement(rows)


def reflection(rs: RootSystem, root: Root) -> FiniteWeylElement:
    """The reflection x -> x - (x, root^vee) root."""
    n = rs.rank
    pair = [rs.pairing(rs.alpha(j), root) for j in range(n)]
    rows = [
        [int(r == c) - pair[c] * root.coords[r] for c in range(n)] for r in range(n)
    ]
    return FiniteWeylElement(rows)


def _coords_negative(coords) -> bool:
    return any(c < 0 for c in coords)


def finite_inversions(rs: RootSystem, v: FiniteWeylElement):
    """Positive roots sent to negative roots by v."""
    return [r for r in rs.positive_roots if _coords_negative(v.act(r.coords))]


def finite_length(rs: RootSystem, v: FiniteWeylElement) -> int:
    return len(finite_inversions(rs, v))


class AffineWeylElement:
    """w = v . t_r with v finite and r a coroot-lattice vector."""

    __slots__ = ("rs", "v", "r")

    def __init__(self, rs: RootSystem, v: FiniteWeylElement, r):
        self.rs = rs
        self.v = v
        self.r = tuple(r)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        assert self.rs is other.rs
        v2inv = other.v.inverse()
        moved = v2inv.act(self.r)
        return AffineWeylElement(
            self.rs, self.v * other.v, tuple(a + b for a, b in zip(moved, other.r))
        )

    def inverse(self) -> "AffineWeylElement":
        return AffineWeylElement(
            self.rs, self.v.inverse(), tuple(-x for x in self.v.act(self.r))
        )

    def is_identity(self) -> bool:
        return self.v.is_identity() and not any(self.r)

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.rs is other.rs
            and self.v == other.v
            and self.r == other.r
        )

    def __hash__(self):
        return hash((id(self.rs), self.v, self.r))

    def __repr__(self):
        return "AffineWeylElement(v=%r, r=%r)" % (self.v.matrix, self.r)


def identity_element(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(rs, identity_finite(rs.rank), (0,) * rs.rank)


def finite_element(rs: RootSystem, v: FiniteWeylElement) -> AffineWeylElement:
    return AffineWeylElement(rs, v, (0,) * rs.rank)


def translation(rs: RootSystem, r) -> AffineWeylElement:
    return AffineWeylElement(rs, identity_finite(rs.rank), tuple(r))


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    """alpha_i for i >= 1 (0-based i-1 internally); alpha_0 = delta - theta."""
    if i == 0:
        return AffineRoot(1, tuple(-c for c in rs.theta_coords))
    return AffineRoot(0, rs.alpha(i - 1).coords)


def affine_simple_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """s_i for i in 0..p; s_0 = s_theta . t_{-theta^vee}."""
    if i == 0:
        # theta is long, so theta^vee = theta in coordinates
        return AffineWeylElement(
            rs, reflection(rs, rs.theta), tuple(-c for c in rs.theta_coords)
        )
    return finite_element(rs, simple_reflection(rs, i - 1))


def act_affine_root(w: AffineWeylElement, beta: AffineRoot) -> AffineRoot:
    t = w.rs.pair_root_coroot(beta.finite, w.r) if any(w.r) else 0
    return AffineRoot(beta.level - t, w.v.act(beta.finite))


def act_point(w: AffineWeylElement, x):
    """The affine-linear action on V: w * x = v(x + r)."""
    shifted = tuple(Fraction(a) + b for a, b in zip(x, w.r))
    return w.v.act(shifted)


def inversion_set(w: AffineWeylElement):
    """N(w) = positive affine roots sent negative; exact, no level scan.

    For mu a finite root, w(k*delta + mu) is negative exactly for
    k < (mu, r), plus k = (mu, r) when v(mu) < 0, so each mu
    contributes a closed run of levels.
    """
    rs = w.rs
    out = []
    for root in rs.positive_roots:
        for mu, lo in ((root.coords, 0), (tuple(-c for c in root.coords), 1)):
            t = rs.pair_root_coroot(mu, w.r) if any(w.r) else 0
            hi = t if _coords_negative(w.v.act(mu)) else t - 1
            for k in range(lo, hi + 1):
                out.append(AffineRoot(k, mu))
    out.sort(key=lambda b: (b.level, b.finite))
    return out


def length(w: AffineWeylElement) -> int:
    return len(inversion_set(w))


def _simple_image_negative(w: AffineWeylElement, i: int) -> bool:
    return not act_affine_root(w, simple_affine_root(w.rs, i)).is_positive()


def is_dominant(w: AffineWeylElement) -> bool:
    """w(alpha) > 0 for every finite simple root alpha."""
    return not any(_simple_image_negative(w, i) for i in range(1, w.rs.rank + 1))


def _inverse_simple_levels(w: AffineWeylElement):
    """delta-coefficients of w^{-1}(alpha_i) for i = 0..p."""
    rs = w.rs
    vr = w.v.act(w.r)
    levels = [1 - rs.pair_root_coroot(rs.theta_coords, vr)]
    for i in range(rs.rank):
        levels.append(rs.pair_root_coroot(rs.alpha(i).coords, vr))
    return levels


def is_minimal(w: AffineWeylElement) -> bool:
    return is_dominant(w) and min(_inverse_simple_levels(w)) >= -1


def is_maximal(w: AffineWeylElement) -> bool:
    return is_dominant(w) and max(_inverse_simple_levels(w)) <= 1


def is_minimax_element(w: AffineWeylElement) -> bool:
    if not is_dominant(w):
        return False
    levels = _inverse_simple_levels(w)
    return min(levels) >= -1 and max(levels) <= 1


def reduced_word(w: AffineWeylElement):
    """A reduced word for w; the lowest available simple index is peeled first."""
    rs = w.rs
    refl = [affine_simple_reflection(rs, i) for i in range(rs.rank + 1)]
    peeled = []
    cur = w
    while not cur.is_identity():
        for i in range(rs.rank + 1):
            if _simple_image_negative(cur, i):
                break
        else:  # pragma: no cover - impossible for a genuine group element
            raise RuntimeError("no descent found")
        cur = cur * refl[i]
        peeled.append(i)
    return list(reversed(peeled))


def element_from_word(rs: RootSystem, word) -> AffineWeylElement:
    acc = identity_element(rs)
    for i in word:
        acc = acc * affine_simple_reflection(rs, i)
    return acc


def element_from_inversions(rs: RootSystem, affine_roots) -> AffineWeylElement:
    """The unique element whose inversion set is the given bi-convex set."""
    remaining = {(b.level, b.finite) for b in affine_roots}
    simples = [
        (b.level, b.finite)
        for b in (simple_affine_root(rs, i) for i in range(rs.rank + 1))
    ]
    refl = [affine_simple_reflection(rs, i) for i in range(rs.rank + 1)]
    peeled = []
    while remaining:
        for i, s in enumerate(simples):
            if s in remaining:
                break
        else:
            raise ValueError("the given set is not bi-convex (no simple root in it)")
        peeled.append(i)
        s_i = refl[i]
        translated = any(s_i.r)
        new = set()
        for k, mu in remaining:
            if (k, mu) == simples[i]:
                continue
            t = rs.pair_root_coroot(mu, s_i.r) if translated else 0
            new.add((k - t, s_i.v.act(mu)))
        remaining = new
    acc = identity_element(rs)
    for i in peeled:
        acc = refl[i] * acc
    return acc


def w_min(ideal: Ideal) -> AffineWeylElement:
    """The minimal element whose first layer ideal is I."""
    rs = ideal.rs
    lt = _ideals._l_table(ideal)
    inv = [
        AffineRoot(m, tuple(-c for c in rs.positive_roots[idx].coords))
        for idx in _ideals._iter_bits(ideal.mask)
        for m in range(1, lt[idx] + 1)
    ]
    return element_from_inversions(rs, inv)


def w_max(ideal: Ideal) -> AffineWeylElement:
    """The maximal element whose first layer ideal is I (I strictly positive)."""
    rs = ideal.rs
    kt = _ideals._k_table(ideal)  # raises for non strictly positive ideals
    inv = [
        AffineRoot(m, tuple(-c for c in rs.positive_roots[idx].coords))
        for idx in _ideals._iter_bits(ideal.mask)
        for m in range(1, kt[idx])
    ]
    return element_from_inversions(rs, inv)


def rootlet(w: AffineWeylElement):
    """The pair (nu, m) with w(alpha_0) = -m*delta + nu; nu is a long root."""
    rs = w.rs
    theta = rs.theta_coords
    m = -1 - (rs.pair_root_coroot(theta, w.r) if any(w.r) else 0)
    nu = Root(tuple(-c for c in w.v.act(theta)))
    return nu, m


def first_layer_ideal(w: AffineWeylElement) -> Ideal:
    """{mu in Delta^+ : delta - mu in N(w)}; w must be dominant."""
    if not is_dominant(w):
        raise ValueError("first layer ideal is defined for dominant elements only")
    rs = w.rs
    translated = any(w.r)
    mask = 0
    for idx, root in enumerate(rs.positive_roots):
        t = rs.pair_root_coroot(root.coords, w.r) if translated else 0
        lvl = 1 + t
        if lvl < 0 or (lvl == 0 and not _coords_negative(w.v.act(root.coords))):
            mask |= 1 << idx
    return Ideal(rs, mask)


def _image_of_delta_minus(w, root):
    return act_affine_root(w, AffineRoot(1, tuple(-c for c in root.coords)))


def generators_via_w(w: AffineWeylElement) -> Antichain:
    """Generators of I_w read off from w: roots with w(delta - gamma) in -Pi^."""
    rs = w.rs
    if not is_minimal(w):
        raise ValueError("generators_via_w requires a minimal element")
    neg_simples = {(-b.level, tuple(-c for c in b.finite))
                   for b in (simple_affine_root(rs, i) for i in range(rs.rank + 1))}
    gens = []
    for root in rs.positive_roots:
        img = _image_of_delta_minus(w, root)
        if (img.level, img.finite) in neg_simples:
            gens.append(root)
    return Antichain(rs, gens)


def xi_via_w(w: AffineWeylElement) -> Antichain:
    """Xi(I_w) read off from w: roots with w(delta - gamma) in Pi^."""
    rs = w.rs
    if not is_maximal(w):
        raise ValueError("xi_via_w requires a maximal element")
    simples = {(b.level, b.finite)
               for b in (simple_affine_root(rs, i) for i in range(rs.rank + 1))}
    outs = []
    for root in rs.positive_roots:
        img = _image_of_delta_minus(w, root)
        if (img.level, img.finite) in simples:
            outs.append(root)
    return Antichain(rs, outs)


def lattice_image(w: AffineWeylElement):
    """v(r), the coroot-lattice point attached to a dominant element."""
    return w.v.act(w.r)


def alcove_barycenter(rs: RootSystem):
    """Barycenter of the fundamental alcove (vertices 0 and varpi_i^vee / c_i)."""
    p = rs.rank
    total = [Fraction(0)] * p
    for i in range(p):
        for j in range(p):
            total[j] += rs.coweight_basis[i][j] / rs.theta_coords[i]
    return tuple(x / (p + 1) for x in total)


def alcove_image_barycenter(w: AffineWeylElement):
    """Barycenter of w^{-1} * A, computed as w^{-1} * barycenter(A)."""
    b = alcove_barycenter(w.rs)
    moved = w.v.inverse().act(b)
    return tuple(x - rx for x, rx in zip(moved, w.r))


def element_to_record(w: AffineWeylElement) -> dict:
    return {
        "word": reduced_word(w),
        "v_matrix": [list(row) for row in w.v.matrix],
        "r_coords": list(w.r),
        "length": length(w),
    }


def element_from_record(rs: RootSystem, record: dict) -> AffineWeylElement:
    w = element_from_word(rs, record["word"])
    if "v_matrix" in record:
        assert w.v.matrix == tuple(tuple(row) for row in record["v_matrix"])
    if "r_coords" in record:
        assert w.r == tuple(record["r_coords"])
    return w
