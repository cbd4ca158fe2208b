"""Counting minimal/maximal/minimax elements by lattice points.

The minimax elements correspond to the coroot-lattice points of the
polytope D_mm = {x : -1 <= (x, alpha) <= 1 for simple alpha,
0 <= (x, theta) <= 2}.  Over the coweight lattice the count is the
number of {-1,0,1}-solutions of 0 <= sum c_i y_i <= 2 (c_i the marks of
theta), equivalently of the extended system sum_{i=0}^p c_i y_i = 1
with c_0 = 1, whose solution count is the coefficient of x in
prod_i (x^-c_i + 1 + x^c_i).  Dividing by the index of connection f, or
keeping only the solutions passing the per-type congruence that cuts
the coroot lattice out of the coweight lattice, gives the minimax
count; the two routes are computed independently and must agree.

All arithmetic here is exact: integer sweeps over {-1,0,1}^(p+1),
rational products with a final integrality assertion.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import RootSystem
from .ideals import enumerate_ideals

__all__ = [
    "CountReport", "d_min_contains", "d_max_contains", "d_mm_contains",
    "coweight_point", "in_coroot_lattice", "solve_base_system",
    "solve_extended_system", "laurent_coefficient", "trinomial",
    "congruence_filter", "count_minimax", "count_minimax_by_enumeration",
    "count_AD", "count_AD0", "haiman_count", "catalan", "motzkin",
    "directed_animals", "minimax_count_D",
]


@dataclass(frozen=True)
class CountReport:
    """One counted quantity with its method provenance."""

    type_label: str
    rank: int
    quantity: str
    value: int
    method: str  # enumeration | lattice | closed_form
    congruence_applied: bool = False

    def csv_row(self):
        return [self.type_label, self.rank, self.quantity, self.value,
                self.method, self.congruence_applied]


# -- polytope membership ----------------------------------------------------


def d_min_contains(rs: RootSystem, x) -> bool:
    """(x, alpha) >= -1 for simple alpha and (x, theta) <= 2."""
    if any(rs.bilinear(x, a.coords) < -1 for a in rs.simple_roots()):
        return False
    return rs.bilinear(x, rs.theta_coords) <= 2


def d_max_contains(rs: RootSystem, x) -> bool:
    """(x, alpha) <= 1 for simple alpha and (x, theta) >= 0."""
    if any(rs.bilinear(x, a.coords) > 1 for a in rs.simple_roots()):
        return False
    return rs.bilinear(x, rs.theta_coords) >= 0


def d_mm_contains(rs: RootSystem, x) -> bool:
    return d_min_contains(rs, x) and d_max_contains(rs, x)


def coweight_point(rs: RootSystem, y):
    """sum y_i varpi_i^vee as a coordinate vector over the simple roots."""
    out = [Fraction(0)] * rs.rank
    for i, yi in enumerate(y):
        if yi:
            for j in range(rs.rank):
                out[j] += yi * rs.coweight_basis[i][j]
    return tuple(out)


def in_coroot_lattice(rs: RootSystem, x) -> bool:
    return rs.in_coroot_lattice(x)


# -- the {-1,0,1} systems ---------------------------------------------------


def solve_base_system(rs: RootSystem):
    """All y in {-1,0,1}^p with 0 <= sum c_i y_i <= 2; these are D_mm cap P^vee."""
    c = rs.theta_coords
    out = []
    for y in itertools.product((-1, 0, 1), repeat=rs.rank):
        s = sum(ci * yi for ci, yi in zip(c, y))
        if 0 <= s <= 2:
            out.append(y)
    return out


def solve_extended_system(rs: RootSystem):
    """All y in {-1,0,1}^(p+1) with y_0 + sum c_i y_i = 1 (marks of theta)."""
    c = (rs.c0,) + rs.theta_coords
    out = []
    for y in itertools.product((-1, 0, 1), repeat=rs.rank + 1):
        if sum(ci * yi for ci, yi in zip(c, y)) == 1:
            out.append(y)
    return out


def laurent_coefficient(cs, k: int) -> int:
    """Coefficient of x^k in prod_i (x^-c_i + 1 + x^c_i)."""
    poly = {0: 1}
    for c in cs:
        nxt = {}
        for e, v in poly.items():
            for d in (-c, 0, c):
                nxt[e + d] = nxt.get(e + d, 0) + v
        poly = nxt
    return poly.get(k, 0)


def trinomial(k: int, n: int) -> int:
    """X_k(n), the coefficient of x^k in (x^-1 + 1 + x)^n."""
    if n < 0:
        raise ValueError("trinomial needs n >= 0")
    k = abs(k)
    if k > n:
        return 0
    total = 0
    fact = math.factorial
    for l in range(0, (n - k) // 2 + 1):
        total += fact(n) // (fact(l) * fact(k + l) * fact(n - 2 * l - k))
    return total


# -- the coroot-lattice congruences, per type -------------------------------


def congruence_filter(rs: RootSystem, y) -> bool:
    """Whether the coweight point of an extended solution lies in Q^vee.

    y is an extended solution (y_0, y_1, .., y_p); only y_1..y_p enter,
    since y_0 is the auxiliary variable.  The conditions are stated in
    the Vinberg-Onishchik numbering of the simple roots.
    """
    t = rs.type_label
    p = rs.rank
    ys = y[1:]
    if t == "A":
        return sum((p - i) * ys[i] for i in range(p)) % (p + 1) == 0
    if t == "C":
        return ys[p - 1] % 2 == 0
    if t == "B":
        return sum(ys[i] for i in range(0, p, 2)) % 2 == 0
    if t == "D":
        if p % 2 == 0:
            return (
                (ys[p - 2] + ys[p - 1]) % 2 == 0
                and sum(ys[i] for i in range(0, p - 1, 2)) % 2 == 0
            )
        return (2 * sum(ys[i] for i in range(0, p - 2, 2)) + ys[p - 2] - ys[p - 1]) % 4 == 0
    if t == "E6":
        return (ys[0] - ys[1] + ys[3] - ys[4]) % 3 == 0
    if t == "E7":
        return (ys[0] + ys[2] + ys[6]) % 2 == 0
    # E8, F4, G2: the coweight and coroot lattices coincide
    return True


# -- counting ----------------------------------------------------------------


def count_minimax(rs: RootSystem) -> CountReport:
    """Minimax count by the lattice route, computed two ways.

    (a) the extended-system solution count divided by the index of
    connection (divisibility is asserted, not assumed); (b) the number
    of solutions passing the coroot-lattice congruence.  The two must
    agree or the implementation is broken.
    """
    ext = solve_extended_system(rs)
    f = rs.index_of_connection
    total = len(ext)
    quot, rem = divmod(total, f)
    if rem:
        raise ArithmeticError(
            "index of connection %d does not divide the solution count %d for %s%d"
            % (f, total, rs.type_label, rs.rank)
        )
    filtered = sum(1 for y in ext if congruence_filter(rs, y))
    if filtered != quot:
        raise ArithmeticError(
            "congruence count %d != quotient count %d for %s%d"
            % (filtered, quot, rs.type_label, rs.rank)
        )
    return CountReport(rs.type_label, rs.rank, "minimax", quot, "lattice", True)


def count_minimax_by_enumeration(rs: RootSystem) -> CountReport:
    value = sum(1 for _ in enumerate_ideals(rs, "minimax"))
    return CountReport(rs.type_label, rs.rank, "minimax", value, "enumeration")


def _integer_product(factors) -> int:
    total = Fraction(1)
    for f in factors:
        total *= f
    assert total.denominator == 1
    return int(total)


def count_AD(rs: RootSystem) -> CountReport:
    """#ideals = prod (h + e_i + 1) / (e_i + 1), exact."""
    h = rs.coxeter_number
    value = _integer_product(Fraction(h + e + 1, e + 1) for e in rs.exponents)
    return CountReport(rs.type_label, rs.rank, "AD", value, "closed_form")


def count_AD0(rs: RootSystem) -> CountReport:
    """#strictly positive ideals = prod (h + e_i - 1) / (e_i + 1), exact."""
    h = rs.coxeter_number
    value = _integer_product(Fraction(h + e - 1, e + 1) for e in rs.exponents)
    return CountReport(rs.type_label, rs.rank, "AD0", value, "closed_form")


def haiman_count(rs: RootSystem, t: int) -> int:
    """Coroot-lattice points in the t-dilated closed fundamental alcove.

    Valid whenever gcd(t, h) = 1 (which also makes t coprime to every
    mark of theta); the formula is prod (t + e_i) / (1 + e_i).  For t
    sharing a factor with h the product need not even be an integer, so
    such t are rejected.
    """
    if math.gcd(t, rs.coxeter_number) != 1:
        raise ValueError(
            "t = %d shares a factor with the Coxeter number %d"
            % (t, rs.coxeter_number)
        )
    return _integer_product(Fraction(t + e, 1 + e) for e in rs.exponents)


# -- the classical sequences --------------------------------------------------


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def motzkin(n: int) -> int:
    """M_n = sum_k C(n, 2k) Catalan(k)."""
    if n < 0:
        raise ValueError("motzkin needs n >= 0")
    return sum(math.comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def directed_animals(n: int) -> int:
    """dir_n = sum_q C(q, floor(q/2)) C(n-1, q)."""
    if n < 1:
        raise ValueError("directed_animals needs n >= 1")
    return sum(math.comb(q, q // 2) * math.comb(n - 1, q) for q in range(n))


def minimax_count_D(n: int) -> int:
    """Minimax count in type D_n: 2 dir_{n-2} + dir_{n-1}."""
    if n < 4:
        raise ValueError("type D needs rank >= 4")
    return 2 * directed_animals(n - 2) + directed_animals(n - 1)
