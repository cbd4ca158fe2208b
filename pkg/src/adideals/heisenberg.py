"""The Heisenberg ideal and the dominant elements attached to long roots.

The Heisenberg ideal h consists of the positive roots not orthogonal to
the highest root theta; it satisfies h^2 = {theta} (for rank >= 2,
where theta is not simple) and h^3 = {}.  The
dominant elements of the form v.s_0 are classified by a long positive
root nu: v is either w_nu (the shortest element taking theta to nu) or
s_nu.w_nu, and the first-layer ideals of w_nu.s_0 and s_nu.w_nu.s_0 are
exactly the nontrivial ideals contained in h.  Closed-form descriptions
of those ideals are provided and tested against the first layers.
"""

from collections import deque
from dataclasses import dataclass

from .rootsys import Root, RootSystem
from .ideals import Ideal, heisenberg_root_mask
from .affine import (
    AffineWeylElement,
    FiniteWeylElement,
    affine_simple_reflection,
    finite_element,
    finite_inversions,
    identity_finite,
    length,
    reflection,
    simple_reflection,
)

__all__ = [
    "HeisenbergElementDescriptor", "heisenberg_ideal", "w_nu", "s_nu",
    "n_s_nu_zero", "heisenberg_element", "heisenberg_ideal_formula",
    "is_heisenberg_type", "descriptor_to_record", "descriptor_from_record",
]


def heisenberg_ideal(rs: RootSystem) -> Ideal:
    """{gamma in Delta^+ : (gamma, theta) > 0}."""
    return Ideal(rs, heisenberg_root_mask(rs))


@dataclass(frozen=True)
class HeisenbergElementDescriptor:
    """A long positive root nu plus a sign.

    sign +1 describes w_nu.s_0 (rootlet +nu); sign -1 describes
    s_nu.w_nu.s_0 (rootlet -nu).
    """

    nu: Root
    sign: int


def _require_long_positive(rs: RootSystem, nu: Root) -> int:
    idx = rs.index_of(nu)  # raises if not a positive root
    if not rs.long_mask >> idx & 1:
        raise ValueError("%r is not a long root" % (nu,))
    return idx


def w_nu(rs: RootSystem, nu: Root) -> FiniteWeylElement:
    """The shortest Weyl element taking theta to nu (nu long positive).

    Found as a shortest path from theta to nu in the graph on long
    roots whose edges are the simple reflections; composing the
    reflections along any such path yields the unique shortest element.
    """
    _require_long_positive(rs, nu)
    start, target = rs.theta_coords, nu.coords
    refl = [simple_reflection(rs, i) for i in range(rs.rank)]
    prev = {start: None}
    queue = deque([start])
    while queue and target not in prev:
        cur = queue.popleft()
        for i in range(rs.rank):
            nxt = refl[i].act(cur)
            if nxt not in prev:
                prev[nxt] = (cur, i)
                queue.append(nxt)
    steps = []
    cur = target
    while prev[cur] is not None:
        cur, i = prev[cur]
        steps.append(i)
    steps.reverse()  # reflections applied to theta in this order
    v = identity_finite(rs.rank)
    for i in steps:
        v = refl[i] * v
    assert v.act(start) == target
    return v


def s_nu(rs: RootSystem, nu: Root) -> FiniteWeylElement:
    """The reflection x -> x - (x, nu^vee) nu, for nu in Delta^+."""
    rs.index_of(nu)
    return reflection(rs, nu)


def n_s_nu_zero(rs: RootSystem, nu: Root):
    """N(s_nu) \\ {nu}: the gamma with (gamma, nu^vee) = 1 and gamma < nu."""
    t = rs.index_of(nu)
    return [
        r
        for s, r in enumerate(rs.positive_roots)
        if s != t
        and rs.pairing_table[s][t] == 1
        and rs.root_order_leq(r, nu)
    ]


def heisenberg_element(rs: RootSystem, d: HeisenbergElementDescriptor) -> AffineWeylElement:
    """w_nu.s_0 for sign +1, s_nu.w_nu.s_0 for sign -1."""
    _require_long_positive(rs, d.nu)
    if d.sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    v = w_nu(rs, d.nu)
    if d.sign == -1:
        v = s_nu(rs, d.nu) * v
    return finite_element(rs, v) * affine_simple_reflection(rs, 0)


def heisenberg_ideal_formula(rs: RootSystem, d: HeisenbergElementDescriptor) -> Ideal:
    """Closed-form first-layer ideal of the described element.

    sign +1: {theta} u (theta - N(w_nu));
    sign -1: additionally theta - w_nu^{-1}(N(s_nu) \\ {nu}), for nu not
    simple (for simple nu the sign +1 formula already applies).
    """
    idx = _require_long_positive(rs, d.nu)
    if d.sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if d.sign == -1 and idx in rs.simple_indices:
        raise ValueError("the sign -1 formula needs a non-simple root")
    wv = w_nu(rs, d.nu)
    theta = rs.theta
    members = {theta.coords}
    for gamma in finite_inversions(rs, wv):
        members.add((theta - gamma).coords)
    if d.sign == -1:
        wv_inv = wv.inverse()
        for gamma in n_s_nu_zero(rs, d.nu):
            members.add(tuple(t - c for t, c in zip(theta.coords, wv_inv.act(gamma.coords))))
    mask = 0
    for coords in members:
        mask |= 1 << rs.index_of(Root(coords))
    return Ideal(rs, mask)


def is_heisenberg_type(w: AffineWeylElement) -> bool:
    """Whether w = v.s_0 for some finite v, i.e. w.s_0 lands in W."""
    trimmed = w * affine_simple_reflection(w.rs, 0)
    return not any(trimmed.r) and length(trimmed) == length(w) - 1


def descriptor_to_record(d: HeisenbergElementDescriptor) -> dict:
    return {"nu": list(d.nu.coords), "sign": d.sign}


def descriptor_from_record(record: dict) -> HeisenbergElementDescriptor:
    return HeisenbergElementDescriptor(Root(tuple(record["nu"])), record["sign"])
