import itertools

import pytest

from adideals.rootsys import Root, build
from helpers import systems_up_to

# standard exponent tables, kept as an oracle against the computed values
EXPONENTS = {
    ("A", 5): (1, 2, 3, 4, 5),
    ("B", 4): (1, 3, 5, 7),
    ("C", 5): (1, 3, 5, 7, 9),
    ("D", 4): (1, 3, 3, 5),
    ("D", 6): (1, 3, 5, 5, 7, 9),
    ("G2", 2): (1, 5),
    ("F4", 4): (1, 5, 7, 11),
    ("E6", 6): (1, 4, 5, 7, 8, 11),
    ("E7", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E8", 8): (1, 7, 11, 13, 17, 19, 23, 29),
}

INDEX_OF_CONNECTION = {"A": None, "B": 2, "C": 2, "D": 4,
                       "E6": 3, "E7": 2, "E8": 1, "F4": 1, "G2": 1}


@pytest.mark.parametrize("label,rank", systems_up_to(8))
def test_structural_invariants(label, rank):
    rs = build(label, rank)
    h = rs.coxeter_number
    assert 2 * rs.num_positive == rank * h
    assert sum(rs.theta_coords) == h - 1
    assert sum(rs.exponents) == rs.num_positive
    assert max(rs.exponents) == h - 1
    expected_f = rank + 1 if label == "A" else INDEX_OF_CONNECTION[label]
    assert rs.index_of_connection == expected_f
    assert rs.index_of_connection == 1 + sum(1 for c in rs.theta_coords if c == 1)


@pytest.mark.parametrize("key", sorted(EXPONENTS))
def test_exponents_match_tables(key):
    label, rank = key
    assert build(label, rank).exponents == EXPONENTS[key]


def test_a2_build():
    rs = build("A", 2)
    assert rs.num_positive == 3
    assert rs.theta == rs.alpha(0) + rs.alpha(1)
    assert rs.coxeter_number == 3
    assert rs.exponents == (1, 2)


def test_g2_build():
    rs = build("G2", 2)
    assert rs.num_positive == 6
    assert sorted(rs.theta_coords) == [2, 3]
    assert rs.index_of_connection == 1


def test_e8_build():
    rs = build("E8", 8)
    assert rs.num_positive == 120
    assert rs.coxeter_number == 30
    assert rs.index_of_connection == 1
    assert sum(rs.theta_coords) == 29


@pytest.mark.parametrize("label,rank", [("D", 3), ("D", 2), ("B", 1), ("C", 1),
                                        ("E6", 5), ("E8", 7), ("F4", 3), ("G2", 3)])
def test_invalid_rank_rejected(label, rank):
    with pytest.raises(ValueError, match="rank"):
        build(label, rank)


def test_unknown_type_rejected():
    with pytest.raises(ValueError, match="valid types"):
        build("H3", 3)


def test_low_rank_coincidences_are_distinct_labels():
    b2, c2 = build("B", 2), build("C", 2)
    assert b2.theta_coords == (1, 2)
    assert c2.theta_coords == (2, 1)


def test_root_order_examples():
    rs = build("A", 2)
    a1, a2 = rs.alpha(0), rs.alpha(1)
    assert rs.root_order_leq(a1, rs.theta)
    assert not rs.root_order_leq(a1, a2)
    assert not rs.root_order_leq(a1 + a2, a1)


@pytest.mark.parametrize("label,rank", systems_up_to(4))
def test_root_order_is_partial_order(label, rank):
    rs = build(label, rank)
    roots = rs.positive_roots
    for a in roots:
        assert rs.root_order_leq(a, a)
    for a, b in itertools.permutations(roots, 2):
        if rs.root_order_leq(a, b) and rs.root_order_leq(b, a):
            raise AssertionError("antisymmetry fails")
    for a, b, c in itertools.product(roots, repeat=3):
        if rs.root_order_leq(a, b) and rs.root_order_leq(b, c):
            assert rs.root_order_leq(a, c)


@pytest.mark.parametrize("label,rank", systems_up_to(5))
def test_theta_is_unique_maximum(label, rank):
    rs = build(label, rank)
    assert all(rs.root_order_leq(r, rs.theta) for r in rs.positive_roots)


@pytest.mark.parametrize("label,rank", systems_up_to(5))
def test_every_nonsimple_root_descends(label, rank):
    rs = build(label, rank)
    for r in rs.positive_roots:
        if r.height == 1:
            continue
        assert any(
            rs.is_positive_root((r - rs.alpha(i)).coords) for i in range(rank)
        )


def test_pairing_examples():
    a2 = build("A", 2)
    assert a2.pairing(a2.theta, a2.theta) == 2
    assert a2.pairing(a2.alpha(0), a2.alpha(1)) == -1
    g2 = build("G2", 2)
    assert g2.pairing(g2.alpha(0), g2.alpha(1)) == g2.cartan[0][1]
    assert g2.pairing(g2.alpha(1), g2.alpha(0)) == g2.cartan[1][0]


@pytest.mark.parametrize("label,rank", systems_up_to(4))
def test_pairings_are_integers(label, rank):
    rs = build(label, rank)
    for a, b in itertools.product(rs.positive_roots, repeat=2):
        assert isinstance(rs.pairing(a, b), int)


def test_long_roots():
    a2 = build("A", 2)
    assert len(a2.long_positive_roots()) == 3
    c3 = build("C", 3)
    longs = set(c3.long_positive_roots())
    for r in c3.positive_roots:
        if r in longs:
            assert c3.norm2(r) == 2
        else:
            assert 2 * c3.norm2(r) == 2
    for label, rank in systems_up_to(5):
        rs = build(label, rank)
        assert rs.theta in rs.long_positive_roots()


def test_simple_roots_and_cartan():
    rs = build("B", 3)
    simples = rs.simple_roots()
    assert [s.height for s in simples] == [1, 1, 1]
    for i in range(3):
        for j in range(3):
            assert rs.pairing(simples[i], simples[j]) == rs.cartan[i][j]


def test_describe_dump():
    text = build("A", 2).describe()
    assert "3 positive roots" in text
    assert "[1,1]" in text and "height=2" in text


def test_root_arithmetic():
    r = Root((1, 0)) + Root((0, 1))
    assert r == Root((1, 1)) and r.height == 2
    assert (-r).coords == (-1, -1)
    assert not (-r).is_positive()
