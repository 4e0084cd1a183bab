import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nhsf.rootsys import (COROOT, SIMPLEROOT, CartanMatrixSpec, InvalidCartanType,
                          Weight, WeylWord, build_root_system, convert_weight,
                          dynkin_split, enumerate_w_i, reflect, weyl_dim)

ALL_TYPES = [("A", 1), ("A", 4), ("B", 2), ("B", 4), ("C", 3), ("D", 4),
             ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
          "C": lambda n: n * n, "D": lambda n: n * (n - 1),
          "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
          "F": lambda n: 24, "G": lambda n: 6}


@pytest.mark.parametrize("t,n", ALL_TYPES)
def test_positive_root_counts(t, n):
    rs = build_root_system(t, n)
    assert len(rs.positive_roots) == COUNTS[t](n)


def test_invalid_types_rejected():
    for t, n in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("D", 2), ("B", 1), ("X", 2)]:
        with pytest.raises((InvalidCartanType, KeyError)):
            CartanMatrixSpec(t, n)


def test_rank1_by_hand():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == [(1,)]
    assert rs.maximal_root == (1,)


def test_g2_maximal_root():
    rs = build_root_system("G", 2)
    assert sorted(rs.maximal_root) == [2, 3]
    assert rs.maximal_root == (3, 2)  # short node first


def test_f4_maximal_root():
    rs = build_root_system("F", 4)
    assert rs.maximal_root == (2, 4, 3, 2)


@pytest.mark.parametrize("t,n", ALL_TYPES)
def test_maximal_root_dominates(t, n):
    rs = build_root_system(t, n)
    for beta in rs.positive_roots:
        assert all(m >= b for m, b in zip(rs.maximal_root, beta))


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_reflections_permute_roots(t, n):
    rs = build_root_system(t, n)
    roots = set(rs.positive_roots) | {tuple(-c for c in r) for r in rs.positive_roots}
    for i in range(rs.rank):
        for beta in rs.positive_roots:
            assert rs.reflect_root(i, beta) in roots


def test_convert_weight_g2_table_rows():
    rs = build_root_system("G", 2)
    w = convert_weight(Weight((8, -4), COROOT), SIMPLEROOT, rs)
    assert w.coords == (4, 0)
    w = convert_weight(Weight((-7, 4), COROOT), SIMPLEROOT, rs)
    assert w.coords == (-2, 1)


def test_convert_weight_zero():
    rs = build_root_system("D", 4)
    z = Weight((0,) * 4, COROOT)
    assert convert_weight(z, SIMPLEROOT, rs).coords == (0,) * 4


@given(st.tuples(*[st.integers(-9, 9)] * 4))
@settings(max_examples=50, deadline=None)
def test_convert_roundtrip_f4(coords):
    rs = build_root_system("F", 4)
    w = Weight(coords, COROOT)
    back = convert_weight(convert_weight(w, SIMPLEROOT, rs), COROOT, rs)
    assert back.coords == w.coords


def test_reflect_examples():
    a1 = build_root_system("A", 1)
    assert reflect(a1, 0, Weight((1,), COROOT)).coords == (-1,)
    a2 = build_root_system("A", 2)
    assert reflect(a2, 0, Weight((1, 0), COROOT)).coords == (-1, 1)
    # reflection fixes its wall
    assert reflect(a2, 0, Weight((0, 5), COROOT)).coords == (0, 5)


def test_enumerate_w_i_counts():
    g2 = build_root_system("G", 2)
    assert len(enumerate_w_i(g2, {1}, 0)) == 1
    assert enumerate_w_i(g2, {1}, 0)[0].reflections == ()
    assert len(enumerate_w_i(g2, {1}, 2)) == 1
    f4 = build_root_system("F", 4)
    assert len(enumerate_w_i(f4, {2}, 2)) == 2
    with pytest.raises(ValueError):
        enumerate_w_i(g2, {1}, 3)
    with pytest.raises(ValueError):
        enumerate_w_i(g2, set(), 1)


def test_w_i_brute_force_oracle_g2():
    """Independent brute force: test the descent condition on all 2-letter words."""
    rs = build_root_system("G", 2)
    unselected = [1]  # 0-based node 2
    found = []
    for a, b in itertools.product(range(2), repeat=2):
        if a == b:
            continue
        w = WeylWord((a, b))
        inv = rs.word_inverse(w)
        good = True
        for j in unselected:
            img = rs.apply_word_to_root(inv, tuple(1 if t == j else 0 for t in range(2)))
            if all(c <= 0 for c in img):
                good = False
        if good:
            found.append(w)
    assert len(found) == len(enumerate_w_i(rs, {1}, 2)) == 1


@pytest.mark.parametrize("t,n,node", [("G", 2, 1), ("F", 4, 2), ("B", 3, 3), ("D", 4, 2)])
def test_length2_inversion_count_and_rho_identity(t, n, node):
    rs = build_root_system(t, n)
    for w in enumerate_w_i(rs, {node}, 2):
        inv = rs.inversions_of_inverse(w)
        assert len(inv) == 2  # card R_W^- = 2
        total = [0] * rs.rank
        for beta in inv:
            total = [a + b for a, b in zip(total, beta)]
        wrho = rs.apply_word_to_weight(w, rs.rho)
        diff = Weight(tuple(r - c for r, c in zip(rs.rho.coords, wrho.coords)), COROOT)
        assert convert_weight(diff, SIMPLEROOT, rs).coords == tuple(total)


def test_dynkin_split_examples():
    g2 = build_root_system("G", 2)
    ds = dynkin_split(g2, {1})
    assert ds.components == ((2,),) and ds.c == 1 and ds.c_values == (0,)
    a2 = build_root_system("A", 2)
    ds = dynkin_split(a2, {1, 2})
    assert ds.s == 0 and ds.c_values == ()
    # the 20-node example graph: white nodes selected
    d20 = build_root_system("D", 20)
    ds = dynkin_split(d20, {3, 7, 8, 9, 12, 16, 19, 20})
    assert ds.c_values == (0, 1, 1, 1, 2)
    assert ds.s == 5 and ds.c == 12


def test_weyl_dim():
    g2 = build_root_system("G", 2)
    assert weyl_dim(g2, (1, 0)) == 7
    assert weyl_dim(g2, (0, 1)) == 14
    a2 = build_root_system("A", 2)
    assert weyl_dim(a2, (1, 1)) == 8
    b3 = build_root_system("B", 3)
    assert weyl_dim(b3, (0, 0, 1)) == 8
