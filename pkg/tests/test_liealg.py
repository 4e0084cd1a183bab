import itertools

import pytest
from fractions import Fraction as Q
from hypothesis import given, settings, strategies as st

from nhsf.liealg import (GradingSpec, build_chevalley, gminus_of, graded_algebra,
                         heisenberg, levi_pieces)


def test_sl2_relations():
    alg = build_chevalley("A", 1)
    assert alg.dim == 3
    e, f, h = alg.x_index(0), alg.y_index(0), alg.h_index(0)
    assert alg.bracket_basis(e, f) == {h: Q(1)}
    assert alg.bracket_basis(h, e) == {e: Q(2)}
    assert alg.bracket_basis(h, f) == {f: Q(-2)}


def test_g2_dimension_and_support():
    alg = build_chevalley("G", 2)
    assert alg.dim == 14
    rs = alg.rs
    signed = [(r, 1) for r in rs.positive_roots] + [(r, -1) for r in rs.positive_roots]
    for (r1, s1), (r2, s2) in itertools.product(signed, repeat=2):
        i = alg.x_index(rs.root_index[r1]) if s1 > 0 else alg.y_index(rs.root_index[r1])
        j = alg.x_index(rs.root_index[r2]) if s2 > 0 else alg.y_index(rs.root_index[r2])
        if i == j:
            continue
        total = tuple(s1 * a + s2 * b for a, b in zip(r1, r2))
        expect = rs.is_root(total) or all(c == 0 for c in total)
        assert bool(alg.bracket_basis(i, j)) == expect


def test_f4_dimension():
    assert build_chevalley("F", 4).dim == 52


def test_structure_constants_are_integers():
    for t, n in [("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]:
        alg = build_chevalley(t, n)
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                for v in alg.bracket_basis(i, j).values():
                    assert v.denominator == 1


@given(st.sampled_from([("A", 2), ("B", 2), ("C", 3), ("D", 4), ("G", 2)]),
       st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_jacobi_random_triples(spec, seed):
    import random

    alg = build_chevalley(*spec)
    rng = random.Random(seed)
    i, j, k = (rng.randrange(alg.dim) for _ in range(3))
    acc = {}
    for term in (
        alg.bracket(alg.bracket_basis(i, j), {k: Q(1)}),
        alg.bracket(alg.bracket_basis(j, k), {i: Q(1)}),
        alg.bracket(alg.bracket_basis(k, i), {j: Q(1)}),
    ):
        for m, v in term.items():
            acc[m] = acc.get(m, Q(0)) + v
    assert all(v == 0 for v in acc.values())


def test_grading_rejects_all_zero():
    with pytest.raises(ValueError):
        GradingSpec((0, 0))
    with pytest.raises(ValueError):
        GradingSpec((0, -1))


def test_grading_degree_consistency():
    alg = graded_algebra("F", 4, (2,))
    for i in range(alg.dim):
        for j in range(alg.dim):
            di, dj = alg.basis[i].degree, alg.basis[j].degree
            for k, v in alg.bracket_basis(i, j).items():
                assert alg.basis[k].degree == di + dj


def test_g2_node1_grading():
    alg = graded_algebra("G", 2, (1,))
    dims = alg.dims_by_degree
    assert (dims[-1], dims[-2], dims[-3]) == (2, 1, 2)
    assert alg.depth == 3 == alg.rs.maximal_root[0]


def test_contact_grading_sp():
    # sp(2n+2), first node: g_- = hei(2n)
    for n in (1, 2):
        alg = graded_algebra("C", n + 1, (1,))
        dims = alg.dims_by_degree
        assert dims[-1] == 2 * n and dims[-2] == 1 and alg.depth == 2


def test_sp_two_node_depth():
    assert graded_algebra("C", 3, (1, 3)).depth == 3
    assert graded_algebra("C", 4, (1, 4)).depth == 3


def test_depth_equals_selected_coefficient():
    for t, n, node in [("B", 3, 2), ("D", 4, 2), ("F", 4, 3), ("E", 6, 3)]:
        alg = graded_algebra(t, n, (node,))
        assert alg.depth == alg.rs.maximal_root[node - 1]


def test_dim_gminus_counts_roots_with_selected_coefficient():
    for t, n, node in [("G", 2, 2), ("F", 4, 1), ("D", 5, 3)]:
        alg = graded_algebra(t, n, (node,))
        nil, _ = gminus_of(alg)
        expect = sum(1 for r in alg.rs.positive_roots if r[node - 1] != 0)
        assert nil.dim == expect
        assert nil.generated_by_top()


def test_levi_pieces_examples():
    lp = levi_pieces(graded_algebra("G", 2, (1,)))
    assert (len(lp.l), len(lp.l1), lp.dim_z) == (4, 3, 1)
    lp = levi_pieces(graded_algebra("A", 2, (1, 2)))
    assert (len(lp.l), len(lp.l1), lp.dim_z) == (2, 0, 2)
    lp = levi_pieces(graded_algebra("C", 3, (1,)))
    assert len(lp.l1) == 10  # sp(4)


def test_z_killing_orthogonality():
    """z is the Killing-orthogonal complement of the unselected coroots."""
    alg = graded_algebra("F", 4, (2,))
    lp = levi_pieces(alg)
    for zel in lp.z:
        zv = [zel.get(i, Q(0)) for i in range(alg.rank)]
        for j in (0, 2, 3):  # unselected nodes, 0-based
            hj = [Q(1) if i == j else Q(0) for i in range(alg.rank)]
            assert alg.killing_on_cartan(zv, hj) == 0


def test_heisenberg_nilpotent():
    nil = heisenberg(2)
    assert nil.dim == 5 and nil.depth == 2
    assert nil.generated_by_top()
    assert nil.bracket(0, 2) == {4: Q(1)}
