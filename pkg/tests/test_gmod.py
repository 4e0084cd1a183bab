import pytest

from nhsf.gmod import FlagCase, abelian_negative, build_irreducible
from nhsf.liealg import build_chevalley
from nhsf.rootsys import COROOT, Weight, build_root_system, weyl_dim


@pytest.mark.parametrize("t,n,hw,dim", [
    ("A", 2, (1, 0), 3), ("A", 2, (0, 0), 1), ("A", 2, (1, 1), 8),
    ("G", 2, (1, 0), 7), ("G", 2, (0, 1), 14),
    ("B", 3, (0, 0, 1), 8), ("C", 3, (0, 1, 0), 14), ("D", 4, (1, 0, 0, 0), 8),
])
def test_irreducible_dims_match_weyl_formula(t, n, hw, dim):
    rs = build_root_system(t, n)
    assert int(weyl_dim(rs, hw)) == dim  # independent oracle
    mod = build_irreducible(rs, Weight(hw, COROOT))
    assert mod.dim == dim


def test_irreducible_rejections():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        build_irreducible(rs, Weight((-1, 0), COROOT))
    with pytest.raises(ValueError) as exc:
        build_irreducible(rs, Weight((9, 9), COROOT), dim_bound=100)
    assert "exceeds" in str(exc.value)


def test_irreducible_weight_multiset_adjoint():
    rs = build_root_system("A", 2)
    mod = build_irreducible(rs, Weight((1, 1), COROOT))
    zero = sum(1 for w in mod.weights if w == (0, 0))
    assert zero == 2  # Cartan multiplicity of sl3 adjoint


def _case(t, n, nodes):
    return FlagCase(t, n, tuple(nodes))


def test_adjoint_module_dims_g2():
    fc = _case("G", 2, (1,))
    adj = fc.adjoint_module()
    dims = {d: len(v) for d, v in adj.by_degree.items()}
    assert dims == {-3: 2, -2: 1, -1: 2, 0: 4, 1: 2, 2: 1, 3: 2}
    adj.verify_representation()
    adj.verify_weight_additivity()


def test_adjoint_module_total_f4():
    fc = _case("F", 4, (2,))
    adj = fc.adjoint_module()
    assert adj.dim == 52
    assert sorted(adj.by_degree) == list(range(-4, 5))


def test_riemann_module_dims():
    assert _case("G", 2, (1,)).riemann_module().dim == 8
    assert _case("A", 2, (1, 2)).riemann_module().dim == 3  # Borel: l1 = 0
    fc = _case("C", 3, (1,))
    riem = fc.riemann_module()
    assert {d: len(v) for d, v in riem.by_degree.items()} == {-2: 1, -1: 4, 0: 10}
    riem.verify_representation()


def test_coriemann_dims_equal_gminus_plus_z():
    for t, n, nodes in [("G", 2, (1,)), ("C", 2, (1, 2)), ("A", 3, (1, 3)),
                        ("D", 4, (2,))]:
        fc = _case(t, n, nodes)
        cor = fc.coriemann_module()
        assert cor.dim == fc.gminus.dim + len(fc.levi.z)
        cor.verify_representation()
        cor.verify_weight_additivity()


def test_coriemann_weights_mirror_positive_part():
    fc = _case("G", 2, (1,))
    cor = fc.coriemann_module()
    pos_weights = sorted(lab.weight for lab in fc.alg.basis if lab.degree > 0)
    quot = sorted(b.weight for b in cor.basis if b.degree > 0)
    assert quot == pos_weights


def test_abelian_negative_packaging():
    alg = build_chevalley("G", 2)
    irr = build_irreducible(alg.rs, Weight((1, 0), COROOT))
    nil, mod = abelian_negative(irr, False, alg)
    assert nil.dim == 7 and mod.dim == 21
    mod.verify_representation()
    nil, mod = abelian_negative(irr, True, alg)
    assert mod.dim == 22
    mod.verify_representation()
