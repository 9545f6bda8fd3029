from fractions import Fraction as Q

import pytest

from superhc.builders import gl11, gl12, osp12, sl2
from superhc.catalog import (CATALOG, NoCertificate, NotEvenType,
                             group_type_pair, roots_report,
                             verify_certificate, verify_main_theorem)
from superhc.pairs import restricted_roots
from superhc.rings import filtered_dimension, OddRootDatum
from superhc.serialization import dumps_canonical


def test_group_type_sl2_roots():
    pair = group_type_pair(sl2(), ["h"])
    system = restricted_roots(pair)
    assert [(r.m0, r.m1) for r in system.roots] == [(2, 0), (2, 0)]


def test_group_type_osp12_roots():
    pair = group_type_pair(osp12(), ["h"])
    system = restricted_roots(pair)
    table = {r.lam: (r.m0, r.m1) for r in system.roots}
    assert table == {(Q(-2),): (2, 0), (Q(-1),): (0, 2),
                     (Q(1),): (0, 2), (Q(2),): (2, 0)}


def test_group_type_gl11_has_no_certificate():
    # str(I) = 0 breaks strong reductivity: the identity sits inside the
    # declared ideal, so the declared sum is not direct (and b degenerates)
    with pytest.raises(NoCertificate):
        group_type_pair(gl11(), ["E00", "E11"])


def test_group_type_requires_even_cartan():
    # a non-Cartan "torus" candidate: span{e} has too-large centraliser
    with pytest.raises(NotEvenType):
        group_type_pair(sl2(), ["e"])


def test_certificates_of_catalog_algebras_verify():
    for maker in (sl2, osp12, gl12):
        from superhc.builders import double_with_flip
        verify_certificate(double_with_flip(maker()))


def test_verify_main_theorem_rank_one_q1():
    report = verify_main_theorem("rank1-aniso-q1", degree=3)
    assert report["ok"]
    assert report["rows"][-1]["dim_image"] == report["rows"][-1]["dim_J"] == 3


def test_verify_main_theorem_group_osp12_I_equals_J():
    report = verify_main_theorem("group-osp12", degree=4)
    assert report["ok"]
    for row in report["rows"]:
        assert row["dim_I"] == row["dim_J"] == row["dim_image"]


def test_verify_main_theorem_group_gl12():
    report = verify_main_theorem("group-gl12")
    assert report["ok"]
    # the isotropic conditions genuinely cut: dim SW0 > dim J at degree 2
    last = report["rows"][-1]
    assert last["dim_SW0"] > last["dim_J"]


def test_planted_wrong_multiplicity_is_detected():
    # tampering with an odd multiplicity changes the predicted ring
    # dimensions, so dims_match fails
    analysis = CATALOG["rank1-aniso-q1"].build()
    report = verify_main_theorem(analysis, degree=3)
    assert report["flags"]["dims_match"]
    good = analysis.data[0]
    bad = OddRootDatum(good.lam, good.q + 1, good.iso_class, good.c,
                       good.A_coords, good.a_coords, good.h0_coords,
                       good.a_perp, good.gated)
    dim_img = report["rows"][-1]["dim_image"]
    dim_j_bad = filtered_dimension("J", [bad], analysis.weyl, 1, 3)
    assert dim_img != dim_j_bad


def test_report_determinism():
    r1 = verify_main_theorem("rank1-iso-q1", degree=2, seed=5)
    r2 = verify_main_theorem("rank1-iso-q1", degree=2, seed=5)
    r1.pop("timing_seconds")
    r2.pop("timing_seconds")
    assert dumps_canonical(r1) == dumps_canonical(r2)


def test_roots_report_shape():
    analysis = CATALOG["rank1-iso-q1"].build()
    report = roots_report(analysis, "rank1-iso-q1")
    assert report["a_basis"] == ["h0", "Al"]
    assert report["rho"] == ["-1", "0"]
    odd = [r for r in report["roots"] if r["m1"] > 0]
    assert odd and all(r["isotropy"] == "ISOTROPIC" for r in odd)
    assert all(r["gated"] is False for r in odd if r["positive"])


def test_gated_flag_group_osp12():
    analysis = CATALOG["group-osp12"].build()
    report = roots_report(analysis, "group-osp12")
    gated = [r for r in report["roots"] if r.get("gated")]
    assert gated, "the odd root with 2*lam in Sigma must be gated"


def test_build_with_direction_keeps_model_and_flips_positivity():
    entry = CATALOG["rank1-aniso-q1"]
    flipped = entry.build(direction=(Q(-1),))
    assert hasattr(flipped, "model")
    assert [r.lam for r in flipped.system.positive_roots()] == [(Q(-1),)]
    # the theorem instance is direction-independent here
    report = verify_main_theorem(flipped, degree=3)
    assert report["ok"]


def test_verify_exact_sequence_with_flags():
    from superhc.harish import verify_exact_sequence
    analysis = CATALOG["rank1-aniso-q1"].build()
    report = verify_exact_sequence(analysis.ctx, 2, weyl=analysis.weyl,
                                   data=analysis.data)
    assert report["weyl_invariant"] is True
    assert report["in_J"] is True
