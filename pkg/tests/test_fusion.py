"""
Tests for fusion systems: hom-sets, centric subgroups, foc and hyp
"""

import pytest

from fusion_nilpotency.errors import GroupInputError, SubgroupError
from fusion_nilpotency.fusion.system import (
    build_fusion_system,
    centric_members,
    centric_subgroups,
    f_conjugacy_classes,
    focal_subgroup,
    group_focal_subgroup,
    group_hyperfocal_subgroup,
    hom_set,
    hyperfocal_subgroup,
    is_centric,
    is_nilpotent,
)
from fusion_nilpotency.groups.catalog import parse_catalog_spec
from fusion_nilpotency.groups.core import all_subgroups, derived_subgroup
from fusion_nilpotency.harness import load_catalog

CATALOG = load_catalog()

# (group, p, |foc|, |hyp|, nilpotent)
FUSION_TABLE = [
    ("symmetric:3", 2, 1, 1, True),
    ("symmetric:3", 3, 3, 3, False),
    ("alternating:4", 2, 4, 4, False),
    ("alternating:4", 3, 1, 1, True),
    ("symmetric:4", 2, 4, 4, False),
    ("symmetric:4", 3, 3, 3, False),
    ("special_linear_2_3", 2, 8, 8, False),
    ("special_linear_2_3", 3, 1, 1, True),
    ("semidirect:7,3,2", 3, 1, 1, True),
    ("semidirect:7,3,2", 7, 7, 7, False),
    ("cyclic:2*symmetric:3", 3, 3, 3, False),
]


@pytest.mark.unit
@pytest.mark.parametrize("spec, p, foc_order, hyp_order, nilpotent", FUSION_TABLE)
def test_focal_and_hyperfocal_orders(spec, p, foc_order, hyp_order, nilpotent):
    F = build_fusion_system(parse_catalog_spec(spec), p)
    foc = focal_subgroup(F)
    hyp = hyperfocal_subgroup(F)
    assert foc.order == foc_order
    assert hyp.order == hyp_order
    assert hyp.is_subgroup_of(foc)
    assert foc == group_focal_subgroup(F)
    assert hyp == group_hyperfocal_subgroup(F)
    assert is_nilpotent(F).nilpotent is nilpotent
    assert hyp.is_trivial is nilpotent


@pytest.mark.unit
@pytest.mark.parametrize(
    "spec", ["dihedral:8", "quaternion:8", "cyclic:9", "elementary_abelian:2,2"]
)
def test_p_group_fusion_is_inner(spec):
    S = parse_catalog_spec(spec)
    p = 3 if spec == "cyclic:9" else 2
    F = build_fusion_system(S, p)
    assert F.S.order == S.order
    assert hyperfocal_subgroup(F).is_trivial
    assert focal_subgroup(F) == derived_subgroup(S)
    assert is_nilpotent(F).nilpotent


@pytest.mark.unit
def test_non_nilpotent_witness(f_s3_p3):
    certificate = is_nilpotent(f_s3_p3)
    assert not certificate.nilpotent
    P, phi = certificate.witness
    assert P.order == 3
    assert not phi.is_inclusion()


@pytest.mark.unit
def test_hom_sets_and_automizers(f_a4_p2, f_s3_p3):
    S = f_a4_p2.S
    assert f_a4_p2.automizer(S).order == 3
    order_two = [P for P in f_a4_p2.subgroups if P.order == 2]
    assert len(order_two) == 3
    assert len(hom_set(f_a4_p2, order_two[0], S)) == 3
    assert len(hom_set(f_a4_p2, order_two[0], order_two[0])) == 1

    C3 = f_s3_p3.S
    assert f_s3_p3.automizer(C3).order == 2
    for phi in hom_set(f_s3_p3, C3, C3):
        assert phi.is_homomorphism()
        assert phi.is_injective()


@pytest.mark.unit
def test_composition_closed(f_a4_p2, f_s3_p3, f_d8):
    for F in (f_a4_p2, f_s3_p3, f_d8):
        assert F.composition_closed()


@pytest.mark.unit
def test_conjugacy_classes_partition_subgroups(f_a4_p2, f_d8):
    classes = f_conjugacy_classes(f_a4_p2)
    assert sorted(len(c) for c in classes) == [1, 1, 3]
    for F in (f_a4_p2, f_d8):
        members = [P for cls in f_conjugacy_classes(F) for P in cls]
        assert len(members) == len(set(members)) == len(F.subgroups)


@pytest.mark.unit
def test_centric_subgroups(f_d8, f_a4_p2, f_s3_p3):
    # D_8: the two Klein four subgroups, C_4 and D_8 itself
    assert sorted(P.order for P in centric_members(f_d8)) == [4, 4, 4, 8]
    assert [P.order for P in centric_members(f_a4_p2)] == [4]
    assert [P.order for P in centric_members(f_s3_p3)] == [3]

    for flag in centric_subgroups(f_d8):
        if flag.centric:
            assert flag.witness is None
        else:
            Q, x = flag.witness
            assert Q in flag.members
            assert x not in Q.member_set
        for P in flag.members:
            assert is_centric(f_d8, P) is flag.centric


@pytest.mark.unit
def test_rejects_non_prime(s3):
    with pytest.raises(GroupInputError):
        build_fusion_system(s3, 4)
    with pytest.raises(GroupInputError):
        build_fusion_system(s3, 1)


@pytest.mark.unit
def test_subgroup_outside_sylow(f_s3_p3, s3):
    outside = next(H for H in all_subgroups(s3) if H.order == 2)
    with pytest.raises(SubgroupError):
        hom_set(f_s3_p3, outside, f_s3_p3.S)


@pytest.mark.unit
def test_abelian_sylow_fusion(f_v4, f_a4_p2):
    assert all(len(cls) == 1 for cls in f_conjugacy_classes(f_v4))
    assert [P.order for P in centric_members(f_v4)] == [4]
    C2 = next(P for P in f_a4_p2.subgroups if P.order == 2)
    assert not is_centric(f_a4_p2, C2)
    assert is_centric(f_a4_p2, f_a4_p2.S)


@pytest.mark.unit
@pytest.mark.parametrize("entry", CATALOG, ids=[entry["name"] for entry in CATALOG])
def test_foc_and_hyp_are_normal_and_strongly_closed(entry):
    F = build_fusion_system(parse_catalog_spec(entry["group"]), entry["p"])
    foc = focal_subgroup(F)
    hyp = hyperfocal_subgroup(F)
    assert foc.is_normal_in(F.S)
    assert hyp.is_normal_in(F.S)
    assert hyp.is_subgroup_of(foc)
    for P in F.subgroups:
        for phi in hom_set(F, P, F.S):
            assert all(phi(x) in foc for x in P.members if x in foc)
