"""
Tests for bar complexes, cohomology spaces and stable elements
"""

import pytest

from fusion_nilpotency.cohomology import (
    StableElementCalculator,
    build_cochain_complex,
    cohomology,
    estimate_payload_bytes,
    group_cohomology_direct,
    phi_star,
    restriction_map,
    stable_elements,
    stable_elements_all_subgroups,
)
from fusion_nilpotency.config import Limits
from fusion_nilpotency.errors import BudgetExceededError, IncompatibleModuleError, SubgroupError
from fusion_nilpotency.fusion.system import build_fusion_system, hom_set
from fusion_nilpotency.groups.catalog import parse_catalog_spec
from fusion_nilpotency.linalg.fp import FpMatrix
from fusion_nilpotency.modules.fpmodule import regular_module, trivial_module


@pytest.mark.unit
@pytest.mark.parametrize(
    "spec, p, n_max, expected",
    [
        ("cyclic:3", 3, 4, [1, 1, 1, 1, 1]),
        ("cyclic:2", 2, 4, [1, 1, 1, 1, 1]),
        ("cyclic:5", 3, 2, [1, 0, 0]),
        ("elementary_abelian:2,2", 2, 3, [1, 2, 3, 4]),
    ],
)
def test_trivial_coefficients(spec, p, n_max, expected):
    G = parse_catalog_spec(spec)
    M = trivial_module(G.whole(), p)
    assert [cohomology(G.whole(), M, n).dim for n in range(n_max + 1)] == expected


@pytest.mark.unit
def test_free_module_is_acyclic(c3):
    S = c3.whole()
    M = regular_module(S, 3)
    assert [cohomology(S, M, n).dim for n in range(3)] == [1, 0, 0]


@pytest.mark.unit
def test_differential_squares_to_zero(s3):
    C = build_cochain_complex(s3.whole(), trivial_module(s3.whole(), 3), 3)
    assert C.cochain_dims == (1, 5, 25, 125, 625)
    for n in range(3):
        assert (C.differentials[n + 1] @ C.differentials[n]).is_zero()


@pytest.mark.unit
def test_class_coordinates(v4):
    S = v4.whole()
    H = cohomology(S, trivial_module(S, 2), 2)
    assert H.dim == 3
    for i, z in enumerate(H.basis):
        assert H.coordinates(z) == [1 if j == i else 0 for j in range(3)]
    coboundary = H.coboundaries.vectors()[0]
    assert H.coordinates(coboundary) == [0, 0, 0]


@pytest.mark.unit
def test_cohomology_requires_acting_subgroup(s3, f_s3_p3):
    M = trivial_module(f_s3_p3.S, 3)
    with pytest.raises(SubgroupError):
        cohomology(s3.whole(), M, 1)
    with pytest.raises(SubgroupError):
        group_cohomology_direct(s3, M, 1)


@pytest.mark.unit
def test_budget_is_enforced(c3):
    S = c3.whole()
    M = trivial_module(S, 3)
    with pytest.raises(BudgetExceededError) as excinfo:
        build_cochain_complex(S, M, 4, Limits(budget_mb=0))
    assert excinfo.value.budget_bytes == 0
    assert estimate_payload_bytes(6, 2, 1) < estimate_payload_bytes(6, 3, 1)
    assert estimate_payload_bytes(6, 3, 1) < estimate_payload_bytes(6, 3, 2)


@pytest.mark.unit
def test_restriction_to_sylow_is_identity(f_s3_p3):
    S = f_s3_p3.S
    calc = StableElementCalculator(f_s3_p3, trivial_module(S, 3), 3)
    for n in range(4):
        dim = calc.ambient(n).dim
        assert calc.restriction_map(S, n) == FpMatrix.identity(3, dim)


@pytest.mark.unit
def test_phi_star_of_inversion(f_s3_p3):
    S = f_s3_p3.S
    (inversion,) = [phi for phi in hom_set(f_s3_p3, S, S) if not phi.is_inclusion()]
    H1 = cohomology(S, trivial_module(S, 3), 1)
    assert phi_star(H1, inversion).tolist() == [[2]]
    H2 = cohomology(S, trivial_module(S, 3), 2)
    assert phi_star(H2, inversion).tolist() == [[2]]
    H3 = cohomology(S, trivial_module(S, 3), 3)
    assert phi_star(H3, inversion).tolist() == [[1]]


@pytest.mark.unit
def test_restriction_to_subgroup(f_a4_p2):
    S = f_a4_p2.S
    P = next(Q for Q in f_a4_p2.subgroups if Q.order == 2)
    H1 = cohomology(S, trivial_module(S, 2), 1)
    res = restriction_map(H1, P)
    assert res.shape == (1, 2)
    assert not res.is_zero()


@pytest.mark.unit
def test_stable_elements_s3(f_s3_p3):
    M = trivial_module(f_s3_p3.S, 3)
    calc = StableElementCalculator(f_s3_p3, M, 4)
    assert [calc.stable_elements(n).dim for n in range(5)] == [1, 0, 0, 1, 1]
    assert [calc.ambient(n).dim for n in range(5)] == [1, 1, 1, 1, 1]
    assert stable_elements(f_s3_p3, M, 3).dim == 1


@pytest.mark.unit
def test_stable_elements_a4(f_a4_p2):
    M = trivial_module(f_a4_p2.S, 2)
    calc = StableElementCalculator(f_a4_p2, M, 2)
    assert [calc.stable_elements(n).dim for n in range(3)] == [1, 0, 1]
    assert [calc.stable_elements_all_subgroups(n).dim for n in range(3)] == [1, 0, 1]
    assert stable_elements_all_subgroups(f_a4_p2, M, 1).dim == 0


@pytest.mark.unit
def test_nilpotent_fusion_keeps_everything(f_s3_p2, f_d8):
    cases = [
        (f_s3_p2, trivial_module(f_s3_p2.S, 2)),
        (f_s3_p2, regular_module(f_s3_p2.S, 2)),
        (f_d8, trivial_module(f_d8.S, 2)),
    ]
    for F, M in cases:
        calc = StableElementCalculator(F, M, 2)
        for n in range(3):
            assert calc.stable_elements(n).dim == calc.ambient(n).dim


@pytest.mark.unit
def test_incompatible_module_is_rejected(f_a4_p2):
    M = regular_module(f_a4_p2.S, 2)
    with pytest.raises(IncompatibleModuleError) as excinfo:
        StableElementCalculator(f_a4_p2, M, 1)
    P, phi, x = excinfo.value.witness
    assert P == f_a4_p2.S
    assert phi(x) != x


@pytest.mark.unit
def test_degree_above_cap(f_s3_p3):
    calc = StableElementCalculator(f_s3_p3, trivial_module(f_s3_p3.S, 3), 1)
    with pytest.raises(ValueError):
        calc.space(f_s3_p3.S, 2)


@pytest.mark.slow
@pytest.mark.integration
@pytest.mark.parametrize(
    "spec, p, n_max",
    [("symmetric:3", 3, 3), ("symmetric:3", 2, 3), ("alternating:4", 2, 2)],
)
def test_stable_elements_match_group_cohomology(spec, p, n_max):
    G = parse_catalog_spec(spec)
    F = build_fusion_system(G, p)
    calc = StableElementCalculator(F, trivial_module(F.S, p), n_max)
    M_G = trivial_module(G.whole(), p)
    stable = [calc.stable_elements(n).dim for n in range(n_max + 1)]
    direct = [group_cohomology_direct(G, M_G, n).dim for n in range(n_max + 1)]
    assert stable == direct


@pytest.mark.unit
def test_degree_zero_is_fixed_points(v4):
    S = v4.whole()
    assert cohomology(S, trivial_module(S, 2, d=3), 0).dim == 3
    assert cohomology(S, regular_module(S, 2), 0).dim == 1


@pytest.mark.unit
def test_phi_star_of_identity_and_inclusion(f_a4_p2):
    S = f_a4_p2.S
    H2 = cohomology(S, trivial_module(S, 2), 2)
    (identity,) = [phi for phi in hom_set(f_a4_p2, S, S) if phi.is_inclusion()]
    assert phi_star(H2, identity) == FpMatrix.identity(2, H2.dim)
    P = next(Q for Q in f_a4_p2.subgroups if Q.order == 2)
    (inclusion,) = [phi for phi in hom_set(f_a4_p2, P, S) if phi.is_inclusion()]
    assert phi_star(H2, inclusion) == restriction_map(H2, P)


@pytest.mark.unit
def test_abelian_sylow_centric_equals_all(f_s3_p3, f_v4):
    for F in (f_s3_p3, f_v4):
        calc = StableElementCalculator(F, trivial_module(F.S, F.p), 2)
        for n in range(3):
            assert calc.stable_elements(n) == calc.stable_elements_all_subgroups(n)


@pytest.mark.unit
@pytest.mark.parametrize("n", [1, 2])
def test_phi_star_of_composite(n):
    F = build_fusion_system(parse_catalog_spec("symmetric:4"), 2)
    calc = StableElementCalculator(F, trivial_module(F.S, 2), n)
    # the normal Klein four subgroup of S_4 and an involution inside it
    Q = next(
        H
        for H in F.subgroups
        if H.order == 4 and H.exponent == 2 and H.is_normal_in(F.group.whole())
    )
    P = next(H for H in F.subgroups if H.order == 2 and H.is_subgroup_of(Q))
    psi = next(phi for phi in hom_set(F, Q, F.S) if not phi.is_inclusion())
    onto = next(phi for phi in hom_set(F, P, Q) if phi.images != P.members)

    inner = phi_star(calc.space(Q, n), onto, calc.space(P, n))
    assert calc.phi_star(psi.after(onto), n) == inner @ calc.phi_star(psi, n)
