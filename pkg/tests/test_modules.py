"""
Tests for F_p[S]-modules, module files and F-invariance checks
"""

import numpy as np
import pytest

from fusion_nilpotency.errors import InputFormatError, ModuleValidationError, SubgroupError
from fusion_nilpotency.fusion.system import build_fusion_system, focal_subgroup
from fusion_nilpotency.groups.catalog import parse_catalog_spec
from fusion_nilpotency.groups.core import all_subgroups, center, quotient_group
from fusion_nilpotency.harness import default_battery, load_catalog
from fusion_nilpotency.modules.fpmodule import (
    FpModule,
    one_dimensional_modules,
    pullback_module,
    regular_module,
    regular_quotient_module,
    restrict_module,
    trivial_module,
)
from fusion_nilpotency.modules.io import module_generators, parse_module_file, parse_module_text
from fusion_nilpotency.modules.validation import (
    invariant_by_definition,
    invariant_by_focal_subgroup,
    is_F_invariant,
    is_fusion_compatible,
)

# D_8 on F_2^2: the rotation acts by a transvection, the reflection trivially
D8_TRANSVECTION = """\
module p=2 dim=2 generators=2
# rotation
1 1
0 1
# reflection
1 0
0 1
"""


@pytest.mark.unit
def test_trivial_and_regular_modules(v4):
    S = v4.whole()
    T = trivial_module(S, 2)
    assert T.is_trivial
    assert T.fixed_points().dim == 1
    assert trivial_module(S, 2, d=3).name == "F_2^3"

    R = regular_module(S, 2)
    assert R.dim == 4
    assert not R.is_trivial
    assert R.fixed_points().dim == 1
    R.verify()


@pytest.mark.unit
def test_regular_quotient_module(d8):
    S = d8.whole()
    Z = center(d8)
    M = regular_quotient_module(S, Z, 2)
    assert M.dim == 4
    M.verify()
    assert all(M.acts_trivially(z) for z in Z.members)
    assert not M.is_trivial


@pytest.mark.unit
def test_from_generators_checks_relations(s3):
    S = s3.whole()
    gens = module_generators(S)
    assert len(gens) == 2
    sign = FpModule.from_generators(S, 3, gens, [[[1]], [[2]]], name="sign")
    assert sign.dim == 1
    assert not sign.is_trivial

    with pytest.raises(ModuleValidationError):
        FpModule.from_generators(S, 3, gens, [[[2]], [[1]]])
    with pytest.raises(ModuleValidationError):
        FpModule.from_generators(S, 3, gens, [[[1]]])


@pytest.mark.unit
def test_from_action_validation(c3):
    S = c3.whole()
    with pytest.raises(ModuleValidationError):
        FpModule.from_action(S, 3, {0: [[1]]})
    with pytest.raises(ModuleValidationError):
        FpModule.from_action(S, 3, {x: [[2]] for x in S.members})
    with pytest.raises(ModuleValidationError):
        FpModule.from_action(S, 3, {0: [[1]], 1: [[1, 0]], 2: [[1]]})


@pytest.mark.unit
def test_restrict_module(v4):
    S = v4.whole()
    R = regular_module(S, 2)
    P = next(H for H in all_subgroups(v4) if H.order == 2)
    restricted = restrict_module(R, P)
    assert restricted.dim == 4
    assert restricted.acting_group == P
    with pytest.raises(SubgroupError):
        restrict_module(trivial_module(v4.trivial(), 2), S)


@pytest.mark.unit
def test_one_dimensional_modules_of_p_groups(f_d8, f_c3):
    for F in (f_d8, f_c3):
        characters = one_dimensional_modules(F.S, focal_subgroup(F), F.p)
        assert len(characters) == 1
        assert characters[0].is_trivial


@pytest.mark.unit
def test_f_invariance(f_a4_p2, f_d8):
    S = f_a4_p2.S
    assert is_F_invariant(trivial_module(S, 2), f_a4_p2)
    regular = regular_module(S, 2)
    assert not invariant_by_definition(regular, f_a4_p2)
    result = invariant_by_focal_subgroup(regular, f_a4_p2)
    assert not result
    x, column = result.witness
    assert not regular.acts_trivially(x)
    assert 0 <= column < regular.dim

    transvection = parse_module_text(D8_TRANSVECTION, f_d8.S)
    assert is_F_invariant(transvection, f_d8)
    assert not is_F_invariant(regular_module(f_d8.S, 2), f_d8)


@pytest.mark.unit
def test_fusion_compatibility(f_a4_p2, f_s3_p2, f_d8):
    regular = regular_module(f_a4_p2.S, 2)
    result = is_fusion_compatible(regular, f_a4_p2)
    assert not result
    P, phi, x = result.witness
    assert P == f_a4_p2.S
    assert not np.array_equal(regular.matrix(phi(x)), regular.matrix(x))

    assert is_fusion_compatible(regular_module(f_s3_p2.S, 2), f_s3_p2)
    assert not is_fusion_compatible(regular_module(f_d8.S, 2), f_d8)
    assert is_fusion_compatible(trivial_module(f_d8.S, 2), f_d8)


@pytest.mark.unit
def test_module_must_act_on_sylow(f_s3_p3, s3):
    with pytest.raises(SubgroupError):
        is_fusion_compatible(trivial_module(s3.whole(), 3), f_s3_p3)


@pytest.mark.unit
def test_parse_module_file(tmp_path, f_d8):
    path = tmp_path / "transvection.module"
    path.write_text(D8_TRANSVECTION, encoding="utf-8")
    M = parse_module_file(path, f_d8.S, 2)
    assert M.name == "transvection"
    assert M.dim == 2
    assert M.p == 2

    with pytest.raises(InputFormatError):
        parse_module_file(path, f_d8.S, 3)


@pytest.mark.unit
@pytest.mark.parametrize(
    "text",
    [
        "",
        "module p=2 dim=2\n1 0\n0 1\n",
        "module p=2 dim=1 generators=1\n1\n",
        "module p=2 dim=1 generators=2\n1\n",
        "module p=2 dim=1 generators=2\n1\nx\n",
        "module p=2 dim=2 generators=2\n1 1\n0 1\n0 1\n1 1\n",
    ],
)
def test_parse_module_text_errors(text, f_d8):
    with pytest.raises(InputFormatError):
        parse_module_text(text, f_d8.S)


@pytest.mark.unit
def test_modules_built_from_foc(f_s3_p3, f_a4_p2):
    S = f_s3_p3.S
    foc = focal_subgroup(f_s3_p3)
    inflated = regular_quotient_module(S, foc, 3)
    assert inflated.dim == 1 and inflated.is_trivial
    assert is_F_invariant(inflated, f_s3_p3)
    assert not is_F_invariant(regular_module(S, 3), f_s3_p3)
    assert regular_module(S, 3).fixed_points().dim == 1

    trivial_three = trivial_module(S, 3, d=3)
    assert trivial_three.fixed_points().dim == 3
    restricted = restrict_module(regular_module(S, 3), S.parent.trivial())
    assert restricted.is_trivial

    hyp_module = regular_quotient_module(f_a4_p2.S, f_a4_p2.S, 2)
    assert is_fusion_compatible(hyp_module, f_a4_p2)


@pytest.mark.unit
def test_pullback_of_trivial_is_trivial(f_d8):
    Q, projection = quotient_group(f_d8.S, center(f_d8.group))
    M = pullback_module(trivial_module(Q.whole(), 2), projection)
    assert M.acting_group == f_d8.S
    assert M.is_trivial


@pytest.mark.unit
def test_module_file_over_trivial_sylow(s3):
    F = build_fusion_system(s3, 5)
    assert F.S.is_trivial
    M = parse_module_text("module p=5 dim=3 generators=0\n", F.S, p=5)
    assert M.dim == 3
    assert M.is_trivial
    assert M.fixed_points().dim == 3

    with pytest.raises(InputFormatError):
        parse_module_text("module p=5 dim=0 generators=0\n", F.S, p=5)


@pytest.mark.unit
def test_from_generators_uses_declared_dimension(s3):
    trivial = s3.trivial()
    assert FpModule.from_generators(trivial, 3, (), [], dim=2).dim == 2
    assert FpModule.from_generators(trivial, 3, (), []).dim == 1

    S = s3.whole()
    with pytest.raises(ModuleValidationError):
        FpModule.from_generators(S, 3, module_generators(S), [[[1]], [[2]]], dim=2)


@pytest.mark.unit
@pytest.mark.parametrize(
    "entry", load_catalog(), ids=[entry["name"] for entry in load_catalog()]
)
def test_invariant_battery_modules_are_compatible(entry):
    F = build_fusion_system(parse_catalog_spec(entry["group"]), entry["p"])
    for M in default_battery(F):
        if is_F_invariant(M, F):
            assert is_fusion_compatible(M, F), M.name
