"""
Shared fixtures: small catalog groups and their fusion systems
"""

import pytest

from fusion_nilpotency.config import Limits
from fusion_nilpotency.fusion.system import build_fusion_system
from fusion_nilpotency.groups.catalog import parse_catalog_spec


@pytest.fixture(scope="session")
def limits():
    return Limits(order_cap=20000, subgroup_cap=256, budget_mb=256)


@pytest.fixture(scope="session")
def s3(limits):
    return parse_catalog_spec("symmetric:3", limits)


@pytest.fixture(scope="session")
def a4(limits):
    return parse_catalog_spec("alternating:4", limits)


@pytest.fixture(scope="session")
def d8(limits):
    return parse_catalog_spec("dihedral:8", limits)


@pytest.fixture(scope="session")
def v4(limits):
    return parse_catalog_spec("elementary_abelian:2,2", limits)


@pytest.fixture(scope="session")
def c3(limits):
    return parse_catalog_spec("cyclic:3", limits)


@pytest.fixture(scope="session")
def f_s3_p2(s3, limits):
    return build_fusion_system(s3, 2, limits)


@pytest.fixture(scope="session")
def f_s3_p3(s3, limits):
    return build_fusion_system(s3, 3, limits)


@pytest.fixture(scope="session")
def f_a4_p2(a4, limits):
    return build_fusion_system(a4, 2, limits)


@pytest.fixture(scope="session")
def f_d8(d8, limits):
    return build_fusion_system(d8, 2, limits)


@pytest.fixture(scope="session")
def f_v4(v4, limits):
    return build_fusion_system(v4, 2, limits)


@pytest.fixture(scope="session")
def f_c3(c3, limits):
    return build_fusion_system(c3, 3, limits)
