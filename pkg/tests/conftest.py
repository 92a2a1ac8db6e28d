import pytest

from app.services.engine_service import EngineService
from app.toda.hierarchy import HierarchyState, build_hierarchy


@pytest.fixture(scope="session")
def engine() -> EngineService:
    return EngineService(threads=2)


@pytest.fixture(scope="session")
def hierarchy_nu2() -> HierarchyState:
    """z_0, z_1, z_2 for ν = 2 to order 8."""
    return build_hierarchy(2, 8, 2)
