from app.core.config import HierarchySettings, Settings


def test_nested_groups_read_the_environment(monkeypatch):
    monkeypatch.setenv("ORACLE__MATCHING_BUDGET", "1000")
    monkeypatch.setenv("HIERARCHY__DEFAULT_ORDER", "12")
    configured = Settings()
    assert configured.oracle.matching_budget == 1000
    assert configured.oracle.threads == 0
    assert configured.hierarchy.default_order == 12
    assert configured.output.schema_version == 1


def test_hierarchy_settings_fields():
    assert set(HierarchySettings.model_fields) == {"default_order"}
