import pytest

from free_knot_check.family.templates import builtin_templates


TEMPLATE_NAMES = ["fig3", "fig6a", "fig6b", "fig6c"]


@pytest.fixture(scope="session")
def templates() -> dict:
    return {t.name: t for t in builtin_templates()}
