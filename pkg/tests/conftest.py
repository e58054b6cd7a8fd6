import sys
from functools import lru_cache
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from folkchar.ontology import folktale_ontology  # noqa: E402
from folkchar.pipeline import PipelineConfig, analyse, load_resources  # noqa: E402


def story_text(doc_id: str) -> str:
    return resources.files("folkchar.data").joinpath("corpus", f"{doc_id}.txt").read_text("utf-8")


@lru_cache(maxsize=None)
def _resources():
    return load_resources(PipelineConfig())


@lru_cache(maxsize=None)
def analysed(doc_id: str):
    """Full analysis of a bundled story (cached; treat as read-only)."""
    return analyse(story_text(doc_id), doc_id, _resources())


@pytest.fixture
def kb():
    return folktale_ontology()


@pytest.fixture(scope="session")
def res():
    return _resources()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
