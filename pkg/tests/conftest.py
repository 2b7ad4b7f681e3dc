from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from semiosquare.corpus import WorkAnalysis, load_corpus
from semiosquare.gateway import ModelEndpoint

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return ROOT / "data"


@pytest.fixture(scope="session")
def shipped_corpus(data_dir: Path) -> list[WorkAnalysis]:
    return load_corpus((data_dir / "corpus.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def endpoint_registry(data_dir: Path) -> dict[str, ModelEndpoint]:
    from semiosquare.cli import _load_endpoints

    return _load_endpoints(str(data_dir / "endpoints.json"))
