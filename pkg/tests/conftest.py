from pathlib import Path

import pytest

import fuzzysm


@pytest.fixture(scope="session")
def corpus() -> Path:
    return Path(fuzzysm.__file__).resolve().parent / "corpus"
