import pathlib

import pytest

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture
def repo_root(monkeypatch) -> pathlib.Path:
    """Run the test from the repository root so sample paths resolve."""
    monkeypatch.chdir(REPO_ROOT)
    return REPO_ROOT
