from pathlib import Path

import pytest

from corrkit.io import load_file
from corrkit.simplicial.sset import SimplexRef

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def triangle_map():
    """Δ² -> Δ¹ sending a to 0 and b, c to 1."""
    return load_file(FIXTURES / "triangle_over_edge.json")


@pytest.fixture
def edge():
    return SimplexRef.of("01")
