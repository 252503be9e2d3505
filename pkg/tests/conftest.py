import os
import random
from pathlib import Path
from typing import Callable, Generator

import pytest

os.environ["VERIFY_SNF"] = "true"

from app.graph.parser import load_graph as _load  # noqa: E402
from app.models import WeightedGraph  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_path() -> Callable[[str], str]:
    """Absolute path of a graph file under fixtures/, by stem."""

    def _path(name: str) -> str:
        return str(FIXTURES / f"{name}.graph")

    return _path


@pytest.fixture(scope="session")
def load_graph(fixture_path) -> Callable[[str], WeightedGraph]:
    """
    Loads a graph from fixtures/ by stem, e.g. load_graph("nopain").
    """

    def _load_graph(name: str) -> WeightedGraph:
        return _load(fixture_path(name))

    return _load_graph


@pytest.fixture(scope="function")
def rng() -> Generator[random.Random, None, None]:
    """
    Seeded random source so property checks are reproducible.
    """
    yield random.Random(20240917)
