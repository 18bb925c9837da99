import sys
import os

# Add the project root to the Python path to allow for absolute imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from pathlib import Path

import pytest
from projwidth.models import EmbeddedGraph, Graph
from projwidth.services.families import generalized_mycielski, grid_quadrangulation
from projwidth.services.pq1 import parse_pq1

DATA_DIR = Path(__file__).parent / "data"

@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR

@pytest.fixture(scope="session")
def k4() -> EmbeddedGraph:
    return grid_quadrangulation(2)

@pytest.fixture(scope="session")
def grid3() -> EmbeddedGraph:
    return grid_quadrangulation(3)

@pytest.fixture(scope="session")
def grid4() -> EmbeddedGraph:
    return grid_quadrangulation(4)

@pytest.fixture(scope="session")
def c4_planar() -> EmbeddedGraph:
    return parse_pq1((DATA_DIR / "c4_planar.pq1").read_text())

@pytest.fixture(scope="session")
def grotzsch() -> Graph:
    return generalized_mycielski(2)
