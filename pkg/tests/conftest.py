"""Pytest configuration for local imports and shared fixtures."""

from pathlib import Path
import sys


ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

import pytest  # noqa: E402

import core.config as config  # noqa: E402
from core.cubes import CoxeterCube, CoxeterSquare, cube_from_terminal_edges  # noqa: E402
from core.rectangles import RectanglePartition, partition_from_triples  # noqa: E402
from core.typea import Permutation, from_word  # noqa: E402


@pytest.fixture
def reset_config_state():
    """Reset config module state before and after tests."""
    original_config = config._config.copy()
    original_loaded = config._config_loaded
    config._config = {}
    config._config_loaded = False
    yield
    config._config = original_config
    config._config_loaded = original_loaded


@pytest.fixture
def a2_square() -> CoxeterSquare:
    """(s1 s2, s1, s2, s1 s2): both paths multiply to w0 of A_2."""
    return CoxeterSquare(
        w=from_word(2, [1, 2]),
        x=from_word(2, [1]),
        y=from_word(2, [2]),
        z=from_word(2, [1, 2]),
    )


@pytest.fixture
def left_a3_cube() -> CoxeterCube:
    """Cube of A_3 with terminal edges s3, s2 s3, s1 s2 s3 (a path-shaped tree)."""
    cube = cube_from_terminal_edges(
        [from_word(3, [3]), from_word(3, [2, 3]), from_word(3, [1, 2, 3])]
    )
    assert cube is not None
    return cube


@pytest.fixture
def right_a3_cube() -> CoxeterCube:
    """Cube of A_3 with terminal edges s1, s3 and the middle rectangle [3,4,1,2]."""
    cube = cube_from_terminal_edges(
        [from_word(3, [1]), Permutation((3, 4, 1, 2)), from_word(3, [3])]
    )
    assert cube is not None
    return cube


@pytest.fixture
def a4_partition() -> RectanglePartition:
    return partition_from_triples(4, [(1, 4, 5), (1, 1, 4), (2, 3, 4), (2, 2, 3)])
