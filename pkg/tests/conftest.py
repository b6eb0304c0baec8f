import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.catalog.families import hypercube, petersen  # noqa: E402
from src.catalog.three_a6 import three_a6  # noqa: E402
from src.permutation_groups.perm import Perm  # noqa: E402
from src.rotary.pairs import RotaryPair  # noqa: E402


@pytest.fixture(scope="module")
def a5_petersen():
    return petersen("A5")


@pytest.fixture(scope="module")
def cube():
    return hypercube(3, 1)


@pytest.fixture(scope="module")
def cube_pair(cube):
    return RotaryPair(cube.elements["a"], cube.elements["z"])


@pytest.fixture(scope="module")
def octahedron_pair():
    return RotaryPair(Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(0, 1)]))


@pytest.fixture(scope="module")
def three_a6_entry():
    return three_a6()
