import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from equiproj import shapes  # noqa: E402


@pytest.fixture
def cube():
    return shapes.cube()


@pytest.fixture
def tetrahedron():
    return shapes.regular_tetrahedron()


@pytest.fixture
def pentagonal_prism():
    return shapes.prism(5)
