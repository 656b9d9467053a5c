import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maxlab import DiscreteMeasure, SampleFunction, line_space, validate_space


@pytest.fixture(scope="session")
def line3():
    return line_space([0, 1, 2])


@pytest.fixture(scope="session")
def eq3():
    return validate_space([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


@pytest.fixture(scope="session")
def grid5():
    return line_space([0, Fraction(1, 2), 1, Fraction(3, 2), 2])


@pytest.fixture(scope="session")
def uniform3():
    return DiscreteMeasure((1, 1, 1))


@pytest.fixture(scope="session")
def ind2():
    """Indicator of the last point of a 3-point space."""
    return SampleFunction((0, 0, 1))
