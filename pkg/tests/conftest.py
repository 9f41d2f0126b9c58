"""Pytest configuration for fitting-ideals tests."""

from pathlib import Path

import pytest
from dotenv import load_dotenv

from src.config import reset_settings
from src.ideals.monomial_ideal import MonomialIdeal, PolynomialRing
from src.semigroups.semigroup import NumericalSemigroup
from tests.strategies import ideal_of

# Load .env from project root
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(env_path)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Each test starts from settings rebuilt from the environment."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def ring3() -> PolynomialRing:
    return PolynomialRing.standard(3)


@pytest.fixture
def worked_ideal() -> MonomialIdeal:
    """(x1*x2, x1*x3)."""
    return ideal_of(3, (1, 1, 0), (1, 0, 1))


@pytest.fixture
def triangle_ideal() -> MonomialIdeal:
    """(x1*x2, x1*x3, x2*x3), perfect of grade 2."""
    return ideal_of(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


@pytest.fixture
def maximal3() -> MonomialIdeal:
    return ideal_of(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def s345() -> NumericalSemigroup:
    return NumericalSemigroup((3, 4, 5))


@pytest.fixture
def s45() -> NumericalSemigroup:
    return NumericalSemigroup((4, 5))


@pytest.fixture
def s25() -> NumericalSemigroup:
    return NumericalSemigroup((2, 5))
