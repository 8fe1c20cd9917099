"""Shared fixtures: the rank-3 alphabet and the standard apartments Δ(a,b,c)."""

import random

import pytest

from freefactors.complex import standard_apartment
from freefactors.subgroups import Mode
from freefactors.words import Alphabet


@pytest.fixture
def abc() -> Alphabet:
    return Alphabet(3)


@pytest.fixture(scope="session")
def delta_af():
    """Δ(a,b,c) in the free factor complex of subgroups."""
    return standard_apartment(Alphabet(3).generators(), Mode.AF)


@pytest.fixture(scope="session")
def delta_of():
    """Δ(a,b,c) in the free factor complex of conjugacy classes."""
    return standard_apartment(Alphabet(3).generators(), Mode.OF)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240229)
