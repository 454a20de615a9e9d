from __future__ import annotations

import pytest
from hypothesis import settings

from braidorder.garside import delta_power_word, normal_form
from braidorder.lattice import divisors

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def div_delta3_sq():
    return divisors(delta_power_word(3, 2)).elements


@pytest.fixture(scope="session")
def div_delta3_cube():
    return divisors(delta_power_word(3, 3)).elements


@pytest.fixture(scope="session")
def delta3_sq_nf():
    return normal_form(delta_power_word(3, 2))
