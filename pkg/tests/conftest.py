from __future__ import annotations

import pytest
from hypothesis import settings

from carlitz_bernoulli.fq import field_create

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F2():
    return field_create(2)


@pytest.fixture(scope="session")
def F3():
    return field_create(3)


@pytest.fixture(scope="session")
def F4():
    return field_create(2, 2)


@pytest.fixture(scope="session")
def F5():
    return field_create(5)


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2)]
