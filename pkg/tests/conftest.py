import hypothesis
import pytest

from subdesigns.gf import make_tower

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def f4():
    return make_tower(2, 1, 2)


@pytest.fixture(scope="session")
def f9():
    return make_tower(3, 1, 2)


@pytest.fixture(scope="session")
def f8():
    return make_tower(2, 1, 3)


@pytest.fixture(scope="session")
def f27():
    return make_tower(3, 1, 3)
