import pytest

from equidiff.generate import random_corpus


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(200, seed=2024)
