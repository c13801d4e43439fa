import pytest

from corpus import fixture_corpus, quasi_five_corpus


@pytest.fixture(scope="session")
def small_corpus():
    return fixture_corpus()


@pytest.fixture(scope="session")
def quasi5_corpus():
    return quasi_five_corpus()
