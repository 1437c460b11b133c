"""Shared fixtures: the corpus theories, the K2 vocabulary and the finite models."""

import pytest

from dfolkit.corpus import corpus_path
from dfolkit.cwf.finset import FinSetCwF
from dfolkit.parsing import (
    finite_model,
    load_model_tables,
    load_theory,
    load_vocabulary,
)


@pytest.fixture(scope="session")
def semigroup():
    return load_theory(corpus_path("semigroup.th"))


@pytest.fixture(scope="session")
def semigroup_sig(semigroup):
    return semigroup.signature


@pytest.fixture(scope="session")
def universe():
    return load_theory(corpus_path("universe.th"))


@pytest.fixture(scope="session")
def universe_sig(universe):
    return universe.signature


@pytest.fixture(scope="session")
def cat():
    return load_theory(corpus_path("cat.th"))


@pytest.fixture(scope="session")
def k2():
    return load_vocabulary(corpus_path("k2.voc"))


@pytest.fixture
def finset():
    return FinSetCwF()


@pytest.fixture(scope="session")
def semigroup_model(semigroup):
    return finite_model(load_model_tables(corpus_path("semigroup.model")), semigroup)
