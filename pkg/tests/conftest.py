import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

SEED = int(os.environ.get("LVK_SEED", "0"))


@pytest.fixture
def rng() -> random.Random:
    """Fresh deterministic generator per test; LVK_SEED overrides."""
    return random.Random(SEED)


@pytest.fixture(scope="session")
def classical():
    from longvk.corpus import classical_corpus

    return classical_corpus()


@pytest.fixture(scope="session")
def virtual():
    from longvk.corpus import virtual_corpus

    return virtual_corpus()


@pytest.fixture(scope="session")
def corpus():
    from longvk.corpus import full_corpus

    return full_corpus()
