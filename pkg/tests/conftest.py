import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nscycles import build_graph, gen_corpus


CORPUS_NAMES = [
    "k4", "k5", "k6", "k33",
    "wheel-4", "wheel-5", "wheel-6", "wheel-7",
    "prism", "petersen",
]
RANDOM_SIZES = range(8, 13)
RANDOM_SEEDS = range(5)


def full_corpus():
    """(label, graph) for every named corpus graph, 5 seeds per random size."""
    out = [(name, gen_corpus(name)) for name in CORPUS_NAMES]
    for n in RANDOM_SIZES:
        for seed in RANDOM_SEEDS:
            name = f"random3c-{n}"
            out.append((f"{name}#{seed}", gen_corpus(name, seed)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture
def k4():
    return gen_corpus("k4")


@pytest.fixture
def k5():
    return gen_corpus("k5")


@pytest.fixture
def w4():
    return gen_corpus("wheel-4")


@pytest.fixture
def prism():
    return gen_corpus("prism")


@pytest.fixture
def petersen():
    return gen_corpus("petersen")


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])
