import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from conceptcat.finrel import FiniteSet, Relation

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


COLOUR = FiniteSet("Colour", ("yellow", "green"))
TASTE = FiniteSet("Taste", ("bitter", "sweet"))
EMOTION = FiniteSet("Emotion", ("happy", "sad"))


@st.composite
def finite_sets(draw, max_size=5, prefix=None):
    n = draw(st.integers(1, max_size))
    prefix = prefix or draw(st.sampled_from("abcdxyz"))
    return FiniteSet(prefix.upper(), tuple(f"{prefix}{i}" for i in range(n)))


@st.composite
def relations(draw, dom, cod):
    cells = [(i, j) for i in range(len(dom)) for j in range(len(cod))]
    chosen = draw(st.lists(st.sampled_from(cells), unique=True)) if cells else []
    return Relation(dom, cod, frozenset(chosen))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def banana_P():
    return Relation.from_function(COLOUR, TASTE,
                                  {"yellow": "sweet", "green": "bitter"})


# Acceptance lines are collected here and repeated in the terminal summary.
ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
