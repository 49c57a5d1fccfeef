import pytest

import specgap as sg

NAMED = ["utility", "cube", "chvatal", "complete(4)", "cycle(5)", "petersen"]

# frozen seeds; every graph here has |mu - 2| > 1e-6 except the two
# q=1 cycles (mu = 2 exactly), which sign-verdict tests exclude
RANDOM_SPECS = [
    (8, 1, 11),
    (10, 2, 3),
    (12, 2, 5),
    (14, 3, 2),
    (9, 3, 4),
    (14, 1, 9),
]


@pytest.fixture(scope="session")
def named_corpus():
    return [sg.named_graph(name) for name in NAMED]


@pytest.fixture(scope="session")
def random_corpus():
    return [sg.random_regular(n, q, seed) for n, q, seed in RANDOM_SPECS]


@pytest.fixture(scope="session")
def corpus(named_corpus, random_corpus):
    return named_corpus + random_corpus
