import random
import time

import pytest
from hypothesis import settings

from shrinkbraid import RWord, sigma, sigma_inv, x
from shrinkbraid.freegroup import FLetter, FWord, reduce

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

SESSION_START = time.monotonic()


def pytest_collection_modifyitems(config, items):
    # Acceptance criteria run last so the wall-clock criterion sees the
    # whole suite.
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


def session_elapsed() -> float:
    return time.monotonic() - SESSION_START


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)


def random_fword(rng: random.Random, max_len: int = 8, max_index: int = 6) -> FWord:
    n = rng.randrange(0, max_len + 1)
    return reduce(FLetter(rng.randint(1, max_index), rng.choice((1, -1))) for _ in range(n))


def random_braid(
    rng: random.Random, max_len: int = 6, max_index: int = 5, signed: bool = True
) -> RWord:
    letters = []
    for _ in range(rng.randrange(0, max_len + 1)):
        i = rng.randint(1, max_index)
        if signed and rng.random() < 0.5:
            letters.append(sigma_inv(i))
        else:
            letters.append(sigma(i))
    return RWord(letters)


def random_rplus(rng: random.Random, max_len: int = 6, max_index: int = 5) -> RWord:
    letters = []
    for _ in range(rng.randrange(0, max_len + 1)):
        i = rng.randint(1, max_index)
        letters.append(sigma(i) if rng.random() < 0.6 else x(i))
    return RWord(letters)


def random_sigma1_positive(rng: random.Random, max_len: int = 8, max_index: int = 5) -> RWord:
    letters = []
    for _ in range(rng.randrange(0, max_len)):
        k = rng.randint(2, max_index)
        letters.append(sigma(k) if rng.random() < 0.5 else sigma_inv(k))
    for _ in range(rng.randrange(1, 3)):
        letters.insert(rng.randrange(0, len(letters) + 1), sigma(1))
    return RWord(letters)
