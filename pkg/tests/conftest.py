import random

import pytest

from garside import braid, free_abelian, normalize_letters, parse_word


@pytest.fixture(scope="session")
def b3():
    return braid(3)


@pytest.fixture(scope="session")
def b4():
    return braid(4)


@pytest.fixture(scope="session")
def b5():
    return braid(5)


@pytest.fixture(scope="session")
def b6():
    return braid(6)


@pytest.fixture(scope="session")
def z2():
    return free_abelian(2)


@pytest.fixture(scope="session")
def z3():
    return free_abelian(3)


@pytest.fixture(scope="session")
def b5_fixture(b5):
    """The running example in B_5: inf 0, two factors, orbit of length 4."""
    return parse_word("1 2 1 3 2 1 4 3 1 4 3", b5)


@pytest.fixture(scope="session")
def b4_uss_fixture(b4):
    """The B_4 element whose ultra summit set has 6 elements in 2 orbits."""
    return parse_word("1 3 2 1 1 2 2 1 3", b4)


@pytest.fixture(scope="session")
def b3_rigid(b3):
    return parse_word("D . 12 . 21 . 12", b3)


def assert_valid(nf):
    """Validator run on every emitted normal form: left weighted, proper factors."""
    assert nf.is_valid(), f"not a left normal form: {nf!r}"


def random_element(rng: random.Random, structure, length: int):
    letters = [
        rng.randrange(1, structure.atom_count + 1) * rng.choice((1, -1))
        for _ in range(length)
    ]
    return normalize_letters(structure, letters)
