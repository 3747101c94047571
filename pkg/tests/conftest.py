import random
from fractions import Fraction

import pytest

from hwreflect.catalog import (
    build_fun,
    build_re,
    build_re_double,
    build_uhw,
    classical_presentation,
)
from hwreflect.coeffring import PolyHW
from hwreflect.ncalg import NCElem


def random_coeff(rng: random.Random) -> PolyHW:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        mono = (rng.randint(0, 1), rng.randint(0, 1))
        terms[mono] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return PolyHW(terms)


def random_elem(P, rng: random.Random, max_terms: int = 3, max_len: int = 3) -> NCElem:
    """A short random combination of generator words with polynomial coefficients."""
    letters = [g for g in P.names]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len)))
        terms[word] = P.model.coerce(random_coeff(rng))
    return NCElem(terms)


@pytest.fixture(scope="session")
def uhw():
    return build_uhw(4)


@pytest.fixture(scope="session")
def uhw2():
    return build_uhw(2)


@pytest.fixture(scope="session")
def fun():
    return build_fun()


@pytest.fixture(scope="session")
def re_alg():
    return build_re()


@pytest.fixture(scope="session")
def re2():
    return build_re_double()


@pytest.fixture(scope="session")
def classical():
    return classical_presentation()


# criterion number -> one summary line, filled in by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
