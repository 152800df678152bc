import numpy as np
import pytest

from tensile_domain import generic, mooney_rivlin, neo_hookean


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def nh1():
    return neo_hookean(1.0)


@pytest.fixture
def mr11():
    return mooney_rivlin(1.0, 1.0)


def generic_twin(model):
    """Generic model with the same constant response functions as ``model``."""
    b1, b2 = 2.0 * model.c1, -2.0 * model.c2
    return generic(lambda a, b: b1, lambda a, b: b2, shear_modulus=2.0 * (model.c1 + model.c2))


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
