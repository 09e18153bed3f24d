from fractions import Fraction
from pathlib import Path

import pytest

from skewpbw import AlgebraElement, Presentation

DATA = Path(__file__).resolve().parent.parent / "data"


def elem(*vals):
    return AlgebraElement(vals)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def ex1():
    """tau_1 = id, tau_2 = swap on two points, x2 x1 = (1,2) x1 x2."""
    return Presentation([[0, 1], [1, 0]], c={(0, 1): [1, 2]})


@pytest.fixture
def ex2():
    return Presentation([[0, 1], [1, 0]], c={(0, 1): [2, Fraction(1, 2)]})


@pytest.fixture
def ore_swap():
    """One generator, tau = swap, d = (1, 1)."""
    return Presentation([[1, 0]], ds=[[1, 1]])
