import pathlib
import pytest
from HoroCalc.document import parse

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def read(name: str) -> str:
    return (DATA / f"{name}.json").read_text(encoding="utf-8")


@pytest.fixture
def load():
    """Factory: load('ex_q') parses data/ex_q.json."""
    return lambda name: parse(read(name))


@pytest.fixture
def document():
    return read


@pytest.fixture
def ex_q(load):
    return load("ex_q")


@pytest.fixture
def ex_grass(load):
    return load("ex_grass")


@pytest.fixture
def q_bar(load):
    return load("q_bar")


@pytest.fixture
def x_bar(load):
    return load("x_bar")
