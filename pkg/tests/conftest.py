import pytest

from quivalg import corpus
from quivalg.algebra import (
    QuiverPresentation,
    build_from_quiver,
    one_dimensional_algebra,
    tensor_product,
)
from quivalg.linalg import PrimeField

FIELD = PrimeField(32003)


def quiver(vertices, arrows, relations=(), bound=1):
    return build_from_quiver(
        QuiverPresentation(tuple(vertices), tuple(arrows), tuple(relations), bound),
        FIELD,
    )


@pytest.fixture(scope="session")
def K2():
    return quiver(("1",), (("x", "1", "1"),), (((1, ("x", "x")),),), 1)


@pytest.fixture(scope="session")
def K3():
    return quiver(("1",), (("x", "1", "1"),), (((1, ("x", "x", "x")),),), 2)


@pytest.fixture(scope="session")
def K4():
    return quiver(("1",), (("x", "1", "1"),), (((1, ("x", "x", "x", "x")),),), 3)


@pytest.fixture(scope="session")
def KA2():
    return quiver(("1", "2"), (("a", "1", "2"),))


@pytest.fixture(scope="session")
def KA3():
    return quiver(("1", "2", "3"), (("a", "1", "2"), ("b", "2", "3")), (), 2)


@pytest.fixture(scope="session")
def AUS():
    return quiver(("1", "2"), (("a", "1", "2"), ("b", "2", "1")), (((1, ("a", "b")),),), 2)


@pytest.fixture(scope="session")
def GROUND():
    return one_dimensional_algebra(FIELD)


@pytest.fixture(scope="session")
def K2xK2(K2):
    return tensor_product(K2, K2)


@pytest.fixture(scope="session")
def KA2xK2(KA2, K2):
    return tensor_product(KA2, K2)


@pytest.fixture(scope="session")
def corpus_algebras(K2, K3, K4, KA2, KA3, AUS, GROUND, K2xK2, KA2xK2):
    return {
        "k": GROUND,
        "k2": K2,
        "k3": K3,
        "k4": K4,
        "ka2": KA2,
        "ka3": KA3,
        "aus": AUS,
        "k2xk2": K2xK2,
        "ka2xk2": KA2xK2,
    }


@pytest.fixture(scope="session")
def corpus_loaded():
    return {e.name: corpus.load_entry(e.name) for e in corpus.ENTRIES}
