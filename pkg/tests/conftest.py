import pytest

from reflectpath.fixtures import fixture
from reflectpath.region import Frame


@pytest.fixture(scope="session")
def square():
    return fixture("square")


@pytest.fixture(scope="session")
def ell():
    return fixture("ell")


@pytest.fixture(scope="session")
def zigzag():
    return fixture("zigzag")


@pytest.fixture(scope="session")
def blocked():
    return fixture("blocked")


@pytest.fixture(scope="session")
def ell_frame(ell):
    return Frame(ell.polygon, ell.source, ell.target)


@pytest.fixture(scope="session")
def zigzag_frame(zigzag):
    return Frame(zigzag.polygon, zigzag.source, zigzag.target)


def random_instances(count, sizes=(6, 8, 10, 12), start_seed=0):
    """Deterministic stream of valid random instances for sweep tests."""
    from reflectpath.errors import InputError
    from reflectpath.generators import gen_random_simple

    out = []
    seed = start_seed
    while len(out) < count:
        n = sizes[len(out) % len(sizes)]
        for _ in range(200):
            try:
                inst = gen_random_simple(n, seed=seed)
            except InputError:
                seed += 1
                continue
            seed += 1
            out.append(inst)
            break
        else:
            raise RuntimeError("random instance stream starved")
    return out
