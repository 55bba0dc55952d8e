import pytest

from termalg import catalog, dump_algebra


@pytest.fixture
def bu():
    return catalog.bool2()


@pytest.fixture
def br():
    return catalog.boolean_ring()


@pytest.fixture
def sl():
    return catalog.two_element_semilattice()


@pytest.fixture
def chain3():
    return catalog.chain3()


@pytest.fixture
def mod3():
    return catalog.mod3()


@pytest.fixture
def bu_path(tmp_path):
    path = tmp_path / "bool2.json"
    dump_algebra(catalog.bool2(), path)
    return str(path)


@pytest.fixture
def sl_path(tmp_path):
    path = tmp_path / "semilattice2.json"
    dump_algebra(catalog.two_element_semilattice(), path)
    return str(path)
