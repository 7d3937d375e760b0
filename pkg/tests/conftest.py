import pytest

from edgering import fixtures as fx

_NAMES = fx.names()


def _fixture_factory(name):
    @pytest.fixture(scope="session", name=name)
    def _fix():
        return fx.load(name)

    return _fix


for _name in _NAMES:
    globals()[_name] = _fixture_factory(_name)


@pytest.fixture(scope="session")
def all_fixture_graphs():
    return {name: fx.load(name) for name in _NAMES}


@pytest.fixture(scope="session")
def small_fixture_graphs():
    return {
        name: fx.load(name)
        for name in ("triangle", "bowtie", "friend3", "cac3", "t1min", "t2min")
    }
