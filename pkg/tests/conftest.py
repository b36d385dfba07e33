import pytest

from bolpunjabi import Engine


@pytest.fixture(scope="session")
def engine() -> Engine:
    return Engine.default()


@pytest.fixture(scope="session")
def lexicon(engine):
    return engine.lexicon


@pytest.fixture(scope="session")
def rules(engine):
    return engine.rules


@pytest.fixture(scope="session")
def inventory(engine):
    return engine.inventory
