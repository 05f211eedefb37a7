import pytest
import factory.random
from django.core.cache import cache

from networks.services import NetworkFileService


@pytest.fixture(autouse=True)
def reseed():
    """Every test draws the same random structures on every run."""
    factory.random.reseed_random(20240601)


@pytest.fixture(autouse=True)
def clear_cache():
    yield
    cache.clear()


@pytest.fixture
def fixtures_dir():
    return NetworkFileService.FIXTURES_DIR


@pytest.fixture
def water():
    return NetworkFileService.fixture('water')


@pytest.fixture
def dissociation():
    return NetworkFileService.fixture('dissociation')
