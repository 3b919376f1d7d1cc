import pytest

from cclab.config import default_primes


@pytest.fixture(scope="session")
def primes():
    return default_primes()


@pytest.fixture(scope="session")
def few_primes():
    """Four primes: cheap but still enough for the stability guards."""
    return default_primes()[:4]
