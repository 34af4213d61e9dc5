import pytest

import relpsi as rp


@pytest.fixture(scope="session")
def catalog100():
    return rp.default_catalog(100, include_frobenius=True)


@pytest.fixture(scope="session")
def catalog_subgroups(catalog100):
    """(group, subgroup list) for every catalog group of order <= 100."""
    return [(G, rp.all_subgroups(G)) for G in catalog100]


@pytest.fixture(scope="session")
def catalog_subgroups_64(catalog_subgroups):
    return [(G, subs) for G, subs in catalog_subgroups if G.order <= 64]
