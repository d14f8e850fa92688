"""
Shared fixtures for the rainbow test suite
"""

import json

import pytest

from rainbow.core import Family, Hypergraph, PartiteStructure
from rainbow.settings import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test sees settings built from its own environment"""
    for name in ("RAINBOW_SEED", "RAINBOW_THREADS", "RAINBOW_NODE_BUDGET"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def star_pair():
    """Two copies of the star at vertex 1 in C([4], 2)"""
    star = Hypergraph(4, 2, [(1, 2), (1, 3), (1, 4)])
    return Family([star, star])


@pytest.fixture
def bipartite_3():
    """Balanced 2-partite structure with parts of size 3"""
    return PartiteStructure(2, 3)


@pytest.fixture
def write_family(tmp_path):
    """Write a family document (or a Family) to a temp file and return its path"""
    def _write(document, name="family.json"):
        if isinstance(document, Family):
            document = document.to_dict()
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path
    return _write
