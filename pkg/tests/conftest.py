import pytest

from affweyl.presets import load_group

_cache = {}


@pytest.fixture
def group_of():
    def get(name):
        if name not in _cache:
            _cache[name] = load_group(name)
        return _cache[name]
    return get
