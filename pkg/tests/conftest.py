import pytest

from elps.harness import fixtures_dir, load_fixture
from elps.modal import WorldView, world_views_to_json
from elps.syntax import parse_atom


def wv_of(*interps: str) -> WorldView:
    """wv_of("a b", "") builds the world view [[a,b], []]."""
    return WorldView.of([parse_atom(tok) for tok in text.split()] for text in interps)


def views(world_view_set) -> list:
    return world_views_to_json(world_view_set)


@pytest.fixture(scope="session")
def corpus():
    names = ["pi1", "ab", "ce1a", "ce1b", "ce2", "ka", "college", "college3", "lamps"]
    return {name: load_fixture(name) for name in names}


@pytest.fixture(scope="session")
def corpus_dir():
    return fixtures_dir()
