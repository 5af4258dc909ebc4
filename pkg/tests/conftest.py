import pytest
from hypothesis import strategies as st

from tamarimaps import (
    DyckPath,
    enumerate_decorated_trees,
    enumerate_nonseparable,
    enumerate_nonseparable_by_composition,
    enumerate_sync_intervals,
)


@pytest.fixture(scope="session")
def sync_by_size():
    return {n: enumerate_sync_intervals(n) for n in range(0, 8)}


@pytest.fixture(scope="session")
def trees_by_edges():
    return {n: enumerate_decorated_trees(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def brute_maps_by_edges():
    """Brute-forced non-separable census, 2..5 edges (the 5-edge pass is the
    slow part of the whole suite, a few seconds)."""
    return {m: enumerate_nonseparable(m) for m in range(2, 6)}


@pytest.fixture(scope="session")
def maps_by_edges(brute_maps_by_edges):
    """Census through 6 edges: brute force below, composition closure at 6."""
    out = dict(brute_maps_by_edges)
    out[6] = enumerate_nonseparable_by_composition(6)
    return out


def _rotate_to_dyck(letters):
    # rotate a balanced u/d word after its minimal prefix height
    height = low = 0
    cut = 0
    for k, c in enumerate(letters):
        height += 1 if c == "u" else -1
        if height < low:
            low = height
            cut = k + 1
    return "".join(letters[cut:] + letters[:cut])


@st.composite
def dyck_paths(draw, max_size=8):
    n = draw(st.integers(min_value=0, max_value=max_size))
    letters = draw(st.permutations(["u"] * n + ["d"] * n))
    return DyckPath(_rotate_to_dyck(list(letters)))


@st.composite
def canopies_with_element(draw, max_size=7):
    """A random canopy together with a random element weakly above it."""
    from tamarimaps import GridPath

    word = draw(st.text(alphabet="EN", min_size=0, max_size=max_size))
    v = GridPath(word)
    levels = v.levels()
    letters = []
    x = y = 0
    while len(letters) < len(word):
        room_east = x < levels[y]
        room_north = y < v.north_count
        if room_east and room_north:
            go_east = draw(st.booleans())
        else:
            go_east = room_east
        if go_east:
            letters.append("E")
            x += 1
        else:
            letters.append("N")
            y += 1
    return v, GridPath("".join(letters))


@pytest.fixture(scope="session")
def golden_dir():
    from pathlib import Path

    return Path(__file__).parent / "golden"
