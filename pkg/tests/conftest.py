import pytest

from hasse_arf.parsing import parse_expression
from hasse_arf.tower import Tower
from hasse_arf.witt import build_witt_tower


@pytest.fixture(scope="session")
def witt5():
    return build_witt_tower(5, ["x", "0", "0"])


@pytest.fixture(scope="session")
def witt2():
    return build_witt_tower(2, ["x", "0", "0"])


def tower_from_levels(p, levels):
    tower = Tower(p)
    for src in levels:
        tower = tower.add_level(parse_expression(src, p, tower))
    return tower
