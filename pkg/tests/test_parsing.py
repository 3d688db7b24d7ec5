import random
import re

import pytest

from hasse_arf.errors import InputError
from hasse_arf.parsing import MAX_EXPONENT, ParseError, parse_expression, parse_raw
from hasse_arf.tower import Tower, format_element

from conftest import tower_from_levels

Z = (0,) * 9


def g(*exps):
    return tuple(exps) + (0,) * (9 - len(exps))


def test_parse_raw_examples():
    assert parse_raw("x", 5) == {(1, Z): 1}
    assert parse_raw("-x^4*f1 - 2 * x^3*f1^2", 5, 1) == {(4, g(1)): 4, (3, g(2)): 3}
    assert parse_raw("(x + 1)^2", 3) == {(2, Z): 1, (1, Z): 2, (0, Z): 1}
    assert parse_raw("x^-3 * 2", 5) == {(-3, Z): 2}
    assert parse_raw("(2*x)^-1", 5) == {(-1, Z): 3}
    assert parse_raw("5*x + 0", 5) == {}
    assert parse_raw("f1^7 * f2", 2, 2) == {(0, g(7, 1)): 1}
    assert parse_raw("+x", 3) == {(1, Z): 1}


@pytest.mark.parametrize("src,pos,msg", [
    ("", 0, "empty"),
    ("x +", 3, "expected a number"),
    ("x * * f1", 4, "expected a number"),
    ("(x + 1", 6, "expected ')'"),
    ("x y", 2, "unexpected character"),
    ("f0", 0, "start at f1"),
    ("x^", 2, "integer exponent"),
    ("f3", 0, "exceeds declared levels"),
    ("x^200000", 2, "exponent overflow"),
    ("f1^-1", 4, "only allowed on x"),
    ("(x+1)^-1", 7, "single x monomial"),
    ("x)", 1, "operator or end of input"),
])
def test_parse_errors(src, pos, msg):
    with pytest.raises(ParseError, match=re.escape(msg)) as info:
        parse_raw(src, 5, 2)
    assert info.value.position == pos
    assert info.value.source == src


def test_limits():
    assert MAX_EXPONENT == 100_000
    with pytest.raises(InputError):
        parse_raw("x", 4)


def test_original_generators_apply_substitutions(witt2):
    t = witt2.tower
    assert parse_expression("f3", 2, t, original_generators=True) == t.gen(3) + parse_expression("x*f2", 2, t)
    assert parse_expression("f3", 2, t) == t.gen(3)
    with pytest.raises(Exception):
        parse_expression("x", 3, t)


def test_round_trip_random():
    towers = [Tower(5), tower_from_levels(2, ["x", "x*f1"]), tower_from_levels(3, ["x", "x^2*f1"])]
    for t in towers:
        rnd = random.Random(t.p + t.height)
        for _ in range(200):
            e = t.zero()
            for _ in range(rnd.randint(0, 5)):
                a = rnd.randint(-4, 9)
                term = t.x() ** a * rnd.randrange(1, t.p)
                for j in range(1, t.height + 1):
                    term = term * t.gen(j) ** rnd.randrange(t.p)
                e = e + term
            assert parse_expression(format_element(e), t.p, t) == e
