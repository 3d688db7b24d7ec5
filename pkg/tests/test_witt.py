import random
from math import comb

import pytest

from hasse_arf.core_arith import IntPolynomial
from hasse_arf.errors import InputError
from hasse_arf.parsing import parse_expression
from hasse_arf.tower import TowerError
from hasse_arf.witt import (build_witt_tower, compose_images, derive_tower_equations,
                            galois_generator_images, identity_images, shift_images,
                            witt_addition_polynomials)


def V(n, i):
    return IntPolynomial.variable(2 * n, i)


def test_S0_S1_p2():
    S = witt_addition_polynomials(2, 2).addition_polys
    assert S[0] == V(2, 0) + V(2, 2)
    assert S[1] == V(2, 1) + V(2, 3) - V(2, 0) * V(2, 2)


def test_S1_p5():
    S1 = witt_addition_polynomials(5, 2).addition_polys[1]
    X0, X1, Y0, Y1 = V(2, 0), V(2, 1), V(2, 2), V(2, 3)
    expected = X1 + Y1
    for i in range(1, 5):
        expected = expected - X0 ** i * Y0 ** (5 - i) * (comb(5, i) // 5)
    assert S1 == expected
    assert witt_addition_polynomials(5, 2).variable_names() == ["X0", "X1", "Y0", "Y1"]


def ghost(p, z, i):
    return sum(p ** j * z[j] ** (p ** (i - j)) for j in range(i + 1))


@pytest.mark.parametrize("p,n", [(2, 3), (3, 3), (5, 3), (2, 4), (7, 2)])
def test_ghost_identity_at_integer_points(p, n):
    system = witt_addition_polynomials(p, n)
    rnd = random.Random(p * 10 + n)
    for _ in range(10):
        xs = [rnd.randint(-5, 5) for _ in range(n)]
        ys = [rnd.randint(-5, 5) for _ in range(n)]
        vals = xs + ys
        s = []
        for S in system.addition_polys:
            total = 0
            for e, c in S.items():
                term = c
                for i, k in enumerate(e):
                    term *= vals[i] ** k
                total += term
            s.append(total)
        for i in range(n):
            assert ghost(p, s, i) == ghost(p, xs, i) + ghost(p, ys, i)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_neutrality_and_commutativity(p):
    n = 3
    system = witt_addition_polynomials(p, n)
    zero_y = {n + j: 0 for j in range(n)}
    for i, S in enumerate(system.addition_polys):
        assert all(isinstance(c, int) for _, c in S.items())
        assert S.substitute(zero_y) == V(n, i)
        assert S.swap_blocks(n) == S
        assert S.variables_used() <= set(range(i + 1)) | set(range(n, n + i + 1))


def test_witt_length_limits():
    with pytest.raises(InputError):
        witt_addition_polynomials(5, 0)
    with pytest.raises(InputError):
        witt_addition_polynomials(5, 5)
    with pytest.raises(InputError):
        witt_addition_polynomials(4, 2)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 3)])
def test_integer_vectors_cyclic(p, n):
    system = witt_addition_polynomials(p, n)
    assert system.integer_vector(p ** n) == (0,) * n
    for k in range(1, p ** n):
        assert system.integer_vector(k) != (0,) * n
    assert system.integer_vector(p) == (0, 1) + (0,) * (n - 2)


def test_derived_equations_p5(witt5):
    t = witt5.tower
    D1, D2, D3 = witt5.raw_equations
    assert D1 == t.x()
    assert D2 == parse_expression("-x^4*f1 - 2*x^3*f1^2 - 2*x^2*f1^3 - x*f1^4", 5, t)
    assert len(D3) == 55
    assert derive_tower_equations(5, ["x", "0", "0"])[1] == D2


def test_derived_equations_p2(witt2):
    t = witt2.tower
    D1, D2, D3 = witt2.raw_equations
    assert D2 == parse_expression("x*f1", 2, t)
    assert D3 == parse_expression("x^3*f1 + x*f1^3 + x*f1*f2", 2, t)
    assert t.levels[2].D == parse_expression("x^2*f2 + x*f1^3 + x*f1*f2 + x*f2", 2, t)


def test_bad_base_component():
    with pytest.raises(TowerError, match="not ramified"):
        build_witt_tower(5, ["0", "x"])
    with pytest.raises(TowerError, match="not ramified"):
        build_witt_tower(5, ["x^-1", "0"])
    with pytest.raises(TowerError, match="not ramified"):
        build_witt_tower(3, ["x^3", "0"])
    with pytest.raises(InputError):
        build_witt_tower(5, ["f1"])


def test_sigma_images_p5(witt5):
    t = witt5.tower
    s1, s2, s3 = galois_generator_images(witt5)
    assert s1 == t.gen(1) + 1
    # sigma(f2) = f2 + (f1^5 + 1 - (f1 + 1)^5) / 5
    assert s2 == parse_expression("f2 - f1^4 - 2*f1^3 - 2*f1^2 - f1", 5, t)
    F1, F2 = IntPolynomial.variable(2, 0), IntPolynomial.variable(2, 1)
    q2 = F2 + (F1 ** 5 + 1 - (F1 + 1) ** 5).exact_div(5)
    assert s2 == t.evaluate(q2, [t.gen(1), t.gen(2)])
    # the degree-25 term, stated for the generators before normalization
    q3 = (F1 ** 25 + 1 - (F1 + 1) ** 25 + 5 * (F2 ** 5 - q2 ** 5)).exact_div(25)
    f3 = t.original_generator(3)
    assert t.substitute(f3, [s1, s2, s3]) == f3 + t.evaluate(q3, [t.gen(1), t.gen(2)])


@pytest.mark.parametrize("fixture", ["witt5", "witt2"])
def test_sigma_preserves_relations(fixture, request):
    wt = request.getfixturevalue(fixture)
    t = wt.tower
    for k in (1, 2, t.p):
        images = galois_generator_images(wt, k)
        for lv, img in zip(t.levels, images):
            assert img ** t.p - img == t.substitute(lv.D, images)


def test_composition_matches_witt_power(witt5, witt2):
    for wt in (witt5, witt2):
        t = wt.tower
        s = galois_generator_images(wt)
        assert compose_images(t, s, s) == galois_generator_images(wt, 2)


def test_order_by_composition_p2(witt2):
    t = witt2.tower
    s = galois_generator_images(witt2)
    acc = identity_images(t)
    for k in range(1, 9):
        acc = compose_images(t, s, acc)
        assert (acc == identity_images(t)) == (k == 8)


def test_order_p5(witt5):
    t = witt5.tower
    s5 = galois_generator_images(witt5, 5)
    acc = identity_images(t)
    for k in range(1, 26):
        acc = compose_images(t, s5, acc)
        assert (acc == identity_images(t)) == (k == 25)
    assert galois_generator_images(witt5, 125) == identity_images(t)


def test_shift_images_length_check(witt5):
    with pytest.raises(InputError):
        shift_images(witt5, (1, 0))
