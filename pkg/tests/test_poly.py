import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeindex.parse import ExponentError, PolySyntaxError, UndeclaredVariableError, parse
from hodgeindex.poly import (
    DEGREVLEX,
    LEX,
    Polynomial,
    block_order,
    divide_by_difference,
    poly_det,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, vars=XY):
    return parse(text, vars)


def test_parse_basic():
    assert P("x^2 + 2*x*y").terms == {(2, 0): 1, (1, 1): 2}


def test_parse_fermat_cubic():
    assert P("x^3 + y^3 + z^3", XYZ).terms == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}


def test_parse_undeclared():
    with pytest.raises(UndeclaredVariableError) as exc:
        P("x^2 + w")
    assert exc.value.position == 6


@pytest.mark.parametrize(
    "text, error",
    [
        ("x^-2", ExponentError),
        ("x^(2)", ExponentError),
        ("x^3/2", ExponentError),
        ("2x", PolySyntaxError),
        ("x/2", PolySyntaxError),
        ("(x + y", PolySyntaxError),
        ("x + ", PolySyntaxError),
        ("x $ y", PolySyntaxError),
        ("1/0", PolySyntaxError),
        ("x^2^3", PolySyntaxError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        P(text)


def test_parse_rationals_unary_and_parentheses():
    assert P("-3/2*x + -(y - 1)^2").terms == {(1, 0): F(-3, 2), (0, 2): -1, (0, 1): 2, (0, 0): -1}
    assert P("-x^2").terms == {(2, 0): -1}


def test_partials():
    f = P("x^3 + y^2")
    assert f.partial(0) == P("3*x^2")
    assert f.partial(1) == P("2*y")
    assert P("7").partial(0).is_zero()


def test_poly_det_examples():
    two = Polynomial.constant(XYZ, 2)
    zero = Polynomial(XYZ)
    assert poly_det([[two, zero, zero], [zero, two, zero], [zero, zero, two]]) == Polynomial.constant(XYZ, 8)
    x, y, one = P("x"), P("y"), P("1")
    assert poly_det([[x, one], [one, y]]) == P("x*y - 1")
    f = P("x^3 + x*y")
    assert poly_det([[f]]) == f


def test_poly_det_guard():
    one = Polynomial.constant(XY, 1)
    with pytest.raises(ValueError):
        poly_det([[one] * 9 for _ in range(9)])


def test_poly_det_matches_leibniz_on_random_matrices():
    import itertools

    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = [[random_poly(rng, 2) for _ in range(n)] for _ in range(n)]
        expected = Polynomial(XY)
        for perm in itertools.permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            term = Polynomial.constant(XY, 1)
            for i, p in enumerate(perm):
                term = term * m[i][p]
            expected = expected - term if inv % 2 else expected + term
        assert poly_det(m) == expected


def test_substitute_vars():
    x2 = parse("x^2", ("x",))
    assert x2.substitute_vars({"x": "y"}, ("y",)) == parse("y^2", ("y",))
    xy = P("x*y")
    target = ("x", "y", "z", "w")
    assert xy.substitute_vars({"x": "x", "y": "w"}, target) == parse("x*w", target)
    assert Polynomial(XY).substitute_vars({"x": "y", "y": "x"}, XY).is_zero()
    with pytest.raises(ValueError):
        xy.substitute_vars({"x": "x", "y": "x"}, target)


def random_poly(rng, nvars, max_deg=4, max_terms=4):
    vars = XYZ[:nvars]
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = F(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(vars, terms)


@pytest.mark.parametrize("seed", range(200))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 3)
    a, b, c = (random_poly(rng, nv) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


@pytest.mark.parametrize("seed", range(50))
def test_print_parse_round_trip(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 3)
    p = random_poly(rng, nv)
    assert parse(str(p), p.vars) == p
    assert str(parse(str(p), p.vars)) == str(p)


@given(st.integers(0, 2**31), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_divided_difference_is_exact(seed, nv):
    rng = random.Random(seed)
    f = random_poly(rng, nv, max_deg=5, max_terms=5)
    j = rng.randrange(nv)
    doubled = f.vars + tuple(v + "'" for v in f.vars)
    fx = f.substitute_vars({}, doubled)
    fy = f.substitute_vars({f.vars[j]: f.vars[j] + "'"}, doubled)
    q = divide_by_difference(fx - fy, j, nv + j)
    xj = Polynomial.variable(doubled, f.vars[j])
    yj = Polynomial.variable(doubled, f.vars[j] + "'")
    assert q * (xj - yj) == fx - fy


def test_divide_by_difference_rejects_remainder():
    p = parse("x^2 + 1", ("x", "y"))
    with pytest.raises(ArithmeticError):
        divide_by_difference(p, 0, 1)


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, block_order(DEGREVLEX, 1)])
def test_monomial_orders_are_multiplicative_with_one_minimal(order):
    rng = random.Random(3)
    mons = [tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(40)]
    for u in mons:
        assert order.key((0, 0)) <= order.key(u)
        for v in mons:
            if order.key(u) < order.key(v):
                for w in mons[:8]:
                    uw = tuple(a + b for a, b in zip(u, w))
                    vw = tuple(a + b for a, b in zip(v, w))
                    assert order.key(uw) < order.key(vw)


def test_degrevlex_vs_lex():
    # x*z^2 vs y^3 are both degree 3; degrevlex looks at the last variable
    assert DEGREVLEX.key((0, 3, 0)) > DEGREVLEX.key((1, 0, 2))
    assert LEX.key((1, 0, 2)) > LEX.key((0, 3, 0))


def test_block_order_prefers_first_block():
    order = block_order(DEGREVLEX, 1)
    assert order.key((1, 0)) > order.key((0, 5))
