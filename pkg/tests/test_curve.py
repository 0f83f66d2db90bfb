import pytest
from hypothesis import given, settings, strategies as st

from trivial_limits.curve import (
    INFINITY,
    Divisor,
    Place,
    canonical_divisor,
    involution,
    local_expansion,
    new_curve,
    parse_curve,
    parse_divisor,
    weierstrass_places,
)
from trivial_limits.errors import DomainError, IrrationalSupportError
from trivial_limits.ff import LaurentSeries, Polynomial


def test_new_curve_genus(c2):
    assert c2.g == 2


@pytest.mark.parametrize(
    "p, f",
    [
        (7, [0, 0, 0, 0, 0, 1]),  # x^5, not squarefree
        (2, [0, 1, 0, 0, 0, 1]),
        (9, [0, 1, 0, 0, 0, 1]),
        (7, [0, 1, 0, 0, 0, 2]),  # not monic
        (7, [1, 0, 0, 0, 0, 0, 1]),  # even degree
        (7, [0, 1, 0, 1]),  # genus 1
    ],
)
def test_new_curve_rejects(p, f):
    with pytest.raises(DomainError):
        new_curve(p, f)


def test_involution(c2):
    assert involution(c2, Place(3, 3)) == Place(3, 4)
    assert involution(c2, Place(0, 0)) == Place(0, 0)
    assert involution(c2, INFINITY) == INFINITY
    with pytest.raises(DomainError):
        involution(c2, Place(3, 2))


def test_weierstrass_places(c2, c3, c4):
    assert set(weierstrass_places(c2)) == {Place(0, 0), Place(1, 0), Place(6, 0), INFINITY}
    for c in (c2, c3, c4):
        W = weierstrass_places(c)
        assert INFINITY in W and len(W) <= 2 * c.g + 2


def test_rational_points_brute_force(c2, c3):
    for c in (c2, c3):
        brute = {Place(x, y) for x in range(c.p) for y in range(c.p) if (y * y - c.f(x)) % c.p == 0}
        assert set(c.rational_points()) == brute


def test_places_over_inert_fibre(c2):
    x0 = next(x for x in range(7) if c2.f(x) and pow(c2.f(x), 3, 7) == 6)
    with pytest.raises(IrrationalSupportError):
        c2.places_over(x0)


def test_expansion_valuations(c2):
    X, Y = local_expansion(c2, INFINITY, 10)
    assert (X.valuation, Y.valuation) == (-2, -5)
    X, Y = local_expansion(c2, Place(0, 0), 10)
    assert (X.valuation, Y.valuation) == (2, 1)
    P = Place(3, 3)
    X, Y = local_expansion(c2, P, 10)
    assert (X - LaurentSeries(0, [3], X.prec, 7)).valuation == 1
    assert Y[0] == 3


@pytest.mark.parametrize("name", ["c2", "c3", "c4"])
def test_expansion_satisfies_equation(name, request):
    c = request.getfixturevalue(name)
    for P in list(c.rational_points()) + [INFINITY]:
        X, Y = local_expansion(c, P, 12)
        fx = LaurentSeries(0, [1], 64, c.p)
        for coef in reversed(c.f.coeffs[:-1]):
            fx = fx * X + LaurentSeries(0, [coef], 64, c.p)
        diff = Y * Y - fx
        assert diff.is_zero()
        assert diff.prec >= 2 * Y.valuation + 8


def test_divisor_arithmetic(c2):
    P, Q = Place(3, 3), Place(0, 0)
    D = Divisor([(P, 1), (Q, 2), (INFINITY, -1)])
    assert D.degree == 2
    assert (D - D).is_zero()
    assert 2 * D == D + D
    assert D + Divisor.point(INFINITY) >= Divisor.point(P)
    assert canonical_divisor(c2) == Divisor.point(INFINITY, 2)


def test_parse_round_trip(c2):
    c = parse_curve('{"p":7,"f":[0,-1,0,0,0,1]}')
    assert c == c2
    D = parse_divisor(c, '[["inf",2],[[3,3],1]]')
    assert D == Divisor([(INFINITY, 2), (Place(3, 3), 1)])
    assert parse_divisor(c, D.to_json()) == D
    assert parse_curve(c.to_json()) == c


@pytest.mark.parametrize(
    "spec",
    ['{"p":7}', '[1,2]', "not json", '{"p":7,"f":"x"}'],
)
def test_parse_curve_errors(spec):
    with pytest.raises(DomainError):
        parse_curve(spec)


def test_parse_divisor_errors(c2):
    for spec in ['{"a":1}', "[[1,2,3]]", '[[[3,2],1]]', '[["nowhere",1]]']:
        with pytest.raises(DomainError):
            parse_divisor(c2, spec)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(-3, 3)), max_size=6))
def test_divisor_group_laws(c2_terms):
    c = new_curve(7, [0, -1, 0, 0, 0, 1])
    places = list(c.rational_points()) + [INFINITY]
    D = Divisor([(places[i], n) for i, n in c2_terms])
    E = Divisor([(places[(i + 1) % len(places)], n) for i, n in c2_terms])
    assert (D + E).degree == D.degree + E.degree
    assert D + E == E + D
    assert D - D == Divisor()
    assert parse_divisor(c, D.to_json()) == D
