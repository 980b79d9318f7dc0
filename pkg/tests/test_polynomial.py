import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latinterp.errors import LatticeError
from latinterp.order import boolean, chain
from latinterp.polynomial import (
    Carrier,
    PolynomialDNF,
    all_points,
    canonical_key,
    carrier_elements,
    characteristic_point,
    evaluate,
    functions_equal,
    normalize_monotone,
    recover_coefficients,
    render_compact,
    render_dnf,
    subset_from_members,
    subset_members,
    value_table,
)

from conftest import five_element

C4 = chain(4)
DIAMOND = boolean(2)


def el(lat, *names):
    return tuple(lat.element(n) for n in names)


def pointwise_equal(p, q):
    return all(p(*x) == q(*x) for x in all_points(p.lattice, p.arity, p.carrier))


def naive_eval(p, x):
    acc = 0
    for s, c in enumerate(p.coeffs):
        term = c
        for i in subset_members(s):
            term &= x[i - 1]
        acc |= term
    return acc


def test_pure_meet():
    for lat in (C4, DIAMOND, five_element()):
        p = PolynomialDNF(lat, 2, (0, 0, 0, lat.top))
        for x, y in all_points(lat, 2):
            assert p(x, y) == lat.meet(x, y)


def test_chain4_value():
    p = PolynomialDNF(C4, 1, el(C4, "1", "3"))
    assert p(C4.element("2")) == C4.element("2")


def test_rewritten_term_matches():
    # a | x | (b & x & y) written with c_{} = a, c_{1} = 1, c_{2} = 0, c_{12} = b
    lat = five_element()
    a, b = lat.element("y"), lat.element("z")
    p = PolynomialDNF(lat, 2, (a, lat.top, 0, b))
    for x, y in all_points(lat, 2):
        assert p(x, y) == a | x | (b & x & y)


def test_normalize_example():
    p = PolynomialDNF(C4, 1, el(C4, "2", "1"))
    q = normalize_monotone(p)
    assert q.coeffs == el(C4, "2", "2")
    assert [p(x) for x in C4] == [q(x) for x in C4] == [C4.element("2")] * 4


def test_normalize_idempotent_and_bottom():
    p = PolynomialDNF(DIAMOND, 2, (0, 1, 2, 3))
    assert normalize_monotone(p) == p
    z = PolynomialDNF(DIAMOND, 2, (0,) * 4)
    assert normalize_monotone(z) == z


@pytest.mark.parametrize("carrier", [Carrier.L, Carrier.B])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_normalization_preserves_function(n, carrier):
    # carriers up to 32 elements would make n=3 tables large; sample tables
    rng = random.Random(n)
    for lat in (C4, DIAMOND, five_element(), chain(6)):
        elems = list(carrier_elements(lat, carrier))
        if len(elems) ** n > 5000:
            continue
        for _ in range(40):
            p = PolynomialDNF(lat, n, [rng.choice(elems) for _ in range(1 << n)], carrier)
            q = normalize_monotone(p)
            assert q.normalized
            assert value_table(p) == value_table(q)
            assert normalize_monotone(q) == q


def test_recover_examples():
    p = PolynomialDNF(DIAMOND, 2, (0, 1, 2, 3))
    assert recover_coefficients(p, DIAMOND, 2) == p
    join = recover_coefficients(lambda x, y: x | y, DIAMOND, 2)
    assert join.coeffs == (0, DIAMOND.top, DIAMOND.top, DIAMOND.top)
    const = recover_coefficients(lambda x, y: DIAMOND.element("a"), DIAMOND, 2)
    assert set(const.coeffs) == {DIAMOND.element("a")}


def test_recover_after_evaluate_is_normalization():
    rng = random.Random(1)
    for lat in (C4, DIAMOND, five_element()):
        for _ in range(50):
            p = PolynomialDNF(lat, 2, [rng.choice(lat.elements) for _ in range(4)])
            assert recover_coefficients(p, lat, 2) == normalize_monotone(p)
    assert characteristic_point(C4, 3, 0b101) == (C4.top, 0, C4.top)


def test_functions_equal_examples():
    p = PolynomialDNF(C4, 1, el(C4, "0", "2"))
    q = PolynomialDNF(C4, 1, el(C4, "0", "3"))
    assert not functions_equal(p, q)
    assert p(C4.top) != q(C4.top)
    r = PolynomialDNF(C4, 1, el(C4, "2", "1"))
    s = PolynomialDNF(C4, 1, el(C4, "2", "0"))
    assert functions_equal(r, s) and r.coeffs != s.coeffs
    assert functions_equal(p, normalize_monotone(p))


@pytest.mark.parametrize("lat", [chain(2), chain(3), DIAMOND], ids=repr)
def test_functions_equal_matches_pointwise(lat):
    tables = list(itertools.product(lat.elements, repeat=4))
    polys = [PolynomialDNF(lat, 2, t) for t in tables]
    rng = random.Random(7)
    sample = rng.sample(polys, min(len(polys), 60))
    for p in sample:
        for q in sample:
            assert functions_equal(p, q) == pointwise_equal(p, q)


def test_functions_equal_rejects_mismatch():
    with pytest.raises(LatticeError):
        functions_equal(PolynomialDNF(C4, 1, (0, 0)), PolynomialDNF(C4, 2, (0,) * 4))
    with pytest.raises(LatticeError):
        functions_equal(PolynomialDNF(C4, 1, (0, 0)), PolynomialDNF(C4, 1, (0, 0), Carrier.B))


def test_constructor_validation():
    with pytest.raises(LatticeError):
        PolynomialDNF(C4, 2, (0, 0, 0))
    with pytest.raises(LatticeError):
        PolynomialDNF(C4, 1, (0, 0b10))
    PolynomialDNF(C4, 1, (0, 0b10), Carrier.B)
    p = PolynomialDNF(C4, 2, (0,) * 4)
    with pytest.raises(LatticeError):
        p(0)
    with pytest.raises(LatticeError):
        evaluate(p, (0, 0b10))


lattices = st.sampled_from([C4, DIAMOND, five_element(), chain(6)])


@st.composite
def poly_and_points(draw):
    lat = draw(lattices)
    n = draw(st.integers(0, 3))
    carrier = draw(st.sampled_from([Carrier.L, Carrier.B]))
    elems = list(carrier_elements(lat, carrier))
    coeffs = draw(st.lists(st.sampled_from(elems), min_size=1 << n, max_size=1 << n))
    x = draw(st.lists(st.sampled_from(elems), min_size=n, max_size=n))
    y = draw(st.lists(st.sampled_from(elems), min_size=n, max_size=n))
    return PolynomialDNF(lat, n, coeffs, carrier), x, y


@settings(max_examples=300, deadline=None)
@given(poly_and_points())
def test_evaluate_is_monotone_and_matches_definition(data):
    p, x, y = data
    lo = [a & b for a, b in zip(x, y)]
    assert not p(*lo) & ~p(*x)
    assert p(*x) == naive_eval(p, x)


def test_rendering():
    p = PolynomialDNF(C4, 1, el(C4, "1", "2"))
    assert render_compact(p) == "{}:1 {1}:2"
    assert render_dnf(p) == "{} -> 1\n{1} -> 2"
    q = PolynomialDNF(C4, 1, (0, 0b100), Carrier.B)
    assert render_compact(q) == "{}:{} {1}:{3}"
    assert subset_from_members([1, 3]) == 0b101


def test_canonical_key_orders_empty_subset_fastest():
    tables = [el(C4, *t) for t in [("0", "2"), ("1", "2"), ("0", "3"), ("1", "3")]]
    polys = [PolynomialDNF(C4, 1, t) for t in reversed(tables)]
    assert [p.coeffs for p in sorted(polys, key=canonical_key)] == tables
