import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latinterp import _kernels, _pykernels
from latinterp.errors import CapExceeded
from latinterp.oracle import monotone_tables
from latinterp.order import boolean, chain

from conftest import five_element

try:
    from latinterp import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
BACKENDS.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="not built"))
)
LATTICES = [chain(4), boolean(2), boolean(3), five_element()]


@pytest.mark.parametrize("k", BACKENDS)
def test_eval_dnf_small(k):
    # c_{} = 1, c_{1} = 3 on the 4-chain, evaluated at 2
    assert k.eval_dnf((0b001, 0b111), (0b011,)) == 0b011
    assert k.eval_dnf((0b101,), ()) == 0b101
    assert k.eval_many((0, 0, 0, 0b11), [(0b01, 0b10), (0b11, 0b11)]) == [0, 0b11]


@pytest.mark.parametrize("k", BACKENDS)
def test_value_table_order(k):
    carrier = [0, 1, 3]
    table = k.value_table((0, 0, 0, 3), 2, carrier)
    assert table == [x & y for x, y in itertools.product(carrier, repeat=2)]


@pytest.mark.parametrize("k", BACKENDS)
@pytest.mark.parametrize("lat", LATTICES, ids=repr)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_unbounded_enumeration_counts_all_monotone_tables(k, lat, n):
    size = 1 << n
    got = k.enumerate_monotone(n, list(lat.elements), [0] * size, [lat.top] * size, 10**6)
    assert got == monotone_tables(n, lat.elements, 10**6)


def test_chain4_counts():
    elems = list(chain(4).elements)
    counts = [len(_kernels.enumerate_monotone(n, elems, [0] * (1 << n), [7] * (1 << n), 10**6)) for n in range(4)]
    assert counts == [4, 10, 50, 887]


@pytest.mark.parametrize("k", BACKENDS)
def test_cap(k):
    with pytest.raises(CapExceeded):
        k.enumerate_monotone(2, [0, 1, 3, 7], [0] * 4, [7] * 4, 5)
    assert len(k.enumerate_monotone(2, [0, 1, 3, 7], [0] * 4, [7] * 4, 50)) == 50


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
@settings(max_examples=200, deadline=None)
@given(st.data())
def test_backends_agree(data):
    lat = data.draw(st.sampled_from(LATTICES))
    n = data.draw(st.integers(0, 3))
    elems = list(lat.elements)
    coeffs = data.draw(st.lists(st.sampled_from(range(lat.top + 1)), min_size=1 << n, max_size=1 << n))
    points = data.draw(st.lists(st.tuples(*[st.sampled_from(elems)] * n), max_size=20))
    assert _ckernels.eval_many(coeffs, points) == _pykernels.eval_many(coeffs, points)
    if n <= 2:
        assert _ckernels.value_table(coeffs, n, elems) == _pykernels.value_table(coeffs, n, elems)
        lo = data.draw(st.lists(st.sampled_from(elems), min_size=1 << n, max_size=1 << n))
        hi = data.draw(st.lists(st.sampled_from(elems), min_size=1 << n, max_size=1 << n))
        assert _ckernels.enumerate_monotone(n, elems, lo, hi, 10**6) == _pykernels.enumerate_monotone(
            n, elems, lo, hi, 10**6
        )


def test_enumeration_respects_bounds():
    rng = random.Random(3)
    elems = list(five_element().elements)
    for _ in range(200):
        lo = [rng.choice(elems) for _ in range(4)]
        hi = [rng.choice(elems) for _ in range(4)]
        expected = [
            t for t in monotone_tables(2, elems, 10**6)
            if all(not l & ~c and not c & ~h for l, c, h in zip(lo, t, hi))
        ]
        assert _kernels.enumerate_monotone(2, elems, lo, hi, 10**6) == expected


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
