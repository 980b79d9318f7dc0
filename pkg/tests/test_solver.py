import itertools

import pytest

from latinterp.boolean import embed
from latinterp.errors import CapExceeded, InfeasibleError, LatticeError, ProblemError
from latinterp.order import boolean, chain
from latinterp.polynomial import Carrier, PolynomialDNF, all_points
from latinterp.problem import CuboidProblem
from latinterp.solver import (
    IteratedStarWitness,
    MonotonicityWitness,
    StarWitness,
    check_iterated_star,
    check_monotone,
    check_rg,
    check_star,
    compute_bounds,
    count_solutions,
    enumerate_solutions,
    extremal_polynomials,
    goodstein,
    is_solution,
    solve,
)

C4 = chain(4)
D = boolean(2)


def e(lat, name):
    return lat.element(name)


def chain4(f0, f1):
    return CuboidProblem(C4, ((e(C4, "1"), e(C4, "2")),), (e(C4, f0), e(C4, f1)))


def diamond(f0, f1):
    return CuboidProblem(D, ((0, e(D, "b")),), (e(D, f0), e(D, f1)))


SAMPLE = chain4("1", "2")


def test_problem_validation():
    with pytest.raises(ProblemError):
        CuboidProblem(C4, ((e(C4, "2"), e(C4, "2")),), (0, 0))
    with pytest.raises(ProblemError):
        CuboidProblem(D, ((e(D, "a"), e(D, "b")),), (0, 0))
    with pytest.raises(ProblemError):
        CuboidProblem(C4, ((0, 1),), (0,))
    with pytest.raises(ProblemError):
        CuboidProblem(C4, ((0, 0b10),), (0, 0))
    assert SAMPLE.vertex(0b1) == (e(C4, "2"),)


def test_check_monotone_examples():
    v = check_monotone(chain4("2", "1"))
    assert not v and v.witness == MonotonicityWitness(0, 1, e(C4, "2"), e(C4, "1"))
    assert v.witness.describe(C4) == "monotonicity violated at ∅ ⊂ {1}"
    assert check_monotone(chain4("2", "2"))
    assert check_monotone(diamond("a", "1"))


def test_check_star_examples():
    v = check_star(chain4("1", "3"))
    assert not v
    assert v.witness == StarWitness(1, 1, "upper", e(C4, "3"), e(C4, "2"))
    assert "3 ≰ 2" in v.witness.describe(C4)
    assert check_star(chain4("2", "1"))
    for f in itertools.product(D.elements, repeat=4):
        assert check_star(CuboidProblem(D, ((0, D.top),) * 2, f))


def test_iterated_star_examples():
    v = check_iterated_star(chain4("1", "3"))
    assert not v and isinstance(v.witness, IteratedStarWitness)
    assert (v.witness.small, v.witness.large) == (0, 1)
    assert check_iterated_star(SAMPLE)


def test_compute_bounds_example():
    (lo0, hi0), (lo1, hi1) = compute_bounds(SAMPLE)
    assert (lo0, hi0) == (C4.parse_set("{}"), C4.parse_set("{1}"))
    assert (lo1, hi1) == (C4.parse_set("{1,2}"), C4.parse_set("{1,2,3}"))


def test_bounds_collapse_on_unit_cube():
    for f in itertools.product(D.elements, repeat=4):
        prob = CuboidProblem(D, ((0, D.top),) * 2, f)
        assert compute_bounds(prob) == tuple((embed(D, v), embed(D, v)) for v in f)


def test_full_subset_lower_bound():
    prob = CuboidProblem(D, ((0, e(D, "a")), (e(D, "b"), D.top)), (0, e(D, "a"), e(D, "b"), D.top))
    assert compute_bounds(prob)[3][0] == D.top


def test_extremal_example():
    low, high = extremal_polynomials(SAMPLE)
    assert low.carrier is Carrier.B
    one, two = e(C4, "1"), e(C4, "2")
    assert (low(one), low(two), high(one), high(two)) == (one, two, one, two)
    for x in C4:
        assert low(x) == (two & x) and high(x) == (one | x)
    with pytest.raises(InfeasibleError) as info:
        extremal_polynomials(chain4("2", "1"))
    assert isinstance(info.value.witness, MonotonicityWitness)


def test_extremal_on_unit_cube_equals_p0():
    f = (0, e(D, "a"), e(D, "b"), D.top)
    prob = CuboidProblem(D, ((0, D.top),) * 2, f)
    low, high = extremal_polynomials(prob)
    assert low.coeffs == high.coeffs == solve(prob).canonical.coeffs


def test_extremal_bracket_constant():
    m = e(C4, "2")
    low, high = extremal_polynomials(chain4("2", "2"))
    for (x,) in all_points(C4, 1, Carrier.B):
        assert not low(x) & ~m and not m & ~high(x)


def test_solve_sample():
    s = solve(SAMPLE)
    assert s.feasible and s.reason is None
    assert [(C4.label(a), C4.label(b)) for a, b in s.lattice_bounds] == [("0", "1"), ("2", "3")]
    assert s.canonical.coeffs == (e(C4, "1"), e(C4, "2"))


def test_solve_diamond_examples():
    s = solve(diamond("b", "a"))
    assert not s.feasible and isinstance(s.reason, MonotonicityWitness)
    assert s.describe_reason() == "monotonicity violated at ∅ ⊂ {1}"
    g = diamond("a", "1")
    assert solve(g).feasible
    x_or_a = PolynomialDNF(D, 1, (e(D, "a"), D.top))
    assert x_or_a in enumerate_solutions(g)
    assert is_solution(g, x_or_a)


def test_is_solution_examples():
    assert is_solution(SAMPLE, solve(SAMPLE).canonical)
    good = PolynomialDNF(C4, 1, (e(C4, "0"), e(C4, "3")))
    bad = PolynomialDNF(C4, 1, (e(C4, "2"), e(C4, "2")))
    assert is_solution(SAMPLE, good)
    assert not is_solution(SAMPLE, bad)
    assert bad(e(C4, "1")) != e(C4, "1")
    assert not is_solution(chain4("2", "1"), good)
    with pytest.raises(LatticeError):
        is_solution(SAMPLE, PolynomialDNF(C4, 2, (0,) * 4))


def test_is_solution_agrees_with_evaluation():
    for f in itertools.product(C4.elements, repeat=2):
        prob = CuboidProblem(C4, ((e(C4, "1"), e(C4, "2")),), f)
        for t in itertools.product(C4.elements, repeat=2):
            p = PolynomialDNF(C4, 1, t)
            interpolates = [p(*v) for v in prob.vertices()] == list(f)
            assert is_solution(prob, p) == interpolates
        for t in itertools.product(range(C4.top + 1), repeat=2):
            p = PolynomialDNF(C4, 1, t, Carrier.B)
            assert is_solution(prob, p) == ([p(*v) for v in prob.vertices()] == list(f))


def test_enumerate_sample():
    sols = enumerate_solutions(SAMPLE)
    got = [tuple(C4.label(c) for c in p.coeffs) for p in sols]
    assert got == [("0", "2"), ("1", "2"), ("0", "3"), ("1", "3")]
    assert count_solutions(SAMPLE) == 4
    assert enumerate_solutions(chain4("2", "1")) == []


def test_enumerate_cap():
    with pytest.raises(CapExceeded) as info:
        enumerate_solutions(SAMPLE, cap=3)
    assert (info.value.count, info.value.cap) == (4, 3)
    assert len(enumerate_solutions(SAMPLE, cap=4)) == 4


def test_enumeration_filters_non_monotone_tables():
    prob = CuboidProblem(D, ((0, e(D, "a")), (0, e(D, "b"))), (0, 0, 0, 0))
    sols = enumerate_solutions(prob)
    assert all(p.normalized for p in sols)
    assert len({p.coeffs for p in sols}) == len(sols)


def test_goodstein_examples():
    f = (0, e(D, "a"), e(D, "b"), D.top)
    p = goodstein(D, 2, f)
    assert p.coeffs == f
    for x, y in all_points(D, 2):
        assert p(x, y) == (e(D, "a") & x) | (e(D, "b") & y)
    assert goodstein(D, 1, (e(D, "a"),) * 2).coeffs == (e(D, "a"),) * 2
    with pytest.raises(InfeasibleError) as info:
        goodstein(D, 1, (e(D, "a"), 0))
    assert (info.value.witness.lower, info.value.witness.upper) == (0, 1)


def test_goodstein_unique():
    for f in itertools.product(C4.elements, repeat=4):
        prob = CuboidProblem(C4, ((0, C4.top),) * 2, f)
        if check_monotone(prob):
            sols = enumerate_solutions(prob)
            assert [p.coeffs for p in sols] == [f]
            assert all(lo == hi == v for (lo, hi), v in zip(solve(prob).lattice_bounds, f))


def test_rg_examples():
    b = e(D, "b")
    v = check_rg(D, [(0,), (b,)], [b, e(D, "a")])
    assert v and v.advisory
    w = check_rg(D, [(0,), (b,)], [e(D, "a"), D.top])
    assert not w and w.advisory
    assert w.witness.describe(D) == "violated at (0,b)"
    c = chain(5)
    assert check_rg(c, [(0, 1), (3, 7), (15, 0)], [3, 3, 3])
    assert not check_rg(c, [(0,)], [0]).advisory
    with pytest.raises(ProblemError):
        check_rg(c, [(0,)], [0, 1])


def test_star_and_monotonicity_are_independent():
    f, g = chain4("2", "1"), chain4("1", "3")
    assert check_star(f) and not check_monotone(f)
    assert check_monotone(g) and not check_star(g)
    assert not solve(f).feasible and not solve(g).feasible
