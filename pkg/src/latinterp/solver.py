"""Interpolation of partial functions on cuboids by lattice polynomials.

Given values ``f(e_I)`` on the vertices of a cuboid, the problem is solvable
exactly when ``f`` is monotone and satisfies the exchange condition

    f(e_{I+k}) & a_k  <=  f(e_I)  <=  f(e_{I-k}) | b_k      for all I, k.

In that case the solutions over the Boolean extension are the polynomials
whose normalized coefficients lie coefficientwise between

    lo_I = f(e_I) & (meet of a_i' for i not in I)
    hi_I = f(e_I) | (join of b_i' for i in I)

and the solutions over ``L`` are those with ``cl(lo_I) <= c_I <= int(hi_I)``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from latinterp import _kernels
from latinterp.boolean import cl, complement, interior
from latinterp.errors import CapExceeded, InfeasibleError, LatticeError, ProblemError
from latinterp.order import DistributiveLattice
from latinterp.polynomial import Carrier, PolynomialDNF, normalize_table, render_subset
from latinterp.problem import CuboidProblem

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class MonotonicityWitness:
    """``lower`` is covered by ``upper`` (one more coordinate) yet
    ``f(e_lower)`` is not below ``f(e_upper)``."""

    lower: int
    upper: int
    lower_value: int
    upper_value: int

    def describe(self, lattice: DistributiveLattice) -> str:
        low = "∅" if self.lower == 0 else render_subset(self.lower)
        return f"monotonicity violated at {low} ⊂ {render_subset(self.upper)}"


@dataclass(frozen=True)
class StarWitness:
    """A failed exchange inequality at subset ``subset`` and coordinate ``k``
    (1-based).  ``side`` is ``"lower"`` for ``f(e_{I+k}) & a_k <= f(e_I)``
    and ``"upper"`` for ``f(e_I) <= f(e_{I-k}) | b_k``; ``lhs`` is not below
    ``rhs``."""

    subset: int
    k: int
    side: str
    lhs: int
    rhs: int

    def describe(self, lattice: DistributiveLattice) -> str:
        return (
            f"(★) violated at I={render_subset(self.subset)}, k={self.k} ({self.side} side): "
            f"{lattice.label(self.lhs)} ≰ {lattice.label(self.rhs)}"
        )


@dataclass(frozen=True)
class IteratedStarWitness:
    small: int
    large: int
    side: str
    lhs: int
    rhs: int

    def describe(self, lattice: DistributiveLattice) -> str:
        return (
            f"iterated condition violated at S={render_subset(self.small)}, "
            f"T={render_subset(self.large)} ({self.side} side): "
            f"{lattice.label(self.lhs)} ≰ {lattice.label(self.rhs)}"
        )


@dataclass(frozen=True)
class RGWitness:
    """Points ``x, y`` with ``f(x) < f(y)`` and no coordinate ``i`` such that
    ``x_i <= f(x) < f(y) <= y_i``."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    fx: int
    fy: int

    def describe(self, lattice: DistributiveLattice) -> str:
        return f"violated at ({render_point(lattice, self.x)},{render_point(lattice, self.y)})"


def render_point(lattice: DistributiveLattice, point: Sequence[int]) -> str:
    if len(point) == 1:
        return lattice.label(point[0])
    return "(" + ",".join(lattice.label(v) for v in point) + ")"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object = None
    advisory: bool = False

    def __bool__(self):
        return self.ok


_PASS = Verdict(True)


def _leq(x: int, y: int) -> bool:
    return not x & ~y


# -- conditions ---------------------------------------------------------------


def check_monotone(prob: CuboidProblem) -> Verdict:
    """Monotonicity of the vertex values, checked on subset covers only."""
    f, n = prob.values, prob.arity
    for subset in range(1 << n):
        for k in range(n):
            bit = 1 << k
            if subset & bit:
                continue
            if not _leq(f[subset], f[subset | bit]):
                return Verdict(False, MonotonicityWitness(subset, subset | bit, f[subset], f[subset | bit]))
    return _PASS


def check_star(prob: CuboidProblem) -> Verdict:
    f, n = prob.values, prob.arity
    for subset in range(1 << n):
        for k in range(n):
            bit = 1 << k
            a, b = prob.bounds[k]
            if not subset & bit:
                lhs, rhs = f[subset | bit] & a, f[subset]
                if not _leq(lhs, rhs):
                    return Verdict(False, StarWitness(subset, k + 1, "lower", lhs, rhs))
            else:
                lhs, rhs = f[subset], f[subset ^ bit] | b
                if not _leq(lhs, rhs):
                    return Verdict(False, StarWitness(subset, k + 1, "upper", lhs, rhs))
    return _PASS


def check_iterated_star(prob: CuboidProblem) -> Verdict:
    """Both inequalities for every pair ``S <= T`` directly (no induction)."""
    lat, f, n = prob.lattice, prob.values, prob.arity
    for large in range(1 << n):
        small = 0
        while True:
            diff = large & ~small
            a_meet, b_join = lat.top, lat.bottom
            for k in range(n):
                if diff >> k & 1:
                    a_meet &= prob.bounds[k][0]
                    b_join |= prob.bounds[k][1]
            lhs, rhs = f[large] & a_meet, f[small]
            if not _leq(lhs, rhs):
                return Verdict(False, IteratedStarWitness(small, large, "lower", lhs, rhs))
            lhs, rhs = f[large], f[small] | b_join
            if not _leq(lhs, rhs):
                return Verdict(False, IteratedStarWitness(small, large, "upper", lhs, rhs))
            if small == large:
                break
            small = (small - large) & large
    return _PASS


# -- bounds and solutions -----------------------------------------------------


def compute_bounds(prob: CuboidProblem) -> tuple[tuple[int, int], ...]:
    """Per subset the pair of Boolean-extension bounds ``(lo_I, hi_I)``."""
    lat, n = prob.lattice, prob.arity
    a_comp = [complement(lat, a) for a in prob.lows]
    b_comp = [complement(lat, b) for b in prob.highs]
    out = []
    for subset in range(1 << n):
        lo, hi = prob.values[subset], prob.values[subset]
        for i in range(n):
            if subset >> i & 1:
                hi |= b_comp[i]
            else:
                lo &= a_comp[i]
        out.append((lo, hi))
    return tuple(out)


@dataclass(frozen=True)
class SolutionSet:
    """Everything known about the solutions of one problem.

    ``boolean_bounds[I]`` is ``(lo_I, hi_I)`` in the Boolean extension and
    ``lattice_bounds[I]`` is ``(cl(lo_I), int(hi_I))`` in ``L``; both are
    filled in even when the problem is infeasible.  ``canonical`` is the
    polynomial with coefficients ``f(e_I)``.
    """

    problem: CuboidProblem
    feasible: bool
    reason: object
    boolean_bounds: tuple[tuple[int, int], ...]
    lattice_bounds: tuple[tuple[int, int], ...]
    canonical: PolynomialDNF | None

    def describe_reason(self) -> str:
        return "" if self.reason is None else self.reason.describe(self.problem.lattice)


def diagnose(prob: CuboidProblem) -> Verdict:
    mono = check_monotone(prob)
    if not mono:
        return mono
    return check_star(prob)


def solve(prob: CuboidProblem) -> SolutionSet:
    verdict = diagnose(prob)
    lat = prob.lattice
    bounds = compute_bounds(prob)
    lattice_bounds = tuple((cl(lat, lo), interior(lat, hi)) for lo, hi in bounds)
    canonical = None
    if verdict:
        canonical = PolynomialDNF(lat, prob.arity, prob.values, Carrier.L)
        got = _kernels.eval_many(canonical.coeffs, prob.vertices(), lat.rank)
        if tuple(got) != prob.values:
            raise RuntimeError("canonical interpolant does not reproduce the prescribed values")
    return SolutionSet(prob, verdict.ok, verdict.witness, bounds, lattice_bounds, canonical)


def extremal_polynomials(prob: CuboidProblem) -> tuple[PolynomialDNF, PolynomialDNF]:
    """The least and greatest interpolants over the Boolean extension."""
    verdict = diagnose(prob)
    if not verdict:
        raise InfeasibleError(
            "no interpolant exists: " + verdict.witness.describe(prob.lattice), verdict.witness
        )
    bounds = compute_bounds(prob)
    lat, n = prob.lattice, prob.arity
    low = PolynomialDNF(lat, n, [lo for lo, _ in bounds], Carrier.B)
    high = PolynomialDNF(lat, n, [hi for _, hi in bounds], Carrier.B)
    return low, high


def is_solution(prob: CuboidProblem, p: PolynomialDNF) -> bool:
    """Interval test on the normalized coefficients of ``p`` (over L or B)."""
    if p.lattice is not prob.lattice:
        raise LatticeError("polynomial and problem live on different lattices")
    if p.arity != prob.arity:
        raise LatticeError(f"polynomial of arity {p.arity} for a problem of arity {prob.arity}")
    if not diagnose(prob):
        return False
    coeffs = normalize_table(p.coeffs, p.arity)
    return all(_leq(lo, c) and _leq(c, hi) for c, (lo, hi) in zip(coeffs, compute_bounds(prob)))


def interval_sizes(prob: CuboidProblem, solution_set: SolutionSet | None = None) -> list[int]:
    sols = solution_set or solve(prob)
    elements = prob.lattice.elements
    return [
        sum(1 for x in elements if _leq(lo, x) and _leq(x, hi)) for lo, hi in sols.lattice_bounds
    ]


def enumerate_solutions(prob: CuboidProblem, cap: int = DEFAULT_CAP) -> list[PolynomialDNF]:
    """All interpolants over ``L`` as normalized DNFs, in canonical order.

    Raises ``CapExceeded`` when the number of interval combinations exceeds
    ``cap``; returns an empty list when the problem is infeasible.
    """
    sols = solve(prob)
    if not sols.feasible:
        return []
    combos = math.prod(interval_sizes(prob, sols))
    if combos > cap:
        raise CapExceeded(
            f"{combos} coefficient combinations exceed the cap of {cap}", combos, cap
        )
    lat, n = prob.lattice, prob.arity
    lo = [x for x, _ in sols.lattice_bounds]
    hi = [y for _, y in sols.lattice_bounds]
    tables = _kernels.enumerate_monotone(n, lat.elements, lo, hi, cap, lat.rank)
    return [PolynomialDNF(lat, n, t, Carrier.L) for t in tables]


def count_solutions(prob: CuboidProblem, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_solutions(prob, cap))


def goodstein(lattice: DistributiveLattice, n: int, values: Sequence[int]) -> PolynomialDNF:
    """The unique interpolant of a monotone ``f`` on ``{0,1}^n``."""
    if len(values) != 1 << n:
        raise ProblemError(f"need {1 << n} values for arity {n}, got {len(values)}")
    prob = CuboidProblem(lattice, ((lattice.bottom, lattice.top),) * n, tuple(values))
    sols = solve(prob)
    if not sols.feasible:
        raise InfeasibleError("f is not monotone: " + sols.describe_reason(), sols.reason)
    return sols.canonical


def check_rg(lattice: DistributiveLattice, points: Sequence[Sequence[int]], values: Sequence[int]) -> Verdict:
    """For all ``x, y`` in the domain with ``f(x) < f(y)``, some coordinate
    ``i`` has ``x_i <= f(x) < f(y) <= y_i``.

    Characterizes interpolability on finite chains; on other lattices the
    verdict is returned with ``advisory=True``.
    """
    points = [tuple(p) for p in points]
    if len(points) != len(values):
        raise ProblemError("domain and value table differ in length")
    lattice.check(*values)
    for p in points:
        lattice.check(*p)
    advisory = not lattice.is_chain()
    for x, fx in zip(points, values):
        for y, fy in zip(points, values):
            if fx == fy or not _leq(fx, fy):
                continue
            if not any(_leq(xi, fx) and _leq(fy, yi) for xi, yi in zip(x, y)):
                return Verdict(False, RGWitness(x, y, fx, fy), advisory)
    return Verdict(True, None, advisory)
