"""Brute-force ground truth for interpolation questions.

Enumerates every polynomial function of a given arity over a small lattice
(one normalized coefficient table per function) and filters by evaluation.
Nothing here uses the solver; only lattice data and polynomial evaluation are
shared with it.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass

from latinterp import _kernels
from latinterp.boolean import bool_elements
from latinterp.errors import CapExceeded, ProblemError
from latinterp.order import DistributiveLattice
from latinterp.polynomial import Carrier, PolynomialDNF
from latinterp.problem import CuboidProblem


@dataclass(frozen=True)
class OracleConfig:
    max_function_count: int = 10**6
    seed: int = 0

    def __post_init__(self):
        if self.max_function_count <= 0:
            raise ValueError("max_function_count must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


DEFAULT_CONFIG = OracleConfig()


def monotone_tables(n: int, carrier: Sequence[int], cap: int) -> list[tuple[int, ...]]:
    """Every table ``c`` over ``carrier`` with ``c[I] <= c[J]`` for ``I <= J``.

    Lexicographic over increasing element order, the entry of the empty
    subset varying fastest.
    """
    return list(_monotone_tables(n, tuple(sorted(carrier)), cap))


@functools.lru_cache(maxsize=64)
def _monotone_tables(n, carrier, cap):
    size = 1 << n
    table = [0] * size
    out: list[tuple[int, ...]] = []

    def fill(subset):
        if subset < 0:
            out.append(tuple(table))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} polynomial functions", len(out), cap)
            return
        supersets = [t for t in range(subset + 1, size) if t & subset == subset]
        for c in carrier:
            if all(not c & ~table[t] for t in supersets):
                table[subset] = c
                fill(subset - 1)

    fill(size - 1)
    return tuple(out)


def all_polynomial_functions(
    lattice: DistributiveLattice, n: int, config: OracleConfig = DEFAULT_CONFIG
) -> list[PolynomialDNF]:
    tables = monotone_tables(n, lattice.elements, config.max_function_count)
    return [PolynomialDNF(lattice, n, t, Carrier.L) for t in tables]


def all_b_polynomial_functions(
    lattice: DistributiveLattice, n: int, config: OracleConfig = DEFAULT_CONFIG
) -> list[PolynomialDNF]:
    tables = monotone_tables(n, bool_elements(lattice), config.max_function_count)
    return [PolynomialDNF(lattice, n, t, Carrier.B) for t in tables]


def _domain(points, values):
    points = [tuple(p) for p in points]
    values = list(values)
    if len(points) != len(values):
        raise ProblemError("domain and value table differ in length")
    seen = {}
    for p, v in zip(points, values):
        if seen.setdefault(p, v) != v:
            raise ProblemError(f"point {p} given two different values")
    return points, values


def _filter(polys, points, values, width):
    values = list(values)
    return [p for p in polys if _kernels.eval_many(p.coeffs, points, width) == values]


def brute_interpolate(
    lattice: DistributiveLattice,
    points: Sequence[Sequence[int]],
    values: Sequence[int],
    config: OracleConfig = DEFAULT_CONFIG,
    n: int | None = None,
) -> list[PolynomialDNF]:
    """All polynomial functions over ``L`` taking ``values`` on ``points``.

    ``n`` is needed only when the domain is empty.
    """
    points, values = _domain(points, values)
    if n is None:
        if not points:
            raise ProblemError("arity cannot be inferred from an empty domain")
        n = len(points[0])
    if any(len(p) != n for p in points):
        raise ProblemError("points of different lengths")
    lattice.check(*values)
    for p in points:
        lattice.check(*p)
    return _filter(all_polynomial_functions(lattice, n, config), points, values, lattice.rank)


def _vertices(prob: CuboidProblem):
    n = prob.arity
    return [
        tuple(prob.bounds[i][1] if s >> i & 1 else prob.bounds[i][0] for i in range(n))
        for s in range(1 << n)
    ]


def brute_b_interpolate(
    lattice: DistributiveLattice, prob: CuboidProblem, config: OracleConfig = DEFAULT_CONFIG
) -> list[PolynomialDNF]:
    """All polynomial functions over the Boolean extension interpolating a
    cuboid problem."""
    polys = all_b_polynomial_functions(lattice, prob.arity, config)
    return _filter(polys, _vertices(prob), prob.values, lattice.rank)


class RestrictionIndex:
    """Groups all polynomials of one arity by their restriction to a fixed
    point list, for answering many value tables against the same domain."""

    def __init__(
        self,
        lattice: DistributiveLattice,
        n: int,
        points: Sequence[Sequence[int]],
        carrier: Carrier = Carrier.L,
        config: OracleConfig = DEFAULT_CONFIG,
        polys: Sequence[PolynomialDNF] | None = None,
    ):
        if polys is None:
            if carrier is Carrier.L:
                polys = all_polynomial_functions(lattice, n, config)
            else:
                polys = all_b_polynomial_functions(lattice, n, config)
        self.points = [tuple(p) for p in points]
        self.groups: dict[tuple[int, ...], list[PolynomialDNF]] = {}
        for p in polys:
            key = tuple(_kernels.eval_many(p.coeffs, self.points, lattice.rank))
            self.groups.setdefault(key, []).append(p)

    def lookup(self, values: Sequence[int]) -> list[PolynomialDNF]:
        return self.groups.get(tuple(values), [])

    @classmethod
    def for_cuboid(cls, prob: CuboidProblem, **kwargs) -> RestrictionIndex:
        return cls(prob.lattice, prob.arity, _vertices(prob), **kwargs)
