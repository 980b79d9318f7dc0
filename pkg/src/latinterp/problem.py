"""Interpolation problems on the vertices of a cuboid."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from latinterp.errors import ProblemError
from latinterp.order import DistributiveLattice


@dataclass(frozen=True)
class CuboidProblem:
    """Values prescribed on the vertices of ``{a_1,b_1} x ... x {a_n,b_n}``.

    ``values[I]`` is the value at the vertex taking ``b_i`` for ``i`` in the
    subset ``I`` and ``a_i`` elsewhere.
    """

    lattice: DistributiveLattice
    bounds: tuple[tuple[int, int], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        bounds = tuple((int(a), int(b)) for a, b in self.bounds)
        values = tuple(self.values)
        object.__setattr__(self, "bounds", bounds)
        object.__setattr__(self, "values", values)
        lat = self.lattice
        for i, (a, b) in enumerate(bounds, start=1):
            if a not in lat or b not in lat:
                raise ProblemError(f"bounds of coordinate {i} are not lattice elements")
            if a == b or a & ~b:
                raise ProblemError(
                    f"coordinate {i}: need a_{i} < b_{i}, got {lat.label(a)} and {lat.label(b)}"
                )
        if len(values) != 1 << len(bounds):
            raise ProblemError(
                f"{len(bounds)} coordinates need {1 << len(bounds)} values, got {len(values)}"
            )
        for v in values:
            if v not in lat:
                raise ProblemError(f"value {v!r} is not a lattice element")

    @classmethod
    def goodstein(cls, lattice: DistributiveLattice, values: Sequence[int]) -> CuboidProblem:
        """The problem on ``{0,1}^n``."""
        n = max(len(values), 1).bit_length() - 1
        return cls(lattice, ((lattice.bottom, lattice.top),) * n, tuple(values))

    @property
    def arity(self) -> int:
        return len(self.bounds)

    @property
    def lows(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.bounds)

    @property
    def highs(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.bounds)

    def vertex(self, subset: int) -> tuple[int, ...]:
        return tuple(b if subset >> i & 1 else a for i, (a, b) in enumerate(self.bounds))

    def vertices(self) -> list[tuple[int, ...]]:
        return [self.vertex(s) for s in range(1 << self.arity)]

    def value(self, subset: int) -> int:
        return self.values[subset]
