"""Lattice polynomial functions in disjunctive normal form.

A polynomial of arity ``n`` is the function

    x  ->  join over I of ( coeffs[I]  meet  (meet of x_i for i in I) )

where ``I`` ranges over subsets of the variables, encoded as ints (bit ``i``
set means variable ``i + 1`` occurs).  Coefficients live either in the lattice
``L`` itself or in its Boolean extension ``B``; both are bitmasks over the
join-irreducibles.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from latinterp import _kernels
from latinterp.boolean import bool_elements
from latinterp.errors import LatticeError
from latinterp.order import DistributiveLattice, _bits


class Carrier(str, enum.Enum):
    L = "L"
    B = "B"


def subsets(n: int) -> range:
    return range(1 << n)


def subset_members(subset: int) -> list[int]:
    """1-based variable indices of ``subset``."""
    return [i + 1 for i in _bits(subset)]


def subset_from_members(members: Sequence[int]) -> int:
    mask = 0
    for i in members:
        mask |= 1 << (i - 1)
    return mask


def render_subset(subset: int) -> str:
    return "{" + ",".join(str(i) for i in subset_members(subset)) + "}"


def characteristic_point(lattice: DistributiveLattice, n: int, subset: int) -> tuple[int, ...]:
    """The tuple with ``top`` on ``subset`` and ``bottom`` elsewhere."""
    return tuple(lattice.top if subset >> i & 1 else lattice.bottom for i in range(n))


def carrier_elements(lattice: DistributiveLattice, carrier: Carrier) -> Sequence[int]:
    return lattice.elements if carrier is Carrier.L else bool_elements(lattice)


def in_carrier(lattice: DistributiveLattice, carrier: Carrier, x) -> bool:
    if carrier is Carrier.L:
        return x in lattice
    return isinstance(x, int) and 0 <= x <= lattice.top


@dataclass(frozen=True)
class PolynomialDNF:
    """Coefficient table of a polynomial function.

    The table may be raw; ``normalize_monotone`` gives the canonical form in
    which ``I`` contained in ``J`` implies ``coeffs[I] <= coeffs[J]``.
    """

    lattice: DistributiveLattice
    arity: int
    coeffs: tuple[int, ...]
    carrier: Carrier = Carrier.L

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "carrier", Carrier(self.carrier))
        if self.arity < 0 or len(self.coeffs) != 1 << self.arity:
            raise LatticeError(
                f"arity {self.arity} needs {1 << max(self.arity, 0)} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not in_carrier(self.lattice, self.carrier, c):
                raise LatticeError(f"coefficient {c!r} is not in carrier {self.carrier.value}")

    @property
    def normalized(self) -> bool:
        return is_monotone_table(self.coeffs, self.arity)

    def __call__(self, *point: int) -> int:
        return evaluate(self, point)

    def coefficient(self, members: Sequence[int]) -> int:
        return self.coeffs[subset_from_members(members)]

    def to_carrier(self, carrier: Carrier) -> PolynomialDNF:
        return PolynomialDNF(self.lattice, self.arity, self.coeffs, carrier)


def is_monotone_table(coeffs: Sequence[int], n: int) -> bool:
    for subset in range(1 << n):
        for k in range(n):
            bit = 1 << k
            if not subset & bit and coeffs[subset] & ~coeffs[subset | bit]:
                return False
    return True


def evaluate(p: PolynomialDNF, x: Sequence[int]) -> int:
    if len(x) != p.arity:
        raise LatticeError(f"point of length {len(x)} given to a polynomial of arity {p.arity}")
    for v in x:
        if not in_carrier(p.lattice, p.carrier, v):
            raise LatticeError(f"{v!r} is not in carrier {p.carrier.value}")
    return _kernels.eval_dnf(p.coeffs, tuple(x), p.lattice.rank)


def normalize_table(coeffs: Sequence[int], n: int) -> tuple[int, ...]:
    out = list(coeffs)
    for k in range(n):
        bit = 1 << k
        for subset in range(1 << n):
            if subset & bit:
                out[subset] |= out[subset ^ bit]
    return tuple(out)


def normalize_monotone(p: PolynomialDNF) -> PolynomialDNF:
    """Replace each coefficient by the join of the coefficients of its subsets."""
    return PolynomialDNF(p.lattice, p.arity, normalize_table(p.coeffs, p.arity), p.carrier)


def recover_coefficients(
    black_box: Callable[..., int],
    lattice: DistributiveLattice,
    n: int,
    carrier: Carrier = Carrier.L,
) -> PolynomialDNF:
    """Read the normalized DNF off a polynomial function from its values at
    the characteristic vectors ``1_I``."""
    coeffs = [black_box(*characteristic_point(lattice, n, s)) for s in subsets(n)]
    return PolynomialDNF(lattice, n, coeffs, carrier)


def functions_equal(p: PolynomialDNF, q: PolynomialDNF) -> bool:
    if p.lattice is not q.lattice or p.carrier is not q.carrier or p.arity != q.arity:
        raise LatticeError("polynomials over different carriers or of different arity")
    return normalize_table(p.coeffs, p.arity) == normalize_table(q.coeffs, q.arity)


def value_table(p: PolynomialDNF) -> list[int]:
    """Values at all points of ``carrier**n`` in ``itertools.product`` order."""
    carrier = list(carrier_elements(p.lattice, p.carrier))
    return _kernels.value_table(p.coeffs, p.arity, carrier, p.lattice.rank)


def all_points(lattice: DistributiveLattice, n: int, carrier: Carrier = Carrier.L):
    return itertools.product(carrier_elements(lattice, carrier), repeat=n)


def canonical_key(p: PolynomialDNF) -> tuple[int, ...]:
    """Sort key of the canonical solution order: the coefficient of the full
    subset is most significant and that of the empty subset varies fastest."""
    return tuple(reversed(p.coeffs))


# -- rendering ----------------------------------------------------------------


def coefficient_label(p: PolynomialDNF, c: int) -> str:
    if p.carrier is Carrier.L:
        return p.lattice.label(c)
    return p.lattice.set_notation(c)


def render_dnf(p: PolynomialDNF, indent: str = "") -> str:
    """One line per subset in binary-counter order: ``{1,3} -> label``."""
    return "\n".join(
        f"{indent}{render_subset(s)} -> {coefficient_label(p, c)}" for s, c in enumerate(p.coeffs)
    )


def render_compact(p: PolynomialDNF) -> str:
    return " ".join(f"{render_subset(s)}:{coefficient_label(p, c)}" for s, c in enumerate(p.coeffs))


def coefficient_map(p: PolynomialDNF) -> dict[str, str]:
    return {render_subset(s): coefficient_label(p, c) for s, c in enumerate(p.coeffs)}
