"""The Boolean algebra generated by a finite distributive lattice.

For a finite lattice ``L`` of downsets this is the full powerset of the
join-irreducibles: any bitmask is an element of ``B``, and exactly the
downward closed ones are (the images of) elements of ``L``.  The embedding is
therefore the identity on bitmasks.

The Boolean operations below are plain bit arithmetic, so they also accept
numpy integer arrays elementwise.
"""

from __future__ import annotations

from latinterp.errors import LatticeError
from latinterp.order import DistributiveLattice, _bits


def check_bool(lattice: DistributiveLattice, *us: int):
    for u in us:
        if not isinstance(u, int) or u < 0 or u & ~lattice.top:
            raise LatticeError(f"{u!r} is not a subset of the irreducibles of {lattice}")


def embed(lattice: DistributiveLattice, x: int) -> int:
    lattice.check(x)
    return x


def is_lattice_element(lattice: DistributiveLattice, u: int) -> bool:
    """True iff ``u`` lies in the image of ``L``, i.e. is downward closed."""
    return u in lattice.index


def bool_elements(lattice: DistributiveLattice) -> range:
    return range(lattice.top + 1)


def complement(lattice: DistributiveLattice, u):
    return lattice.top ^ u


def bool_meet(u, v):
    return u & v


def bool_join(u, v):
    return u | v


def bool_leq(u, v) -> bool:
    return not u & ~v


def cl(lattice: DistributiveLattice, u: int) -> int:
    """Least element of ``L`` above ``u``: the downward closure of its bits."""
    check_bool(lattice, u)
    down = lattice.irreducibles.down
    acc = 0
    for j in _bits(u):
        acc |= down[j]
    return acc


def interior(lattice: DistributiveLattice, u: int) -> int:
    """Greatest element of ``L`` below ``u``: the largest downset inside it."""
    check_bool(lattice, u)
    down = lattice.irreducibles.down
    acc = 0
    for j in _bits(u):
        if not down[j] & ~u:
            acc |= 1 << j
    return acc


def cl_by_meets(lattice: DistributiveLattice, u: int) -> int:
    """``cl`` as the meet of all lattice elements above ``u`` (reference form)."""
    return lattice.meet_all(x for x in lattice.elements if not u & ~x)


def interior_by_joins(lattice: DistributiveLattice, u: int) -> int:
    """``interior`` as the join of all lattice elements below ``u`` (reference form)."""
    return lattice.join_all(x for x in lattice.elements if not x & ~u)
