"""Finite posets and finite distributive lattices.

A finite distributive lattice is stored through its poset of join-irreducibles
(Birkhoff representation): every element is the downset of irreducibles lying
below it, encoded as an ``int`` bitmask where bit ``j`` stands for irreducible
``j``.  Meet and join are bitwise AND and OR.
"""

from __future__ import annotations

import graphlib
import re
import string
from collections.abc import Iterable, Iterator, Mapping, Sequence

from latinterp.errors import LatticeError

MAX_IRREDUCIBLES = 20
MAX_ELEMENTS = 2**20

_NAME_RE = re.compile(r"^[A-Za-z0-9_.:'+-]+$")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset given by cover pairs, stored as the full order relation.

    ``down[j]`` is the bitmask of all elements ``<= j``; ``leq(i, j)`` tests
    bit ``i`` of ``down[j]``.
    """

    __slots__ = ("names", "covers", "down", "up")

    def __init__(self, names: Sequence[str], covers: Iterable[tuple[int, int]] = ()):
        names = tuple(str(x) for x in names)
        if len(set(names)) != len(names):
            raise LatticeError(f"duplicate element names in poset: {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise LatticeError(f"invalid element name {name!r}")
        size = len(names)
        covers = tuple(sorted({(int(lo), int(hi)) for lo, hi in covers}))
        preds: dict[int, set[int]] = {j: set() for j in range(size)}
        for lo, hi in covers:
            if not (0 <= lo < size and 0 <= hi < size):
                raise LatticeError(f"cover pair {(lo, hi)} out of range")
            preds[hi].add(lo)
        sorter = graphlib.TopologicalSorter(preds)
        try:
            order = list(sorter.static_order())
        except graphlib.CycleError as exc:
            cycle = " < ".join(names[j] for j in exc.args[1])
            raise LatticeError(f"cover pairs contain a cycle: {cycle}") from None
        down = [0] * size
        for j in order:
            mask = 1 << j
            for lo in preds[j]:
                mask |= down[lo]
            down[j] = mask
        up = [0] * size
        for j in range(size):
            for i in _bits(down[j]):
                up[i] |= 1 << j
        self.names = names
        self.covers = covers
        self.down = tuple(down)
        self.up = tuple(up)
        self._check_order()

    def _check_order(self):
        for j, mask in enumerate(self.down):
            if not mask >> j & 1:
                raise LatticeError("order relation is not reflexive")
            for i in _bits(mask):
                if i != j and self.down[i] >> j & 1:
                    raise LatticeError("order relation is not antisymmetric")
                if self.down[i] & ~mask:
                    raise LatticeError("order relation is not transitive")

    @classmethod
    def from_names(cls, names: Sequence[str], covers: Iterable[tuple[str, str]] = ()) -> Poset:
        """Build a poset from element names and ``(lower, upper)`` name pairs."""
        names = list(names)
        pos = {name: i for i, name in enumerate(names)}
        try:
            pairs = [(pos[lo], pos[hi]) for lo, hi in covers]
        except KeyError as exc:
            raise LatticeError(f"unknown poset element {exc.args[0]!r}") from None
        return cls(names, pairs)

    @property
    def size(self) -> int:
        return len(self.names)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def is_chain(self) -> bool:
        return all(
            self.leq(i, j) or self.leq(j, i)
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def is_downset(self, mask: int) -> bool:
        if mask < 0 or mask >> self.size:
            return False
        return all(not self.down[j] & ~mask for j in _bits(mask))

    def downsets(self, limit: int = MAX_ELEMENTS) -> list[int]:
        """All downsets as bitmasks, in increasing integer order."""
        preds = {j: {i for i in _bits(self.down[j]) if i != j} for j in range(self.size)}
        result = [0]
        for j in graphlib.TopologicalSorter(preds).static_order():
            below = self.down[j] & ~(1 << j)
            result += [m | 1 << j for m in result if not below & ~m]
            if len(result) > limit:
                raise LatticeError(
                    f"lattice has more than {limit} elements; raise the element cap"
                )
        result.sort()
        return result

    def __repr__(self):
        pairs = ", ".join(f"{self.names[a]}<{self.names[b]}" for a, b in self.covers)
        return f"Poset({list(self.names)}; {pairs})"


class DistributiveLattice:
    """The lattice of downsets of a finite poset of join-irreducibles.

    Elements are ``int`` bitmasks over the irreducibles.  Public operations
    check membership; the bitwise forms (``x & y``, ``x | y``) are the same
    operations without checks.
    """

    def __init__(
        self,
        irreducibles: Poset,
        labels: Mapping[int, str] | None = None,
        *,
        max_irreducibles: int = MAX_IRREDUCIBLES,
        max_elements: int = MAX_ELEMENTS,
        description: str | None = None,
        default_labels: Mapping[int, str] | None = None,
    ):
        if irreducibles.size > max_irreducibles:
            raise LatticeError(
                f"{irreducibles.size} join-irreducibles exceed the cap of {max_irreducibles}"
            )
        self.irreducibles = irreducibles
        self.elements: tuple[int, ...] = tuple(irreducibles.downsets(max_elements))
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.bottom = 0
        self.top = (1 << irreducibles.size) - 1
        self.description = description
        if default_labels is not None:
            default = {x: default_labels[x] for x in self.elements}
        else:
            default = {x: self._default_label(x) for x in self.elements}
        if len(set(default.values())) != len(default):
            default = {x: self.set_notation(x) for x in self.elements}
        self._labels = dict(default)
        self._by_label = {v: k for k, v in default.items()}
        for x, name in (labels or {}).items():
            self._add_label(x, name)

    def _add_label(self, x: int, name: str):
        if x not in self.index:
            raise LatticeError(f"cannot label {self.set_notation(x)}: not a downset")
        if not _NAME_RE.match(name) or name.startswith("{"):
            raise LatticeError(f"invalid label {name!r}")
        owner = self._by_label.get(name)
        if owner is not None and owner != x:
            raise LatticeError(f"label {name!r} already names {self.set_notation(owner)}")
        self._labels[x] = name
        self._by_label[name] = x

    def _default_label(self, x: int) -> str:
        if x == 0:
            return "0"
        down = self.irreducibles.down
        maxima = [j for j in _bits(x) if not any(k != j and down[k] >> j & 1 for k in _bits(x))]
        if len(maxima) == 1:
            return self.irreducibles.names[maxima[0]]
        if x == self.top:
            return "1"
        return "|".join(self.irreducibles.names[j] for j in maxima)

    def relabel(self, labels: Mapping[str, int]) -> DistributiveLattice:
        """A copy of this lattice with extra display labels (``name -> element``)."""
        new = DistributiveLattice.__new__(DistributiveLattice)
        new.__dict__.update(self.__dict__)
        new._labels = dict(self._labels)
        new._by_label = dict(self._by_label)
        for name, x in labels.items():
            new._add_label(x, name)
        return new

    # -- size and membership ------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        """Number of join-irreducibles."""
        return self.irreducibles.size

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and x in self.index

    def all_elements(self) -> tuple[int, ...]:
        return self.elements

    def is_chain(self) -> bool:
        return self.irreducibles.is_chain()

    def check(self, *xs: int):
        for x in xs:
            if x not in self:
                raise LatticeError(f"{x!r} is not an element of {self}")

    # -- operations ---------------------------------------------------------

    def meet(self, x: int, y: int) -> int:
        self.check(x, y)
        return x & y

    def join(self, x: int, y: int) -> int:
        self.check(x, y)
        return x | y

    def leq(self, x: int, y: int) -> bool:
        self.check(x, y)
        return not x & ~y

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            self.check(x)
            acc &= x
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            self.check(x)
            acc |= x
        return acc

    def principal(self, j: int) -> int:
        """The join-irreducible element whose downset is generated by ``j``."""
        return self.irreducibles.down[j]

    # -- labels -------------------------------------------------------------

    def label(self, x: int) -> str:
        try:
            return self._labels[x]
        except KeyError:
            return self.set_notation(x)

    def set_notation(self, mask: int) -> str:
        return "{" + ",".join(self.irreducibles.names[j] for j in _bits(mask)) + "}"

    def parse_set(self, token: str) -> int:
        """Parse ``{x,y}`` irreducible-set notation into a bitmask (any subset)."""
        inner = token.strip()
        if not (inner.startswith("{") and inner.endswith("}")):
            raise LatticeError(f"not a set of irreducibles: {token!r}")
        pos = {name: i for i, name in enumerate(self.irreducibles.names)}
        mask = 0
        for part in inner[1:-1].split(","):
            part = part.strip()
            if not part:
                continue
            if part not in pos:
                raise LatticeError(f"unknown irreducible {part!r} in {token!r}")
            mask |= 1 << pos[part]
        return mask

    def element(self, token: str) -> int:
        """Resolve a label or ``{...}`` downset notation to an element."""
        token = token.strip()
        if token in self._by_label:
            return self._by_label[token]
        if token.startswith("{"):
            mask = self.parse_set(token)
            if mask not in self.index:
                raise LatticeError(f"{token} is not downward closed")
            return mask
        raise LatticeError(f"unknown element label {token!r}")

    def labels(self) -> dict[str, int]:
        """Every accepted label, including defaults that were overridden."""
        return dict(self._by_label)

    def __repr__(self):
        desc = self.description or repr(self.irreducibles)
        return f"<DistributiveLattice {desc}: {self.size} elements>"


# -- constructors -------------------------------------------------------------


def chain(k: int, **limits) -> DistributiveLattice:
    """The ``k``-element chain ``0 < 1 < ... < k-1``."""
    if k < 1:
        raise LatticeError("a chain needs at least one element")
    names = [str(i) for i in range(1, k)]
    covers = [(i, i + 1) for i in range(k - 2)]
    return DistributiveLattice(Poset(names, covers), description=f"chain({k})", **limits)


def _atom_names(m: int) -> list[str]:
    if m <= 26:
        return list(string.ascii_lowercase[:m])
    return [f"a{i}" for i in range(1, m + 1)]


def boolean(m: int, names: Sequence[str] | None = None, **limits) -> DistributiveLattice:
    """The Boolean lattice with ``m`` atoms (``2**m`` elements)."""
    if m < 0:
        raise LatticeError("negative number of atoms")
    names = list(names) if names is not None else _atom_names(m)
    if len(names) != m:
        raise LatticeError(f"boolean({m}) needs {m} atom names, got {len(names)}")
    return DistributiveLattice(Poset(names), description=f"boolean({m})", **limits)


def product(*factors: DistributiveLattice, **limits) -> DistributiveLattice:
    """Direct product; irreducibles are the disjoint union of the factors'."""
    if not factors:
        raise LatticeError("product of no lattices")
    names, covers, offsets = [], [], []
    for c, lat in enumerate(factors):
        off = len(names)
        offsets.append(off)
        names += [f"{c + 1}:{name}" for name in lat.irreducibles.names]
        covers += [(off + a, off + b) for a, b in lat.irreducibles.covers]
    poset = Poset(names, covers)
    desc = "product(" + ", ".join(f.description or "?" for f in factors) + ")"
    lat = DistributiveLattice(poset, description=desc, **limits)
    labels = {}
    for x in lat.elements:
        parts = []
        for f, off in zip(factors, offsets):
            parts.append(f.label(x >> off & f.top))
        labels[x] = "(" + ",".join(parts) + ")"
    return DistributiveLattice(poset, description=desc, default_labels=labels, **limits)


def downsets_of(names: Sequence[str], covers: Iterable[tuple[str, str]] = (), **limits) -> DistributiveLattice:
    """Lattice of downsets of the poset given by names and ``(lower, upper)`` covers."""
    poset = Poset.from_names(names, covers)
    items = list(poset.names) + [f"{poset.names[a]}<{poset.names[b]}" for a, b in poset.covers]
    return DistributiveLattice(poset, description="poset(" + ", ".join(items) + ")", **limits)


# -- text form ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<punct>[(),<])|(?P<word>[A-Za-z0-9_.:'+-]+))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise LatticeError(f"unexpected character {text[pos]!r} in lattice spec {text!r}")
        tokens.append(m.group("punct") or m.group("word"))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _SpecParser:
    def __init__(self, text, limits):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.limits = limits

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise LatticeError(f"unexpected end of lattice spec {self.text!r}")
        if expected is not None and tok != expected:
            raise LatticeError(f"expected {expected!r} but found {tok!r} in {self.text!r}")
        self.pos += 1
        return tok

    def integer(self):
        tok = self.take()
        if not tok.isdigit():
            raise LatticeError(f"expected an integer but found {tok!r}")
        return int(tok)

    def parse(self):
        lat = self.expr()
        if self.peek() is not None:
            raise LatticeError(f"trailing input {self.peek()!r} in lattice spec")
        return lat

    def expr(self):
        head = self.take()
        self.take("(")
        if head == "chain":
            k = self.integer()
            self.take(")")
            return chain(k, **self.limits)
        if head == "boolean":
            m = self.integer()
            names = []
            while self.peek() == ",":
                self.take(",")
                names.append(self.take())
            self.take(")")
            return boolean(m, names or None, **self.limits)
        if head == "product":
            factors = [self.expr()]
            while self.peek() == ",":
                self.take(",")
                factors.append(self.expr())
            self.take(")")
            return product(*factors, **self.limits)
        if head == "poset":
            names, covers = [], []
            while True:
                run = [self.take()]
                while self.peek() == "<":
                    self.take("<")
                    run.append(self.take())
                for name in run:
                    if name not in names:
                        names.append(name)
                covers += list(zip(run, run[1:]))
                if self.peek() != ",":
                    break
                self.take(",")
            self.take(")")
            return downsets_of(names, covers, **self.limits)
        raise LatticeError(f"unknown lattice constructor {head!r}")


def build_lattice(spec: str | DistributiveLattice, **limits) -> DistributiveLattice:
    """Build a lattice from its text form.

    Grammar::

        chain(K) | boolean(M[, name...]) | product(SPEC, SPEC, ...)
        | poset(ITEM, ...)   where ITEM is a name or a chain  x<y<...

    >>> build_lattice("poset(x<y, x<z)").size
    5
    """
    if isinstance(spec, DistributiveLattice):
        return spec
    return _SpecParser(spec, limits).parse()
