"""Line-oriented text formats for lattices, problems and utility profiles.

Problem file::

    # comments run to end of line
    LATTICE boolean(2)          # or: LATTICE @lattice.txt (relative path)
    LABEL top = {a,b}           # extra element names, repeatable
    ARITY 1
    BOUNDS                      # one line per coordinate: a_i b_i
    0 b
    VALUES                      # one line per subset: [i,j,...] value
    [] a
    [1] 1
    POINTS                      # optional arbitrary domain: x_1 ... x_n -> value
    0 -> a
    b -> 1
    POLY                        # optional coefficient table: [i,j,...] coefficient
    [] a
    [1] 1

A lattice file holds the ``LATTICE`` line (the keyword may be omitted) and
``LABEL`` lines.  A utility file uses ``LOCAL`` (lines ``phi_i(0_i)
phi_i(1_i)``) and ``UTILITY`` (lines ``[criteria] value``) instead of
``BOUNDS`` and ``VALUES``.  Subset indices are 1-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from latinterp.errors import LatticeError, ParseError
from latinterp.order import DistributiveLattice, build_lattice
from latinterp.polynomial import Carrier, PolynomialDNF, subset_from_members, subset_members
from latinterp.problem import CuboidProblem

HEADER_KEYS = {"LATTICE", "LABEL", "ARITY"}
BLOCK_KEYS = {"BOUNDS", "VALUES", "POINTS", "POLY", "LOCAL", "UTILITY"}


@dataclass
class ProblemFile:
    lattice_spec: str
    labels: tuple[tuple[str, str], ...]
    arity: int
    bounds: tuple[tuple[int, int], ...] | None = None
    values: tuple[int, ...] | None = None
    points: tuple[tuple[tuple[int, ...], int], ...] | None = None
    poly: tuple[int, ...] | None = None
    lattice: DistributiveLattice = field(default=None, compare=False, repr=False)

    def cuboid(self) -> CuboidProblem:
        if self.values is None:
            raise ParseError("the file has no VALUES section")
        bounds = self.bounds
        if bounds is None:
            bounds = ((self.lattice.bottom, self.lattice.top),) * self.arity
        return CuboidProblem(self.lattice, bounds, self.values)

    def domain(self) -> tuple[list[tuple[int, ...]], list[int]]:
        """The POINTS section, or the cuboid vertices when it is absent."""
        if self.points is not None:
            return [p for p, _ in self.points], [v for _, v in self.points]
        prob = self.cuboid()
        return prob.vertices(), list(prob.values)

    def polynomial(self) -> PolynomialDNF | None:
        if self.poly is None:
            return None
        return PolynomialDNF(self.lattice, self.arity, self.poly, Carrier.L)


@dataclass
class UtilityFile:
    lattice_spec: str
    labels: tuple[tuple[str, str], ...]
    arity: int
    local: tuple[tuple[int, int], ...]
    utility: tuple[int, ...]
    lattice: DistributiveLattice = field(default=None, compare=False, repr=False)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_subset(token: str, n: int, lineno: int, line: str) -> int:
    token = token.strip()
    if not (token.startswith("[") and token.endswith("]")):
        raise ParseError(f"expected a subset like [1,3], got {token!r}", lineno, line)
    members = []
    for part in token[1:-1].split(","):
        part = part.strip()
        if not part:
            continue
        if not part.isdigit() or not 1 <= int(part) <= n:
            raise ParseError(f"bad index {part!r} in subset {token}", lineno, line)
        members.append(int(part))
    if members != sorted(set(members)):
        raise ParseError(f"subset {token} must list distinct indices in increasing order", lineno, line)
    return subset_from_members(members)


class _Reader:
    def __init__(self, text: str, base_dir: str | None, lattice: DistributiveLattice | None):
        self.base_dir = base_dir or "."
        self.lattice_spec = None
        self.lattice_line = None
        self.label_lines: list[tuple[int, str, str, str]] = []
        self.arity = None
        self.blocks: dict[str, list[tuple[int, str]]] = {}
        self.headers: dict[str, tuple[int, str]] = {}
        self.override = lattice
        self._read(text)
        self.lattice = self._build_lattice()

    def _read(self, text):
        current = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = _strip(raw)
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head in HEADER_KEYS:
                current = None
                if head == "LATTICE":
                    if not rest:
                        raise ParseError("LATTICE needs a lattice spec", lineno, raw)
                    self.lattice_spec, self.lattice_line = rest, (lineno, raw)
                elif head == "LABEL":
                    name, eq, token = rest.partition("=")
                    if not eq or not name.strip() or not token.strip():
                        raise ParseError("expected LABEL name = element", lineno, raw)
                    self.label_lines.append((lineno, raw, name.strip(), token.strip()))
                else:
                    if not rest.isdigit():
                        raise ParseError(f"ARITY needs a non-negative integer, got {rest!r}", lineno, raw)
                    self.arity = int(rest)
            elif head in BLOCK_KEYS:
                if rest:
                    raise ParseError(f"unexpected text after {head}", lineno, raw)
                if head in self.blocks:
                    raise ParseError(f"duplicate section {head}", lineno, raw)
                current = head
                self.blocks[head] = []
                self.headers[head] = (lineno, raw)
            elif current is None:
                if self.lattice_spec is None and not self.blocks and self.arity is None:
                    self.lattice_spec, self.lattice_line = line, (lineno, raw)
                else:
                    raise ParseError(f"unexpected line outside a section: {head!r}", lineno, raw)
            else:
                self.blocks[current].append((lineno, raw))

    def _build_lattice(self):
        spec = self.lattice_spec
        if self.override is not None:
            lat = self.override
            spec = lat.description or repr(lat)
        else:
            if spec is None:
                raise ParseError("no LATTICE given (use a LATTICE line or --lattice)")
            lineno, raw = self.lattice_line
            if spec.startswith("@"):
                path = os.path.join(self.base_dir, spec[1:].strip())
                try:
                    with open(path, encoding="utf-8") as fh:
                        sub = _Reader(fh.read(), os.path.dirname(path), None)
                except OSError as exc:
                    raise ParseError(f"cannot read lattice file {path}: {exc.strerror}", lineno, raw) from None
                self.label_lines = sub.label_lines + self.label_lines
                lat = sub.lattice
                spec = sub.lattice_spec
            else:
                try:
                    lat = build_lattice(spec)
                except LatticeError as exc:
                    raise ParseError(str(exc), lineno, raw) from None
        self.lattice_spec = spec
        extra = {}
        for lineno, raw, name, token in self.label_lines:
            try:
                extra[name] = lat.element(token)
                lat = lat.relabel({name: extra[name]})
            except LatticeError as exc:
                raise ParseError(str(exc), lineno, raw) from None
        return lat

    def labels(self):
        return tuple((name, token) for _, _, name, token in self.label_lines)

    def element(self, token, lineno, line):
        try:
            return self.lattice.element(token)
        except LatticeError:
            raise ParseError(f"unknown element {token!r}", lineno, line) from None

    def need_arity(self):
        if self.arity is None:
            raise ParseError("missing ARITY line")
        return self.arity

    def pairs(self, key, strict=False):
        if key not in self.blocks:
            return None
        n = self.need_arity()
        rows = self.blocks[key]
        if len(rows) != n:
            raise ParseError(f"{key} needs {n} lines, got {len(rows)}", rows[-1][0] if rows else None)
        out = []
        for lineno, raw in rows:
            parts = _strip(raw).split()
            if len(parts) != 2:
                raise ParseError("expected two elements", lineno, raw)
            a, b = self.element(parts[0], lineno, raw), self.element(parts[1], lineno, raw)
            if strict and (a == b or a & ~b):
                raise ParseError(f"need a < b, got {parts[0]} and {parts[1]}", lineno, raw)
            out.append((a, b))
        return tuple(out)

    def table(self, key):
        if key not in self.blocks:
            return None
        n = self.need_arity()
        table: dict[int, int] = {}
        for lineno, raw in self.blocks[key]:
            line = _strip(raw)
            close = line.find("]")
            if close < 0:
                raise ParseError("expected [subset] element", lineno, raw)
            subset = _parse_subset(line[: close + 1], n, lineno, raw)
            token = line[close + 1 :].strip()
            if not token or len(token.split()) != 1:
                raise ParseError("expected exactly one element after the subset", lineno, raw)
            if subset in table:
                raise ParseError(f"subset {line[: close + 1]} given twice", lineno, raw)
            table[subset] = self.element(token, lineno, raw)
        if len(table) != 1 << n:
            missing = [s for s in range(1 << n) if s not in table]
            shown = "[" + ",".join(str(i) for i in subset_members(missing[0])) + "]"
            raise ParseError(f"{key} needs all {1 << n} subsets; missing {shown}", *self.headers[key])
        return tuple(table[s] for s in range(1 << n))

    def points(self):
        if "POINTS" not in self.blocks:
            return None
        n = self.need_arity()
        out = []
        seen = {}
        for lineno, raw in self.blocks["POINTS"]:
            left, arrow, right = _strip(raw).partition("->")
            coords = left.split()
            if not arrow or len(coords) != n or len(right.split()) != 1:
                raise ParseError(f"expected {n} coordinates, '->', and a value", lineno, raw)
            point = tuple(self.element(c, lineno, raw) for c in coords)
            value = self.element(right.strip(), lineno, raw)
            if point in seen:
                raise ParseError("point listed twice", lineno, raw)
            seen[point] = value
            out.append((point, value))
        return tuple(out)


def parse_problem(text: str, base_dir: str | None = None, lattice: DistributiveLattice | None = None) -> ProblemFile:
    r = _Reader(text, base_dir, lattice)
    unknown = set(r.blocks) - {"BOUNDS", "VALUES", "POINTS", "POLY"}
    if unknown:
        raise ParseError(f"section {sorted(unknown)[0]} does not belong in a problem file")
    n = r.need_arity()
    bounds = r.pairs("BOUNDS", strict=True)
    return ProblemFile(
        lattice_spec=r.lattice_spec,
        labels=r.labels(),
        arity=n,
        bounds=bounds,
        values=r.table("VALUES"),
        points=r.points(),
        poly=r.table("POLY"),
        lattice=r.lattice,
    )


def parse_utility(text: str, base_dir: str | None = None, lattice: DistributiveLattice | None = None) -> UtilityFile:
    r = _Reader(text, base_dir, lattice)
    unknown = set(r.blocks) - {"LOCAL", "UTILITY"}
    if unknown:
        raise ParseError(f"section {sorted(unknown)[0]} does not belong in a utility file")
    if "LOCAL" not in r.blocks or "UTILITY" not in r.blocks:
        raise ParseError("a utility file needs LOCAL and UTILITY sections")
    return UtilityFile(
        lattice_spec=r.lattice_spec,
        labels=r.labels(),
        arity=r.need_arity(),
        local=r.pairs("LOCAL"),
        utility=r.table("UTILITY"),
        lattice=r.lattice,
    )


def load_problem(path: str, lattice: DistributiveLattice | None = None) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read(), os.path.dirname(os.path.abspath(path)), lattice)


def load_utility(path: str, lattice: DistributiveLattice | None = None) -> UtilityFile:
    with open(path, encoding="utf-8") as fh:
        return parse_utility(fh.read(), os.path.dirname(os.path.abspath(path)), lattice)


def load_lattice(path: str) -> DistributiveLattice:
    with open(path, encoding="utf-8") as fh:
        return _Reader(fh.read(), os.path.dirname(os.path.abspath(path)), None).lattice


def _subset_key(subset: int) -> str:
    return "[" + ",".join(str(i) for i in subset_members(subset)) + "]"


def render_problem(pf: ProblemFile) -> str:
    lat = pf.lattice
    out = [f"LATTICE {pf.lattice_spec}"]
    out += [f"LABEL {name} = {token}" for name, token in pf.labels]
    out.append(f"ARITY {pf.arity}")
    if pf.bounds is not None:
        out.append("BOUNDS")
        out += [f"{lat.label(a)} {lat.label(b)}" for a, b in pf.bounds]
    if pf.values is not None:
        out.append("VALUES")
        out += [f"{_subset_key(s)} {lat.label(v)}" for s, v in enumerate(pf.values)]
    if pf.points is not None:
        out.append("POINTS")
        out += [
            " ".join(lat.label(x) for x in point) + f" -> {lat.label(v)}" for point, v in pf.points
        ]
    if pf.poly is not None:
        out.append("POLY")
        out += [f"{_subset_key(s)} {lat.label(c)}" for s, c in enumerate(pf.poly)]
    return "\n".join(out) + "\n"


def problem_from_utility(uf: UtilityFile) -> ProblemFile:
    """Cuboid problem with ``a_i = phi_i(0_i)``, ``b_i = phi_i(1_i)`` and
    ``f(e_I)`` the utility of the profile that is top exactly on ``I``."""
    lat = uf.lattice
    for i, (a, b) in enumerate(uf.local, start=1):
        if a == b or a & ~b:
            raise ParseError(
                f"criterion {i}: phi({i})(0) = {lat.label(a)} is not below phi({i})(1) = {lat.label(b)}"
            )
    return ProblemFile(
        lattice_spec=uf.lattice_spec,
        labels=uf.labels,
        arity=uf.arity,
        bounds=uf.local,
        values=uf.utility,
        lattice=lat,
    )
