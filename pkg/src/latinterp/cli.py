"""Command-line front end.

Exit status: 0 success / feasible, 1 infeasible or condition violated,
2 input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from latinterp import fileformat
from latinterp.errors import CapExceeded, InfeasibleError, LatticeError, ParseError, ProblemError
from latinterp.oracle import OracleConfig, RestrictionIndex, all_polynomial_functions, brute_interpolate
from latinterp.polynomial import (
    PolynomialDNF,
    canonical_key,
    coefficient_map,
    render_compact,
    render_dnf,
    render_subset,
    subset_members,
)
from latinterp.problem import CuboidProblem
from latinterp.solver import (
    DEFAULT_CAP,
    check_rg,
    enumerate_solutions,
    goodstein,
    solve,
)

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class Out:
    """Writes either human-readable lines or one JSON object per record."""

    machine: bool
    stream: object = None

    def __post_init__(self):
        if self.stream is None:
            self.stream = sys.stdout

    def emit(self, kind, text, **fields):
        if self.machine:
            print(json.dumps({"kind": kind, **fields}, ensure_ascii=False, sort_keys=True), file=self.stream)
        elif text is not None:
            print(text, file=self.stream)

    def text(self, line):
        if not self.machine:
            print(line, file=self.stream)


def _witness_fields(lattice, witness):
    if witness is None:
        return None
    out = {"type": type(witness).__name__}
    for name, value in vars(witness).items():
        if name in ("lower", "upper", "subset", "small", "large"):
            out[name] = subset_members(value)
        elif name in ("x", "y"):
            out[name] = [lattice.label(v) for v in value]
        elif name in ("k", "side"):
            out[name] = value
        else:
            out[name] = lattice.label(value)
    return out


def _poly_record(p: PolynomialDNF):
    return coefficient_map(p)


def _load(args) -> fileformat.ProblemFile:
    lattice = fileformat.load_lattice(args.lattice) if args.lattice else None
    path = args.problem_opt or args.problem
    if not path:
        raise ParseError("no problem file given")
    return fileformat.load_problem(path, lattice)


def cmd_solve(args, out: Out) -> int:
    pf = _load(args)
    prob = pf.cuboid()
    lat = prob.lattice
    sols = solve(prob)
    if not sols.feasible:
        reason = sols.describe_reason()
        out.emit("verdict", f"infeasible: {reason}", feasible=False, reason=reason,
                 witness=_witness_fields(lat, sols.reason))
        return EXIT_INFEASIBLE
    try:
        count = len(enumerate_solutions(prob, args.cap))
        count_text = f"{count} solution" + ("" if count == 1 else "s")
    except CapExceeded as exc:
        count = None
        count_text = f"more than {args.cap} solutions ({exc.count} interval combinations)"
    p0 = sols.canonical
    out.emit("verdict", f"feasible; {count_text}; p0: {render_compact(p0)}",
             feasible=True, solutions=count, cap=args.cap)
    out.text("intervals:")
    for s, (lo, hi) in enumerate(sols.lattice_bounds):
        out.emit("interval", f"  {render_subset(s)} -> [{lat.label(lo)}, {lat.label(hi)}]",
                 subset=render_subset(s), lo=lat.label(lo), hi=lat.label(hi))
    out.text("p0:")
    out.emit("polynomial", render_dnf(p0, "  "), role="p0", coeffs=_poly_record(p0))
    return EXIT_OK


def _emit_list(out: Out, noun: str, polys):
    n = len(polys)
    out.emit("count", f"{n} {noun}" + ("" if n == 1 else "s"), count=n)
    for p in polys:
        out.emit("polynomial", render_compact(p), role=noun, coeffs=_poly_record(p))


def cmd_enumerate(args, out: Out) -> int:
    prob = _load(args).cuboid()
    sols = solve(prob)
    polys = enumerate_solutions(prob, args.cap)
    _emit_list(out, "solution", polys)
    if not sols.feasible:
        reason = sols.describe_reason()
        out.emit("verdict", f"infeasible: {reason}", feasible=False, reason=reason)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_oracle(args, out: Out) -> int:
    pf = _load(args)
    points, values = pf.domain()
    config = OracleConfig(max_function_count=args.cap, seed=args.seed)
    polys = brute_interpolate(pf.lattice, points, values, config, n=pf.arity)
    polys.sort(key=canonical_key)
    _emit_list(out, "interpolant", polys)
    return EXIT_OK if polys else EXIT_INFEASIBLE


def cmd_goodstein(args, out: Out) -> int:
    pf = _load(args)
    if pf.values is None:
        raise ParseError("goodstein needs a VALUES section")
    try:
        p = goodstein(pf.lattice, pf.arity, pf.values)
    except InfeasibleError as exc:
        out.emit("verdict", f"not monotone: {exc.witness.describe(pf.lattice)}", feasible=False,
                 witness=_witness_fields(pf.lattice, exc.witness))
        return EXIT_INFEASIBLE
    out.emit("verdict", f"unique solution: {render_compact(p)}", feasible=True, coeffs=_poly_record(p))
    out.emit("polynomial", render_dnf(p, "  "), role="goodstein", coeffs=_poly_record(p))
    return EXIT_OK


def cmd_rg(args, out: Out) -> int:
    pf = _load(args)
    points, values = pf.domain()
    verdict = check_rg(pf.lattice, points, values)
    if verdict:
        out.emit("verdict", "RG condition: satisfied", satisfied=True, advisory=verdict.advisory)
    else:
        out.emit("verdict", f"RG condition: {verdict.witness.describe(pf.lattice)}", satisfied=False,
                 advisory=verdict.advisory, witness=_witness_fields(pf.lattice, verdict.witness))
    if verdict.advisory:
        note = "the lattice is not a chain, so this condition is advisory only"
        out.emit("note", f"note: {note}", message=note)
    return EXIT_OK if verdict else EXIT_INFEASIBLE


def cmd_eval(args, out: Out) -> int:
    pf = _load(args)
    lat = pf.lattice
    p = pf.polynomial()
    if p is None:
        p = PolynomialDNF(lat, pf.arity, pf.cuboid().values)
    if pf.points is not None:
        for point, _ in pf.points:
            v = p(*point)
            coords = " ".join(lat.label(x) for x in point)
            out.emit("value", f"{coords} -> {lat.label(v)}", point=[lat.label(x) for x in point],
                     value=lat.label(v))
        return EXIT_OK
    prob = pf.cuboid()
    for s in range(1 << pf.arity):
        v = p(*prob.vertex(s))
        key = render_subset(s).replace("{", "[").replace("}", "]")
        out.emit("value", f"{key} {lat.label(v)}", subset=render_subset(s), value=lat.label(v))
    return EXIT_OK


def cmd_from_utility(args, out: Out) -> int:
    lattice = fileformat.load_lattice(args.lattice) if args.lattice else None
    uf = fileformat.load_utility(args.utility, lattice)
    pf = fileformat.problem_from_utility(uf)
    text = fileformat.render_problem(pf)
    if out.machine:
        out.emit("problem", None, text=text)
    else:
        out.stream.write(text)
    return EXIT_OK


def cmd_crosscheck(args, out: Out) -> int:
    """Random cuboid problems on the given lattice: solver against oracle."""
    if args.lattice:
        lat = fileformat.load_lattice(args.lattice)
    else:
        lat = _load(args).lattice
    rng = random.Random(args.seed)
    n = args.arity
    pairs = [(a, b) for a in lat for b in lat if a != b and not a & ~b]
    if not pairs:
        raise ProblemError("the lattice has no pair a < b")
    config = OracleConfig(max_function_count=args.cap, seed=args.seed)
    polys = all_polynomial_functions(lat, n, config)
    indexes = {}
    feasible = bad = 0
    for _ in range(args.samples):
        bounds = tuple(rng.choice(pairs) for _ in range(n))
        probe = CuboidProblem(lat, bounds, (lat.bottom,) * (1 << n))
        if bounds not in indexes:
            indexes[bounds] = RestrictionIndex.for_cuboid(probe, polys=polys)
        if rng.random() < 0.5:
            q = rng.choice(polys)
            values = tuple(q(*v) for v in probe.vertices())
        else:
            values = tuple(rng.choice(lat.elements) for _ in range(1 << n))
        prob = CuboidProblem(lat, bounds, values)
        sols = solve(prob)
        expected = indexes[bounds].lookup(values)
        got = enumerate_solutions(prob, args.cap)
        feasible += sols.feasible
        if sols.feasible != bool(expected) or [p.coeffs for p in got] != [p.coeffs for p in expected]:
            bad += 1
    out.emit("crosscheck", f"{args.samples} cases, {feasible} feasible, {bad} discrepancies",
             cases=args.samples, feasible=feasible, discrepancies=bad, seed=args.seed)
    return EXIT_OK if bad == 0 else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lattice", metavar="FILE", help="lattice file (overrides the problem's LATTICE line)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands (default 0)")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    def problem_args(p):
        p.add_argument("problem", nargs="?", help="problem file")
        p.add_argument("--problem", dest="problem_opt", metavar="FILE", help="problem file")

    parser = argparse.ArgumentParser(
        prog="latinterp",
        description="Interpolation by lattice polynomial functions on cuboids.",
        epilog="exit status: 0 ok/feasible, 1 infeasible, 2 input error, 3 cap exceeded",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = [
        ("solve", cmd_solve, "decide solvability, print coefficient intervals and p0"),
        ("enumerate", cmd_enumerate, "list every interpolating polynomial"),
        ("oracle", cmd_oracle, "brute-force interpolants (POINTS or cuboid vertices)"),
        ("goodstein", cmd_goodstein, "unique interpolant of a monotone f on {0,1}^n"),
        ("rg", cmd_rg, "check the chain interpolation condition on the domain"),
        ("eval", cmd_eval, "evaluate POLY (default p0) on POINTS or the cuboid vertices"),
    ]
    for name, func, help_text in commands:
        p = sub.add_parser(name, parents=[common], help=help_text)
        problem_args(p)
        p.set_defaults(func=func)
    p = sub.add_parser("from-utility", parents=[common], help="cuboid problem from utility boundary values")
    p.add_argument("utility", help="utility boundary file")
    p.set_defaults(func=cmd_from_utility)
    p = sub.add_parser("crosscheck", parents=[common], help="random solver-versus-oracle comparison")
    problem_args(p)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(machine=args.format == "machine")
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, LatticeError, ProblemError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
