"""Interpolation of partial functions on cuboids by lattice polynomial functions.

Elements of a finite distributive lattice and of its Boolean extension are
``int`` bitmasks over the join-irreducibles; see :mod:`latinterp.order`.
"""

from latinterp._kernels import BACKEND
from latinterp.boolean import bool_join, bool_meet, cl, complement, embed, interior
from latinterp.errors import CapExceeded, InfeasibleError, LatticeError, ParseError, ProblemError
from latinterp.oracle import (
    OracleConfig,
    all_polynomial_functions,
    brute_b_interpolate,
    brute_interpolate,
)
from latinterp.order import DistributiveLattice, Poset, boolean, build_lattice, chain, downsets_of, product
from latinterp.polynomial import (
    Carrier,
    PolynomialDNF,
    evaluate,
    functions_equal,
    normalize_monotone,
    recover_coefficients,
)
from latinterp.problem import CuboidProblem
from latinterp.solver import (
    SolutionSet,
    check_iterated_star,
    check_monotone,
    check_rg,
    check_star,
    compute_bounds,
    enumerate_solutions,
    extremal_polynomials,
    goodstein,
    is_solution,
    solve,
)

__all__ = [
    "BACKEND",
    "Carrier",
    "CapExceeded",
    "CuboidProblem",
    "DistributiveLattice",
    "InfeasibleError",
    "LatticeError",
    "OracleConfig",
    "ParseError",
    "PolynomialDNF",
    "Poset",
    "ProblemError",
    "SolutionSet",
    "all_polynomial_functions",
    "bool_join",
    "bool_meet",
    "boolean",
    "brute_b_interpolate",
    "brute_interpolate",
    "build_lattice",
    "chain",
    "check_iterated_star",
    "check_monotone",
    "check_rg",
    "check_star",
    "cl",
    "complement",
    "compute_bounds",
    "downsets_of",
    "embed",
    "enumerate_solutions",
    "evaluate",
    "extremal_polynomials",
    "functions_equal",
    "goodstein",
    "interior",
    "is_solution",
    "normalize_monotone",
    "product",
    "recover_coefficients",
    "solve",
]
