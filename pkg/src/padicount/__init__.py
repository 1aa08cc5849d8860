"""Exact counting of fixed points, cycles and collisions of discrete
exponential maps modulo odd prime powers, via Teichmuller decomposition
and Hensel lifting, cross-validated against closed-form counts and
brute-force scans."""

__version__ = "0.1.0"

from .analysis import (
    BranchedPower,
    UnitDecomposition,
    branched_power,
    evaluate,
    evaluate_full,
    one_unit_power,
    pexp,
    plog,
    teichmuller,
    unit_decompose,
)
from .dynamics import (
    ClosedWalk,
    CollisionPair,
    CountReport,
    FixedPointSolution,
    closed_walks,
    collision_count_formula,
    collision_enumerate,
    euler_phi,
    fixed_points,
    gcd3,
    jordan_totient_2,
    self_power_solutions,
    two_cycle_count_for_g,
    two_cycle_total,
)
from .errors import PadicError
from .hensel import LiftResult, SeriesFunction, fiber_lift, lift_one, lift_system
from .residues import (
    PrimePowerContext,
    Residue,
    crt_combine,
    exact_div_p,
    inv,
    make_context,
    multiplicative_order,
    pow_mod,
    valuation,
)

__all__ = [
    "BranchedPower",
    "ClosedWalk",
    "CollisionPair",
    "CountReport",
    "FixedPointSolution",
    "LiftResult",
    "PadicError",
    "PrimePowerContext",
    "Residue",
    "SeriesFunction",
    "UnitDecomposition",
    "__version__",
    "branched_power",
    "closed_walks",
    "collision_count_formula",
    "collision_enumerate",
    "crt_combine",
    "euler_phi",
    "evaluate",
    "evaluate_full",
    "exact_div_p",
    "fiber_lift",
    "fixed_points",
    "gcd3",
    "inv",
    "jordan_totient_2",
    "lift_one",
    "lift_system",
    "make_context",
    "multiplicative_order",
    "one_unit_power",
    "pexp",
    "plog",
    "pow_mod",
    "self_power_solutions",
    "teichmuller",
    "two_cycle_count_for_g",
    "two_cycle_total",
    "unit_decompose",
    "valuation",
]
