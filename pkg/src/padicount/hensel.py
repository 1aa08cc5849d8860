"""Lifting engines over evaluator-backed restricted series.

Three entry points: the unique one-variable lift under a unit derivative,
the unique n-variable lift under a unit Jacobian determinant, and the
fiber lift that turns one solution mod p^e into exactly p^(n-1) solutions
mod p^(e+1).

A SeriesFunction is whatever the caller can evaluate exactly at working
precision together with its partial derivatives; restrictedness (the
first-order consistency of values and partials under p-power increments)
is the caller's promise and is what makes the lifts below converge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .errors import (
    BadArgument,
    NonUnitDerivative,
    NotARoot,
    NotASolutionModPe,
    NoUnitPartial,
    PadicError,
    SingularJacobian,
)
from .residues import PrimePowerContext, Residue, exact_div_p, inv


@dataclass(frozen=True)
class SeriesFunction:
    """A restricted-series map given by evaluators.

    ``eval`` and each entry of ``partials`` take ``arity`` residues at
    working precision and must return values exact mod p^W.
    """

    arity: int
    eval: Callable[..., Residue]
    partials: tuple[Callable[..., Residue], ...]

    def __post_init__(self):
        if self.arity < 1:
            raise BadArgument(f"arity must be >= 1, got {self.arity}")
        if len(self.partials) != self.arity:
            raise BadArgument(
                f"expected {self.arity} partials, got {len(self.partials)}"
            )


@dataclass(frozen=True)
class LiftResult:
    solution: tuple[Residue, ...]  # canonical mod p^e_target
    start: tuple[Residue, ...]  # canonical mod p
    iterations: int


_EXTRA_NEWTON_STEPS = 4  # quadratic convergence makes this cap generous


def lift_one(f: SeriesFunction, a: Residue, e_target: int) -> LiftResult:
    """The unique root x = a (mod p) of f, computed mod p^e_target.

    Requires f(a) = 0 (mod p) and f'(a) a unit; Newton steps at working
    precision until the residual vanishes mod p^e_target.
    """
    if f.arity != 1:
        raise BadArgument("lift_one needs a one-variable function")
    ctx = a.ctx
    if not 1 <= e_target <= ctx.W:
        raise BadArgument(f"e_target {e_target} outside [1, {ctx.W}]")
    start = Residue(a.value % ctx.p, ctx)
    if f.eval(start).value % ctx.p != 0:
        raise NotARoot(f"{start.value} does not solve the equation mod {ctx.p}")
    if not f.partials[0](start).is_unit:
        raise NonUnitDerivative(f"derivative vanishes mod {ctx.p} at {start.value}")
    target = ctx.p**e_target
    x = start
    iterations = 0
    residual = f.eval(x)
    while residual.value % target != 0:
        if iterations > ctx.W + _EXTRA_NEWTON_STEPS:
            raise PadicError("Newton did not converge; evaluators are not restricted")
        x = x - residual * inv(f.partials[0](x))
        residual = f.eval(x)
        iterations += 1
    return LiftResult(
        solution=(Residue(x.value, ctx, e_target),),
        start=(Residue(start.value, ctx, 1),),
        iterations=iterations,
    )


def _det_mod_p(matrix: list[list[int]], p: int) -> int:
    """Determinant over GF(p) by elimination."""
    n = len(matrix)
    m = [[entry % p for entry in row] for row in matrix]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv_piv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            factor = m[r][col] * inv_piv % p
            for c in range(col, n):
                m[r][c] = (m[r][c] - factor * m[col][c]) % p
    return det % p


def _solve_unit_system(
    ctx: PrimePowerContext, matrix: list[list[int]], rhs: list[int]
) -> list[int]:
    """Solve A x = b mod p^W by Gauss-Jordan with unit pivots."""
    n = len(rhs)
    mod = ctx.modulus
    m = [[entry % mod for entry in row] + [b % mod] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % ctx.p), None)
        if pivot is None:
            raise SingularJacobian("no unit pivot available")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
        inv_piv = pow(m[col][col], -1, mod)
        m[col] = [entry * inv_piv % mod for entry in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [(x - factor * y) % mod for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def lift_system(
    fs: Sequence[SeriesFunction], a: Sequence[Residue], e_target: int
) -> LiftResult:
    """The unique simultaneous root of n functions in n unknowns.

    Requires every f_j(a) = 0 (mod p) and a unit Jacobian determinant at a;
    multivariate Newton with the linear solves done exactly mod p^W.
    """
    n = len(fs)
    if n < 1 or len(a) != n:
        raise BadArgument("need as many start coordinates as equations")
    if any(f.arity != n for f in fs):
        raise BadArgument(f"every function must have arity {n}")
    ctx = a[0].ctx
    if not 1 <= e_target <= ctx.W:
        raise BadArgument(f"e_target {e_target} outside [1, {ctx.W}]")
    start = tuple(Residue(ai.value % ctx.p, ctx) for ai in a)
    residuals = [f.eval(*start) for f in fs]
    if any(r.value % ctx.p for r in residuals):
        raise NotARoot("start point does not solve the system mod p")
    jacobian = [[f.partials[i](*start).value for i in range(n)] for f in fs]
    if _det_mod_p(jacobian, ctx.p) == 0:
        raise SingularJacobian("Jacobian determinant vanishes mod p")
    target = ctx.p**e_target
    x = list(start)
    iterations = 0
    residuals = [f.eval(*x) for f in fs]
    while any(r.value % target for r in residuals):
        if iterations > ctx.W + _EXTRA_NEWTON_STEPS:
            raise PadicError("Newton did not converge; evaluators are not restricted")
        jacobian = [[f.partials[i](*x).value for i in range(n)] for f in fs]
        delta = _solve_unit_system(ctx, jacobian, [r.value for r in residuals])
        x = [xi - Residue(d, ctx) for xi, d in zip(x, delta)]
        residuals = [f.eval(*x) for f in fs]
        iterations += 1
    return LiftResult(
        solution=tuple(Residue(xi.value, ctx, e_target) for xi in x),
        start=tuple(Residue(s.value, ctx, 1) for s in start),
        iterations=iterations,
    )


def fiber_lift(
    f: SeriesFunction,
    points: Sequence[tuple[int, ...]],
    level: int,
    ctx: PrimePowerContext,
) -> list[tuple[int, ...]]:
    """All lifts mod p^(level+1) of solution points given mod p^level.

    Each input point must solve f = 0 (mod p^level) and have a unit partial
    derivative; it then lifts in exactly p^(arity-1) ways, one for every
    choice of increments in the non-pivot coordinates.  Output coordinates
    are canonical mod p^(level+1) and the list is sorted.
    """
    n = f.arity
    if level < 1 or level + 1 > ctx.W:
        raise BadArgument(f"level {level} outside [1, {ctx.W - 1}]")
    p = ctx.p
    step = p**level
    out: list[tuple[int, ...]] = []
    for pt in points:
        if len(pt) != n:
            raise BadArgument(f"point {pt} does not have {n} coordinates")
        coords = tuple(c % step for c in pt)
        embedded = tuple(Residue(c, ctx) for c in coords)
        fx = f.eval(*embedded)
        if fx.value % step != 0:
            raise NotASolutionModPe(f"{coords} does not solve f mod {p}^{level}")
        partials = [f.partials[i](*embedded).value % p for i in range(n)]
        pivot = next((i for i, d in enumerate(partials) if d), None)
        if pivot is None:
            raise NoUnitPartial(f"all partials vanish mod {p} at {coords}")
        base = exact_div_p(fx, level).value % p
        inv_pivot = pow(partials[pivot], -1, p)
        free = [i for i in range(n) if i != pivot]
        for ts in product(range(p), repeat=n - 1):
            shift = dict(zip(free, ts))
            linear = base + sum(partials[i] * t for i, t in shift.items())
            shift[pivot] = -linear * inv_pivot % p
            out.append(
                tuple((coords[i] + step * shift[i]) % (step * p) for i in range(n))
            )
    out.sort()
    return out
