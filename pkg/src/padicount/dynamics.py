"""Counting layer: fixed points, rooted closed walks, two-cycles,
self-power solutions and collisions of discrete exponential maps mod p^e.

Each task is solved twice over: enumerated exactly by branch-wise lifting
(one Hensel lift per branch of the interpolated power map, assembled by
CRT into the published solution range), and counted in closed form.  The
brute-force cross-checks live in the separate oracle module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .analysis import one_unit_power, plog, teichmuller, unit_decompose
from .budget import ensure_within, resolve_budget
from .errors import BadArgument, BadLength, NotAUnit
from .hensel import SeriesFunction, fiber_lift, lift_one, lift_system
from .residues import (
    PrimePowerContext,
    Residue,
    crt_combine,
    factorize,
    inv,
    multiplicative_order,
)

# -- multiplicative functions ------------------------------------------------


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise BadArgument(f"need n >= 1, got {n}")
    out = [1]
    for q, mult in factorize(n).items():
        out = [d * q**k for d in out for k in range(mult + 1)]
    return sorted(out)


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise BadArgument(f"need n >= 1, got {n}")
    result = n
    for q in factorize(n):
        result = result // q * (q - 1)
    return result


def jordan_totient_2(n: int) -> int:
    """J_2(n) = n^2 * prod_{q | n} (1 - q^-2), exactly."""
    if n < 1:
        raise BadArgument(f"need n >= 1, got {n}")
    result = n * n
    for q in factorize(n):
        result = result // (q * q) * (q * q - 1)
    return result


def gcd3(a: int, b: int, n: int) -> int:
    if n < 1:
        raise BadArgument(f"need n >= 1, got {n}")
    return math.gcd(a, math.gcd(b, n))


# -- result types --------------------------------------------------------------


@dataclass(frozen=True)
class FixedPointSolution:
    """x in {1..p^e*m} with g^x = x (mod p^e)."""

    x: int
    branch: int  # x mod m
    residue: int  # x mod p^e


@dataclass(frozen=True)
class ClosedWalk:
    """Tuple in {1..p^e*m}^k cyclically mapped to itself by x -> g^x mod p^e."""

    nodes: tuple[int, ...]


@dataclass(frozen=True)
class CollisionPair:
    """(h, a) in {1..p^e(p-1)}^2 with h^h = a^a (mod p^e)."""

    h: int
    a: int


@dataclass
class CountReport:
    """Cross-checkable counting summary for one task.

    ``agree`` is true when every count that is present matches the others;
    callers that also compare solution sets fold that in on top.
    """

    task: str
    params: dict = field(default_factory=dict)
    formula_count: int | None = None
    enumerated_count: int | None = None
    oracle_count: int | None = None
    solutions: list | None = None
    agree: bool = True

    def refresh(self) -> "CountReport":
        counts = [
            c
            for c in (self.formula_count, self.enumerated_count, self.oracle_count)
            if c is not None
        ]
        self.agree = all(c == counts[0] for c in counts)
        return self

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "params": dict(self.params),
            "formula_count": self.formula_count,
            "enumerated_count": self.enumerated_count,
            "oracle_count": self.oracle_count,
            "solutions": self.solutions,
            "agree": self.agree,
        }


# -- series builders -----------------------------------------------------------


def _branch_fixed_point_series(
    ctx: PrimePowerContext, omega_pow: Residue, one_unit: Residue, log_u: Residue
) -> SeriesFunction:
    """f(x) = omega(g)^x0 * <g>^x - x; f'(x) = value * log<g> - 1."""

    def f(x):
        return omega_pow * one_unit_power(one_unit, x) - x

    def df(x):
        return omega_pow * one_unit_power(one_unit, x) * log_u - 1

    return SeriesFunction(1, f, (df,))


def _walk_equation(
    ctx: PrimePowerContext,
    i: int,
    k: int,
    omega_pow: Residue,
    one_unit: Residue,
    log_u: Residue,
) -> SeriesFunction:
    """f_i(h_0..h_{k-1}) = omega(g)^{x0_i} * <g>^{h_i} - h_{(i+1) mod k}."""
    succ = (i + 1) % k

    def f(*hs):
        return omega_pow * one_unit_power(one_unit, hs[i]) - hs[succ]

    def make_partial(j: int):
        def dj(*hs):
            d = Residue(0, ctx)
            if j == i:
                d = d + omega_pow * one_unit_power(one_unit, hs[i]) * log_u
            if j == succ:
                d = d - 1
            return d

        return dj

    return SeriesFunction(k, f, tuple(make_partial(j) for j in range(k)))


def _self_power_series(
    ctx: PrimePowerContext, root: int, x0: int, c: Residue
) -> SeriesFunction:
    """f(x) = omega(x)^x0 * <x>^x - c on the coset x = root (mod p).

    omega is locally constant, so on the coset it is the Teichmuller lift
    of the root; the derivative is omega^x0 * <x>^x * (log<x> + 1), a unit.
    """
    omega = teichmuller(Residue(root, ctx))
    omega_pow = omega**x0
    inv_omega = inv(omega)

    def f(x):
        return omega_pow * one_unit_power(x * inv_omega, x) - c

    def df(x):
        u = x * inv_omega
        return omega_pow * one_unit_power(u, x) * (plog(u) + 1)

    return SeriesFunction(1, f, (df,))


def _collision_series(ctx: PrimePowerContext, x0: int, y0: int) -> SeriesFunction:
    """f(h, a) = omega(h)^x0 * <h>^h - omega(a)^y0 * <a>^a on unit pairs.

    The Teichmuller part is recomputed from each point, so one series
    covers every mod-p coset and the partial in h is always a unit.
    """

    def half(v: Residue, k: int) -> Residue:
        omega = teichmuller(v)
        return omega**k * one_unit_power(v * inv(omega), v)

    def half_derivative(v: Residue, k: int) -> Residue:
        omega = teichmuller(v)
        u = v * inv(omega)
        return omega**k * one_unit_power(u, v) * (plog(u) + 1)

    def f(h, a):
        return half(h, x0) - half(a, y0)

    def dh(h, a):
        return half_derivative(h, x0)

    def da(h, a):
        return -half_derivative(a, y0)

    return SeriesFunction(2, f, (dh, da))


# -- fixed points ---------------------------------------------------------------


def fixed_points(g: int, ctx: PrimePowerContext) -> list[FixedPointSolution]:
    """All x in {1..p^e*m} with g^x = x (mod p^e); exactly one per branch.

    Per branch x0 mod m the equation reduces to x = omega(g)^x0 (mod p),
    which lifts uniquely; CRT with the branch class gives the solution in
    the published range.
    """
    p, e = ctx.p, ctx.e
    if g % p == 0:
        raise NotAUnit(f"{g} is divisible by {p}")
    gr = Residue(g, ctx)
    m = multiplicative_order(gr)
    dec = unit_decompose(gr)
    log_u = plog(dec.one_unit)
    pe = p**e
    out = []
    for x0 in range(m):
        omega_pow = dec.teichmuller**x0
        series = _branch_fixed_point_series(ctx, omega_pow, dec.one_unit, log_u)
        lifted = lift_one(series, Residue(omega_pow.value, ctx), e)
        x1 = lifted.solution[0].value
        x = crt_combine(x1, pe, x0, m)
        out.append(FixedPointSolution(x=x, branch=x % m, residue=x % pe))
    out.sort(key=lambda s: s.x)
    return out


# -- rooted closed walks ---------------------------------------------------------


def closed_walks(g: int, k: int, ctx: PrimePowerContext) -> list[ClosedWalk]:
    """The m^k rooted closed walks of length k in {1..p^e*m}^k.

    One walk per branch tuple (x0_1..x0_k): the cyclic system has Jacobian
    determinant +-1 mod p, so each lifts uniquely from its mod-p start
    h_{i+1} = omega(g)^{x0_i}.
    """
    if k < 1:
        raise BadLength(f"walk length must be >= 1, got {k}")
    p, e = ctx.p, ctx.e
    if g % p == 0:
        raise NotAUnit(f"{g} is divisible by {p}")
    gr = Residue(g, ctx)
    m = multiplicative_order(gr)
    dec = unit_decompose(gr)
    log_u = plog(dec.one_unit)
    pe = p**e
    walks = []
    for branches in product(range(m), repeat=k):
        omega_pows = [dec.teichmuller**b for b in branches]
        fs = [
            _walk_equation(ctx, i, k, omega_pows[i], dec.one_unit, log_u)
            for i in range(k)
        ]
        start = [Residue(omega_pows[(j - 1) % k].value, ctx) for j in range(k)]
        lifted = lift_system(fs, start, e)
        nodes = tuple(
            crt_combine(lifted.solution[j].value, pe, branches[j], m)
            for j in range(k)
        )
        walks.append(ClosedWalk(nodes))
    walks.sort(key=lambda w: w.nodes)
    return walks


# -- two-cycles -------------------------------------------------------------------


def two_cycle_pairs(g: int, ctx: PrimePowerContext) -> list[tuple[int, int]]:
    """Non-diagonal two-cycles under g, one canonical (min, max) per pair."""
    pe = ctx.p**ctx.e
    pairs = {
        (min(w.nodes), max(w.nodes))
        for w in closed_walks(g, 2, ctx)
        if w.nodes[0] % pe != w.nodes[1] % pe
    }
    return sorted(pairs)


def two_cycle_count_for_g(g: int, ctx: PrimePowerContext) -> CountReport:
    """(m^2 - m)/2 two-cycles for a fixed base, re-derived by enumeration."""
    m = multiplicative_order(Residue(g, ctx))
    report = CountReport(
        task="two-cycles",
        params={"p": ctx.p, "e": ctx.e, "g": g},
        formula_count=(m * m - m) // 2,
        enumerated_count=len(two_cycle_pairs(g, ctx)),
    )
    return report.refresh()


def two_cycle_total(
    ctx: PrimePowerContext, with_enumeration: bool = False
) -> CountReport:
    """Total two-cycle count over all bases g in (Z/p^e Z)^x.

    Formula: sum over m | p-1 of phi(m) * p^(e-1) * (p-1)(m-1)/2.  The
    optional enumeration recounts per base and expands each pair by the
    (p-1)/m ways its members recur in {1..p^e(p-1)}.
    """
    p, e = ctx.p, ctx.e
    formula = sum(
        euler_phi(m) * p ** (e - 1) * (p - 1) * (m - 1) // 2 for m in divisors(p - 1)
    )
    report = CountReport(
        task="two-cycles", params={"p": p, "e": e}, formula_count=formula
    )
    if with_enumeration:
        total = 0
        for g in range(1, p**e + 1):
            if g % p == 0:
                continue
            m = multiplicative_order(Residue(g, ctx))
            total += (p - 1) // m * len(two_cycle_pairs(g, ctx))
        report.enumerated_count = total
    return report.refresh()


# -- self-power solutions -----------------------------------------------------------


def self_power_count_formula(c: int, ctx: PrimePowerContext) -> int:
    """sum over d | (p-1)/m of d * phi((p-1)/d), with m = ord_p(c)."""
    p = ctx.p
    if c % p == 0:
        raise NotAUnit(f"{c} is divisible by {p}")
    m = multiplicative_order(Residue(c, ctx))
    return sum(d * euler_phi((p - 1) // d) for d in divisors((p - 1) // m))


def self_power_solutions(
    c: int, ctx: PrimePowerContext
) -> tuple[list[int], CountReport]:
    """All x in {1..p^e(p-1)}, p not dividing x, with x^x = c (mod p^e).

    Branches run over x0 mod p-1; a branch contributes its gcd(x0, p-1)
    mod-p roots of x^x0 = c exactly when that gcd divides (p-1)/ord_p(c),
    and each root lifts uniquely (the derivative is a unit).
    """
    p, e = ctx.p, ctx.e
    if c % p == 0:
        raise NotAUnit(f"{c} is divisible by {p}")
    m = multiplicative_order(Residue(c, ctx))
    quota = (p - 1) // m
    pe = p**e
    c_res = Residue(c, ctx)
    xs = []
    for x0 in range(p - 1):
        d = math.gcd(x0, p - 1)
        if quota % d != 0:
            continue  # c is not an x0-th power mod p: no solutions on this branch
        roots = [r for r in range(1, p) if pow(r, x0, p) == c % p]
        for root in roots:
            series = _self_power_series(ctx, root, x0, c_res)
            lifted = lift_one(series, Residue(root, ctx), e)
            xs.append(crt_combine(lifted.solution[0].value, pe, x0, p - 1))
    xs.sort()
    report = CountReport(
        task="self-power",
        params={"p": p, "e": e, "c": c},
        formula_count=self_power_count_formula(c, ctx),
        enumerated_count=len(xs),
    )
    return xs, report.refresh()


# -- collisions -----------------------------------------------------------------------


def collision_count_formula(ctx: PrimePowerContext) -> CountReport:
    """|C_e| = p^(e-1) * (p-1) * sum over d | p-1 of d * J_2((p-1)/d)."""
    p, e = ctx.p, ctx.e
    base = (p - 1) * sum(d * jordan_totient_2((p - 1) // d) for d in divisors(p - 1))
    report = CountReport(
        task="collisions",
        params={"p": p, "e": e},
        formula_count=p ** (e - 1) * base,
    )
    return report.refresh()


def collision_enumerate(
    ctx: PrimePowerContext, budget: int | None = None
) -> list[CollisionPair]:
    """Every (h, a) in {1..p^e(p-1)}^2, p dividing neither, with h^h = a^a
    (mod p^e), including the diagonal.

    Per branch pair (x0, y0) mod p-1 the mod-p solutions are the unit pairs
    with h^x0 = a^y0, which number (p-1)*gcd(x0, y0, p-1); each then climbs
    one level at a time through p-sized fibers before CRT assembly.
    """
    p, e = ctx.p, ctx.e
    ensure_within((p**e * (p - 1)) ** 2, resolve_budget(budget))
    pe = p**e
    pairs = []
    for x0 in range(p - 1):
        for y0 in range(p - 1):
            series = _collision_series(ctx, x0, y0)
            points = [
                (h, a)
                for h in range(1, p)
                for a in range(1, p)
                if pow(h, x0, p) == pow(a, y0, p)
            ]
            for level in range(1, e):
                points = fiber_lift(series, points, level, ctx)
            for h1, a1 in points:
                pairs.append(
                    CollisionPair(
                        h=crt_combine(h1, pe, x0, p - 1),
                        a=crt_combine(a1, pe, y0, p - 1),
                    )
                )
    pairs.sort(key=lambda cp: (cp.h, cp.a))
    return pairs
