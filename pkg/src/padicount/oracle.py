"""Brute-force enumerators for every counted object.

These are the independent cross-checks: exhaustive scans over the
published solution ranges using nothing but integer modular
exponentiation, sharing no code with the analytic or lifting machinery.
Deliberately naive; oversized scans are refused, never truncated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import ensure_within, resolve_budget
from .errors import BadLength, NotAUnit
from .residues import PrimePowerContext


def _order_mod_p(g: int, p: int) -> int:
    # re-derived naively on purpose: the oracle must not lean on the
    # machinery it validates
    acc = g % p
    m = 1
    while acc != 1:
        acc = acc * g % p
        m += 1
    return m


def brute_fixed_points(
    g: int, ctx: PrimePowerContext, budget: int | None = None
) -> list[int]:
    """Scan {1..p^e*m} for g^x = x (mod p^e)."""
    p, e = ctx.p, ctx.e
    if g % p == 0:
        raise NotAUnit(f"{g} is divisible by {p}")
    pe = p**e
    limit = pe * _order_mod_p(g, p)
    ensure_within(limit, resolve_budget(budget))
    return [x for x in range(1, limit + 1) if x % p and pow(g, x, pe) == x % pe]


def brute_walks(
    g: int, k: int, ctx: PrimePowerContext, budget: int | None = None
) -> list[tuple[int, ...]]:
    """Exhaust {1..p^e*m}^k against the k cyclic equations.

    The sweep prunes level by level on the chain equations, discarding
    exactly the tuples a full cartesian scan would reject; candidates for
    node i+1 are the range members congruent to g^(node_i) mod p^e.
    """
    if k < 1:
        raise BadLength(f"walk length must be >= 1, got {k}")
    p, e = ctx.p, ctx.e
    if g % p == 0:
        raise NotAUnit(f"{g} is divisible by {p}")
    pe = p**e
    m = _order_mod_p(g, p)
    limit = pe * m
    ensure_within(limit * m ** (k - 1), resolve_budget(budget))
    walks: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == k:
            if pow(g, prefix[-1], pe) == prefix[0] % pe:
                walks.append(tuple(prefix))
            return
        succ = pow(g, prefix[-1], pe)  # a unit, so never 0
        for cand in range(succ, limit + 1, pe):
            extend(prefix + [cand])

    for h in range(1, limit + 1):
        if h % p:
            extend([h])
    walks.sort()
    return walks


def brute_self_power(
    c: int, ctx: PrimePowerContext, budget: int | None = None
) -> list[int]:
    """Scan {1..p^e(p-1)} for x^x = c (mod p^e)."""
    p, e = ctx.p, ctx.e
    if c % p == 0:
        raise NotAUnit(f"{c} is divisible by {p}")
    pe = p**e
    limit = pe * (p - 1)
    ensure_within(limit, resolve_budget(budget))
    return [x for x in range(1, limit + 1) if x % p and pow(x, x, pe) == c % pe]


def brute_collisions(
    ctx: PrimePowerContext, budget: int | None = None
) -> list[tuple[int, int]]:
    """All ordered pairs over {1..p^e(p-1)}^2 with h^h = a^a (mod p^e)."""
    p, e = ctx.p, ctx.e
    pe = p**e
    limit = pe * (p - 1)
    ensure_within(limit * limit, resolve_budget(budget))
    powers = {x: pow(x, x, pe) for x in range(1, limit + 1) if x % p}
    out = [
        (h, a)
        for h, hv in powers.items()
        for a, av in powers.items()
        if hv == av
    ]
    out.sort()
    return out


@dataclass
class StandardRangeCount:
    """Solutions of g^x = x (mod p^e) with both g and x in {1..p^e},
    bucketed by the residue of g mod p."""

    p: int
    e: int
    total: int
    buckets: dict[int, int]


def brute_standard_range_count(
    ctx: PrimePowerContext, budget: int | None = None
) -> StandardRangeCount:
    """Count pairs (g, x) in {1..p^e}^2, p dividing neither, with
    g^x = x (mod p^e); powers of g are accumulated incrementally."""
    p, e = ctx.p, ctx.e
    pe = p**e
    ensure_within(pe * pe, resolve_budget(budget))
    buckets = {i: 0 for i in range(1, p)}
    for g in range(1, pe + 1):
        if g % p == 0:
            continue
        acc = 1
        hits = 0
        for x in range(1, pe + 1):
            acc = acc * g % pe  # acc == g^x mod p^e
            if acc == x and x % p:
                hits += 1
        buckets[g % p] += hits
    return StandardRangeCount(p=p, e=e, total=sum(buckets.values()), buckets=buckets)
