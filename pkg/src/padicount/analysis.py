"""The analytic layer over Z/p^W Z.

Provides the Teichmuller character and one-unit decomposition of units,
truncated p-adic logarithm/exponential, and the branched interpolation
f(x) = omega(g)^x0 * <g>^x of x -> g^x, which is what turns congruence
counting into root finding.

The series are evaluated with the p-power of each term split off as an
exact integer factor, so every computed term is exact at working precision
and the only approximation is dropping terms whose valuation provably
reaches W.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadBranchModulus, NotAUnit, NotOneUnit, OutsideConvergenceDomain
from .residues import Residue, inv


def _floor_log(base: int, n: int) -> int:
    """Largest k with base^k <= n (n >= 1)."""
    k, acc = 0, base
    while acc <= n:
        acc *= base
        k += 1
    return k


def log_term_count(p: int, target: int) -> int:
    """Index of the last log-series term whose valuation can be < target.

    Term n of log(1 + t) with v(t) >= 1 has valuation >= n - v_p(n), and
    n - floor(log_p n) is a non-decreasing lower bound for that.
    """
    n = 1
    while n - _floor_log(p, n) < target:
        n += 1
    return n - 1


def exp_term_count(p: int, target: int) -> int:
    """Index of the last exp-series term whose valuation can be < target.

    v_p(n!) <= (n - 1)/(p - 1), so term n of exp(z) with v(z) >= 1 has
    valuation >= n - floor((n - 1)/(p - 1)), again non-decreasing in n.
    """
    n = 1
    while n - (n - 1) // (p - 1) < target:
        n += 1
    return n - 1


def series_term_bound(p: int, target: int) -> int:
    """Terms of either series that can matter below precision p^target;
    used to size the default context guard."""
    return max(log_term_count(p, target), exp_term_count(p, target))


def teichmuller(x: Residue) -> Residue:
    """The unique (p-1)-st root of unity congruent to x mod p.

    Computed by iterating y -> y^p from x: each step gains at least one
    digit of agreement with the limit, so the iteration stabilizes within
    prec steps.
    """
    if not x.is_unit:
        raise NotAUnit(f"{x.value} is divisible by {x.p}")
    mod = x.prec_modulus
    y = x.value % mod
    for _ in range(x.prec + 1):
        y_next = pow(y, x.p, mod)
        if y_next == y:
            return Residue(y, x.ctx, x.prec)
        y = y_next
    raise AssertionError("Teichmuller iteration failed to stabilize")


@dataclass(frozen=True)
class UnitDecomposition:
    """x = teichmuller * one_unit with teichmuller^(p-1) = 1 and
    one_unit = 1 (mod p)."""

    teichmuller: Residue
    one_unit: Residue


def unit_decompose(x: Residue) -> UnitDecomposition:
    omega = teichmuller(x)
    return UnitDecomposition(teichmuller=omega, one_unit=x * inv(omega))


def plog(u: Residue) -> Residue:
    """Truncated p-adic logarithm of a one-unit; exact mod p^prec.

    Term n is computed as p^(n - v_p(n)) * ((u-1)/p)^n * unit-inverse, so
    the divisions by n cost no precision; the result has valuation >= 1.
    """
    p = u.p
    if u.value % p != 1:
        raise NotOneUnit(f"{u.value} is not 1 mod {p}")
    mod = u.prec_modulus
    y = ((u.value - 1) % mod) // p
    total = 0
    ypow = 1
    sign = 1
    for n in range(1, log_term_count(p, u.prec) + 1):
        ypow = ypow * y % mod
        j, unit = 0, n
        while unit % p == 0:
            unit //= p
            j += 1
        term = p ** (n - j) * ypow % mod * pow(unit, -1, mod) % mod
        total = (total + sign * term) % mod
        sign = -sign
    return Residue(total, u.ctx, u.prec)


def pexp(z: Residue) -> Residue:
    """Truncated p-adic exponential; the input must have valuation >= 1.

    Same factored evaluation as plog: term n carries p^(n - v_p(n!)) as an
    exact factor, so the result is exact mod p^prec and is a one-unit.
    """
    p = z.p
    if z.value % p != 0:
        raise OutsideConvergenceDomain(f"{z.value} has valuation 0")
    mod = z.prec_modulus
    y = z.value // p
    total = 1
    ypow = 1
    fact_val = 0  # v_p(n!)
    fact_unit = 1  # unit part of n! mod p^prec
    for n in range(1, exp_term_count(p, z.prec) + 1):
        ypow = ypow * y % mod
        j, unit = 0, n
        while unit % p == 0:
            unit //= p
            j += 1
        fact_val += j
        fact_unit = fact_unit * unit % mod
        term = p ** (n - fact_val) * ypow % mod * pow(fact_unit, -1, mod) % mod
        total = (total + term) % mod
    return Residue(total, z.ctx, z.prec)


def one_unit_power(u: Residue, exponent) -> Residue:
    """<u>^x for a one-unit u, exact at working precision.

    Powers of one-units mod p^prec depend only on the exponent mod
    p^(prec-1) (raising a one-unit to a p^k-th power lands it in
    1 + p^(k+1) Z), so a reduced square-and-multiply suffices and agrees
    with exp(x * log u).
    """
    p = u.p
    if u.value % p != 1:
        raise NotOneUnit(f"{u.value} is not 1 mod {p}")
    x = exponent.value if isinstance(exponent, Residue) else int(exponent)
    if u.prec <= 1:
        return Residue(1, u.ctx, u.prec)
    red = x % p ** (u.prec - 1)
    return Residue(pow(u.value, red, u.prec_modulus), u.ctx, u.prec)


@dataclass(frozen=True)
class BranchedPower:
    """The branch-x0 interpolation x -> omega(g)^x0 * <g>^x of x -> g^x.

    Fixing the branch x0 mod m (m a multiple of ord_p(g) dividing p-1)
    makes the map a function of a p-adic exponent; it agrees with g^x on
    every integer x = x0 (mod m).
    """

    base: Residue
    branch: int
    branch_modulus: int
    omega_pow: Residue  # omega(g)^x0
    one_unit: Residue  # <g>
    log_one_unit: Residue  # log <g>, valuation >= 1

    def value_at(self, x) -> Residue:
        """omega(g)^x0 * <g>^x at full working precision."""
        return self.omega_pow * one_unit_power(self.one_unit, x)

    def derivative_at(self, x) -> Residue:
        """d/dx of the branch function: value_at(x) * log<g>."""
        return self.value_at(x) * self.log_one_unit


def branched_power(g: Residue, x0: int, m: int) -> BranchedPower:
    """Precompute the branch function for base g, branch x0 mod m."""
    if not g.is_unit:
        raise NotAUnit(f"{g.value} is divisible by {g.p}")
    p = g.p
    if m < 1 or (p - 1) % m != 0:
        raise BadBranchModulus(f"branch modulus {m} does not divide {p - 1}")
    if pow(g.value, m, p) != 1:
        raise BadBranchModulus(f"ord_p({g.value}) does not divide {m}")
    dec = unit_decompose(g)
    return BranchedPower(
        base=g,
        branch=x0 % m,
        branch_modulus=m,
        omega_pow=dec.teichmuller ** (x0 % m),
        one_unit=dec.one_unit,
        log_one_unit=plog(dec.one_unit),
    )


def evaluate(f: BranchedPower, x) -> Residue:
    """Branch value reduced mod p^e (the published precision)."""
    full = f.value_at(x)
    return Residue(full.value, full.ctx, full.ctx.e)


def evaluate_full(g: Residue, m: int, x1, x0: int) -> Residue:
    """The two-argument map (x1, x0) -> branch-x0 value at x1, mod p^e.

    For integer x with x = x0 (mod m) this is g^x mod p^e.
    """
    return evaluate(branched_power(g, x0, m), x1)
