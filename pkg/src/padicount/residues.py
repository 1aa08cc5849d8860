"""Exact arithmetic in Z/p^W Z with p-adic bookkeeping.

A context fixes an odd prime p, the target exponent e of the results, and
a working precision W >= e whose guard digits absorb series truncation and
the exact divisions inside lifting.  Residues are canonical representatives
that track how many digits are actually known; arithmetic propagates the
minimum so that precision loss is visible rather than silent.

Everything is plain Python integer arithmetic (p^W exceeds 64 bits well
inside the supported range, so arbitrary precision is not optional).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BadArgument,
    BadExponent,
    CompositeModulus,
    ContextMismatch,
    EvenPrime,
    InexactDivision,
    NonCoprimeModuli,
    NotAUnit,
)

#: Marker returned by :func:`valuation` for the zero residue, whose true
#: valuation is indistinguishable from anything >= the known precision.
INFINITE = math.inf


def is_prime(n: int) -> bool:
    """Trial-division primality test; fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {q: multiplicity} by trial division."""
    if n < 1:
        raise BadArgument(f"cannot factor {n}")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ceil_log(base: int, n: int) -> int:
    """Smallest k with base^k >= n (n >= 1)."""
    k, acc = 0, 1
    while acc < n:
        acc *= base
        k += 1
    return k


@dataclass(frozen=True)
class PrimePowerContext:
    """Arithmetic context: odd prime p, target exponent e, working precision W.

    Residues attached to the context are canonical mod p^W; published
    results are read off mod p^e.
    """

    p: int
    e: int
    W: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "modulus", self.p**self.W)

    @property
    def target_modulus(self) -> int:
        return self.p**self.e

    def residue(self, value: int, prec: int | None = None) -> "Residue":
        return Residue(value, self, prec)

    def unit(self, value: int) -> "Residue":
        r = Residue(value, self)
        if not r.is_unit:
            raise NotAUnit(f"{value} is divisible by {self.p}")
        return r


def make_context(p: int, e: int, guard: int | None = None) -> PrimePowerContext:
    """Context with W = e + guard; the default guard is sized from the
    log/exp series term bounds so published results are exact mod p^e."""
    if p == 2:
        raise EvenPrime("p = 2 is not supported; use an odd prime")
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    if e < 1:
        raise BadExponent(f"target exponent must be >= 1, got {e}")
    if guard is None:
        from .analysis import series_term_bound

        guard = ceil_log(p, max(series_term_bound(p, e), 1)) + 2
    elif guard < 0:
        raise BadArgument(f"guard must be >= 0, got {guard}")
    return PrimePowerContext(p=p, e=e, W=e + guard)


@dataclass(frozen=True)
class Residue:
    """Canonical representative of an element of Z/p^W Z.

    ``prec`` is the number of p-adic digits actually known (at most W);
    exact division by p^k surrenders k of them, and binary operations
    propagate the minimum.
    """

    value: int
    ctx: PrimePowerContext
    prec: int | None = None

    def __post_init__(self):
        prec = self.ctx.W if self.prec is None else self.prec
        if not 0 <= prec <= self.ctx.W:
            raise BadArgument(f"precision {prec} outside [0, {self.ctx.W}]")
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "value", self.value % self.ctx.p**prec)

    # -- helpers -----------------------------------------------------------

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def prec_modulus(self) -> int:
        return self.ctx.p**self.prec

    @property
    def is_unit(self) -> bool:
        return self.value % self.ctx.p != 0

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.ctx != self.ctx:
                raise ContextMismatch(
                    f"cannot mix residues from {other.ctx} and {self.ctx}"
                )
            return other
        if isinstance(other, int):
            return Residue(other, self.ctx)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value + other.value, self.ctx, min(self.prec, other.prec))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value - other.value, self.ctx, min(self.prec, other.prec))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value * other.value, self.ctx, min(self.prec, other.prec))

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.ctx, self.prec)

    def __pow__(self, k: int):
        return pow_mod(self, k)

    def __repr__(self):
        return f"<{self.value} mod {self.p}^{self.prec}>"


def add(a: Residue, b: Residue) -> Residue:
    return a + b


def sub(a: Residue, b: Residue) -> Residue:
    return a - b


def mul(a: Residue, b: Residue) -> Residue:
    return a * b


def neg(a: Residue) -> Residue:
    return -a


def inv(a: Residue) -> Residue:
    """Multiplicative inverse mod p^prec; the value must be a unit."""
    if not a.is_unit:
        raise NotAUnit(f"{a.value} is divisible by {a.p}")
    return Residue(pow(a.value, -1, a.prec_modulus), a.ctx, a.prec)


def pow_mod(a: Residue, k: int) -> Residue:
    """a^k by square-and-multiply; a^0 = 1."""
    if k < 0:
        raise BadArgument(f"exponent must be nonnegative, got {k}")
    return Residue(pow(a.value, k, a.prec_modulus), a.ctx, a.prec)


def valuation(a: Residue):
    """Largest v with p^v dividing a, or the infinite marker for 0."""
    if a.value == 0:
        return INFINITE
    v, n = 0, a.value
    while n % a.p == 0:
        n //= a.p
        v += 1
    return v


def exact_div_p(a: Residue, k: int) -> Residue:
    """The unique b with b * p^k = a; b is canonical mod p^(prec-k).

    Raises InexactDivision when the valuation of a is below k.
    """
    if not 0 <= k <= a.prec:
        raise BadArgument(f"cannot divide by p^{k} at precision {a.prec}")
    pk = a.p**k
    if a.value % pk != 0:
        raise InexactDivision(f"{a.value} has valuation below {k}")
    return Residue(a.value // pk, a.ctx, a.prec - k)


def multiplicative_order(g: Residue) -> int:
    """Least m >= 1 with g^m = 1 (mod p); divides p - 1 by Fermat."""
    if not g.is_unit:
        raise NotAUnit(f"{g.value} is divisible by {g.p}")
    p = g.p
    gv = g.value % p
    m = p - 1
    for q in factorize(p - 1):
        while m % q == 0 and pow(gv, m // q, p) == 1:
            m //= q
    return m


def crt_combine(x1: int, m1: int, x0: int, m2: int) -> int:
    """The unique x in {1, ..., m1*m2} with x = x1 (mod m1), x = x0 (mod m2).

    The representative range starts at 1 (so the zero class is reported as
    m1*m2), matching the solution ranges used throughout the counting layer.
    """
    if m1 < 1 or m2 < 1:
        raise BadArgument("moduli must be positive")
    if math.gcd(m1, m2) != 1:
        raise NonCoprimeModuli(f"gcd({m1}, {m2}) != 1")
    total = m1 * m2
    r = (x1 + m1 * ((x0 - x1) * pow(m1, -1, m2))) % total
    return r if r else total
