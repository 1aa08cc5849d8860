import math
import random

import pytest

from padicount.errors import (
    BadArgument,
    BadExponent,
    CompositeModulus,
    ContextMismatch,
    EvenPrime,
    InexactDivision,
    NonCoprimeModuli,
    NotAUnit,
)
from padicount.residues import (
    INFINITE,
    Residue,
    crt_combine,
    exact_div_p,
    factorize,
    inv,
    is_prime,
    make_context,
    multiplicative_order,
    pow_mod,
    valuation,
)


def ctx_exact(p, e):
    """Context with no guard digits: arithmetic happens literally mod p^e."""
    return make_context(p, e, guard=0)


# -- context construction -----------------------------------------------------


def test_make_context_basic_fields():
    ctx = make_context(5, 2)
    assert ctx.p == 5 and ctx.e == 2
    assert ctx.W >= ctx.e
    assert ctx.modulus == 5**ctx.W
    assert ctx.target_modulus == 25


def test_make_context_rejects_two():
    with pytest.raises(EvenPrime):
        make_context(2, 1)


def test_make_context_rejects_composite():
    with pytest.raises(CompositeModulus):
        make_context(9, 1)
    with pytest.raises(CompositeModulus):
        make_context(1, 1)


def test_make_context_rejects_bad_exponent():
    with pytest.raises(BadExponent):
        make_context(5, 0)


def test_make_context_guard_override():
    assert make_context(5, 2, guard=0).W == 2
    assert make_context(5, 2, guard=3).W == 5
    with pytest.raises(BadArgument):
        make_context(5, 2, guard=-1)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert [n for n in range(2, 32) if is_prime(n)] == primes


def test_factorize():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(97) == {97: 1}
    with pytest.raises(BadArgument):
        factorize(0)


# -- ring operations ----------------------------------------------------------


def test_ring_op_examples_mod_25():
    ctx = ctx_exact(5, 2)
    assert (Residue(7, ctx) * Residue(4, ctx)).value == 3
    assert (Residue(24, ctx) + Residue(1, ctx)).value == 0
    assert (-Residue(0, ctx)).value == 0
    assert (Residue(3, ctx) - Residue(4, ctx)).value == 24


def test_int_coercion():
    ctx = ctx_exact(5, 2)
    a = Residue(7, ctx)
    assert (a + 18).value == 0
    assert (1 - a).value == 19
    assert (2 * a).value == 14


def test_context_mismatch():
    a = Residue(1, ctx_exact(5, 2))
    b = Residue(1, ctx_exact(7, 2))
    with pytest.raises(ContextMismatch):
        a + b


def test_inverse_examples():
    ctx = ctx_exact(5, 2)
    assert inv(Residue(2, ctx)).value == 13
    assert inv(Residue(1, ctx)).value == 1
    with pytest.raises(NotAUnit):
        inv(Residue(5, ctx))


def test_pow_mod_examples():
    ctx = ctx_exact(5, 2)
    assert pow_mod(Residue(2, ctx), 10).value == 24
    assert pow_mod(Residue(13, ctx), 0).value == 1
    assert pow_mod(Residue(7, ctx), 4).value == 1  # Teichmuller lift of 2 mod 25
    assert (Residue(7, ctx) ** 4).value == 1
    with pytest.raises(BadArgument):
        pow_mod(Residue(2, ctx), -1)


def test_ring_axioms_random():
    rng = random.Random(20240517)
    for p, e in [(3, 4), (5, 3), (13, 2)]:
        ctx = ctx_exact(p, e)
        mod = ctx.modulus
        for _ in range(60):
            a, b, c = (Residue(rng.randrange(mod), ctx) for _ in range(3))
            assert ((a + b) + c).value == (a + (b + c)).value
            assert ((a * b) * c).value == (a * (b * c)).value
            assert (a * (b + c)).value == (a * b + a * c).value
            assert (a * b).value == (b * a).value
            assert (a + (-a)).value == 0


def test_inverse_random_units():
    rng = random.Random(7)
    ctx = ctx_exact(7, 4)
    for _ in range(80):
        v = rng.randrange(1, ctx.modulus)
        if v % 7 == 0:
            continue
        a = Residue(v, ctx)
        assert (a * inv(a)).value == 1


# -- valuation and exact division ----------------------------------------------


def test_valuation_examples():
    ctx = ctx_exact(5, 3)
    assert valuation(Residue(50, ctx)) == 2
    assert valuation(Residue(3, ctx)) == 0
    assert valuation(Residue(0, ctx)) == INFINITE


def test_valuation_of_products():
    rng = random.Random(99)
    ctx = ctx_exact(5, 5)
    for _ in range(100):
        a = Residue(rng.randrange(ctx.modulus), ctx)
        b = Residue(rng.randrange(ctx.modulus), ctx)
        va, vb, vab = valuation(a), valuation(b), valuation(a * b)
        assert vab == min(va + vb, INFINITE) or (
            # products can gain extra valuation only by wrapping past p^W
            va + vb < INFINITE and vab >= min(va + vb, ctx.W)
        )


def test_exact_div_p_examples():
    ctx = ctx_exact(5, 3)
    r = exact_div_p(Residue(50, ctx), 2)
    assert r.value == 2 and r.prec == 1
    with pytest.raises(InexactDivision):
        exact_div_p(Residue(3, ctx), 1)
    assert exact_div_p(Residue(0, ctx), 2).value == 0
    with pytest.raises(BadArgument):
        exact_div_p(Residue(0, ctx), 4)


def test_exact_div_p_inverts_shifts():
    rng = random.Random(3)
    ctx = ctx_exact(3, 6)
    for _ in range(100):
        k = rng.randrange(0, ctx.W + 1)
        b = Residue(rng.randrange(ctx.modulus), ctx)
        shifted = b * 3**k
        back = exact_div_p(shifted, k)
        assert back.prec == ctx.W - k
        assert back.value == b.value % 3 ** (ctx.W - k)


def test_precision_propagates_minimum():
    ctx = ctx_exact(5, 3)
    lowered = exact_div_p(Residue(50, ctx), 1)  # prec 2
    full = Residue(7, ctx)
    assert (lowered * full).prec == 2
    assert (lowered + full).prec == 2


# -- multiplicative order -------------------------------------------------------


def test_multiplicative_order_examples():
    ctx = ctx_exact(5, 2)
    assert multiplicative_order(Residue(2, ctx)) == 4
    assert multiplicative_order(Residue(1, ctx)) == 1
    assert multiplicative_order(Residue(7, ctx)) == 4  # 7 = 2 mod 5
    with pytest.raises(NotAUnit):
        multiplicative_order(Residue(5, ctx))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_multiplicative_order_matches_naive(p):
    ctx = ctx_exact(p, 2)
    for g in range(1, p):
        m = 1
        acc = g % p
        while acc != 1:
            acc = acc * g % p
            m += 1
        assert multiplicative_order(Residue(g, ctx)) == m
        assert (p - 1) % m == 0


# -- CRT ------------------------------------------------------------------------


def test_crt_examples():
    assert crt_combine(3, 5, 3, 4) == 3
    assert crt_combine(1, 5, 0, 4) == 16
    assert crt_combine(1, 125, 1, 1) == 1


def test_crt_zero_class_maps_to_top():
    assert crt_combine(0, 5, 0, 4) == 20


def test_crt_rejects_common_factor():
    with pytest.raises(NonCoprimeModuli):
        crt_combine(1, 6, 1, 4)


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)])
def test_crt_unique_in_range_exhaustive(p, e):
    pe = p**e
    for m in range(1, p):
        if (p - 1) % m != 0:
            continue
        for x1 in range(pe):
            for x0 in range(m):
                combined = crt_combine(x1, pe, x0, m)
                assert 1 <= combined <= pe * m
                assert combined % pe == x1 % pe
                assert combined % m == x0 % m
                hits = [
                    x
                    for x in range(1, pe * m + 1)
                    if x % pe == x1 % pe and x % m == x0 % m
                ]
                assert hits == [combined]
