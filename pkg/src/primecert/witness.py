"""Detection of 2-good numbers and the single-congruence witness search.

A number n is C-good when n-1 has a prime factor r with
log2(n)^2 <= r <= C*log2(n)^2.  For such n (odd, not a perfect power) a
witness a with a^(r^alpha) == 1 (mod n), gcd(a^(r^(alpha-1)) - 1, n) == 1
and (1+x)^n == 1 + x^n (mod n, x^r - a) proves n prime outright.

The window bound r >= log2(n)^2 is a soundness condition, so it is decided
with integer arithmetic only: a 64-fractional-bit enclosure of log2(n) is
squared and rounded outward.  No float ever touches the comparison.
"""

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    CompositeEvidence,
    UndecidedError,
    gcd,
    is_perfect_power,
    sieve_primes,
)
from .polyring import aks_congruence_check

_FRAC_BITS = 64
_WORK_BITS = 192


@dataclass(frozen=True)
class GoodWitness:
    """Witness (r, alpha, a) proving n prime: r prime, r^alpha || n-1."""

    n: int
    r: int
    alpha: int
    a: int


def log2_bounds(n):
    """Integers (lo, hi) with lo <= 2^64 * log2(n) <= hi and hi - lo <= 4."""
    if n < 2:
        raise ValueError("log2_bounds requires n >= 2")
    b = n.bit_length() - 1
    frac = 0
    x = (n << _WORK_BITS) >> b  # mantissa in [2^W, 2^(W+1)), exact
    for _ in range(_FRAC_BITS):
        x = (x * x) >> _WORK_BITS  # floor-truncation, error well below 2^-64
        frac <<= 1
        if x >> (_WORK_BITS + 1):
            frac |= 1
            x >>= 1
    f = (b << _FRAC_BITS) | frac
    return f - 2, f + 2


def good_window(n, C=2):
    """Integer window [r_lo, r_hi] of admissible prime factors of n-1.

    The lower end rounds outward (up) so no r below log2(n)^2 is ever
    admitted; the upper end rounds inward.
    """
    C = Fraction(C)
    if C < 1:
        raise ValueError("C must be >= 1")
    lo, hi = log2_bounds(n)
    r_lo = -((-hi * hi) >> (2 * _FRAC_BITS))  # ceil(hi^2 / 2^128)
    r_hi = (C.numerator * lo * lo) // (C.denominator << (2 * _FRAC_BITS))
    return r_lo, int(r_hi)


def good_factor(n, C=2):
    """Smallest prime r in the goodness window dividing n-1, with its
    exact multiplicity alpha, or None when no window prime divides n-1."""
    if n < 3:
        raise ValueError("good_factor requires n >= 3")
    r_lo, r_hi = good_window(n, C)
    if r_hi < r_lo or r_hi < 2:
        return None
    m = n - 1
    for r in primes_in_window(r_lo, r_hi):
        if m % r == 0:
            alpha = 1
            q = m // r
            while q % r == 0:
                alpha += 1
                q //= r
            return r, alpha
    return None


_prime_table = []
_prime_table_limit = 0


def primes_in_window(lo, hi):
    """Primes in [lo, hi], sliced from a growing cached sieve."""
    global _prime_table, _prime_table_limit
    if hi < 2:
        return []
    if hi > _prime_table_limit:
        _prime_table_limit = max(hi, 2 * _prime_table_limit, 1 << 16)
        _prime_table = sieve_primes(_prime_table_limit)
    i = bisect.bisect_left(_prime_table, max(lo, 2))
    j = bisect.bisect_right(_prime_table, hi)
    return _prime_table[i:j]


def find_witness_a(n, r, alpha, rng, max_draws=None):
    """Search for the witness a = b^((n-1)/r^alpha) by random draws of b.

    Returns the witness a on success, CompositeEvidence when a draw exposes
    n as composite, and raises UndecidedError when the retry cap is hit
    (unreachable in practice for prime n: each redraw happens with
    probability at most 1/r).
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    ralpha = r ** alpha
    if (n - 1) % ralpha != 0 or ((n - 1) // ralpha) % r == 0:
        raise ValueError("need r^alpha || n-1")
    if max_draws is None:
        max_draws = 64 * ((n - 1).bit_length())
    exp = (n - 1) // ralpha
    sub = r ** (alpha - 1)
    for _ in range(max_draws):
        b = rng.randrange(2, n)
        if pow(b, n - 1, n) != 1:
            return CompositeEvidence("fermat_failure", b)
        a = pow(b, exp, n)
        if a == 1:
            continue
        t = pow(a, sub, n)
        if t == 1:
            continue
        g = gcd(t - 1, n)
        if g != 1:
            return CompositeEvidence("gcd_factor", g)
        return int(a)
    raise UndecidedError(f"witness search exhausted after {max_draws} draws")


def prove_good(n, C=2, rng=None):
    """Full witness pipeline for one number.

    Returns a GoodWitness when n is a C-good probable prime that passes the
    congruence, CompositeEvidence when some step exposes n as composite, and
    None when n is simply not C-good.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("prove_good requires odd n >= 3")
    if rng is None:
        from .arith import derive_rng

        rng = derive_rng(0, n)
    pp = is_perfect_power(n)
    if pp is not None:
        return CompositeEvidence("perfect_power", pp)
    hit = good_factor(n, C)
    if hit is None:
        return None
    r, alpha = hit
    got = find_witness_a(n, r, alpha, rng)
    if isinstance(got, CompositeEvidence):
        return got
    a = got
    if not aks_congruence_check(n, r, a):
        return CompositeEvidence("congruence_failure", (r, a))
    return GoodWitness(n=int(n), r=int(r), alpha=int(alpha), a=int(a))
