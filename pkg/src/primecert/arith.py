"""Big-integer utilities shared by every other module.

Everything here works on plain Python ints.  Randomness is always injected
through an explicit `random.Random` instance; there is no module-level RNG.
"""

import math
import random
from dataclasses import dataclass

import numpy as np

gcd = math.gcd
isqrt = math.isqrt


class UndecidedError(Exception):
    """Randomized search hit its retry cap without reaching a verdict."""


@dataclass(frozen=True)
class CompositeEvidence:
    """Re-checkable witness that some number is composite.

    kind is one of: fermat_failure (payload: the base b with b^(n-1) != 1),
    gcd_factor (payload: a nontrivial divisor), perfect_power (payload:
    (base, exp)), congruence_failure (payload: (r, a) of the failed ring
    congruence), ec_arithmetic_factor (payload: a nontrivial divisor found
    during curve arithmetic).
    """

    kind: str
    payload: object

    def describe(self):
        if self.kind == "perfect_power":
            b, k = self.payload
            return f"{self.kind} {b}^{k}"
        if self.kind == "congruence_failure":
            r, a = self.payload
            return f"{self.kind} r={r} a={a}"
        return f"{self.kind} {self.payload}"


class NotPrimeError(Exception):
    """Arithmetic that presumed a prime modulus hit a contradiction.

    evidence may be None in the (practically unreachable) case where the
    contradiction yields no enumerable witness.
    """

    def __init__(self, evidence=None):
        super().__init__(evidence.describe() if evidence else "not prime")
        self.evidence = evidence


# ---------------------------------------------------------------------------
# deterministic RNG plumbing


def _splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def derive_rng(seed, *salts):
    """Child RNG deterministically derived from a 64-bit seed and salts."""
    x = seed & 0xFFFFFFFFFFFFFFFF
    for s in salts:
        x = _splitmix64(x ^ (int(s) & 0xFFFFFFFFFFFFFFFF))
    return random.Random(_splitmix64(x))


# ---------------------------------------------------------------------------
# elementary operations


def mod_pow(base, exp, modulus):
    """base**exp mod modulus for nonnegative exp, modulus >= 2."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def jacobi(a, n):
    """Jacobi symbol (a|n) for odd n > 0; returns 0 when gcd(a, n) > 1."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def iroot(n, k):
    """Floor k-th root by integer Newton iteration, no floating point."""
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)  # start above the root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_perfect_power(n):
    """Return (b, k) with k >= 2 maximal and b**k == n, else None."""
    if n < 2:
        raise ValueError("perfect-power test requires n >= 2")
    for k in range(n.bit_length() - 1, 1, -1):
        b = iroot(n, k)
        if b ** k == n:
            return b, k
    return None


def ceil_log2(n):
    if n < 1:
        raise ValueError("ceil_log2 requires n >= 1")
    return (n - 1).bit_length()


# ---------------------------------------------------------------------------
# probabilistic compositeness testing


def _strong_probable_prime(n, base, d, s):
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
        if x == 1:
            return False
    return False


def miller_rabin(n, rounds=32, rng=None):
    """True if n is a probable prime after `rounds` random-base strong tests.

    A False answer is always correct.  Deterministic for a fixed rng seed.
    """
    if n < 2 or rounds < 1:
        raise ValueError("miller_rabin requires n >= 2, rounds >= 1")
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    if rng is None:
        rng = random.Random(0x9D2C5680)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        base = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, base, d, s):
            return False
    return True


def mr_evidence(n, base):
    """Turn a failed strong test at `base` into CompositeEvidence, or None.

    Either Fermat fails outright, or the square chain contains a square root
    of 1 other than +-1, which exposes a factor by gcd.
    """
    if n < 3 or n % 2 == 0:
        return CompositeEvidence("gcd_factor", 2) if n % 2 == 0 and n > 2 else None
    if pow(base, n - 1, n) != 1:
        return CompositeEvidence("fermat_failure", base)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    prev = None
    for _ in range(s):
        if x == 1:
            break
        prev = x
        x = x * x % n
    if x == 1 and prev is not None and prev != n - 1:
        g = gcd(prev - 1, n)
        if 1 < g < n:
            return CompositeEvidence("gcd_factor", g)
    return None


def composite_evidence(n, rounds=64, rng=None):
    """Search for re-checkable evidence that odd n is composite."""
    if n % 2 == 0:
        return CompositeEvidence("gcd_factor", 2)
    if rng is None:
        rng = random.Random(0x41C64E6D)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        base = rng.randrange(2, n - 1) if n > 4 else 2
        if not _strong_probable_prime(n, base, d, s):
            ev = mr_evidence(n, base)
            if ev is not None:
                return ev
    return None


# ---------------------------------------------------------------------------
# prime sieves


def sieve_primes(limit):
    """All primes <= limit, ascending, by sieve of Eratosthenes."""
    if limit < 2 or limit > 2 ** 31:
        raise ValueError("sieve limit must be in [2, 2^31]")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(flags)]


_SMALL_PRIME_LIMIT = 1 << 16
_small_primes_cache = None


def small_primes():
    """Cached primes below 2^16 (enough to trial-divide anything < 2^32)."""
    global _small_primes_cache
    if _small_primes_cache is None:
        _small_primes_cache = sieve_primes(_SMALL_PRIME_LIMIT - 1)
    return _small_primes_cache


def is_prime_trial_division(n):
    """Deterministic primality for n < 2^32 by trial division."""
    if n < 2:
        return False
    if n >= 1 << 32:
        raise ValueError("trial division path is for n < 2^32")
    for p in small_primes():
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    return True


# ---------------------------------------------------------------------------
# square roots modulo a (probable) prime


def sqrt_mod_prime(a, p):
    """Tonelli-Shanks square root of a mod an odd probable prime p.

    Returns x with x*x % p == a, or None when (a|p) = -1.  If the arithmetic
    contradicts primality of p, raises NotPrimeError (with evidence where one
    can be extracted).
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("modulus must be an odd (probable) prime")
    if not 0 <= a < p:
        raise ValueError("need 0 <= a < p")
    if a == 0:
        return 0
    j = jacobi(a, p)
    if j == -1:
        return None
    if j == 0:
        g = gcd(a, p)
        raise NotPrimeError(CompositeEvidence("gcd_factor", g))
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
        if x * x % p != a:
            raise NotPrimeError(_euler_contradiction(a, p))
        return x
    # general Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
        if z > 1000 and z > p:
            raise NotPrimeError(None)
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        u = t
        while u != 1:
            u = u * u % p
            i += 1
            if i == m:
                raise NotPrimeError(_euler_contradiction(a, p))
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    if x * x % p != a:
        raise NotPrimeError(_euler_contradiction(a, p))
    return x


def _euler_contradiction(a, p):
    # (a|p) = 1 yet no square root: p is composite; try to extract evidence
    v = pow(a, (p - 1) // 2, p)
    if v not in (1, p - 1):
        if v * v % p != 1:
            return CompositeEvidence("fermat_failure", a)
        g = gcd(v - 1, p)
        if 1 < g < p:
            return CompositeEvidence("gcd_factor", g)
    return None
