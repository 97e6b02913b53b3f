import random

import pytest

from primecert.arith import (
    CompositeEvidence,
    NotPrimeError,
    composite_evidence,
    derive_rng,
    is_perfect_power,
    is_prime_trial_division,
    iroot,
    jacobi,
    miller_rabin,
    mod_pow,
    sieve_primes,
    sqrt_mod_prime,
)


def test_mod_pow_examples():
    assert mod_pow(2, 226, 227) == 1
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(3, 4, 13) == 3
    with pytest.raises(ValueError):
        mod_pow(2, 3, 1)


def test_mod_pow_against_naive_oracle():
    rng = random.Random(101)
    for _ in range(10_000):
        base = rng.randrange(0, 1 << 64)
        exp = rng.randrange(0, 300)
        modulus = rng.randrange(2, 1 << 64)
        acc = 1
        for _ in range(exp):
            acc = acc * base % modulus
        assert mod_pow(base, exp, modulus) == acc


def test_perfect_power_examples():
    assert is_perfect_power(27) == (3, 3)
    assert is_perfect_power(227) is None
    assert is_perfect_power(1024) == (2, 10)
    assert is_perfect_power(64) == (2, 6)  # maximal exponent, not 8^2


def test_perfect_power_roundtrip_and_absence():
    rng = random.Random(7)
    for _ in range(300):
        b = rng.randrange(2, 1 << 20)
        k = rng.randrange(2, 12)
        got = is_perfect_power(b ** k)
        assert got is not None
        gb, gk = got
        assert gb ** gk == b ** k
    for _ in range(300):
        n = rng.randrange(4, 1 << 48)
        if is_perfect_power(n) is None:
            for k in range(2, n.bit_length()):
                root = iroot(n, k)
                assert root ** k != n and (root + 1) ** k != n


def test_iroot_edges():
    assert iroot(0, 5) == 0
    assert iroot(1, 5) == 1
    assert iroot(226, 2) == 15
    for n in (2 ** 60 - 1, 2 ** 60, 2 ** 60 + 1):
        r = iroot(n, 3)
        assert r ** 3 <= n < (r + 1) ** 3


def test_miller_rabin_examples():
    rng = random.Random(5)
    assert miller_rabin(4, 16, rng) is False
    assert miller_rabin(227, 16, rng) is True
    assert miller_rabin(221, 16, rng) is False


def test_miller_rabin_never_rejects_primes_below_1e6():
    rng = random.Random(11)
    for p in sieve_primes(1_000_000):
        assert miller_rabin(p, 2, rng), p


def test_miller_rabin_catches_carmichael():
    rng = random.Random(3)
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265):
        assert miller_rabin(n, 32, rng) is False


def test_sieve_examples():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(2) == [2]
    assert len(sieve_primes(500_000)) == 41_538


def test_sieve_against_independent_sieve():
    # second, independently coded odd-only sieve
    limit = 100_000
    flags = bytearray([1]) * ((limit // 2) + 1)  # index i <-> 2i+1
    flags[0] = 0
    i = 1
    while (2 * i + 1) ** 2 <= limit:
        if flags[i]:
            step = 2 * i + 1
            start = (step * step - 1) // 2
            for j in range(start, len(flags), step):
                flags[j] = 0
        i += 1
    other = [2] + [2 * i + 1 for i in range(len(flags)) if flags[i] and 2 * i + 1 <= limit]
    assert sieve_primes(limit) == other


def test_sqrt_mod_prime_examples():
    assert sqrt_mod_prime(4, 13) in (2, 11)
    assert sqrt_mod_prime(2, 13) is None
    assert sqrt_mod_prime(0, 13) == 0


def test_sqrt_mod_prime_random():
    rng = random.Random(17)
    primes = [p for p in sieve_primes(5000) if p > 2]
    for _ in range(2000):
        p = rng.choice(primes)
        a = rng.randrange(p)
        x = sqrt_mod_prime(a, p)
        if x is not None:
            assert x * x % p == a
        else:
            assert jacobi(a, p) == -1


def test_sqrt_mod_composite_raises():
    # 15 = 3 * 5; jacobi(2|15) = 1 but 2 is a non-residue mod both factors
    with pytest.raises(NotPrimeError):
        sqrt_mod_prime(2, 15)


def test_jacobi_values():
    assert jacobi(2, 15) == 1
    assert jacobi(2, 7) == 1
    assert jacobi(3, 7) == -1
    assert jacobi(21, 7) == 0
    with pytest.raises(ValueError):
        jacobi(2, 10)


def test_jacobi_matches_euler_for_primes():
    rng = random.Random(23)
    for p in sieve_primes(2000)[1:]:
        for _ in range(5):
            a = rng.randrange(1, p)
            euler = pow(a, (p - 1) // 2, p)
            expected = 1 if euler == 1 else -1
            assert jacobi(a, p) == expected


def test_composite_evidence_reverifies():
    rng = random.Random(31)
    for _ in range(500):
        n = rng.randrange(9, 1 << 32) | 1
        if is_prime_trial_division(n):
            continue
        ev = composite_evidence(n, rng=random.Random(n))
        assert ev is not None
        assert _evidence_checks(n, ev)


def _evidence_checks(n, ev):
    if ev.kind == "fermat_failure":
        return pow(ev.payload, n - 1, n) != 1
    if ev.kind == "gcd_factor":
        return 1 < ev.payload < n and n % ev.payload == 0
    if ev.kind == "perfect_power":
        b, k = ev.payload
        return b ** k == n and k >= 2
    return False


def test_rng_derivation_is_stable():
    a = derive_rng(42, 1, 2).getrandbits(64)
    b = derive_rng(42, 1, 2).getrandbits(64)
    c = derive_rng(42, 1, 3).getrandbits(64)
    assert a == b
    assert a != c


def test_miller_rabin_deterministic_for_fixed_seed():
    n = (1 << 89) - 1
    r1 = [miller_rabin(n, 8, derive_rng(9, i)) for i in range(4)]
    r2 = [miller_rabin(n, 8, derive_rng(9, i)) for i in range(4)]
    assert r1 == r2
