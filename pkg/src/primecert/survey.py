"""Prime-density numerics over short intervals.

Three tools: the window product beta(b1,b2) = prod (1 - 1/p) over primes in
[b1, b2]; the exact zero-divisor count of Z/mZ for m the product of a prime
window; and a segmented-sieve survey counting probable primes and 2-good
probable primes in an interval [start, start + length), suitable for bases
around 2^500.

Determinism: the survey's Miller-Rabin draws come from per-segment RNG
streams derived from (seed, segment index), so counts are reproducible
bit-for-bit regardless of how segments are scheduled.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
import mpmath
import numpy as np

from .arith import derive_rng, sieve_primes
from .witness import good_factor

_SIEVE_LIMIT = 1_000_000
_MAX_SURVEY_LENGTH = 10_000_000

_base_primes_cache = None


def _base_primes():
    global _base_primes_cache
    if _base_primes_cache is None:
        _base_primes_cache = np.array(sieve_primes(_SIEVE_LIMIT), dtype=np.int64)
    return _base_primes_cache


# ---------------------------------------------------------------------------
# window products


def beta(b1, b2, dps=40):
    """prod (1 - 1/p) over primes p in [b1, b2], in extended precision.

    Working precision defaults to 40 significant digits (about 130 mantissa
    bits), comfortably absorbing the ~2*10^4 factor roundings of the windows
    of interest.
    """
    if not 2 <= b1 <= b2 <= 1 << 31:
        raise ValueError("need 2 <= b1 <= b2 <= 2^31")
    primes = sieve_primes(b2)
    import bisect

    i = bisect.bisect_left(primes, b1)
    with mpmath.workdps(dps):
        prod = mpmath.mpf(1)
        for p in primes[i:]:
            prod *= mpmath.mpf(p - 1) / p
        return +prod


def beta_reference(b1, dps=40):
    """The comparison value 1/ln(b1)."""
    with mpmath.workdps(dps):
        return 1 / mpmath.log(b1)


def zero_divisor_count(b1, b2):
    """Exact (m, count) where m is the product of the primes in [b1, b2]
    and count is the number of zero-divisors in Z/mZ: (m-1) - phi(m)."""
    if not 2 <= b1 <= b2 <= 1 << 31:
        raise ValueError("need 2 <= b1 <= b2 <= 2^31")
    primes = sieve_primes(b2)
    import bisect

    window = primes[bisect.bisect_left(primes, b1) :]
    bits = sum(p.bit_length() for p in window)
    if bits > 10_000_000:
        raise ValueError("window product too large")
    m = phi = 1
    for p in window:
        m *= p
        phi *= p - 1
    return m, (m - 1) - phi


# ---------------------------------------------------------------------------
# interval survey


@dataclass(frozen=True)
class SurveyRow:
    start: int
    end: int
    prime_count: int
    good_count: int

    @property
    def ratio(self):
        if self.prime_count == 0:
            return Fraction(0)
        return Fraction(self.good_count, self.prime_count)

    def csv(self):
        return (
            f"{self.start},{self.end},{self.prime_count},{self.good_count},"
            f"{float(self.ratio):.4f}"
        )


def _sieve_segment(start, length):
    """Boolean mask over [start, start+length) after striking multiples of
    every prime <= 10^6 (keeping the primes themselves, irrelevant for big
    starts)."""
    mask = np.ones(length, dtype=bool)
    for p in _base_primes():
        p = int(p)
        off = (-start) % p
        if start + off == p:  # p itself lies in the window
            off += p
        mask[off::p] = False
    return mask


def _mr_is_probable_prime(n, rounds, rng):
    if n < 2:
        return False
    nm = gmpy2.mpz(n)
    d = nm - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        base = rng.randrange(2, n - 1)
        x = gmpy2.powmod(base, d, nm)
        if x == 1 or x == nm - 1:
            continue
        for _ in range(s - 1):
            x = x * x % nm
            if x == nm - 1:
                break
        else:
            return False
    return True


def _survey_segment(args):
    start, length, C, mr_rounds, seed, segment_index = args
    rng = derive_rng(seed, segment_index)
    primes = goods = 0
    if start + length <= _SIEVE_LIMIT:
        # tiny windows: sieve directly
        for v in range(start, start + length):
            if _mr_is_probable_prime(v, mr_rounds, rng) if v > 3 else v in (2, 3):
                primes += 1
                if v >= 3 and good_factor(v, C) is not None:
                    goods += 1
        return primes, goods
    mask = _sieve_segment(start, length)
    for off in np.flatnonzero(mask):
        v = start + int(off)
        if not _mr_is_probable_prime(v, mr_rounds, rng):
            continue
        primes += 1
        if good_factor(v, C) is not None:
            goods += 1
    return primes, goods


def survey(start, length, C=2, mr_rounds=32, seed=0, segments=1):
    """Count probable primes and 2-good probable primes in
    [start, start+length).

    Probable means surviving the segmented sieve plus `mr_rounds` rounds of
    Miller-Rabin; goodness is decided by good_factor on each survivor.
    """
    start, length = int(start), int(length)
    if length < 0 or length > _MAX_SURVEY_LENGTH:
        raise ValueError(f"length must be in [0, {_MAX_SURVEY_LENGTH}]")
    if start < 2:
        raise ValueError("start must be >= 2")
    segments = max(1, min(int(segments), length or 1))
    bounds = [start + (length * k) // segments for k in range(segments + 1)]
    jobs = [
        (bounds[k], bounds[k + 1] - bounds[k], C, mr_rounds, seed, k)
        for k in range(segments)
        if bounds[k + 1] > bounds[k]
    ]
    if segments == 1 or len(jobs) == 1:
        results = [_survey_segment(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(len(jobs), _worker_count())) as pool:
            results = list(pool.map(_survey_segment, jobs))
    primes = sum(r[0] for r in results)
    goods = sum(r[1] for r in results)
    return SurveyRow(start=start, end=start + length, prime_count=primes, good_count=goods)


def _worker_count():
    import os

    return max(1, os.cpu_count() or 1)
