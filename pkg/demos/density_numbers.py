#!/usr/bin/env python3
"""Density numerics: window products, zero-divisor counts, and a live count
of 2-good primes in a short interval.

A number n is 2-good when n-1 has a prime factor between log2(n)^2 and
2*log2(n)^2; those primes admit a one-line certificate, so their density is
what makes the whole pipeline cheap.
"""

import time

from primecert import beta, beta_reference, survey, zero_divisor_count

# the window product prod(1 - 1/p) measures how many integers escape a
# prime factor in [b1, b2]; 1 - beta is the density that do not
b1, b2 = 250_000, 500_000
val = beta(b1, b2)
print(f"beta({b1}, {b2})       = {float(val):.7f}")
print(f"1 - beta               = {float(1 - val):.7f}")
print(f"reference 1/ln(b1)     = {float(beta_reference(b1)):.7f}")

# tiny windows can be checked exactly against the zero-divisor count of Z/mZ
m, count = zero_divisor_count(3, 5)
print(f"\nwindow [3,5]: m = {m}, zero-divisors = {count} "
      f"(the six values 3,5,6,9,10,12)")

# count 2-good primes just above 2^64: the ratio tracks 1/ln(log2(n)^2)
start, length = 2 ** 64, 300_000
t0 = time.perf_counter()
row = survey(start, length, C=2, mr_rounds=32, seed=0, segments=2)
dt = time.perf_counter() - t0
print(f"\n[2^64, 2^64 + {length}): {row.prime_count} primes, "
      f"{row.good_count} are 2-good ({float(row.ratio):.2%}) in {dt:.1f}s")
print(f"csv: {row.csv()}")
