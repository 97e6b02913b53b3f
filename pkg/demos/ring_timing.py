#!/usr/bin/env python3
"""Where the verifier's time goes: multiplying in (Z/nZ)[x]/(x^r - a).

Schoolbook costs O(r^2) coefficient products; packing the coefficients into
one big integer (fixed slot width) turns the same product into a single
multiplication that rides GMP's fast algorithms.  The crossover is early
and the gap grows fast.
"""

import random
import time

from primecert import PolyRing, RingElem, poly_mul
from primecert.polyring import pow_1_plus_x

rng = random.Random(7)
n = (1 << 128) + 51

print(f"{'r':>6} {'schoolbook':>12} {'kronecker':>12} {'speedup':>8}")
for r in (32, 128, 512, 2048):
    ring = PolyRing(n, r, rng.randrange(2, n))
    u = RingElem(ring, [rng.randrange(n) for _ in range(r)])
    v = RingElem(ring, [rng.randrange(n) for _ in range(r)])
    t0 = time.perf_counter()
    a = poly_mul(u, v, "schoolbook")
    t_s = time.perf_counter() - t0
    t0 = time.perf_counter()
    b = poly_mul(u, v, "kronecker")
    t_k = time.perf_counter() - t0
    assert a == b
    print(f"{r:>6} {t_s:>11.4f}s {t_k:>11.4f}s {t_s / t_k:>7.1f}x")

# the full witness check is ~log2(n) squarings of a degree-r element
r = 4099
ring = PolyRing(n, r, rng.randrange(2, n))
t0 = time.perf_counter()
pow_1_plus_x(ring, n)
print(f"\n(1+x)^n at r={r}, 128-bit n: {time.perf_counter() - t0:.2f}s")
