#!/usr/bin/env python3
"""Walkthrough: prove a prime, read its certificate, verify it, break it.

Run:  python demos/certify_walkthrough.py [bits]
"""

import sys
import time

from primecert import (
    derive_rng,
    miller_rabin,
    parse,
    prove,
    serialize,
    verify_chain,
)

bits = int(sys.argv[1]) if len(sys.argv) > 1 else 96

# pick a random probable prime of the requested size
rng = derive_rng(2026, bits)
while True:
    n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
    if miller_rabin(n, 32, rng):
        break
print(f"subject: {n} ({bits} bits)\n")

# prove it: either a single witness record (n is 2-good) or a chain of
# curve-order reductions down to a 2-good or tiny prime
t0 = time.perf_counter()
outcome = prove(n, seed=1)
print(f"prove: {outcome.verdict} in {time.perf_counter() - t0:.2f}s")
text = serialize(outcome.chain)
print("\ncertificate:")
print(text)

# the verifier re-derives nothing: it replays the checks deterministically
stats = {}
t0 = time.perf_counter()
result = verify_chain(parse(text), stats=stats)
print(f"verify: accepted={result.accepted} in {time.perf_counter() - t0:.2f}s")
print(f"  time in ring congruence: {stats['poly_seconds']:.3f}s")
print(f"  time in curve checks:    {stats['ec_seconds']:.3f}s")

# tamper with one digit and watch it reject
lines = text.split("\n")
tokens = lines[2].split(" ")
name, val = tokens[-1].split("=")
tokens[-1] = f"{name}={int(val) + 1}"
lines[2] = " ".join(tokens)
broken = verify_chain(parse("\n".join(lines)))
print(f"\nafter +1 on one field: accepted={broken.accepted} "
      f"(link {broken.link_index}, condition {broken.condition})")
