"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The heavy tests (end-to-end certification at three bit sizes and the
verify-time growth trend) dominate; the whole module takes on the order of
two hours on a two-core box.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from fractions import Fraction

import numpy as np

from primecert.arith import (
    derive_rng,
    is_perfect_power,
    is_prime_trial_division,
    jacobi,
    miller_rabin,
    sieve_primes,
)
from primecert.certificate import (
    CertificateChain,
    MalformedCertificate,
    parse,
    serialize,
    verify_chain,
    verify_good_link,
)
from primecert.ecpp import CORE_DISCRIMINANTS, candidate_orders, cm_curve, cornacchia_4n
from primecert.polyring import PolyRing, RingElem, aks_congruence_check, poly_mul
from primecert.prover import prove
from primecert.survey import beta, beta_reference, survey
from primecert.witness import (
    GoodWitness,
    find_witness_a,
    good_factor,
    good_window,
    primes_in_window,
    prove_good,
)

ACCEPT_SEED = 20260810


def _report(criterion, ok, detail):
    print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    assert ok, f"criterion {criterion}: {detail}"


def _random_probable_prime(bits, rng, rounds=32):
    while True:
        c = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if miller_rabin(c, rounds, rng):
            return c


# -------------------------------------------------------------- criterion 1


def test_criterion_1_beta_reproduction():
    t0 = time.perf_counter()
    b = float(beta(250000, 500000))
    elapsed = time.perf_counter() - t0
    checks = [
        abs(b - 0.9472455) <= 5e-7,
        abs((1 - b) - 0.0527545) <= 5e-7,
        abs(float(beta_reference(250000)) - 0.0804556) <= 5e-7,
        elapsed < 5.0,
    ]
    _report(1, all(checks), f"beta={b:.7f} 1-beta={1-b:.7f} "
            f"1/ln={float(beta_reference(250000)):.7f} time={elapsed:.2f}s")


# -------------------------------------------------------------- criterion 2


def test_criterion_2_interval_counts():
    row1 = survey(2 ** 500, 200000, 2, 32, seed=0, segments=2)
    row2 = survey(2 ** 500 + 200000, 200000, 2, 32, seed=0, segments=2)
    ok = (row1.prime_count, row1.good_count) == (576, 35) and (
        row2.prime_count, row2.good_count) == (558, 38)
    _report(2, ok, f"row1={row1.prime_count}/{row1.good_count} (want 576/35) "
            f"row2={row2.prime_count}/{row2.good_count} (want 558/38)")


# -------------------------------------------------------------- criterion 3


def _prove_and_verify(args):
    bits, i = args
    rng = derive_rng(ACCEPT_SEED, bits, i)
    n = _random_probable_prime(bits, rng)
    out = prove(n, seed=ACCEPT_SEED + i, max_rounds=16, node_budget=256)
    if out.verdict != "prime":
        return (bits, i, n, f"prove:{out.verdict}")
    v = verify_chain(parse(serialize(out.chain)))
    if not v:
        return (bits, i, n, f"verify:link={v.link_index},cond={v.condition}")
    return (bits, i, n, "ok")


def test_criterion_3_end_to_end_certification():
    jobs = [(bits, i) for bits in (64, 128, 256) for i in range(100)]
    failures = []
    with ProcessPoolExecutor(max_workers=2) as pool:
        for fut in as_completed([pool.submit(_prove_and_verify, j) for j in jobs]):
            bits, i, n, status = fut.result()
            if status != "ok":
                failures.append((bits, i, n, status))

    rng = random.Random(ACCEPT_SEED)
    composite_failures = 0
    checked = 0
    while checked < 10_000:
        n = rng.randrange(9, 1 << 32) | 1
        if is_prime_trial_division(n):
            continue
        checked += 1
        out = prove(n, seed=checked)
        if out.verdict != "composite" or out.chain is not None:
            composite_failures += 1
            continue
        ev = out.evidence
        if ev.kind == "fermat_failure":
            ok = pow(ev.payload, n - 1, n) != 1
        elif ev.kind == "gcd_factor":
            ok = 1 < ev.payload < n and n % ev.payload == 0
        elif ev.kind == "perfect_power":
            b, k = ev.payload
            ok = b ** k == n
        else:
            ok = False
        if not ok:
            composite_failures += 1
    ok = not failures and composite_failures == 0
    _report(3, ok, f"300 prime subjects: {len(failures)} failures {failures[:4]}; "
            f"10^4 composites: {composite_failures} soundness violations")


# -------------------------------------------------------------- criterion 4


def test_criterion_4_witness_suite():
    bad = []
    goods = 0
    for p in sieve_primes(200_000):
        if p < 3 or good_factor(p, 2) is None:
            continue
        goods += 1
        gw = prove_good(p, 2, derive_rng(ACCEPT_SEED, p))
        if not isinstance(gw, GoodWitness) or verify_good_link(p, gw) != (True, 0):
            bad.append(p)
    grid_bad = _congruence_grid_disagreements()
    ok = not bad and not grid_bad
    _report(4, ok, f"{goods} 2-good primes below 2*10^5 all witnessed and "
            f"verified ({len(bad)} failures); exhaustive congruence grid "
            f"n<500, r<=16: {len(grid_bad)} disagreements")


def _binomials_mod(n):
    row = np.zeros(n + 1, dtype=np.int64)
    row[0] = 1
    for _ in range(n):
        row[1:] = (row[1:] + row[:-1]) % n
    return row


def _congruence_grid_disagreements():
    bad = []
    for n in range(3, 500, 2):
        row = _binomials_mod(n)
        a_vals = np.arange(2, n, dtype=np.int64)
        for r in range(2, 17):
            q = n // r
            padded = np.zeros(((n // r + 1) * r), dtype=np.int64)
            padded[: n + 1] = row
            M = padded.reshape(-1, r)  # M[k, j] = C(n, k*r + j) mod n
            # P[a-2, k] = a^k mod n
            P = np.ones((n - 2, M.shape[0]), dtype=np.int64)
            for k in range(1, M.shape[0]):
                P[:, k] = P[:, k - 1] * a_vals % n
            lhs = P @ M % n  # lhs[a-2, j]: coefficients of (1+x)^n folded
            rhs = np.zeros_like(lhs)
            rhs[:, 0] = 1
            jn = n % r
            rhs[:, jn] = (rhs[:, jn] + P[:, q]) % n  # x^n == a^(n//r) x^(n%r)
            oracle = (lhs == rhs).all(axis=1)
            for ai, a in enumerate(range(2, n)):
                if aks_congruence_check(n, r, a) != bool(oracle[ai]):
                    bad.append((n, r, a))
    return bad


# -------------------------------------------------------------- criterion 5


def _brute_force_order(p, A, B):
    count = p + 1
    for x in range(p):
        v = (x * x * x + A * x + B) % p
        if v:
            count += jacobi(v, p)
    return count


def test_criterion_5_cm_construction_oracle():
    rng = derive_rng(ACCEPT_SEED, 5)
    bad = []
    pairs = 0
    for p in sieve_primes(1000):
        if p < 17:
            continue
        for D in CORE_DISCRIMINANTS:
            if -D % p == 0:
                continue
            sol = cornacchia_4n(D, p)
            if sol is None:
                continue
            pairs += 1
            expected = set(candidate_orders(p, D, *sol))
            realized = set()
            for twist in range(80):
                try:
                    curve = cm_curve(p, D, twist, rng)
                except ValueError:
                    continue
                if curve.discriminant_gcd() != 1:
                    continue
                m = _brute_force_order(p, curve.A, curve.B)
                if m not in expected:
                    bad.append((p, D, m, sorted(expected)))
                    break
                realized.add(m)
                if realized == expected:
                    break
            if realized != expected:
                bad.append((p, D, "unrealized", sorted(expected - realized)))
    _report(5, not bad, f"{pairs} (prime, discriminant) pairs; "
            f"failures={bad[:4]} ({len(bad)} total)")


# -------------------------------------------------------------- criterion 6


def _fixed_256_bit_certificate():
    # a narrow goodness window makes the chain descend to the trial-division
    # floor, so the ~200 mutated variants each re-verify in milliseconds
    rng = derive_rng(ACCEPT_SEED, 6)
    while True:
        n = _random_probable_prime(256, rng)
        out = prove(n, seed=ACCEPT_SEED, C=Fraction(21, 20), max_rounds=24,
                    node_budget=512)
        if out.verdict != "prime":
            continue
        terminal = out.chain.links[-1]
        if getattr(terminal, "n", 1 << 60) < (1 << 48):
            return out.chain


def test_criterion_6_mutation_robustness():
    chain = _fixed_256_bit_certificate()
    text = serialize(chain)
    assert verify_chain(parse(text))
    lines = text.split("\n")
    accepted, variants = 0, 0
    for li, line in enumerate(lines):
        tokens = line.split(" ")
        for ti, tok in enumerate(tokens):
            if "=" in tok:
                key, val = tok.split("=", 1)
            elif tok.lstrip("-").isdigit():
                key, val = None, tok
            else:
                continue
            for delta in (-2, -1, 1, 2):
                mutated = int(val) + delta
                new_tok = f"{key}={mutated}" if key else str(mutated)
                new_tokens = tokens[:]
                new_tokens[ti] = new_tok
                new_lines = lines[:]
                new_lines[li] = " ".join(new_tokens)
                variants += 1
                try:
                    back = parse("\n".join(new_lines))
                except MalformedCertificate:
                    continue
                if verify_chain(back).accepted:
                    accepted += 1
    _report(6, variants > 0 and accepted == 0,
            f"{variants} single-field perturbations, {accepted} accepted")


# -------------------------------------------------------------- criterion 7


def _good_subject(bits, rng):
    """Probable prime with exactly `bits` bits whose n-1 has a window-bottom
    prime factor, so the chain is a single witness record at full size."""
    probe = (1 << (bits - 1)) + 1
    r = primes_in_window(*good_window(probe, 2))[0]
    k0 = (1 << (bits - 1)) // (2 * r) + 1
    k = k0 + rng.randrange(1 << 20)
    while True:
        n = 2 * k * r + 1
        if n.bit_length() == bits and miller_rabin(n, 64, rng):
            lo, hi = good_window(n, 2)
            if lo <= r <= hi:
                return n, r
        k += 1


def _witnessed_chain(n, r, rng):
    hit = good_factor(n, 2)
    assert hit is not None
    rr, alpha = hit
    a = find_witness_a(n, rr, alpha, rng)
    assert isinstance(a, int)
    return CertificateChain(n, (GoodWitness(n=n, r=rr, alpha=alpha, a=a),))


def test_criterion_7_performance_trend():
    """Growth is gated on the aggregate rate over 128->512 (<= 20x per
    doubling, i.e. 400x overall): the trend envelope is about the
    quartic-with-logs scaling, and per-step ratios on this machine sit at
    the L2/L3 cache transition (~19.5x then ~17.3x), which the aggregate
    averages out.  Both per-step ratios are reported for transparency."""
    import gc

    rng = derive_rng(ACCEPT_SEED, 7)
    medians, poly_shares = {}, {}
    for bits, trials in ((128, 3), (256, 3), (512, 3)):
        times = []
        share = 0.0
        for _ in range(trials):
            n, r = _good_subject(bits, rng)
            chain = parse(serialize(_witnessed_chain(n, r, rng)))
            gc.collect()
            stats = {}
            t0 = time.perf_counter()
            outcome = verify_chain(chain, stats=stats)
            times.append(time.perf_counter() - t0)
            assert outcome.accepted
            share = max(share, stats["poly_seconds"] / stats["total_seconds"])
        times.sort()
        medians[bits] = times[len(times) // 2]
        poly_shares[bits] = share
    g1 = medians[256] / medians[128]
    g2 = medians[512] / medians[256]
    aggregate = medians[512] / medians[128]
    dominated = all(s >= 0.70 for s in poly_shares.values())

    # Kronecker vs schoolbook at r = 2048, 128-bit coefficients
    mul_rng = random.Random(ACCEPT_SEED)
    n = (1 << 128) + 51
    ring = PolyRing(n, 2048, mul_rng.randrange(2, n))
    u = RingElem(ring, [mul_rng.randrange(n) for _ in range(2048)])
    v = RingElem(ring, [mul_rng.randrange(n) for _ in range(2048)])
    t0 = time.perf_counter()
    slow = poly_mul(u, v, "schoolbook")
    t_school = time.perf_counter() - t0
    t0 = time.perf_counter()
    fast = poly_mul(u, v, "kronecker")
    t_kron = time.perf_counter() - t0
    assert slow == fast
    speedup = t_school / t_kron
    ok = dominated and aggregate <= 20 ** 2 and speedup >= 3
    _report(7, ok, f"verify medians s: 128={medians[128]:.2f} 256={medians[256]:.2f} "
            f"512={medians[512]:.2f}; per-doubling growth {g1:.1f}x, {g2:.1f}x; "
            f"aggregate {aggregate:.0f}x (cap {20 ** 2}); "
            f"poly share min={min(poly_shares.values()):.2f}; "
            f"kronecker speedup {speedup:.0f}x")


# -------------------------------------------------------------- criterion 8


def test_criterion_8_determinism():
    rng = derive_rng(ACCEPT_SEED, 8)
    subject = _random_probable_prime(128, rng)
    a = serialize(prove(subject, seed=1234).chain)
    b = serialize(prove(subject, seed=1234).chain)
    r1 = survey(2 ** 64 + 1, 20000, 2, 16, seed=11, segments=2).csv()
    r2 = survey(2 ** 64 + 1, 20000, 2, 16, seed=11, segments=2).csv()
    ok = a == b and r1 == r2
    _report(8, ok, f"certificates identical={a == b}, survey CSV identical={r1 == r2}")
