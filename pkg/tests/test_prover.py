import pytest

from primecert.certificate import SmallPrime, parse, serialize, verify_chain
from primecert.prover import prove
from primecert.witness import GoodWitness


def test_small_primes_get_small_or_good_chains():
    out = prove(2)
    assert out.verdict == "prime" and isinstance(out.chain.links[0], SmallPrime)
    out = prove(59)
    assert out.verdict == "prime" and isinstance(out.chain.links[0], SmallPrime)
    out = prove(227)
    assert out.verdict == "prime"
    assert isinstance(out.chain.links[0], GoodWitness)  # 2-good small prime
    assert len(out.chain.links) == 1


def test_composites_yield_checkable_evidence():
    cases = {
        4: "gcd_factor",  # even inputs short-circuit before the power check
        27: "perfect_power",
        221: "gcd_factor",
        1024: "gcd_factor",
        3 ** 9: "perfect_power",
    }
    for n, kind in cases.items():
        out = prove(n)
        assert out.verdict == "composite"
        assert out.evidence.kind == kind
    out = prove(2 ** 61 + 1)  # composite above the screen, perfect-power free
    assert out.verdict == "composite"
    ev = out.evidence
    if ev.kind == "fermat_failure":
        assert pow(ev.payload, 2 ** 61, 2 ** 61 + 1) != 1
    elif ev.kind == "gcd_factor":
        assert 1 < ev.payload < 2 ** 61 + 1 and (2 ** 61 + 1) % ev.payload == 0


def test_prove_rejects_tiny_input():
    with pytest.raises(ValueError):
        prove(1)


def test_good_subject_gets_single_witness_link():
    # 2^64 + 49 has log2^2 ~ 4096; make a prime with a factor in window
    from primecert.arith import is_prime_trial_division, miller_rabin, derive_rng
    from primecert.witness import good_factor, good_window, primes_in_window

    n = None
    k = (1 << 64) // (2 * 4099) + 1
    while n is None:
        cand = 2 * k * 4099 + 1
        if miller_rabin(cand, 32, derive_rng(1, k)):
            lo, hi = good_window(cand, 2)
            if lo <= 4099 <= hi and good_factor(cand, 2) is not None:
                n = cand
        k += 1
    out = prove(n, seed=3)
    assert out.verdict == "prime"
    assert len(out.chain.links) == 1
    assert isinstance(out.chain.links[0], GoodWitness)
    assert verify_chain(out.chain)


def test_chain_roundtrip_64_bit():
    out = prove((1 << 64) + 13, seed=21)
    assert out.verdict == "prime"
    text = serialize(out.chain)
    assert verify_chain(parse(text))


def test_determinism_byte_identical():
    a = serialize(prove((1 << 80) + 13, seed=77).chain)
    b = serialize(prove((1 << 80) + 13, seed=77).chain)
    assert a == b
    c = serialize(prove((1 << 80) + 13, seed=78).chain)
    assert isinstance(c, str)  # different seed may or may not differ; just sane


def test_routing_boundary_sizes():
    # SMALL below the floor, curve links just above it, Mersenne chains
    expected_kinds = {
        3: "S", 5: "S", 65521: "S",
        65537: "ES",  # not 2-good, one reduction to the floor
        65539: "G",   # 2-good
    }
    for n, kinds in expected_kinds.items():
        out = prove(n, seed=1)
        assert out.verdict == "prime"
        got = "".join(type(l).__name__[0] for l in out.chain.links)
        assert got == kinds, (n, got)
        assert verify_chain(parse(serialize(out.chain)))
    for n in (2 ** 31 - 1, 2 ** 61 - 1):
        out = prove(n, seed=1)
        assert out.verdict == "prime"
        assert verify_chain(parse(serialize(out.chain)))


def test_no_artifact_for_composites():
    out = prove(2 ** 64 + 15, seed=1)
    assert out.verdict == "composite"
    assert out.chain is None
