"""End-to-end proving pipeline.

Routing for an input n:

* n < 2^16: settle by trial division; a prime gets a GOOD record when it is
  2-good (witness available) and a SMALL record otherwise.
* otherwise: perfect-power screen, small-factor screen, Miller-Rabin screen;
  then a GOOD record directly when n is 2-good, else curve-order reduction
  until a 2-good (or tiny) prime is reached, followed by its witness.

Every composite verdict carries re-checkable evidence.  The whole pipeline
is a function of (n, seed): certificates are byte-identical across runs.
"""

from dataclasses import dataclass

from .arith import (
    CompositeEvidence,
    UndecidedError,
    composite_evidence,
    derive_rng,
    is_perfect_power,
    is_prime_trial_division,
    miller_rabin,
    small_primes,
)
from .certificate import CertificateChain, SmallPrime
from .ecpp import ChainResult, SMALL_PRIME_FLOOR, reduce_chain
from .witness import GoodWitness, prove_good

_SCREEN_PRIMES = 256  # trial-divide big inputs by this many small primes


@dataclass(frozen=True)
class ProveOutcome:
    verdict: str  # "prime" | "composite" | "undecided"
    chain: object = None  # CertificateChain when verdict == "prime"
    evidence: object = None  # CompositeEvidence when verdict == "composite"
    detail: str = ""


def _composite(ev):
    return ProveOutcome(verdict="composite", evidence=ev)


def _small_prime_outcome(n, C, rng):
    if n == 2:
        return ProveOutcome("prime", CertificateChain(n, (SmallPrime(n),)))
    witness = prove_good(n, C, rng)
    if isinstance(witness, GoodWitness):
        return ProveOutcome("prime", CertificateChain(n, (witness,)))
    # not 2-good (or no window below the floor): trial division carries it
    return ProveOutcome("prime", CertificateChain(n, (SmallPrime(n),)))


def prove(n, seed=0, C=2, mr_rounds=32, max_rounds=8, node_budget=512, restarts=3):
    """Prove n prime (with certificate) or composite (with evidence).

    Deterministic in (n, seed).  Returns verdict "undecided" only when the
    randomized searches hit their caps, which a different seed normally
    resolves.
    """
    n = int(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    for attempt in range(max(1, restarts)):
        rng = derive_rng(seed, n & ((1 << 64) - 1), n >> 64, attempt)
        try:
            return _prove_once(n, C, mr_rounds, max_rounds, node_budget, rng)
        except UndecidedError as exc:
            last = str(exc)
    return ProveOutcome("undecided", detail=last)


def _prove_once(n, C, mr_rounds, max_rounds, node_budget, rng):
    if n == 2:
        return ProveOutcome("prime", CertificateChain(n, (SmallPrime(n),)))
    if n % 2 == 0:
        return _composite(CompositeEvidence("gcd_factor", 2))
    pp = is_perfect_power(n)
    if pp is not None:
        return _composite(CompositeEvidence("perfect_power", pp))
    if n < SMALL_PRIME_FLOOR:
        p = _trial_factor(n)
        if p is not None:
            return _composite(CompositeEvidence("gcd_factor", p))
        return _small_prime_outcome(n, C, rng)

    for p in small_primes()[:_SCREEN_PRIMES]:
        if n % p == 0:
            return _composite(CompositeEvidence("gcd_factor", p))
    if not miller_rabin(n, mr_rounds, rng):
        ev = composite_evidence(n, rounds=mr_rounds * 2, rng=rng)
        if ev is None:
            raise UndecidedError("compositeness detected but no evidence extracted")
        return _composite(ev)

    got = prove_good(n, C, rng)
    if isinstance(got, GoodWitness):
        return ProveOutcome("prime", CertificateChain(n, (got,)))
    if isinstance(got, CompositeEvidence):
        return _composite(got)

    reduced = reduce_chain(
        n, C, max_rounds=max_rounds, rng=rng, mr_rounds=mr_rounds,
        node_budget=node_budget,
    )
    if isinstance(reduced, CompositeEvidence):
        return _composite(reduced)
    if reduced is None:
        raise UndecidedError("curve-order reduction exhausted its search space")
    return _finish_chain(n, reduced, C, rng)


def _finish_chain(n, reduced: ChainResult, C, rng):
    terminal = reduced.terminal
    if terminal < SMALL_PRIME_FLOOR:
        tail = SmallPrime(terminal)
    else:
        witness = prove_good(terminal, C, rng)
        if not isinstance(witness, GoodWitness):
            # the reduction believed the terminal was a 2-good probable
            # prime; any other outcome means a vanishing-probability MR
            # slip, so restart with fresh randomness
            raise UndecidedError("terminal witness search failed; retrying")
        tail = witness
    return ProveOutcome("prime", CertificateChain(n, tuple(reduced.links) + (tail,)))


def _trial_factor(n):
    for p in small_primes():
        if p * p > n:
            return None
        if n % p == 0 and n != p:
            return p
    return None
