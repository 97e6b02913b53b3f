"""Primality certificates via curve-order reduction and single-congruence
witnesses, with a deterministic verifier and prime-density survey tools."""

from .arith import (
    CompositeEvidence,
    NotPrimeError,
    UndecidedError,
    derive_rng,
    is_perfect_power,
    jacobi,
    miller_rabin,
    mod_pow,
    sieve_primes,
    sqrt_mod_prime,
)
from .certificate import (
    CertificateChain,
    MalformedCertificate,
    SmallPrime,
    VerifyOutcome,
    parse,
    serialize,
    verify_chain,
    verify_ecpp_link,
    verify_good_link,
)
from .ecpp import (
    CM_DISCRIMINANTS,
    CORE_DISCRIMINANTS,
    Curve,
    EcppLink,
    Point,
    candidate_orders,
    cm_curve,
    cornacchia_4n,
    ec_add,
    ec_mul,
    reduce_chain,
    reduce_to_good,
)
from .polyring import (
    PolyRing,
    RingElem,
    aks_congruence_check,
    poly_mul,
    pow_1_plus_x,
    ring_reduce,
    x_pow,
)
from .prover import ProveOutcome, prove
from .survey import SurveyRow, beta, beta_reference, survey, zero_divisor_count
from .witness import GoodWitness, find_witness_a, good_factor, good_window, prove_good

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
