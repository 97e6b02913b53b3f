"""Curve-order reduction: walk from an arbitrary probable prime to a nearby
2-good probable prime (or below the trial-division floor) through elliptic
curves with complex multiplication by small discriminants.  The nine
class-number-one discriminants come first; a fixed table of integer class
polynomials extends the list so that no prime runs out of usable curves.

A reduction link for n consists of a curve E over Z/nZ, a point P, the curve
order m, and the probable prime n' dividing m with n' > (n^(1/4) + 1)^2.
Primality of n' then transfers to n provided m*P = O while (m/n')*P stays
away from the identity modulo every factor of n.  The cofactor m/n' is what
lets a round shrink the working prime, so chains terminate.

All arithmetic is affine with explicit modular inversions; a non-invertible
denominator surfaces a factor of n as a FactorFound, which callers convert
into composite evidence.
"""

from dataclasses import dataclass

from .arith import (
    CompositeEvidence,
    NotPrimeError,
    derive_rng,
    gcd,
    is_prime_trial_division,
    isqrt,
    jacobi,
    miller_rabin,
    sieve_primes,
    sqrt_mod_prime,
)
from .hilbert import DISCRIMINANTS, invariant_mod
from .witness import good_factor

# the nine fundamental class-number-one discriminants; cheapest and first
CORE_DISCRIMINANTS = (-3, -4, -7, -8, -11, -19, -43, -67, -163)

# full supported list (ascending |D|), backed by the class polynomial table
CM_DISCRIMINANTS = DISCRIMINANTS

# how far into the discriminant list one reduction round looks before each
# early-out check; most rounds never leave the first batch
_SCAN_BATCHES = (16, 64, 144, len(CM_DISCRIMINANTS))

SMALL_PRIME_FLOOR = 1 << 16

_STRIP_LIMIT = 100_000
_strip_primes_cache = None


def _strip_primes():
    global _strip_primes_cache
    if _strip_primes_cache is None:
        _strip_primes_cache = sieve_primes(_STRIP_LIMIT)
    return _strip_primes_cache


class FactorFound(Exception):
    """Curve arithmetic exposed a nontrivial factor of the modulus."""

    def __init__(self, factor):
        super().__init__(f"factor {factor}")
        self.factor = factor


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + A*x + B over Z/nZ."""

    n: int
    A: int
    B: int

    def discriminant_gcd(self):
        return gcd((4 * self.A ** 3 + 27 * self.B ** 2) % self.n, self.n)


@dataclass(frozen=True)
class Point:
    """Projective marker form: Z == 0 is the identity, Z == 1 is affine."""

    X: int
    Y: int
    Z: int

    @property
    def is_identity(self):
        return self.Z == 0


IDENTITY = Point(0, 1, 0)


def on_curve(c, p):
    if p.is_identity:
        return True
    return (p.Y * p.Y - (p.X ** 3 + c.A * p.X + c.B)) % c.n == 0


def _inv_or_factor(d, n):
    d %= n
    g = gcd(d, n)
    if g == 1:
        return pow(d, -1, n)
    if g == n:
        raise ValueError("inversion of zero; group-law dispatch is broken")
    raise FactorFound(g)


def ec_add(c, p, q):
    """Group law on c; raises FactorFound when n's compositeness leaks."""
    if p.is_identity:
        return q
    if q.is_identity:
        return p
    n = c.n
    if (p.X - q.X) % n == 0:
        if (p.Y + q.Y) % n == 0:
            return IDENTITY
        if (p.Y - q.Y) % n != 0:
            # points agree in x but not in +-y: impossible over a prime field
            g = gcd((p.Y - q.Y) % n, n)
            raise FactorFound(g if 1 < g < n else gcd((p.Y + q.Y) % n, n))
        if p.Y % n == 0:
            return IDENTITY
        s = (3 * p.X * p.X + c.A) * _inv_or_factor(2 * p.Y, n) % n
    else:
        s = (q.Y - p.Y) * _inv_or_factor(q.X - p.X, n) % n
    x3 = (s * s - p.X - q.X) % n
    y3 = (s * (p.X - x3) - p.Y) % n
    return Point(x3, y3, 1)


def ec_mul(c, k, p):
    """k*p by double-and-add; FactorFound propagates from ec_add."""
    k = int(k)
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    acc = IDENTITY
    while k:
        if k & 1:
            acc = ec_add(c, acc, p)
        p = ec_add(c, p, p)
        k >>= 1
    return acc


def cornacchia_4n(D, n):
    """Solve 4n = t^2 + |D|*y^2 for the supported discriminant D.

    Returns (t, y) or None when no solution exists.  A square-root
    contradiction inside propagates as NotPrimeError.
    """
    if D not in CM_DISCRIMINANTS:
        raise ValueError(f"unsupported discriminant {D}")
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be an odd probable prime")
    if D % n == 0:
        return None
    x0 = sqrt_mod_prime(D % n, n)
    if x0 is None:
        return None
    if (x0 - D) % 2 != 0:
        x0 = n - x0
    a, b = 2 * n, x0
    limit = isqrt(4 * n)
    while b > limit:
        a, b = b, a % b
    v = 4 * n - b * b
    if v % -D != 0:
        return None
    c = v // -D
    y = isqrt(c)
    if y * y != c:
        return None
    return b, y


def candidate_orders(n, D, t, y):
    """All possible orders of curves with CM by D over Z/nZ, given the
    representation 4n = t^2 + |D|*y^2.  Every value lies in the Hasse
    interval [n+1-2*sqrt(n), n+1+2*sqrt(n)]."""
    base = n + 1
    if D == -3:
        u = (t + 3 * y) // 2
        v = abs(t - 3 * y) // 2
        raw = [base - t, base + t, base - u, base + u, base - v, base + v]
    elif D == -4:
        raw = [base - t, base + t, base - 2 * y, base + 2 * y]
    else:
        raw = [base - t, base + t]
    seen = []
    for m in raw:
        if m not in seen:
            seen.append(m)
    return seen


def _twist_scalar(n, twist_index):
    # index 0 is the identity twist; index 1 the first non-residue, which
    # is the other quadratic twist class; later indices are a fallback walk
    if twist_index == 0:
        return 1
    if twist_index == 1:
        c = 2
        while jacobi(c, n) != -1:
            c += 1
            if c > 1000:
                raise ValueError("no quadratic non-residue found")
        return c
    return twist_index % n


def cm_curve(n, D, twist_index, rng=None):
    """A curve over Z/nZ with CM by the order of discriminant D.

    For D = -3 the sextic twists y^2 = x^3 + B, for D = -4 the quartic
    twists y^2 = x^3 + A*x; otherwise quadratic twists of the curve built
    from a root of the class polynomial of D modulo n.
    """
    if D not in CM_DISCRIMINANTS:
        raise ValueError(f"unsupported discriminant {D}")
    if D == -3:
        c = (twist_index + 1) % n
        if c == 0:
            raise ValueError("degenerate twist parameter")
        return Curve(n, 0, c)
    if D == -4:
        c = (twist_index + 1) % n
        if c == 0:
            raise ValueError("degenerate twist parameter")
        return Curve(n, c, 0)
    j = invariant_mod(D, n)
    if j is None:
        raise ValueError("class polynomial has no root modulo n")
    j %= n
    if j == 0 or j == 1728 % n:
        raise ValueError("degenerate class invariant for this modulus")
    c = _twist_scalar(n, twist_index)
    if c % n == 0:
        raise ValueError("degenerate twist parameter")
    den = (1728 - j) % n
    g = gcd(den, n)
    if g == n:
        raise ValueError("j-invariant degenerate for this modulus")
    if g != 1:
        raise NotPrimeError(CompositeEvidence("gcd_factor", g))
    k = j * pow(den, -1, n) % n
    A = 3 * k * c * c % n
    B = 2 * k * pow(c, 3, n) % n
    if A == 0 or B == 0:
        raise ValueError("degenerate twist parameter")
    return Curve(n, A, B)


def find_point(curve, rng, tries=256):
    """Random affine point with y != 0 via Tonelli-Shanks."""
    n = curve.n
    for _ in range(tries):
        x = rng.randrange(n)
        rhs = (x * x * x + curve.A * x + curve.B) % n
        if rhs == 0:
            continue
        y = sqrt_mod_prime(rhs, n)
        if y is None:
            continue
        return Point(x, y, 1)
    raise ValueError("no curve point found; curve looks degenerate")


@dataclass(frozen=True)
class EcppLink:
    """One reduction step: primality of n_prime implies primality of n.

    m is the full curve order (in the Hasse interval of n); n_prime divides
    m and exceeds (n^(1/4)+1)^2; the cofactor m/n_prime is smooth.
    """

    n: int
    D: int
    curve: Curve
    point: Point
    m: int
    n_prime: int


def order_lower_bound(n):
    """Conservative integer bound: any d >= this exceeds (n^(1/4)+1)^2."""
    u = isqrt(isqrt(n))
    return (u + 2) ** 2


def strip_smooth(m):
    """(omega, rem): omega collects all prime factors <= 10^5 of m.

    When rem > 1 and rem < 10^10, rem is certified prime by the stripping
    itself (no factor below its square root remains).
    """
    omega, rem = 1, m
    for p in _strip_primes():
        if p * p > rem:
            break
        while rem % p == 0:
            omega *= p
            rem //= p
    return omega, rem


def _pollard_rho_brent(n, rng, max_iters=1 << 18):
    """Bounded Brent-cycle rho: a nontrivial factor of odd composite n, or
    None when the iteration budget runs out.  Special-purpose order
    splitting for reduction candidates, not a general factoring service."""
    if n % 2 == 0:
        return 2
    for _ in range(3):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m_batch = 128
        g, r, q = 1, 1, 1
        x = ys = y
        count = 0
        while g == 1 and count < max_iters:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m_batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m_batch
            count += r
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _prime_parts(value, rng, depth=0):
    """Best-effort split of value into (prime_factors, unsplit_composites)
    under the rho budget; primality of parts decided as in stripping."""
    if value == 1:
        return [], []
    if _is_probable_prime_order(value, rng):
        return [value], []
    if depth >= 6:
        return [], [value]
    f = _pollard_rho_brent(value, rng)
    if f is None:
        return [], [value]
    p1, c1 = _prime_parts(f, rng, depth + 1)
    p2, c2 = _prime_parts(value // f, rng, depth + 1)
    return p1 + p2, c1 + c2


def _is_probable_prime_order(rem, rng, mr_rounds=32):
    if rem < 2:
        return False
    if rem < _STRIP_LIMIT ** 2:
        # stripping already removed every factor below sqrt(rem)
        return True
    return miller_rabin(rem, mr_rounds, rng)


@dataclass(frozen=True)
class _Candidate:
    D: int
    idx: int
    m: int
    n_prime: int
    kind: str  # "small" | "good" | "other"


def _node_candidates(n, C, rng, mr_rounds=32, rescue=False):
    """All usable reduction candidates at node n, deterministically ordered.

    Discriminants are scanned ascending |D| in batches; the scan stops as
    soon as a terminal candidate (2-good or below the trial-division floor)
    appears or enough descent candidates have accumulated.  Terminals come
    first in (|D|, order-index) priority; the rest follow by ascending
    n_prime so the chain shrinks as fast as possible.

    With rescue=True the scan covers every discriminant and additionally
    splits composite order parts with bounded rho: any prime factor above
    the fourth-root bound is a usable step.  Callers use it as a last
    resort when the fast candidates all dead-end.
    """
    lower = order_lower_bound(n)
    terminal, other, rejects = [], [], []

    def classify(D, idx, m, npr):
        if npr == n:
            return  # stepping to itself proves nothing
        if npr < SMALL_PRIME_FLOOR:
            if is_prime_trial_division(npr):
                terminal.append(_Candidate(D, idx, m, npr, "small"))
        elif good_factor(npr, C) is not None:
            terminal.append(_Candidate(D, idx, m, npr, "good"))
        else:
            other.append(_Candidate(D, idx, m, npr, "other"))

    scanned = 0
    for batch_end in _SCAN_BATCHES:
        for D in CM_DISCRIMINANTS[scanned:batch_end]:
            sol = cornacchia_4n(D, n)
            if sol is None:
                continue
            t, y = sol
            for idx, m in enumerate(candidate_orders(n, D, t, y)):
                if m < 2:
                    continue
                omega, rem = strip_smooth(m)
                if rem == 1 or rem < lower:
                    continue
                if not _is_probable_prime_order(rem, rng, mr_rounds):
                    rejects.append((D, idx, m, rem))
                    continue
                classify(D, idx, m, rem)
        scanned = batch_end
        if not rescue and (terminal or len(other) >= 6):
            break
    if rescue or (not terminal and not other):
        found = 0
        for D, idx, m, rem in rejects:
            primes, _ = _prime_parts(rem, rng)
            for q in sorted(set(primes)):
                if q >= lower:
                    classify(D, idx, m, q)
                    found += 1
            if found >= 3:
                break
    terminal.sort(key=lambda c: (abs(c.D), c.idx))
    other.sort(key=lambda c: (c.n_prime, abs(c.D), c.idx))
    return terminal, other


_TWIST_TRIES = {-3: 48, -4: 32}
_TWIST_TRIES_DEFAULT = 8
_POINTS_PER_TWIST = 8


def build_link(n, D, m, n_prime, rng):
    """Locate the twist of discriminant D over Z/nZ whose order is m and a
    point establishing it; None when the twist search caps out."""
    if D not in (-3, -4) and invariant_mod(D, n) is None:
        return None
    omega = m // n_prime
    tries = _TWIST_TRIES.get(D, _TWIST_TRIES_DEFAULT)
    for twist_index in range(tries):
        try:
            curve = cm_curve(n, D, twist_index, rng)
        except ValueError:
            continue
        if curve.discriminant_gcd() != 1:
            continue
        for _ in range(_POINTS_PER_TWIST):
            try:
                q = find_point(curve, rng)
            except ValueError:
                break
            if not ec_mul(curve, m, q).is_identity:
                break  # order cannot be m: wrong twist (Lagrange)
            if omega == 1 or not ec_mul(curve, omega, q).is_identity:
                return EcppLink(n=n, D=D, curve=curve, point=q, m=m, n_prime=n_prime)
    return None


def reduce_to_good(n, C=2, rng=None, mr_rounds=32):
    """One reduction round accepting only 2-good (or tiny) prime orders.

    Returns an EcppLink, CompositeEvidence about n, or None when every
    discriminant is exhausted.
    """
    if rng is None:
        rng = derive_rng(0, n)
    if n < SMALL_PRIME_FLOOR or n % 2 == 0:
        raise ValueError("reduction requires an odd probable prime >= 2^16")
    try:
        terminal, _ = _node_candidates(n, C, rng, mr_rounds)
        for cand in terminal:
            if cand.kind != "good":
                continue
            link = build_link(n, cand.D, cand.m, cand.n_prime, rng)
            if link is not None:
                return link
    except (NotPrimeError, FactorFound) as exc:
        return _exc_evidence(exc)
    return None


def _exc_evidence(exc):
    if isinstance(exc, FactorFound):
        return CompositeEvidence("ec_arithmetic_factor", exc.factor)
    return exc.evidence


@dataclass
class ChainResult:
    links: list
    terminal: int


def reduce_chain(n, C=2, max_rounds=8, rng=None, mr_rounds=32, node_budget=512):
    """Depth-first reduction with backtracking.

    Walks probable-prime curve orders until one is 2-good or drops below the
    trial-division floor.  Returns ChainResult, CompositeEvidence about n
    itself, or None when the search space (depth or node budget) runs out.
    """
    if rng is None:
        rng = derive_rng(0, n)
    if n < SMALL_PRIME_FLOOR or n % 2 == 0:
        raise ValueError("reduction requires an odd probable prime >= 2^16")
    budget = [int(node_budget)]

    def try_candidates(v, depth, terminal, other, tried):
        for cand in terminal:
            key = (cand.D, cand.idx, cand.n_prime)
            if key in tried:
                continue
            tried.add(key)
            link = build_link(v, cand.D, cand.m, cand.n_prime, rng)
            if link is not None:
                return [link]
        for cand in other:
            key = (cand.D, cand.idx, cand.n_prime)
            if key in tried:
                continue
            tried.add(key)
            link = build_link(v, cand.D, cand.m, cand.n_prime, rng)
            if link is None:
                continue
            try:
                tail = walk(cand.n_prime, depth + 1)
            except (NotPrimeError, FactorFound):
                continue  # the intermediate was composite; its subtree dies
            if tail is not None:
                return [link] + tail
        return None

    def walk(v, depth):
        if depth >= max_rounds or budget[0] <= 0:
            return None
        budget[0] -= 1
        tried = set()
        terminal, other = _node_candidates(v, C, rng, mr_rounds)
        found = try_candidates(v, depth, terminal, other, tried)
        if found is not None:
            return found
        if budget[0] <= 0:
            return None
        # everything fast dead-ended: re-scan with rho order splitting
        terminal, other = _node_candidates(v, C, rng, mr_rounds, rescue=True)
        return try_candidates(v, depth, terminal, other, tried)

    try:
        links = walk(n, 0)
    except (NotPrimeError, FactorFound) as exc:
        return _exc_evidence(exc)
    if links is None:
        return None
    return ChainResult(links=links, terminal=links[-1].n_prime)
