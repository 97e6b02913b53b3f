"""Certificate chains: data model, canonical text format, deterministic
verifier.

Wire format (CERTCHAIN v1), one record per line, '\\n' endings, no trailing
whitespace:

    CERTCHAIN v1
    N <decimal>
    ECPP D=<int> A=<dec> B=<dec> PX=<dec> PY=<dec> M=<dec> NP=<dec>
    GOOD R=<dec> ALPHA=<dec> A=<dec>
    SMALL N=<dec>
    END

The subject is the N line; each ECPP record hands primality of NP up to the
enclosing modulus; the final record is GOOD (single-congruence witness) or
SMALL (below the 2^16 trial-division floor).  Integers are canonical
decimals: no leading zeros, no plus signs.  parse(serialize(c)) == c.

Verification walks the chain last-to-first so that each curve record already
has its order's prime factor established, and uses no randomness anywhere.
"""

import time
from dataclasses import dataclass

from .arith import gcd, is_perfect_power, is_prime_trial_division, isqrt
from .ecpp import (
    CM_DISCRIMINANTS,
    Curve,
    EcppLink,
    FactorFound,
    Point,
    SMALL_PRIME_FLOOR,
    ec_mul,
    on_curve,
    order_lower_bound,
)
from .polyring import aks_congruence_check
from .witness import GoodWitness, log2_bounds

_FRAC_BITS = 64


@dataclass(frozen=True)
class SmallPrime:
    """Base case: a subject below 2^16, checkable by trial division."""

    n: int


@dataclass(frozen=True)
class CertificateChain:
    subject: int
    links: tuple

    def __iter__(self):
        return iter(self.links)


class MalformedCertificate(Exception):
    def __init__(self, reason, line_no=None):
        at = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"{reason}{at}")
        self.reason = reason
        self.line_no = line_no


@dataclass(frozen=True)
class VerifyOutcome:
    accepted: bool
    link_index: int = -1
    condition: int = 0
    reason: str = ""

    def __bool__(self):
        return self.accepted


# ---------------------------------------------------------------------------
# serialization


def _fmt_link(link):
    if isinstance(link, EcppLink):
        return (
            f"ECPP D={link.D} A={link.curve.A} B={link.curve.B} "
            f"PX={link.point.X} PY={link.point.Y} M={link.m} NP={link.n_prime}"
        )
    if isinstance(link, GoodWitness):
        return f"GOOD R={link.r} ALPHA={link.alpha} A={link.a}"
    if isinstance(link, SmallPrime):
        return f"SMALL N={link.n}"
    raise TypeError(f"unknown link type {type(link)!r}")


def serialize(chain):
    """Canonical text form; injective, and parse(serialize(c)) == c."""
    lines = ["CERTCHAIN v1", f"N {chain.subject}"]
    lines.extend(_fmt_link(link) for link in chain.links)
    lines.append("END")
    return "\n".join(lines) + "\n"


def _parse_decimal(s, line_no, signed=False):
    body = s
    if signed and s.startswith("-"):
        body = s[1:]
        if body == "0":
            raise MalformedCertificate(f"non-canonical integer: {s!r}", line_no)
    if not body.isdigit():
        raise MalformedCertificate(f"not a decimal integer: {s!r}", line_no)
    if len(body) > 1 and body[0] == "0":
        raise MalformedCertificate(f"non-canonical integer: {s!r}", line_no)
    return int(s)


def _parse_fields(parts, layout, line_no):
    if len(parts) != len(layout):
        raise MalformedCertificate(
            f"expected {len(layout)} fields, got {len(parts)}", line_no
        )
    out = []
    for part, (name, signed) in zip(parts, layout):
        prefix = name + "="
        if not part.startswith(prefix):
            raise MalformedCertificate(f"expected field {name}=, got {part!r}", line_no)
        out.append(_parse_decimal(part[len(prefix) :], line_no, signed))
    return out


_ECPP_FIELDS = [("D", True), ("A", False), ("B", False), ("PX", False),
                ("PY", False), ("M", False), ("NP", False)]
_GOOD_FIELDS = [("R", False), ("ALPHA", False), ("A", False)]
_SMALL_FIELDS = [("N", False)]


def parse(data):
    """Strict parse of the CERTCHAIN v1 format; raises MalformedCertificate."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedCertificate(f"not utf-8: {exc}") from None
    if not data.endswith("\n"):
        raise MalformedCertificate("missing trailing newline")
    lines = data[:-1].split("\n")
    if len(lines) < 4:
        raise MalformedCertificate("truncated certificate")
    if lines[0] != "CERTCHAIN v1":
        raise MalformedCertificate(f"unknown header {lines[0]!r}", 1)
    if lines[-1] != "END":
        raise MalformedCertificate("missing END record", len(lines))
    head = lines[1].split(" ")
    if len(head) != 2 or head[0] != "N":
        raise MalformedCertificate("second line must be the subject record", 2)
    subject = _parse_decimal(head[1], 2)

    links = []
    current = subject  # modulus threaded into the next record
    for line_no, line in enumerate(lines[2:-1], start=3):
        if line != line.strip() or "  " in line:
            raise MalformedCertificate("stray whitespace", line_no)
        parts = line.split(" ")
        tag = parts[0]
        if tag == "ECPP":
            D, A, B, PX, PY, M, NP = _parse_fields(parts[1:], _ECPP_FIELDS, line_no)
            link = EcppLink(
                n=current,
                D=D,
                curve=Curve(current, A, B),
                point=Point(PX, PY, 1),
                m=M,
                n_prime=NP,
            )
            current = NP
        elif tag == "GOOD":
            R, ALPHA, A = _parse_fields(parts[1:], _GOOD_FIELDS, line_no)
            link = GoodWitness(n=current, r=R, alpha=ALPHA, a=A)
        elif tag == "SMALL":
            (N,) = _parse_fields(parts[1:], _SMALL_FIELDS, line_no)
            link = SmallPrime(n=N)
        else:
            raise MalformedCertificate(f"unknown record {tag!r}", line_no)
        links.append(link)
    if not links:
        raise MalformedCertificate("no links")
    return CertificateChain(subject=subject, links=tuple(links))


# ---------------------------------------------------------------------------
# verification


def _r_at_least_log2_squared(n, r):
    # exact integer test r >= log2(n)^2, rounded outward: never admits an
    # invalid r even when log2(n)^2 sits within 2^-60 of an integer
    _, hi = log2_bounds(n)
    return (r << (2 * _FRAC_BITS)) >= hi * hi


def verify_good_link(n, w, stats=None):
    """All eight witness conditions; acceptance proves n prime outright.

    Returns (accepted, failed_condition): condition numbering is
    1 n odd >= 3; 2 not a perfect power; 3 r prime (deterministic, r < 2^32);
    4 r >= log2(n)^2; 5 r^alpha exactly divides n-1; 6 a^(r^alpha) = 1 mod n;
    7 gcd(a^(r^(alpha-1)) - 1, n) = 1; 8 the ring congruence holds.
    """
    n, r, alpha, a = int(n), int(w.r), int(w.alpha), int(w.a)
    if n < 3 or n % 2 == 0:
        return False, 1
    if is_perfect_power(n) is not None:
        return False, 2
    if r < 2 or r >= 1 << 32 or not is_prime_trial_division(r):
        return False, 3
    if not _r_at_least_log2_squared(n, r):
        return False, 4
    if alpha < 1:
        return False, 5
    ralpha = r ** alpha
    if (n - 1) % ralpha != 0 or ((n - 1) // ralpha) % r == 0:
        return False, 5
    if not 1 < a < n:
        return False, 6
    if pow(a, ralpha, n) != 1:
        return False, 6
    if gcd(pow(a, r ** (alpha - 1), n) - 1, n) != 1:
        return False, 7
    t0 = time.perf_counter()
    holds = aks_congruence_check(n, r, a)
    if stats is not None:
        stats["poly_seconds"] = stats.get("poly_seconds", 0.0) + (
            time.perf_counter() - t0
        )
    if not holds:
        return False, 8
    return True, 0


def _is_square(v):
    s = isqrt(v)
    return s * s == v


def verify_ecpp_link(link):
    """Order-transfer conditions for one curve record.

    Numbering: 1 gcd(n,6)=1; 2 nonsingular curve with canonical fields;
    3 P a canonical affine point on the curve; 4 D supported and m consistent
    with a CM order for D (this also pins m inside the Hasse interval);
    5 n' divides m and n' exceeds the fourth-root bound; 6 the cofactor
    multiple (m/n')P is defined and not the identity; 7 m*P is the identity.
    Factor events during curve arithmetic reject at the condition hit.
    """
    n = int(link.n)
    if n < 5 or gcd(n, 6) != 1:
        return False, 1
    c = link.curve
    if c.n != n or not (0 <= c.A < n and 0 <= c.B < n):
        return False, 2
    if c.discriminant_gcd() != 1:
        return False, 2
    p = link.point
    if p.Z != 1 or not (0 <= p.X < n and 0 <= p.Y < n):
        return False, 3
    if not on_curve(c, p):
        return False, 3
    m, npr = int(link.m), int(link.n_prime)
    if link.D not in CM_DISCRIMINANTS:
        return False, 4
    tr = n + 1 - m
    v = 4 * n - tr * tr
    if v <= 0 or v % -link.D != 0 or not _is_square(v // -link.D):
        return False, 4
    if npr < 2 or m % npr != 0 or npr < order_lower_bound(n):
        return False, 5
    try:
        t = ec_mul(c, m // npr, p)
    except FactorFound:
        return False, 6
    if t.is_identity:
        return False, 6
    try:
        final = ec_mul(c, npr, t)
    except FactorFound:
        return False, 7
    if not final.is_identity:
        return False, 7
    return True, 0


def verify_chain(chain, stats=None):
    """Deterministic full-chain verification, deepest link first.

    Returns a VerifyOutcome; when `stats` is a dict it accrues wall-clock
    split into 'poly_seconds' (ring congruences), 'ec_seconds' (curve
    records) and 'total_seconds'.
    """
    t_start = time.perf_counter()
    if stats is not None:
        stats.setdefault("poly_seconds", 0.0)
        stats.setdefault("ec_seconds", 0.0)

    def done(outcome):
        if stats is not None:
            stats["total_seconds"] = (
                stats.get("total_seconds", 0.0) + time.perf_counter() - t_start
            )
        return outcome

    links = list(chain.links)
    if not links:
        return done(VerifyOutcome(False, -1, 0, "empty chain"))
    # structural pass: moduli must thread subject -> ... -> terminal
    current = chain.subject
    for i, link in enumerate(links):
        is_last = i == len(links) - 1
        if isinstance(link, EcppLink):
            if is_last:
                return done(VerifyOutcome(False, i, 0, "chain ends on a curve record"))
            if link.n != current:
                return done(VerifyOutcome(False, i, 0, "modulus threading broken"))
            current = link.n_prime
        elif isinstance(link, (GoodWitness, SmallPrime)):
            if not is_last:
                return done(VerifyOutcome(False, i, 0, "terminal record not last"))
            if link.n != current:
                return done(VerifyOutcome(False, i, 0, "terminal subject mismatch"))
        else:
            return done(VerifyOutcome(False, i, 0, f"unknown link {type(link)!r}"))

    for i in range(len(links) - 1, -1, -1):
        link = links[i]
        if isinstance(link, SmallPrime):
            if not (2 <= link.n < SMALL_PRIME_FLOOR):
                return done(VerifyOutcome(False, i, 1, "not below the small floor"))
            if not is_prime_trial_division(link.n):
                return done(VerifyOutcome(False, i, 2, "trial division refutes"))
        elif isinstance(link, GoodWitness):
            ok, cond = verify_good_link(link.n, link, stats=stats)
            if not ok:
                return done(VerifyOutcome(False, i, cond, f"witness condition {cond}"))
        else:
            t0 = time.perf_counter()
            ok, cond = verify_ecpp_link(link)
            if stats is not None:
                stats["ec_seconds"] += time.perf_counter() - t0
            if not ok:
                return done(VerifyOutcome(False, i, cond, f"curve condition {cond}"))
    return done(VerifyOutcome(True))
