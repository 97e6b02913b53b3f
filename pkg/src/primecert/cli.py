"""Command-line interface: prove, verify, survey, beta, bench.

Exit codes are the machine contract: 0 success/accept/prime, 1
composite/reject, 2 undecided/exhausted, 3 usage error or malformed input.

Large arguments accept the shorthand a^b, a^b+c, a^b-c (one caret, one
trailing +/- term), so intervals around 2^500 stay typeable.
"""

import argparse
import re
import statistics
import sys
import time
from fractions import Fraction

from .arith import derive_rng, miller_rabin
from .certificate import MalformedCertificate, parse, serialize, verify_chain
from .polyring import PolyRing, pow_1_plus_x
from .prover import prove
from .survey import beta, beta_reference, survey
from .witness import good_window, primes_in_window

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3

_INT_EXPR = re.compile(r"^(\d+)(?:\^(\d+))?([+-]\d+)?$")


def parse_int_expr(text):
    """Decimal integer, optionally a^b with one +c or -c tail."""
    m = _INT_EXPR.match(text.strip())
    if not m:
        raise ValueError(f"not a number: {text!r}")
    base = int(m.group(1))
    value = base ** int(m.group(2)) if m.group(2) else base
    if m.group(3):
        value += int(m.group(3))
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    top = _Parser(prog="primecert", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="prove primality, emitting a certificate")
    p.add_argument("n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=32, help="Miller-Rabin rounds")
    p.add_argument("--chain", type=int, default=8, help="max reduction rounds")
    p.add_argument("--out", help="certificate path (default: stdout)")

    v = sub.add_parser("verify", help="verify a certificate file")
    v.add_argument("path")

    s = sub.add_parser("survey", help="count primes and 2-good primes in an interval")
    s.add_argument("start")
    s.add_argument("length")
    s.add_argument("--C", default="2", help="goodness window multiplier (rational)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--rounds", type=int, default=32)
    s.add_argument("--segments", type=int, default=1)

    b = sub.add_parser("beta", help="window product of (1 - 1/p)")
    b.add_argument("b1")
    b.add_argument("b2")

    k = sub.add_parser("bench", help="timing report across bit sizes")
    k.add_argument("bits", help="comma-separated bit sizes, e.g. 128,256")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--trials", type=int, default=5)
    return top


def _cmd_prove(args):
    try:
        n = parse_int_expr(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if n < 2:
        print("error: n must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    outcome = prove(
        n, seed=args.seed, mr_rounds=args.rounds, max_rounds=args.chain
    )
    if outcome.verdict == "prime":
        text = serialize(outcome.chain)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        print("PRIME")
        return EXIT_OK
    if outcome.verdict == "composite":
        print(f"COMPOSITE {outcome.evidence.describe()}")
        return EXIT_NEGATIVE
    print(f"UNDECIDED {outcome.detail}")
    return EXIT_UNDECIDED


def _cmd_verify(args):
    try:
        with open(args.path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        chain = parse(data)
    except MalformedCertificate as exc:
        print(f"MALFORMED {exc}")
        return EXIT_USAGE
    outcome = verify_chain(chain)
    if outcome.accepted:
        print("ACCEPT")
        return EXIT_OK
    print(f"REJECT link={outcome.link_index} cond={outcome.condition}")
    return EXIT_NEGATIVE


def _cmd_survey(args):
    try:
        start = parse_int_expr(args.start)
        length = parse_int_expr(args.length)
        C = Fraction(args.C)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    row = survey(
        start, length, C=C, mr_rounds=args.rounds, seed=args.seed,
        segments=args.segments,
    )
    print(row.csv())
    return EXIT_OK


def _cmd_beta(args):
    try:
        b1 = parse_int_expr(args.b1)
        b2 = parse_int_expr(args.b2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    value = beta(b1, b2)
    print(f"{float(value):.7f}")
    print(f"one_minus_beta {float(1 - value):.7f}")
    print(f"inv_ln_b1 {float(beta_reference(b1)):.7f}")
    return EXIT_OK


def _random_probable_prime(bits, rng):
    while True:
        c = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if miller_rabin(c, 32, rng):
            return c


def _cmd_bench(args):
    try:
        sizes = [int(s) for s in args.bits.split(",") if s]
    except ValueError:
        print("error: bits must be a comma-separated integer list", file=sys.stderr)
        return EXIT_USAGE
    trials = max(1, args.trials)
    for bits in sizes:
        rng = derive_rng(args.seed, bits)
        pow_times, prove_times = [], []
        for trial in range(trials):
            n = _random_probable_prime(bits, rng)
            r_lo, r_hi = good_window(n, 2)
            window = primes_in_window(r_lo, r_hi)
            r = window[0] if window else 257
            a = rng.randrange(2, n)
            ring = PolyRing(n, r, a)
            t0 = time.perf_counter()
            pow_1_plus_x(ring, n)
            pow_times.append(time.perf_counter() - t0)
            t0 = time.perf_counter()
            prove(n, seed=args.seed + trial)
            prove_times.append(time.perf_counter() - t0)
        print(
            f"bits={bits} pow_1_plus_x_s={statistics.median(pow_times):.4f} "
            f"prove_s={statistics.median(prove_times):.4f} trials={trials}"
        )
    return EXIT_OK


_HANDLERS = {
    "prove": _cmd_prove,
    "verify": _cmd_verify,
    "survey": _cmd_survey,
    "beta": _cmd_beta,
    "bench": _cmd_bench,
}


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
