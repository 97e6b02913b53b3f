"""Arithmetic in (Z/nZ)[x]/(x^r - a) and the fused-exponent congruence check.

Elements are dense coefficient vectors of length exactly r, every entry
reduced into [0, n).  Multiplication has two interchangeable strategies:

* schoolbook - O(r^2) coefficient products, kept as the reference oracle;
* Kronecker substitution - coefficients are packed into one big integer at a
  fixed slot width and multiplied once, inheriting GMP's fast multiplication.

Slot width is 2*ceil(log2 n) + ceil(log2 r) + 2 bits, which provably holds
the largest pre-reduction convolution coefficient r*(n-1)^2.
"""

import gmpy2

from .arith import ceil_log2

_KRONECKER_MIN_DEGREE = 32


class PolyRing:
    """The ring (Z/nZ)[x]/(x^r - a) with n >= 2, r >= 1, 1 < a < n."""

    __slots__ = ("n", "r", "a", "slot_bits")

    def __init__(self, n, r, a):
        if n < 2 or r < 1 or not 1 < a < n:
            raise ValueError("require n >= 2, r >= 1, 1 < a < n")
        self.n = gmpy2.mpz(n)
        self.r = int(r)
        self.a = gmpy2.mpz(a)
        self.slot_bits = 2 * ceil_log2(n) + ceil_log2(self.r) + 2

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.n == other.n
            and self.r == other.r
            and self.a == other.a
        )

    def __repr__(self):
        return f"PolyRing(n={self.n}, r={self.r}, a={self.a})"

    def zero(self):
        return RingElem(self, [gmpy2.mpz(0)] * self.r, _trusted=True)

    def one(self):
        c = [gmpy2.mpz(0)] * self.r
        c[0] = gmpy2.mpz(1)
        return RingElem(self, c, _trusted=True)

    def one_plus_x(self):
        c = [gmpy2.mpz(0)] * self.r
        c[0] = gmpy2.mpz(1 % self.n)
        if self.r > 1:
            c[1] = gmpy2.mpz(1)
        else:
            c[0] = (c[0] + self.a) % self.n  # x == a when r == 1
        return RingElem(self, c, _trusted=True)


class RingElem:
    """Immutable element: coefficient i holds the coefficient of x^i."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs, _trusted=False):
        self.ring = ring
        if _trusted:
            self.coeffs = coeffs
        else:
            self.coeffs = ring_reduce(ring, coeffs).coeffs

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"RingElem({list(map(int, self.coeffs))})"

    def to_ints(self):
        return [int(c) for c in self.coeffs]

    def __add__(self, other):
        _check_same_ring(self, other)
        n = self.ring.n
        return RingElem(
            self.ring,
            [(u + v) % n for u, v in zip(self.coeffs, other.coeffs)],
            _trusted=True,
        )

    def __mul__(self, other):
        return poly_mul(self, other)


def _check_same_ring(u, v):
    if u.ring != v.ring:
        raise ValueError("ring mismatch")


def ring_reduce(ring, raw):
    """Reduce a raw coefficient list (length <= 2r-1) into the ring.

    Index i >= r folds into i-r with multiplier a, since x^r == a.
    """
    if len(raw) > 2 * ring.r - 1 and any(c for c in raw[2 * ring.r - 1 :]):
        raise ValueError("raw polynomial degree too large for one fold")
    n, r, a = ring.n, ring.r, ring.a
    out = [gmpy2.mpz(0)] * r
    for i, c in enumerate(raw[:r]):
        out[i] = gmpy2.mpz(c) % n
    for i, c in enumerate(raw[r : 2 * r - 1]):
        if c:
            out[i] = (out[i] + a * c) % n
    return RingElem(ring, out, _trusted=True)


def _mul_schoolbook(u, v):
    ring = u.ring
    r = ring.r
    uc, vc = u.coeffs, v.coeffs
    conv = [gmpy2.mpz(0)] * (2 * r - 1)
    for i in range(r):
        ui = uc[i]
        if ui:
            row = [ui * x for x in vc]
            for j in range(r):
                conv[i + j] += row[j]
    return ring_reduce(ring, conv)


def _mul_kronecker(u, v):
    ring = u.ring
    w = ring.slot_bits
    packed = gmpy2.pack(list(u.coeffs), w)
    if u is v or u.coeffs == v.coeffs:
        product = packed * packed
    else:
        product = packed * gmpy2.pack(list(v.coeffs), w)
    return _reduce_packed(ring, product)


def _reduce_packed(ring, product):
    # unpacking and the x^r -> a fold happen in one pass over the slots
    n, r, a = ring.n, ring.r, ring.a
    slots = gmpy2.unpack(product, ring.slot_bits)
    if len(slots) < 2 * r - 1:
        slots = slots + [gmpy2.mpz(0)] * (2 * r - 1 - len(slots))
    lo = slots[:r]
    hi = slots[r : 2 * r - 1]
    out = [(x + a * y) % n for x, y in zip(lo, hi)]
    out.append(lo[r - 1] % n)
    # zip stops at len(hi) == r-1, so out currently holds indices 0..r-2 + [r-1]
    return RingElem(ring, out, _trusted=True)


def poly_mul(u, v, strategy=None):
    """Product in the ring; `strategy` forces 'schoolbook' or 'kronecker'."""
    _check_same_ring(u, v)
    if strategy is None:
        strategy = "kronecker" if u.ring.r > _KRONECKER_MIN_DEGREE else "schoolbook"
    if strategy == "schoolbook":
        return _mul_schoolbook(u, v)
    if strategy == "kronecker":
        return _mul_kronecker(u, v)
    raise ValueError(f"unknown strategy {strategy!r}")


def x_pow(ring, e):
    """x^e in closed form: x^r == a gives x^e == a^(e//r) * x^(e%r)."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    q, rem = divmod(int(e), ring.r)
    c = [gmpy2.mpz(0)] * ring.r
    c[rem] = gmpy2.powmod(ring.a, q, ring.n)
    return RingElem(ring, c, _trusted=True)


def _mul_one_plus_x(elem):
    # multiplying by (1 + x) is a shift-fold plus one addition per slot
    ring = elem.ring
    n, r, a = ring.n, ring.r, ring.a
    c = elem.coeffs
    if r == 1:
        return RingElem(ring, [c[0] * (1 + a) % n], _trusted=True)
    out = [(c[0] + a * c[r - 1]) % n]
    out.extend((c[i] + c[i - 1]) % n for i in range(1, r))
    return RingElem(ring, out, _trusted=True)


def pow_1_plus_x(ring, e):
    """(1 + x)^e by left-to-right square-and-multiply.

    The multiply step never calls the generic product; working state stays
    within the accumulator, one squaring buffer, and one pack buffer.
    """
    e = int(e)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e == 0:
        return ring.one()
    base = ring.one_plus_x()
    acc = base
    for i in range(e.bit_length() - 2, -1, -1):
        acc = poly_mul(acc, acc)
        if (e >> i) & 1:
            acc = _mul_one_plus_x(acc)
    return acc


def aks_congruence_check(n, r, a):
    """Does (1 + x)^n equal 1 + x^n in (Z/nZ)[x]/(x^r - a)?

    Pure predicate: holds for every prime n, and its failure certifies
    nothing by itself except that n cannot satisfy the witness conditions.
    """
    n = int(n)
    if n < 2 or n % 2 == 0:
        raise ValueError("congruence check requires odd n >= 2")
    if r < 2 or not 1 < a < n:
        raise ValueError("congruence check requires r >= 2, 1 < a < n")
    ring = PolyRing(n, r, a)
    lhs = pow_1_plus_x(ring, n)
    rhs = x_pow(ring, n)
    target = list(rhs.coeffs)
    target[0] = (target[0] + 1) % ring.n
    return lhs.coeffs == target
