"""Access to the ring class polynomial table and modular root extraction.

For a discriminant D whose class polynomial has a root j0 modulo a prime n,
the curves over Z/nZ with invariant j0 have complex multiplication by the
order of discriminant D, so their orders are computable from a
representation 4n = t^2 + |D|*y^2.  Root extraction is elementary dense
polynomial arithmetic in F_n[x] at degree <= 8: a gcd with x^n - x followed
by random splitting.

Nothing in the verifier trusts this module; a wrong table entry or a bogus
root can only waste prover time (the order check m*Q = O filters it out).
"""

import gmpy2

from .arith import derive_rng
from .hilbert_table import CLASS_POLYNOMIALS

# discriminants ascending by |D|; -3 and -4 are handled by their twist
# families directly and carry linear table entries here as well
DISCRIMINANTS = tuple(sorted(CLASS_POLYNOMIALS, key=lambda d: -d))


def class_polynomial(D):
    return CLASS_POLYNOMIALS[D]


def _strip(u):
    i = 0
    while i < len(u) - 1 and not u[i]:
        i += 1
    return u[i:]


def _pmod(u, m, p):
    u = _strip(list(u))
    m = _strip(m)
    if len(m) == 1:
        return [gmpy2.mpz(0)]
    inv = gmpy2.invert(m[0], p)
    while len(u) >= len(m):
        if u[0]:
            q = u[0] * inv % p
            for i in range(1, len(m)):
                u[i] = (u[i] - q * m[i]) % p
        u.pop(0)
    return _strip(u) if u else [gmpy2.mpz(0)]


def _pmul(u, v, m, p):
    out = [gmpy2.mpz(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    return _pmod(out, m, p)


def _ppow(base, e, m, p):
    result = [gmpy2.mpz(1)]
    base = _pmod(base, m, p)
    for bit in bin(int(e))[2:]:
        result = _pmul(result, result, m, p)
        if bit == "1":
            result = _pmul(result, base, m, p)
    return result


def _pgcd(u, v, p):
    u, v = _strip(list(u)), _strip(list(v))
    while v != [0]:
        u = _pmod(u, v, p)
        u, v = v, u
    if u != [0]:
        inv = gmpy2.invert(u[0], p)
        u = [c * inv % p for c in u]
    return u


def _pdiv_exact(u, v, p):
    q, rem = [], list(u)
    while len(rem) >= len(v):
        c0 = rem[0]
        q.append(c0)
        if c0:
            for i in range(len(v)):
                rem[i] = (rem[i] - c0 * v[i]) % p
        rem.pop(0)
    return q


def poly_roots_mod(coeffs, p, rng=None):
    """All roots in F_p of a monic integer polynomial, sorted ascending.

    p must behave like an odd prime; over a composite modulus the routine
    may fail or return junk, which callers tolerate (roots are re-validated
    downstream by curve-order checks).
    """
    p = gmpy2.mpz(p)
    f = _strip([gmpy2.mpz(c % p) for c in coeffs])
    if len(f) == 1:
        return []
    if rng is None:
        rng = derive_rng(0xD15C, int(p) & 0xFFFFFFFFFFFFFFFF)
    xp = _ppow([gmpy2.mpz(1), gmpy2.mpz(0)], p, f, p)
    # x^p - x
    if len(xp) < 2:
        xp = [gmpy2.mpz(0)] * (2 - len(xp)) + xp
    xp = list(xp)
    xp[-2] = (xp[-2] - 1) % p
    g = _pgcd(f, _strip(xp), p)
    roots = []
    stack = [g]
    while stack:
        cur = _strip(stack.pop())
        if len(cur) <= 1:
            continue
        if len(cur) == 2:
            roots.append(int((-cur[1]) % p))
            continue
        for _ in range(64):
            delta = rng.randrange(int(p))
            acc = _ppow([gmpy2.mpz(1), gmpy2.mpz(delta)], (p - 1) // 2, cur, p)
            acc = list(acc)
            acc[-1] = (acc[-1] - 1) % p
            acc = _strip(acc)
            h = _pgcd(cur, acc, p)
            if 1 <= len(h) - 1 < len(cur) - 1:
                stack.append(h)
                stack.append(_pdiv_exact(cur, h, p))
                break
        else:
            break  # splitting failed; p is not behaving like a prime
    return sorted(roots)


_root_cache = {}


def invariant_mod(D, n):
    """Smallest root of the class polynomial of D modulo n, or None."""
    key = (D, n)
    if key in _root_cache:
        return _root_cache[key]
    if len(_root_cache) > 4096:
        _root_cache.clear()
    roots = poly_roots_mod(class_polynomial(D), n)
    val = roots[0] if roots else None
    _root_cache[key] = val
    return val
