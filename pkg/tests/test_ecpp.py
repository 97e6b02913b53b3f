import random

import pytest

from primecert.arith import derive_rng, isqrt, jacobi, sieve_primes
from primecert.ecpp import (
    CM_DISCRIMINANTS,
    CORE_DISCRIMINANTS,
    Curve,
    FactorFound,
    IDENTITY,
    Point,
    build_link,
    candidate_orders,
    cm_curve,
    cornacchia_4n,
    ec_add,
    ec_mul,
    find_point,
    on_curve,
    order_lower_bound,
    reduce_chain,
    reduce_to_good,
    strip_smooth,
)


def brute_force_order(p, A, B):
    count = p + 1
    for x in range(p):
        v = (x * x * x + A * x + B) % p
        if v:
            count += jacobi(v, p)
    return count


def all_affine_points(p, A, B):
    pts = [IDENTITY]
    for x in range(p):
        v = (x * x * x + A * x + B) % p
        for y in range(p):
            if y * y % p == v:
                pts.append(Point(x, y, 1))
    return pts


def naive_add(p, A, pt1, pt2):
    # independent affine group law oracle
    if pt1 is None:
        return pt2
    if pt2 is None:
        return pt1
    x1, y1 = pt1
    x2, y2 = pt2
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if (x1, y1) == (x2, y2):
        s = (3 * x1 * x1 + A) * pow(2 * y1, p - 2, p) % p
    else:
        s = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
    x3 = (s * s - x1 - x2) % p
    return (x3, (s * (x1 - x3) - y1) % p)


def test_group_law_matches_naive_oracle_exhaustively():
    p, A, B = 103, 4, 7
    curve = Curve(p, A, B)
    pts = all_affine_points(p, A, B)
    for u in pts:
        for v in pts:
            got = ec_add(curve, u, v)
            tu = None if u.is_identity else (u.X, u.Y)
            tv = None if v.is_identity else (v.X, v.Y)
            want = naive_add(p, A, tu, tv)
            if want is None:
                assert got.is_identity
            else:
                assert (got.X, got.Y) == want


def test_identity_and_inverse():
    curve = Curve(227, 4, 4)
    pt = find_point(curve, derive_rng(1, 0))
    assert ec_add(curve, pt, IDENTITY) == pt
    neg = Point(pt.X, (-pt.Y) % 227, 1)
    assert ec_add(curve, pt, neg).is_identity
    assert ec_mul(curve, 0, pt).is_identity
    assert ec_mul(curve, 1, pt) == pt


def test_ec_mul_respects_group_order():
    p, A, B = 227, 4, 4
    curve = Curve(p, A, B)
    m = brute_force_order(p, A, B)
    rng = derive_rng(2, 0)
    for _ in range(10):
        pt = find_point(curve, rng)
        assert ec_mul(curve, m, pt).is_identity


def test_ec_factor_event_on_composite_modulus():
    n = 13 * 17
    curve = Curve(n, 2, 3)
    with pytest.raises(FactorFound) as info:
        for k in range(2, 60):
            ec_mul(curve, k, Point(k % n, (k * k + 1) % n, 1))
    g = info.value.factor
    assert 1 < g < n and n % g == 0


def test_cornacchia_examples():
    assert cornacchia_4n(-4, 13) == (6, 2)
    assert cornacchia_4n(-7, 13) is None
    assert cornacchia_4n(-3, 13) == (7, 1)


def test_cornacchia_against_exhaustive_search():
    rng = random.Random(77)
    primes = [p for p in sieve_primes(3000) if p > 167]
    for _ in range(400):
        p = rng.choice(primes)
        D = rng.choice(CM_DISCRIMINANTS[:60])
        truth = None
        y = 0
        while -D * y * y <= 4 * p:
            v = 4 * p + D * y * y
            t = isqrt(v)
            if t * t == v:
                truth = (t, y)
                break
            y += 1
        mine = cornacchia_4n(D, p)
        assert (mine is None) == (truth is None)
        if mine:
            t, y = mine
            assert t * t - D * y * y == 4 * p


def test_candidate_orders_examples():
    assert set(candidate_orders(13, -4, 6, 2)) == {20, 8, 18, 10}
    six = candidate_orders(13, -3, 7, 1)
    assert set(six) == {7, 21, 9, 19, 12, 16}
    for D in (-3, -4, -7):
        sol = cornacchia_4n(D, 1009) if jacobi(D % 1009, 1009) == 1 else None
        if sol:
            for m in candidate_orders(1009, D, *sol):
                assert abs(m - 1010) <= 2 * isqrt(1009) + 1  # Hasse


def test_twist_by_square_preserves_order():
    p = 13
    orders = set()
    for c in range(1, p):
        orders.add((c, brute_force_order(p, 0, c)))
    by_class = {}
    for c, m in orders:
        by_class.setdefault(m, []).append(c)
    # c and c*u^6 land in the same class
    for m, cs in by_class.items():
        for c in cs:
            for u in range(2, 5):
                c2 = c * pow(u, 6, p) % p
                if c2:
                    assert brute_force_order(p, 0, c2) == m


def test_cm_curves_realize_candidate_orders_small():
    # compact version of the full acceptance oracle: primes in [17, 200]
    rng = derive_rng(5, 1)
    for p in sieve_primes(200):
        if p < 17:
            continue
        for D in CORE_DISCRIMINANTS:
            if -D % p == 0:
                continue
            sol = cornacchia_4n(D, p)
            if sol is None:
                continue
            expected = set(candidate_orders(p, D, *sol))
            realized = set()
            for twist in range(60):
                try:
                    curve = cm_curve(p, D, twist, rng)
                except ValueError:
                    continue
                if curve.discriminant_gcd() != 1:
                    continue
                realized.add(brute_force_order(p, curve.A, curve.B))
                if realized == expected:
                    break
            assert realized == expected, (p, D, realized, expected)


def test_cm_curve_example_mod_13():
    # any quartic twist over Z/13Z must land on one of the four CM orders
    expected = set(candidate_orders(13, -4, 6, 2))
    curve = cm_curve(13, -4, 0, derive_rng(0, 0))
    assert brute_force_order(13, curve.A, curve.B) in expected


def test_strip_smooth():
    omega, rem = strip_smooth(2 ** 10 * 3 ** 4 * 1000003)
    assert omega == 2 ** 10 * 3 ** 4 and rem == 1000003
    omega, rem = strip_smooth(97)
    assert omega == 1 and rem == 97  # the loop stops once p*p > rem


def test_order_lower_bound_exceeds_fourth_root_bound():
    rng = random.Random(15)
    for _ in range(200):
        n = rng.randrange(1 << 16, 1 << 80)
        bound = order_lower_bound(n)
        u = isqrt(isqrt(n))
        assert bound > (u + 1) ** 2
        assert bound <= (u + 2) ** 2


def test_reduce_to_good_produces_verifiable_link():
    from primecert.arith import miller_rabin
    from primecert.certificate import verify_ecpp_link
    from primecert.ecpp import EcppLink
    from primecert.witness import good_factor

    rng = derive_rng(4, 99)
    n = None
    while n is None:
        c = rng.getrandbits(48) | (1 << 47) | 1
        if miller_rabin(c, 32, rng) and good_factor(c, 2) is None:
            n = c
    link = reduce_to_good(n, 2, rng)
    if link is not None:
        assert isinstance(link, EcppLink)
        assert verify_ecpp_link(link) == (True, 0)
        assert good_factor(link.n_prime, 2) is not None or link.n_prime < (1 << 16)


def test_reduce_chain_terminates_and_links_verify():
    from primecert.certificate import verify_ecpp_link
    from primecert.ecpp import ChainResult

    rng = derive_rng(8, 123)
    n = 18446744073709551629  # first prime above 2^64
    result = reduce_chain(n, 2, max_rounds=12, rng=rng)
    assert isinstance(result, ChainResult)
    for link in result.links:
        assert verify_ecpp_link(link) == (True, 0)
        assert link.m % link.n_prime == 0
        # Hasse window for the full order
        assert abs(link.m - (link.n + 1)) <= 2 * isqrt(link.n) + 1
    threaded = [result.links[0].n] + [l.n_prime for l in result.links]
    for a, b in zip(threaded[1:], [l.n_prime for l in result.links]):
        assert a == b
    assert result.terminal == result.links[-1].n_prime


def test_build_link_rejects_wrong_order():
    # asking for an impossible order makes the twist search cap out
    n = 1000003
    D = -3
    sol = cornacchia_4n(D, n)
    assert sol is not None
    m = n + 1  # not a CM order for D unless by luck of (t,y)
    if m in candidate_orders(n, D, *sol):
        m += 2
    got = build_link(n, D, m, m, derive_rng(3, 3))
    assert got is None
