"""Pure relational arithmetic on binary naturals.

Numbers are logic lists of bits, least significant first, with no trailing
zero bit: the empty list is 0, ``[1]`` is 1, ``[0, 1]`` is 2 and so on. All
relations work in every direction; the definitions are the standard pure
binary arithmetic construction for miniKanren (adder / multiplier /
split-based division, base-2 exponent, repeated multiplication), with clause
and goal order kept exactly as in that construction, since reordering
changes termination.

Public surface: build_num / decode_num and pluso, minuso, multo, expo, logo.
The division and length-comparison helpers exist only to support logo.
"""

from typing import Any

from .goals import Goal, conde, conj, conj_all as _and, delay, eq, fresh
from .stdlib import appendo, cons, list_of, nil


def build_num(n: int):
    """Inject a machine integer as a canonical little-endian bit list."""
    if n < 0:
        raise ValueError("binary naturals are nonnegative")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    return list_of(bits)


def decode_num(bits) -> int:
    """Projected bit list back to a machine integer."""
    total = 0
    for i, b in enumerate(bits):
        total += b << i
    return total


_ONE = list_of([1])


def _one():
    return _ONE


def poso(n: Any) -> Goal:
    """n >= 1."""
    return fresh(lambda a, d: eq(n, cons(a, d)))


def gt1o(n: Any) -> Goal:
    """n >= 2."""
    return fresh(lambda a, ad, dd: eq(n, cons(a, cons(ad, dd))))


def _full_adder(b: Any, x: Any, y: Any, r: Any, c: Any) -> Goal:
    # bit relation: b + x + y = r + 2c
    rows = [
        (0, 0, 0, 0, 0),
        (1, 0, 0, 1, 0),
        (0, 1, 0, 1, 0),
        (1, 1, 0, 0, 1),
        (0, 0, 1, 1, 0),
        (1, 0, 1, 0, 1),
        (0, 1, 1, 0, 1),
        (1, 1, 1, 1, 1),
    ]
    return conde(
        [
            _and(eq(b, rb), eq(x, rx), eq(y, ry), eq(r, rr), eq(c, rc))
            for rb, rx, ry, rr, rc in rows
        ]
    )


def _adder(d: Any, n: Any, m: Any, r: Any) -> Goal:
    # d + n + m = r, where d is a carry bit
    return conde(
        [
            _and(eq(d, 0), eq(m, nil()), eq(n, r)),
            _and(eq(d, 0), eq(n, nil()), eq(m, r), poso(m)),
            _and(eq(d, 1), eq(m, nil()), delay(lambda: _adder(0, n, _one(), r))),
            _and(eq(d, 1), eq(n, nil()), poso(m), delay(lambda: _adder(0, _one(), m, r))),
            _and(
                eq(n, _one()),
                eq(m, _one()),
                fresh(
                    lambda a, c: conj(
                        eq(r, cons(a, cons(c, nil()))), _full_adder(d, 1, 1, a, c)
                    )
                ),
            ),
            _and(eq(n, _one()), _gen_adder(d, n, m, r)),
            _and(eq(m, _one()), gt1o(n), gt1o(r), delay(lambda: _adder(d, _one(), n, r))),
            _and(gt1o(n), _gen_adder(d, n, m, r)),
        ]
    )


def _gen_adder(d: Any, n: Any, m: Any, r: Any) -> Goal:
    # n = a.x, m = b.y (m >= 2), r = c.z: full-add the low bits, carry into the rest
    return fresh(
        lambda a, b, c, e: fresh(
            lambda x, y, z: _and(
                eq(n, cons(a, x)),
                eq(m, cons(b, y)),
                poso(y),
                eq(r, cons(c, z)),
                poso(z),
                _full_adder(d, a, b, c, e),
                _adder(e, x, y, z),
            )
        )
    )


def pluso(n: Any, m: Any, k: Any) -> Goal:
    """n + m = k."""
    return _adder(0, n, m, k)


def minuso(n: Any, m: Any, k: Any) -> Goal:
    """n - m = k (fails when m > n)."""
    return pluso(m, k, n)


def multo(n: Any, m: Any, p: Any) -> Goal:
    """n * m = p."""
    return conde(
        [
            _and(eq(n, nil()), eq(p, nil())),
            _and(poso(n), eq(m, nil()), eq(p, nil())),
            _and(eq(n, _one()), poso(m), eq(m, p)),
            _and(gt1o(n), eq(m, _one()), eq(n, p)),
            fresh(
                lambda x, z: _and(
                    eq(n, cons(0, x)),
                    poso(x),
                    eq(p, cons(0, z)),
                    poso(z),
                    gt1o(m),
                    multo(x, m, z),
                )
            ),
            fresh(
                lambda x, y: _and(
                    eq(n, cons(1, x)),
                    poso(x),
                    eq(m, cons(0, y)),
                    poso(y),
                    multo(m, n, p),
                )
            ),
            fresh(
                lambda x, y: _and(
                    eq(n, cons(1, x)),
                    poso(x),
                    eq(m, cons(1, y)),
                    poso(y),
                    _odd_multo(x, n, m, p),
                )
            ),
        ]
    )


def _odd_multo(x: Any, n: Any, m: Any, p: Any) -> Goal:
    # n odd: p = 2*(x*m) + m, with the product size bounded to keep search finite
    return fresh(
        lambda qq: _and(
            _bound_multo(qq, p, n, m),
            multo(x, m, qq),
            pluso(cons(0, qq), m, p),
        )
    )


def _bound_multo(qq: Any, p: Any, n: Any, m: Any) -> Goal:
    # |q| < |p| <= |n| + |m|
    return conde(
        [
            conj(eq(qq, nil()), poso(p)),
            fresh(
                lambda a0, a1, a2: fresh(
                    lambda a3, x, y, z: _and(
                        eq(qq, cons(a0, x)),
                        eq(p, cons(a1, y)),
                        conde(
                            [
                                _and(
                                    eq(n, nil()),
                                    eq(m, cons(a2, z)),
                                    _bound_multo(x, y, z, nil()),
                                ),
                                _and(eq(n, cons(a3, z)), _bound_multo(x, y, z, m)),
                            ]
                        ),
                    )
                )
            ),
        ]
    )


def _eq_len(n: Any, m: Any) -> Goal:
    # |n| = |m|
    return conde(
        [
            conj(eq(n, nil()), eq(m, nil())),
            conj(eq(n, _one()), eq(m, _one())),
            fresh(
                lambda a, x, b, y: _and(
                    eq(n, cons(a, x)),
                    poso(x),
                    eq(m, cons(b, y)),
                    poso(y),
                    _eq_len(x, y),
                )
            ),
        ]
    )


def _lt_len(n: Any, m: Any) -> Goal:
    # |n| < |m|
    return conde(
        [
            conj(eq(n, nil()), poso(m)),
            conj(eq(n, _one()), gt1o(m)),
            fresh(
                lambda a, x, b, y: _and(
                    eq(n, cons(a, x)),
                    poso(x),
                    eq(m, cons(b, y)),
                    poso(y),
                    _lt_len(x, y),
                )
            ),
        ]
    )


def _le_len(n: Any, m: Any) -> Goal:
    # |n| <= |m|
    return conde([_eq_len(n, m), _lt_len(n, m)])


def _lto(n: Any, m: Any) -> Goal:
    # n < m
    return conde(
        [
            _lt_len(n, m),
            conj(_eq_len(n, m), fresh(lambda x: conj(poso(x), pluso(n, x, m)))),
        ]
    )


def _leo(n: Any, m: Any) -> Goal:
    # n <= m
    return conde([eq(n, m), _lto(n, m)])


def _splito(n: Any, r: Any, l: Any, h: Any) -> Goal:
    # split n at the length of r: n = l + 2^(|r|+1) * h, l low bits (no trailing zero)
    return conde(
        [
            _and(eq(n, nil()), eq(h, nil()), eq(l, nil())),
            fresh(
                lambda b, n1: _and(
                    eq(n, cons(0, cons(b, n1))),
                    eq(r, nil()),
                    eq(h, cons(b, n1)),
                    eq(l, nil()),
                )
            ),
            fresh(
                lambda n1: _and(
                    eq(n, cons(1, n1)),
                    eq(r, nil()),
                    eq(n1, h),
                    eq(l, _one()),
                )
            ),
            fresh(
                lambda b, n1, a, r1: _and(
                    eq(n, cons(0, cons(b, n1))),
                    eq(r, cons(a, r1)),
                    eq(l, nil()),
                    _splito(cons(b, n1), r1, nil(), h),
                )
            ),
            fresh(
                lambda n1, a, r1: _and(
                    eq(n, cons(1, n1)),
                    eq(r, cons(a, r1)),
                    eq(l, _one()),
                    _splito(n1, r1, nil(), h),
                )
            ),
            fresh(
                lambda b, n1, a, r1, l1: _and(
                    eq(n, cons(b, n1)),
                    eq(r, cons(a, r1)),
                    eq(l, cons(b, l1)),
                    poso(l1),
                    _splito(n1, r1, l1, h),
                )
            ),
        ]
    )


def _divo(n: Any, m: Any, qq: Any, r: Any) -> Goal:
    # n = m * qq + r, 0 <= r < m
    return conde(
        [
            _and(eq(r, n), eq(qq, nil()), _lto(n, m)),
            _and(eq(qq, _one()), _eq_len(n, m), pluso(r, m, n), _lto(r, m)),
            _and(
                _lt_len(m, n),
                _lto(r, m),
                poso(qq),
                fresh(
                    lambda nh, nl, qh, ql: fresh(
                        lambda qlm, qlmr, rr, rh: _and(
                            _splito(n, r, nl, nh),
                            _splito(qq, r, ql, qh),
                            conde(
                                [
                                    _and(
                                        eq(nh, nil()),
                                        eq(qh, nil()),
                                        minuso(nl, r, qlm),
                                        multo(ql, m, qlm),
                                    ),
                                    _and(
                                        poso(nh),
                                        multo(ql, m, qlm),
                                        pluso(qlm, r, qlmr),
                                        minuso(qlmr, nl, rr),
                                        _splito(rr, r, nil(), rh),
                                        _divo(nh, m, qh, rh),
                                    ),
                                ]
                            ),
                        )
                    )
                ),
            ),
        ]
    )


def _exp2(n: Any, b: Any, qq: Any) -> Goal:
    # n = 2^qq, with b an accumulator of already-consumed low bits
    return conde(
        [
            conj(eq(n, _one()), eq(qq, nil())),
            _and(gt1o(n), eq(qq, _one()), fresh(lambda sx: _splito(n, b, sx, _one()))),
            fresh(
                lambda q1, b2: _and(
                    eq(qq, cons(0, q1)),
                    poso(q1),
                    _lt_len(b, n),
                    appendo(b, cons(1, b), b2),
                    _exp2(n, b2, q1),
                )
            ),
            fresh(
                lambda q1, nh, b2, sx: _and(
                    eq(qq, cons(1, q1)),
                    poso(q1),
                    poso(nh),
                    _splito(n, b, sx, nh),
                    appendo(b, cons(1, b), b2),
                    _exp2(nh, b2, q1),
                )
            ),
        ]
    )


def _repeated_mul(n: Any, qq: Any, nq: Any) -> Goal:
    # nq = n ^ qq
    return conde(
        [
            _and(poso(n), eq(qq, nil()), eq(nq, _one())),
            conj(eq(qq, _one()), eq(n, nq)),
            _and(
                gt1o(qq),
                fresh(
                    lambda q1, nq1: _and(
                        pluso(q1, _one(), qq),
                        _repeated_mul(n, q1, nq1),
                        multo(nq1, n, nq),
                    )
                ),
            ),
        ]
    )


def logo(n: Any, b: Any, qq: Any, r: Any) -> Goal:
    """n = b^qq + r, with qq the largest exponent not overshooting n."""
    return conde(
        [
            _and(eq(n, _one()), poso(b), eq(qq, nil()), eq(r, nil())),
            _and(eq(qq, nil()), _lto(n, b), pluso(r, _one(), n)),
            _and(eq(qq, _one()), gt1o(b), _eq_len(n, b), pluso(r, b, n)),
            _and(eq(b, _one()), poso(qq), pluso(r, _one(), n)),
            _and(eq(b, nil()), poso(qq), eq(r, n)),
            _and(
                eq(b, list_of([0, 1])),
                fresh(
                    lambda a, ad, dd: _and(
                        poso(dd),
                        eq(n, cons(a, cons(ad, dd))),
                        _exp2(n, nil(), qq),
                        fresh(lambda sx: _splito(n, dd, r, sx)),
                    )
                ),
            ),
            _and(
                fresh(
                    lambda a, ad, add, ddd: conde(
                        [
                            eq(b, list_of([1, 1])),
                            eq(b, cons(a, cons(ad, cons(add, ddd)))),
                        ]
                    )
                ),
                _lt_len(b, n),
                fresh(
                    lambda bw1, bw, nw, nw1: fresh(
                        lambda ql1, ql, sx: _and(
                            _exp2(b, nil(), bw1),
                            pluso(bw1, _one(), bw),
                            _lt_len(qq, n),
                            fresh(
                                lambda q1, bwq1: _and(
                                    pluso(qq, _one(), q1),
                                    multo(bw, q1, bwq1),
                                    _lto(nw1, bwq1),
                                )
                            ),
                            _exp2(n, nil(), nw1),
                            pluso(nw1, _one(), nw),
                            _divo(nw, bw, ql1, sx),
                            pluso(ql, _one(), ql1),
                            _le_len(ql, qq),
                            fresh(
                                lambda bql, qh, sy, qdh, qd: _and(
                                    _repeated_mul(b, ql, bql),
                                    _divo(nw, bw1, qh, sy),
                                    pluso(ql, qdh, qh),
                                    pluso(ql, qd, qq),
                                    _leo(qd, qdh),
                                    fresh(
                                        lambda bqd, bq1, bq: _and(
                                            _repeated_mul(b, qd, bqd),
                                            multo(bql, bqd, bq),
                                            multo(b, bq, bq1),
                                            pluso(bq, r, n),
                                            _lto(n, bq1),
                                        )
                                    ),
                                )
                            ),
                        )
                    )
                ),
            ),
        ]
    )


def expo(b: Any, qq: Any, n: Any) -> Goal:
    """b^qq = n."""
    return logo(n, b, qq, nil())
