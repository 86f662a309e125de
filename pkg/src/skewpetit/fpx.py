"""Dense univariate polynomials over a prime field GF(p).

A polynomial a_0 + a_1 x + ... + a_n x^n is the tuple (a_0, ..., a_n) of
residues in [0, p), with a_n != 0; the zero polynomial is ().
"""

from __future__ import annotations

import itertools
from typing import Iterator

Poly = tuple[int, ...]


def trim(a) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, bi in enumerate(b):
        c[i] = (c[i] + bi) % p
    return trim(c)


def neg(a: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in a)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, neg(b, p), p)


def scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return ()
    return tuple(x * c % p for x in a)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    return trim(x % p for x in c)


def divmod_(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError('division by the zero polynomial')
    r = list(a)
    db = len(b) - 1
    inv_lc = pow(b[-1], -1, p)
    if len(r) <= db:
        return (), trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv_lc % p
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * bj) % p
    return trim(q), trim(r[:db])


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic greatest common divisor (() when both are zero)."""
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def derivative(a: Poly, p: int) -> Poly:
    return trim(i * a[i] % p for i in range(1, len(a)))


def compose_power(a: Poly, k: int) -> Poly:
    """Substitute x -> x^k."""
    if not a:
        return ()
    c = [0] * ((len(a) - 1) * k + 1)
    for i, ai in enumerate(a):
        c[i * k] = ai
    return tuple(c)


def powmod(a: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    a = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, a, p), m, p)
        a = mod(mul(a, a, p), m, p)
        e >>= 1
    return result


def monics(d: int, p: int) -> Iterator[Poly]:
    """All monic polynomials of degree d, lexicographic low-to-high."""
    for lower in itertools.product(range(p), repeat=d):
        yield tuple(lower) + (1,)


def is_irreducible(a: Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg(a)//2."""
    n = deg(a)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in monics(d, p):
            if not mod(a, g, p):
                return False
    return True


