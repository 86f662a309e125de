"""The rational function field GF(p)(y).

Gives the non-surjective Frobenius b -> b^p and the derivation d/dy, which
are what make right-but-not-left division phenomena visible.  Only the places
y and infinity are ever inspected; nothing here factors polynomials.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Optional

from . import fpx
from .ff import is_prime


@dataclass(frozen=True)
class RatFunc:
    """num/den over GF(p), reduced with den monic; zero is ((), (1,))."""

    num: tuple[int, ...]
    den: tuple[int, ...] = (1,)

    def __bool__(self):
        return bool(self.num)


@dataclass(frozen=True)
class Certificate:
    """Proof that b^s = a has no solution: s does not divide v_place(a)."""

    place: str
    valuation: int
    s: int

    def as_dict(self):
        return {'place': self.place, 'valuation': self.valuation, 's': self.s}


class FuncField:
    """GF(p)(y), with elements as ``RatFunc`` values."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f'{p} is not prime')
        self.p = p
        self.zero = RatFunc(())
        self.one = RatFunc((1,))
        self.y = RatFunc((0, 1))

    def __repr__(self):
        return f'FuncField({self.p})'

    def __eq__(self, other):
        return isinstance(other, FuncField) and other.p == self.p

    def __hash__(self):
        return hash(('funcfield', self.p))

    def describe(self) -> str:
        return f'funcfield:{self.p}'

    # -- construction ---------------------------------------------------

    def make(self, num, den=(1,)) -> RatFunc:
        """Reduce num/den to canonical form."""
        p = self.p
        num = fpx.trim(int(c) % p for c in num)
        den = fpx.trim(int(c) % p for c in den)
        if not den:
            raise ZeroDivisionError('zero denominator')
        if not num:
            return self.zero
        g = fpx.gcd(num, den, p)
        if g != (1,):
            num = fpx.divmod_(num, g, p)[0]
            den = fpx.divmod_(den, g, p)[0]
        lc_inv = pow(den[-1], -1, p)
        return RatFunc(fpx.scale(num, lc_inv, p), fpx.scale(den, lc_inv, p))

    def from_int(self, n: int) -> RatFunc:
        return self.make((n,))

    def monomial(self, k: int) -> RatFunc:
        if k >= 0:
            return RatFunc((0,) * k + (1,))
        return RatFunc((1,), (0,) * (-k) + (1,))

    def is_zero(self, a: RatFunc) -> bool:
        return not a.num

    # -- arithmetic -----------------------------------------------------

    def add(self, a: RatFunc, b: RatFunc) -> RatFunc:
        p = self.p
        if a.den == b.den:
            return self.make(fpx.add(a.num, b.num, p), a.den)
        num = fpx.add(fpx.mul(a.num, b.den, p), fpx.mul(b.num, a.den, p), p)
        return self.make(num, fpx.mul(a.den, b.den, p))

    def neg(self, a: RatFunc) -> RatFunc:
        return RatFunc(fpx.neg(a.num, self.p), a.den)

    def sub(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.add(a, self.neg(b))

    def mul(self, a: RatFunc, b: RatFunc) -> RatFunc:
        p = self.p
        return self.make(fpx.mul(a.num, b.num, p), fpx.mul(a.den, b.den, p))

    def inv(self, a: RatFunc) -> RatFunc:
        if not a.num:
            raise ZeroDivisionError('inverse of zero rational function')
        return self.make(a.den, a.num)

    def div(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.mul(a, self.inv(b))

    def pow(self, a: RatFunc, e: int) -> RatFunc:
        if e < 0:
            a, e = self.inv(a), -e
        p = self.p
        num, den = (1,), (1,)
        bn, bd = a.num, a.den
        while e:
            if e & 1:
                num, den = fpx.mul(num, bn, p), fpx.mul(den, bd, p)
            bn, bd = fpx.mul(bn, bn, p), fpx.mul(bd, bd, p)
            e >>= 1
        return self.make(num, den)

    def sum(self, items) -> RatFunc:
        s = self.zero
        for x in items:
            s = self.add(s, x)
        return s

    # -- Frobenius ------------------------------------------------------

    def frobenius(self, a: RatFunc, r: int = 1) -> RatFunc:
        """a^(p^r) via g(y)^p = g(y^p); only r >= 0 exists (not surjective)."""
        if r < 0:
            raise ValueError('the Frobenius of GF(p)(y) is not surjective')
        k = self.p**r
        return RatFunc(fpx.compose_power(a.num, k), fpx.compose_power(a.den, k))

    def frob_image_member(self, a: RatFunc) -> tuple[bool, Optional[RatFunc]]:
        """Whether a = b^p, with the p-th root b when it is."""
        p = self.p
        for poly in (a.num, a.den):
            if any(c and i % p for i, c in enumerate(poly)):
                return False, None
        root = self.make(a.num[::p], a.den[::p])
        return True, root

    # -- places ---------------------------------------------------------

    def valuation(self, a: RatFunc, place: str) -> float:
        """v_y or v_inf of a; +inf for zero."""
        if not a.num:
            return math.inf
        if place == 'y':
            return _low_order(a.num) - _low_order(a.den)
        if place in ('inf', 'infinity'):
            return fpx.deg(a.den) - fpx.deg(a.num)
        raise ValueError(f'unknown place {place!r}')

    def sth_power_obstruction(self, a: RatFunc, s: int) -> Optional[Certificate]:
        """A place where s does not divide v(a), proving a is not an s-th power.

        Returns None when both valuations are divisible by s; that is no claim.
        """
        if not a.num:
            raise ValueError('zero is an s-th power')
        if s < 2:
            raise ValueError('s must be at least 2')
        for place in ('y', 'inf'):
            v = self.valuation(a, place)
            if v % s:
                return Certificate(place, int(v), s)
        return None

    # -- derivation -----------------------------------------------------

    def formal_derivative(self, a: RatFunc) -> RatFunc:
        p = self.p
        dn = fpx.derivative(a.num, p)
        dd = fpx.derivative(a.den, p)
        num = fpx.sub(fpx.mul(dn, a.den, p), fpx.mul(a.num, dd, p), p)
        return self.make(num, fpx.mul(a.den, a.den, p))

    # -- misc -----------------------------------------------------------

    def random_element(self, rng: random.Random, max_deg: int = 3) -> RatFunc:
        p = self.p
        num = [rng.randrange(p) for _ in range(rng.randint(0, max_deg) + 1)]
        den = [rng.randrange(p) for _ in range(rng.randint(0, max_deg))] + [1]
        return self.make(num, den)

    def format(self, a: RatFunc) -> str:
        num = _format_poly(a.num)
        if a.den == (1,):
            return num
        den = _format_poly(a.den)
        if len([c for c in a.num if c]) > 1:
            num = f'({num})'
        if len([c for c in a.den if c]) > 1 or a.den[-1] != 1:
            den = f'({den})'
        return f'{num}/{den}'

    def parse(self, text: str) -> RatFunc:
        from .text import parse_coefficient
        return parse_coefficient(self, text)


def _low_order(poly: tuple[int, ...]) -> int:
    return next(i for i, c in enumerate(poly) if c)


def _format_poly(poly: tuple[int, ...]) -> str:
    if not poly:
        return '0'
    terms = []
    for k, c in enumerate(poly):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = 'y' if k == 1 else f'y^{k}'
            terms.append(mono if c == 1 else f'{c}*{mono}')
    return ' + '.join(terms)


def parse_funcfield(text: str) -> FuncField:
    m = re.fullmatch(r'\s*funcfield\s*:\s*(\d+)\s*', text)
    if not m:
        raise ValueError(f'cannot parse function field description {text!r}')
    return FuncField(int(m.group(1)))


def left_division_counterexample(tw, f) -> RatFunc:
    """An element g with g / a_0 outside the image of the Frobenius.

    The constant term of t o z in S_f is -sigma(z_{m-1}) a_0, so such a g is
    never reached by L_t: S_f is not a left division algebra.  The witness is
    g = y a_0, since y itself is never a p-th power.
    """
    K = tw.field
    if not isinstance(K, FuncField) or tw.is_automorphism or not tw.delta_is_zero:
        raise ValueError('needs the Frobenius twist of GF(p)(y) with zero derivation')
    if len(f) < 2 or f[-1] != K.one:
        raise ValueError('f must be monic of degree at least 1')
    a0 = f[0]
    if K.is_zero(a0):
        raise ValueError('constant coefficient must be nonzero')
    g = K.mul(K.y, a0)
    member, _ = K.frob_image_member(K.div(g, a0))
    assert not member
    return g
