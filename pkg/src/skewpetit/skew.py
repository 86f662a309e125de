"""Skew polynomial rings K[t; sigma, delta] over GF(p^h) or GF(p)(y).

A skew polynomial is a tuple of coefficients (c_0, ..., c_n) standing for
c_0 + c_1 t + ... + c_n t^n, coefficients on the left, with the leading
coefficient nonzero; () is zero.  Multiplication follows t a = sigma(a) t +
delta(a).  All functions take the ``Twist`` explicitly.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import PreconditionError
from .ff import FqContext, TABLE_LIMIT
from .funcfield import FuncField

SkewPoly = tuple

NEG_INF = float('-inf')


class Twist:
    """The pair (sigma, delta) over a coefficient field.

    sigma is k -> k^(p^r): any r for a finite field, r in {0, 1} (identity or
    the non-surjective Frobenius) for GF(p)(y).  delta is one of 'zero',
    'inner' (x -> c x - sigma(x) c) or 'ddy' (GF(p)(y) with sigma = id only).
    An inner derivation that vanishes identically is stored as 'zero'.
    """

    def __init__(self, field, r: int = 0, delta: str = 'zero', c=None):
        self.field = field
        self.finite = isinstance(field, FqContext)
        if self.finite:
            r %= field.h
        elif isinstance(field, FuncField):
            if r not in (0, 1):
                raise ValueError('function field twists use r = 0 (identity) or 1 (Frobenius)')
        else:
            raise TypeError(f'unsupported coefficient field {field!r}')
        self.r = r
        if delta == 'inner':
            if c is None:
                raise ValueError('inner derivation needs an element c')
            if field.is_zero(c) or r == 0:
                delta, c = 'zero', None
        elif delta == 'ddy':
            if self.finite or r != 0:
                raise ValueError('d/dy needs GF(p)(y) with sigma = identity')
            c = None
        elif delta != 'zero':
            raise ValueError(f'unknown derivation {delta!r}')
        else:
            c = None
        self.delta_kind = delta
        self.c = c
        self._dnj: dict = {}
        self._sigma_tabs: dict[int, list] = {}
        self._delta_tab = None
        if self.finite and field.q <= TABLE_LIMIT:
            if delta == 'inner':
                self._delta_tab = [self._delta_raw(x) for x in field.elements()]
        if delta == 'inner':
            self._check_derivation()

    # -- description ----------------------------------------------------

    @property
    def is_automorphism(self) -> bool:
        return self.finite or self.r == 0

    @property
    def delta_is_zero(self) -> bool:
        return self.delta_kind == 'zero'

    @property
    def sigma_is_identity(self) -> bool:
        return self.r == 0

    def sigma_order(self) -> int | None:
        """Order of sigma as a map; None when it has infinite order."""
        if self.finite:
            return self.field.sigma_order(self.r)
        return 1 if self.r == 0 else None

    def describe(self) -> str:
        if self.finite:
            sig = f'r={self.r}'
        else:
            sig = 'sigma=' + ('id' if self.r == 0 else 'frob')
        if self.delta_kind == 'inner':
            d = 'delta=inner:' + self.field.format(self.c)
        else:
            d = 'delta=' + self.delta_kind
        return f'{self.field.describe()};{sig};{d}'

    def __repr__(self):
        return f'Twist({self.describe()})'

    def __reduce__(self):
        return (Twist, (self.field, self.r, self.delta_kind, self.c))

    # -- the maps -------------------------------------------------------

    def sigma_pow(self, a, k: int = 1):
        """sigma^k(a); negative k needs sigma to be an automorphism."""
        if k == 0 or self.r == 0:
            return a
        if self.finite:
            tab = self._sigma_tabs.get(k)
            if tab is None and self.field.q <= TABLE_LIMIT:
                tab = self._sigma_tabs[k] = self.field.frobenius_table(self.r * k)
            if tab is not None:
                return tab[a]
            return self.field.frobenius(a, self.r * k)
        if k < 0:
            raise PreconditionError('sigma is not surjective on GF(p)(y)')
        return self.field.frobenius(a, k)

    def sigma(self, a):
        return self.sigma_pow(a, 1)

    def sigma_inv(self, a):
        return self.sigma_pow(a, -1)

    def _delta_raw(self, x):
        K = self.field
        if self.delta_kind == 'inner':
            return K.sub(K.mul(self.c, x), K.mul(self.sigma(x), self.c))
        if self.delta_kind == 'ddy':
            return K.formal_derivative(x)
        return K.zero

    def delta(self, x):
        if self._delta_tab is not None:
            return self._delta_tab[x]
        return self._delta_raw(x)

    def _check_derivation(self, trials: int = 16):
        K = self.field
        rng = random.Random(0)
        for _ in range(trials):
            a, b = random_element(K, rng), random_element(K, rng)
            lhs = self.delta(K.mul(a, b))
            rhs = K.add(K.mul(self.sigma(a), self.delta(b)), K.mul(self.delta(a), b))
            if lhs != rhs:
                raise ValueError('delta is not a sigma-derivation')

    def in_s0(self, b) -> bool:
        """b in Fix(sigma) and Const(delta); the field is commutative."""
        return self.sigma(b) == b and self.field.is_zero(self.delta(b))


def random_element(K, rng: random.Random):
    if isinstance(K, FqContext):
        return rng.randrange(K.q)
    return K.random_element(rng)


# -- basic polynomial plumbing -------------------------------------------

def trim(tw: Twist, g: Sequence) -> SkewPoly:
    g = list(g)
    K = tw.field
    while g and K.is_zero(g[-1]):
        g.pop()
    return tuple(g)


def deg(g: SkewPoly):
    """Degree, with -inf for the zero polynomial."""
    return len(g) - 1 if g else NEG_INF


def const(tw: Twist, a) -> SkewPoly:
    return () if tw.field.is_zero(a) else (a,)


def monomial(tw: Twist, k: int, a=None) -> SkewPoly:
    K = tw.field
    a = K.one if a is None else a
    if K.is_zero(a):
        return ()
    return (K.zero,) * k + (a,)


def poly_add(tw: Twist, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    K = tw.field
    if len(g) < len(h):
        g, h = h, g
    out = list(g)
    for i, c in enumerate(h):
        out[i] = K.add(out[i], c)
    return trim(tw, out)


def poly_neg(tw: Twist, g: SkewPoly) -> SkewPoly:
    return tuple(tw.field.neg(c) for c in g)


def poly_sub(tw: Twist, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    return poly_add(tw, g, poly_neg(tw, h))


def scale_left(tw: Twist, a, g: SkewPoly) -> SkewPoly:
    """a * g for a constant a (acts on coefficients from the left)."""
    K = tw.field
    return trim(tw, [K.mul(a, c) for c in g])


def make_monic(tw: Twist, g: SkewPoly) -> SkewPoly:
    if not g:
        raise ValueError('the zero polynomial has no monic associate')
    return scale_left(tw, tw.field.inv(g[-1]), g)


def is_monic(tw: Twist, g: SkewPoly) -> bool:
    return bool(g) and g[-1] == tw.field.one


def t_times(tw: Twist, g: SkewPoly) -> SkewPoly:
    """t * g = sum sigma(c_k) t^(k+1) + delta(c_k) t^k."""
    K = tw.field
    if not g:
        return ()
    out = [K.zero] + [tw.sigma(c) for c in g]
    if not tw.delta_is_zero:
        for k, c in enumerate(g):
            out[k] = K.add(out[k], tw.delta(c))
    return trim(tw, out)


# -- multiplication ---------------------------------------------------------

def delta_nj(tw: Twist, n: int, j: int, a):
    """Delta_{n,j}(a): the sum of all words with j sigmas and n-j deltas.

    Delta_{n,j} = delta o Delta_{n-1,j} + sigma o Delta_{n-1,j-1}, memoized
    per twist.
    """
    if n < 0 or j < 0 or j > n:
        raise ValueError(f'need 0 <= j <= n, got n={n}, j={j}')
    key = (n, j, a)
    hit = tw._dnj.get(key)
    if hit is not None:
        return hit
    K = tw.field
    if n == 0:
        val = a
    else:
        val = K.zero
        if j <= n - 1:
            val = tw.delta(delta_nj(tw, n - 1, j, a))
        if j >= 1:
            val = K.add(val, tw.sigma(delta_nj(tw, n - 1, j - 1, a)))
    tw._dnj[key] = val
    return val


def skew_mul(tw: Twist, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """The product g h in K[t; sigma, delta]."""
    if not g or not h:
        return ()
    K = tw.field
    add, mul = K.add, K.mul
    out = [K.zero] * (len(g) + len(h) - 1)
    if tw.delta_is_zero:
        for i, gi in enumerate(g):
            if K.is_zero(gi):
                continue
            for k, hk in enumerate(h):
                out[i + k] = add(out[i + k], mul(gi, tw.sigma_pow(hk, i)))
        return trim(tw, out)
    cur = h
    for i, gi in enumerate(g):
        if i:
            cur = t_times(tw, cur)
        if K.is_zero(gi):
            continue
        for k, c in enumerate(cur):
            out[k] = add(out[k], mul(gi, c))
    return trim(tw, out)


def skew_pow(tw: Twist, g: SkewPoly, e: int) -> SkewPoly:
    out = (tw.field.one,)
    for _ in range(e):
        out = skew_mul(tw, out, g)
    return out


# -- division ------------------------------------------------------------

def right_divmod(tw: Twist, g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with g = q f + r and deg r < deg f."""
    if not f:
        raise ZeroDivisionError('right division by the zero polynomial')
    K = tw.field
    m = len(f) - 1
    r = list(g)
    if len(r) <= m:
        return (), trim(tw, r)
    top = len(r) - 1 - m
    shifted = [f]
    for _ in range(top):
        shifted.append(t_times(tw, shifted[-1]))
    q = [K.zero] * (top + 1)
    for s in range(top, -1, -1):
        c = r[s + m]
        if K.is_zero(c):
            continue
        tf = shifted[s]          # t^s f, leading coefficient sigma^s(lc)
        u = K.div(c, tf[-1])
        q[s] = u
        for j, fj in enumerate(tf):
            r[j] = K.sub(r[j], K.mul(u, fj))
    return trim(tw, q), trim(tw, r[:m])


def right_rem(tw: Twist, g: SkewPoly, f: SkewPoly) -> SkewPoly:
    return right_divmod(tw, g, f)[1]


def left_divmod(tw: Twist, g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with g = f q + r and deg r < deg f; sigma must be onto."""
    if not tw.is_automorphism:
        raise PreconditionError('left division needs sigma to be an automorphism')
    if not f:
        raise ZeroDivisionError('left division by the zero polynomial')
    K = tw.field
    m = len(f) - 1
    inv_lc = K.inv(f[-1])
    r = trim(tw, g)
    q = [K.zero] * max(len(r) - m, 0)
    while len(r) - 1 >= m:
        s = len(r) - 1 - m
        # f (u t^s) has leading coefficient lc * sigma^m(u)
        u = tw.sigma_pow(K.mul(inv_lc, r[-1]), -m)
        q[s] = u
        r = poly_sub(tw, r, skew_mul(tw, f, monomial(tw, s, u)))
    return trim(tw, q), r


# -- gcrd / lclm ---------------------------------------------------------

def gcrd(tw: Twist, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor: the generator of Rg + Rh."""
    g, h = trim(tw, g), trim(tw, h)
    if not g and not h:
        raise ValueError('gcrd(0, 0) is undefined')
    while h:
        g, h = h, right_rem(tw, g, h)
    return make_monic(tw, g)


def xgcrd(tw: Twist, g: SkewPoly, h: SkewPoly):
    """Right Euclid with cofactors.

    Returns (d, u, v, u_last, v_last) where d = u g + v h is the (non
    normalized) last nonzero remainder and u_last g + v_last h = 0 is the
    first vanishing combination.
    """
    one = (tw.field.one,)
    r0, r1 = g, h
    u0, u1 = one, ()
    v0, v1 = (), one
    while r1:
        q, r2 = right_divmod(tw, r0, r1)
        u2 = poly_sub(tw, u0, skew_mul(tw, q, u1))
        v2 = poly_sub(tw, v0, skew_mul(tw, q, v1))
        r0, r1, u0, u1, v0, v1 = r1, r2, u1, u2, v1, v2
    return r0, u0, v0, u1, v1


def lclm(tw: Twist, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """Monic least common left multiple: the generator of Rg cap Rh."""
    g, h = trim(tw, g), trim(tw, h)
    if not g or not h:
        raise ValueError('lclm needs nonzero arguments')
    _, _, _, u_last, _ = xgcrd(tw, g, h)
    return make_monic(tw, skew_mul(tw, u_last, g))


# -- N, M sequences and linear remainders --------------------------------

def n_seq(tw: Twist, i: int, b):
    """N_i(b): N_0 = 1, N_{k+1} = sigma(N_k) b + delta(N_k)."""
    K = tw.field
    n = K.one
    for _ in range(i):
        n = K.add(K.mul(tw.sigma(n), b), tw.delta(n))
    return n


def n_values(tw: Twist, m: int, b) -> list:
    K = tw.field
    out = [K.one]
    for _ in range(m):
        n = out[-1]
        out.append(K.add(K.mul(tw.sigma(n), b), tw.delta(n)))
    return out


def m_seq(tw: Twist, i: int, b):
    """M_i(b): M_0 = 1, M_{k+1} = b sigma^-1(M_k) - delta(sigma^-1(M_k))."""
    return m_values(tw, i, b)[i]


def m_values(tw: Twist, m: int, b) -> list:
    if not tw.is_automorphism:
        raise PreconditionError('M_i needs sigma to be an automorphism')
    K = tw.field
    out = [K.one]
    for _ in range(m):
        s = tw.sigma_inv(out[-1])
        out.append(K.sub(K.mul(b, s), tw.delta(s)))
    return out


def right_linear_remainder(tw: Twist, f: SkewPoly, b):
    """Remainder of f on right division by t - b: sum_i f_i N_i(b).

    For f = t^m - sum a_i t^i this is N_m(b) - sum a_i N_i(b).
    """
    K = tw.field
    ns = n_values(tw, len(f) - 1, b)
    return K.sum(K.mul(c, n) for c, n in zip(f, ns))


def to_right_coefficients(tw: Twist, f: SkewPoly) -> SkewPoly:
    """The unique (b_0, ..., b_m) with f = sum t^i b_i (coefficients on the right)."""
    if not tw.is_automorphism:
        raise PreconditionError('right coefficients need sigma to be an automorphism')
    K = tw.field
    rest = trim(tw, f)
    out = [K.zero] * len(rest)
    while rest:
        k = len(rest) - 1
        b = tw.sigma_pow(rest[-1], -k)
        out[k] = b
        # t^k b has leading coefficient sigma^k(b) = rest[-1]
        tkb = skew_mul(tw, monomial(tw, k), (b,))
        rest = poly_sub(tw, rest, tkb)
        assert len(rest) - 1 < k
    return tuple(out)


def left_linear_remainder(tw: Twist, f: SkewPoly, b):
    """Remainder of f on left division by t - b: sum_i M_i(b) b_i with f = sum t^i b_i."""
    K = tw.field
    rc = to_right_coefficients(tw, f)
    ms = m_values(tw, len(rc) - 1, b)
    return K.sum(K.mul(mi, ci) for mi, ci in zip(ms, rc))


def dilate(tw: Twist, f: SkewPoly, b) -> SkewPoly:
    """f(t) -> f(b t) for b in S_0, using (b t)^i = b^i t^i."""
    if not tw.in_s0(b):
        raise PreconditionError('dilation needs b in Fix(sigma) and Const(delta)')
    K = tw.field
    out = []
    bi = K.one
    for c in f:
        out.append(K.mul(c, bi))
        bi = K.mul(bi, b)
    return trim(tw, out)


# -- enumeration and text --------------------------------------------------

def monic_polys(tw: Twist, d: int):
    """All monic polynomials of degree d over a finite field."""
    import itertools
    K = tw.field
    one = K.one
    for lower in itertools.product(range(K.q), repeat=d):
        yield tuple(lower) + (one,)


def format_poly(tw: Twist, g: SkewPoly) -> str:
    K = tw.field
    if not g:
        return '0'
    terms = []
    for k, c in enumerate(g):
        if K.is_zero(c):
            continue
        s = K.format(c)
        if k and any(ch in s for ch in '+-/ '):
            s = f'({s})'
        if k == 0:
            terms.append(s)
        else:
            mono = 't' if k == 1 else f't^{k}'
            terms.append(mono if c == K.one else f'{s}*{mono}')
    return ' + '.join(reversed(terms))


def parse_poly(tw: Twist, text: str) -> SkewPoly:
    from .text import parse_skew_poly
    return parse_skew_poly(tw.field, text)
