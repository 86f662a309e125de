"""Irreducibility criteria for skew polynomials of low degree and for t^m - a.

Every reducible verdict carries a divisor (or the (c, d) data of a quadratic
divisor) that is re-checked by exact division before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import PreconditionError
from .funcfield import FuncField
from .skew import (
    SkewPoly,
    Twist,
    format_poly,
    left_divmod,
    left_linear_remainder,
    make_monic,
    n_values,
    right_linear_remainder,
    right_rem,
    trim,
)


@dataclass
class Verdict:
    """irreducible is None when only a one-sided certificate is available."""

    irreducible: Optional[bool]
    criterion: str
    witness: Optional[dict] = None
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out: dict[str, Any] = {'irreducible': self.irreducible, 'criterion': self.criterion}
        if self.witness is not None:
            out['witness'] = self.witness
        out.update(self.detail)
        return out


def _monic_of_degree(tw: Twist, f: SkewPoly, m: int) -> SkewPoly:
    f = trim(tw, f)
    if len(f) - 1 != m:
        raise ValueError(f'expected a polynomial of degree {m}')
    return make_monic(tw, f)


def _need_finite(tw: Twist):
    if not tw.finite:
        raise PreconditionError('an exhaustive scan needs a finite coefficient field')


def _linear(tw: Twist, b) -> SkewPoly:
    K = tw.field
    return (K.neg(b), K.one)


def _right_root(tw: Twist, f: SkewPoly):
    """Some b with (t - b) |_r f, checked by division; None if there is none."""
    for b in tw.field.elements():
        if tw.field.is_zero(right_linear_remainder(tw, f, b)):
            if right_rem(tw, f, _linear(tw, b)):
                raise AssertionError('linear remainder formula disagrees with division')
            return b
    return None


def _left_root(tw: Twist, f: SkewPoly):
    for b in tw.field.elements():
        if tw.field.is_zero(left_linear_remainder(tw, f, b)):
            if left_divmod(tw, f, _linear(tw, b))[1]:
                raise AssertionError('left remainder formula disagrees with division')
            return b
    return None


def _divisor_witness(tw: Twist, side: str, g: SkewPoly) -> dict:
    return {'side': side, 'divisor': format_poly(tw, g)}


def _right_witness(tw: Twist, b) -> dict:
    return _divisor_witness(tw, 'right', _linear(tw, b))


# -- degree 2 and 3 -------------------------------------------------------

def irreducible_deg2(tw: Twist, f: SkewPoly) -> Verdict:
    """Monic degree 2: reducible iff f has a monic right linear factor.

    If f = g h with deg g = deg h = 1 then h = c (t - b) for some c != 0,
    so t - b right-divides f.  Over a finite field every b is tried; over
    GF(p)(y) only f = t^2 - a is handled, by a valuation certificate that
    a is not N_2(b) = sigma(b) b.
    """
    f = _monic_of_degree(tw, f, 2)
    if tw.finite:
        b = _right_root(tw, f)
        if b is None:
            return Verdict(True, 'deg2')
        return Verdict(False, 'deg2', _right_witness(tw, b))
    return _funcfield_norm_certificate(tw, f, 2)


def irreducible_deg3(tw: Twist, f: SkewPoly) -> Verdict:
    """Monic degree 3: reducible iff f has a right or a left linear divisor."""
    if not tw.is_automorphism:
        raise PreconditionError('the left scan needs sigma to be an automorphism')
    _need_finite(tw)
    f = _monic_of_degree(tw, f, 3)
    b = _right_root(tw, f)
    if b is not None:
        return Verdict(False, 'deg3', _right_witness(tw, b))
    b = _left_root(tw, f)
    if b is not None:
        return Verdict(False, 'deg3', _divisor_witness(tw, 'left', _linear(tw, b)))
    return Verdict(True, 'deg3')


# -- degree 4 ----------------------------------------------------------------

def _need_degree4_twist(tw: Twist):
    if not tw.delta_is_zero:
        raise PreconditionError('the quadratic divisor equations assume delta = 0')
    if not tw.is_automorphism:
        raise PreconditionError('sigma must be an automorphism')
    _need_finite(tw)


def quadratic_equations(tw: Twist, f: SkewPoly, c, d) -> tuple:
    """The t- and constant coefficients of f mod_r (t^2 - c t - d), f monic of degree 4.

    With f = t^4 - a_3 t^3 - a_2 t^2 - a_1 t - a_0 (so a_i = -f_i), reducing
    t^2, t^3, t^4 modulo t^2 - c t - d gives
      t-coefficient: s2(c)s(c)c + s2(d)c + s2(c)s(d) - a_3 (s(d) + s(c)c) - a_2 c - a_1
      constant:      s2(d)d + s2(c)s(c)d - a_3 s(c)d - a_2 d - a_0
    where s = sigma.
    """
    K = tw.field
    s = tw.sigma
    s2 = lambda x: tw.sigma_pow(x, 2)  # noqa: E731
    a0, a1, a2, a3 = (K.neg(x) for x in f[:4])
    mul, add, sub = K.mul, K.add, K.sub
    sc, sd = s(c), s(d)
    s2c, s2d = s2(c), s2(d)
    e1 = add(add(mul(mul(s2c, sc), c), mul(s2d, c)), mul(s2c, sd))
    e1 = sub(e1, mul(a3, add(sd, mul(sc, c))))
    e1 = sub(sub(e1, mul(a2, c)), a1)
    e0 = add(mul(s2d, d), mul(mul(s2c, sc), d))
    e0 = sub(e0, mul(a3, mul(sc, d)))
    e0 = sub(sub(e0, mul(a2, d)), a0)
    return e1, e0


def quadratic_right_divisor(tw: Twist, f: SkewPoly, c, d) -> bool:
    """Whether t^2 - c t - d right-divides the monic quartic f."""
    _need_degree4_twist(tw)
    f = _monic_of_degree(tw, f, 4)
    K = tw.field
    e1, e0 = quadratic_equations(tw, f, c, d)
    verdict = K.is_zero(e1) and K.is_zero(e0)
    g = (K.neg(d), K.neg(c), K.one)
    if verdict != (not right_rem(tw, f, g)):
        raise AssertionError('quadratic divisor equations disagree with division')
    return verdict


def _quadratic_witness(tw: Twist, c, d) -> dict:
    K = tw.field
    g = (K.neg(d), K.neg(c), K.one)
    return {'side': 'right', 'divisor': format_poly(tw, g), 'c': K.format(c), 'd': K.format(d)}


def irreducible_deg4(tw: Twist, f: SkewPoly) -> Verdict:
    """Monic quartic: irreducible iff no right linear, no left linear and no
    monic quadratic right divisor t^2 - c t - d."""
    _need_degree4_twist(tw)
    f = _monic_of_degree(tw, f, 4)
    K = tw.field
    b = _right_root(tw, f)
    if b is not None:
        return Verdict(False, 'deg4', _right_witness(tw, b))
    b = _left_root(tw, f)
    if b is not None:
        return Verdict(False, 'deg4', _divisor_witness(tw, 'left', _linear(tw, b)))
    for c in K.elements():
        for d in K.elements():
            if quadratic_right_divisor(tw, f, c, d):
                return Verdict(False, 'deg4', _quadratic_witness(tw, c, d))
    return Verdict(True, 'deg4')


def t4_minus_a(tw: Twist, a) -> Verdict:
    """t^4 - a is reducible iff some t^2 - c t - d right-divides it.

    A right linear factor t - b already gives the quadratic right factor
    t^2 - sigma(b) b, and left linear factors exist iff right ones do, so no
    linear scan is needed.
    """
    _need_degree4_twist(tw)
    K = tw.field
    f = (K.neg(a), K.zero, K.zero, K.zero, K.one)
    for c in K.elements():
        for d in K.elements():
            e1, e0 = quadratic_equations(tw, f, c, d)
            if K.is_zero(e1) and K.is_zero(e0):
                if right_rem(tw, f, (K.neg(d), K.neg(c), K.one)):
                    raise AssertionError('quadratic divisor equations disagree with division')
                return Verdict(False, 't4-a', _quadratic_witness(tw, c, d))
    return Verdict(True, 't4-a')


# -- t^m - a -------------------------------------------------------------------

def tm_minus_a_poly(tw: Twist, m: int, a) -> SkewPoly:
    K = tw.field
    return trim(tw, [K.neg(a)] + [K.zero] * (m - 1) + [K.one])


def primitive_root_in_fixed_field(tw: Twist, m: int):
    """An element of multiplicative order m in Fix(sigma), or None."""
    _need_finite(tw)
    K = tw.field
    for b in K.nonzero():
        if tw.sigma(b) == b and K.order(b) == m:
            return b
    return None


def _check_root_of_unity(tw: Twist, m: int):
    K = tw.field
    if not tw.delta_is_zero and K.p == m:
        raise PreconditionError(f'characteristic equals m = {m} while delta is nonzero')
    omega = primitive_root_in_fixed_field(tw, m)
    if omega is None:
        raise PreconditionError(f'Fix(sigma) contains no primitive {m}-th root of unity')
    return omega


def tm_minus_a_prime(tw: Twist, m: int, a) -> Verdict:
    """For m prime with a primitive m-th root of unity fixed by sigma:
    t^m - a is irreducible iff N_m(b) != a for every b."""
    _need_finite(tw)
    if m < 2 or any(m % k == 0 for k in range(2, math.isqrt(m) + 1)):
        raise PreconditionError(f'm = {m} is not prime')
    omega = _check_root_of_unity(tw, m)
    K = tw.field
    detail = {'omega': K.format(omega)}
    for b in K.elements():
        if n_values(tw, m, b)[m] == a:
            f = tm_minus_a_poly(tw, m, a)
            if right_rem(tw, f, _linear(tw, b)):
                raise AssertionError('N_m(b) = a but t - b does not divide')
            return Verdict(False, 'tm-a-prime', _right_witness(tw, b), detail)
    return Verdict(True, 'tm-a-prime', None, detail)


def cor_t3_minus_a(tw: Twist, a) -> Verdict:
    """t^3 - a (delta = 0): irreducible iff sigma^2(b) sigma(b) b != a for all b.

    For t^m - a a left linear divisor exists iff a right one does, so only
    the right scan is run.
    """
    if not tw.is_automorphism or not tw.delta_is_zero:
        raise PreconditionError('needs sigma an automorphism and delta = 0')
    _need_finite(tw)
    K = tw.field
    for b in K.elements():
        if K.mul(K.mul(tw.sigma_pow(b, 2), tw.sigma(b)), b) == a:
            return Verdict(False, 't3-a', _right_witness(tw, b))
    return Verdict(True, 't3-a')


# -- census ---------------------------------------------------------------------

@dataclass
class CensusReport:
    p: int
    h: int
    r: int
    m: int
    s: int
    gcd_s: int
    root_exponents: list[int]
    no_root_exponents: list[int]
    irreducible_set: Optional[list[int]]
    count_irreducible: Optional[int]
    fixed_size: int
    expected_count: Optional[int]

    def as_dict(self) -> dict:
        return {
            'p': self.p, 'h': self.h, 'r': self.r, 'm': self.m,
            's': self.s, 'gcd': self.gcd_s,
            'no_root_exponents': self.no_root_exponents,
            'irreducible_set': self.irreducible_set,
            'count': self.count_irreducible,
            'fixed_size': self.fixed_size,
            'expected_count': self.expected_count,
        }


def census(tw: Twist, m: int) -> CensusReport:
    """Which t^m - z^u have a right root, and which are irreducible.

    (t - b) |_r (t^m - a) iff a = b^s with s = sum_{j<m} p^(rj), so with
    b = z^l the right-root exponents u are exactly the multiples of
    gcd(s, p^h - 1).  That set is cross-checked by scanning every b.  The
    irreducible set is reported when m is 2 or 3 or a prime dividing q - 1
    (q = |Fix(sigma)|), where having no right root already means irreducible.
    """
    _need_finite(tw)
    if not tw.delta_is_zero:
        raise PreconditionError('census needs delta = 0')
    if tw.r == 0:
        raise PreconditionError('census needs sigma != id (r != 0)')
    if m < 1:
        raise ValueError('m must be positive')
    K = tw.field
    p, h, r = K.p, K.h, tw.r
    N = K.q - 1
    s = sum(p**(r * j) for j in range(m))
    g = math.gcd(s, N)
    root_u = sorted({(l * s) % N for l in range(N)})
    if root_u != list(range(0, N, g)):
        raise AssertionError('Z s mod (p^h - 1) is not the multiples of the gcd')
    scanned = {n_values(tw, m, b)[m] for b in K.nonzero()}
    if sorted(K.log(x) for x in scanned) != root_u:
        raise AssertionError('direct scan of N_m(b) disagrees with the exponent criterion')
    no_root = [u for u in range(N) if u % g]
    fixed = K.fixed_subfield(r).q
    decided = m in (2, 3) or (_is_prime(m) and (fixed - 1) % m == 0)
    irred = no_root if decided else None
    count = len(irred) if irred is not None else None
    expected = None
    if decided and m == tw.sigma_order():
        expected = K.q - fixed
        if count != expected:
            raise AssertionError(f'counted {count} irreducible t^m - a, expected {expected}')
    return CensusReport(p, h, r, m, s, g, root_u, no_root, irred, count, fixed, expected)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


# -- factor degrees of t^m - a ------------------------------------------------------

def bourbaki_degree_check(tw: Twist, m: int, a, require_root: bool = True, jobs: int = 1) -> dict:
    """Factor t^m - a completely and test that all factors share a degree d | m.

    With require_root the hypothesis (a primitive m-th root of unity fixed by
    sigma, delta = 0) is checked first and its absence refused.
    """
    from .oracle import full_factorization
    _need_finite(tw)
    if not tw.delta_is_zero:
        raise PreconditionError('needs delta = 0')
    omega = primitive_root_in_fixed_field(tw, m)
    if require_root and omega is None:
        raise PreconditionError(f'Fix(sigma) contains no primitive {m}-th root of unity')
    f = tm_minus_a_poly(tw, m, a)
    fac = full_factorization(tw, f, jobs)
    degs = fac.degrees()
    holds = len(set(degs)) == 1 and m % degs[0] == 0
    return {'holds': holds, 'degrees': degs, 'factors': fac.as_dict(tw)['factors'],
            'root_of_unity': omega is not None}


# -- function field certificates ------------------------------------------------------

def _funcfield_norm_certificate(tw: Twist, f: SkewPoly, m: int) -> Verdict:
    """t^m - a over GF(p)(y): certify that no N_m(b) equals a via valuations."""
    K = tw.field
    if not isinstance(K, FuncField) or not tw.delta_is_zero:
        raise PreconditionError('function field certificates need delta = 0')
    if any(not K.is_zero(c) for c in f[1:m]):
        raise PreconditionError('only t^m - a is supported over GF(p)(y)')
    a = K.neg(f[0])
    if K.is_zero(a):
        return Verdict(False, 'valuation-certificate',
                       {'side': 'right', 'divisor': 't'})
    # N_m(b) = b^s with s = 1 + p + ... + p^(m-1) (Frobenius) or s = m (identity)
    s = sum(K.p**j for j in range(m)) if tw.r == 1 else m
    cert = K.sth_power_obstruction(a, s)
    if cert is None:
        return Verdict(None, 'valuation-certificate', None,
                       {'note': 'no valuation obstruction; undecided', 's': s})
    if m == 2:
        decided = True
    else:
        decided = _is_prime(m) and (K.p - 1) % m == 0
    return Verdict(True if decided else None, 'valuation-certificate', None,
                   {'no_right_linear_divisor': True, 'certificate': cert.as_dict()})


def certify_tm_minus_a(tw: Twist, m: int, a) -> Verdict:
    """Sound one-directional certificate for t^m - a over GF(p)(y).

    Irreducibility is claimed only when m = 2, or m is a prime dividing p - 1
    (then GF(p), fixed by sigma, holds a primitive m-th root of unity).
    Otherwise the certificate only rules out right linear divisors.
    """
    return _funcfield_norm_certificate(tw, tm_minus_a_poly(tw, m, a), m)


def irreducible(tw: Twist, f: SkewPoly) -> Verdict:
    """Pick a criterion by degree and shape."""
    f = make_monic(tw, trim(tw, f))
    m = len(f) - 1
    if m < 1:
        raise ValueError('constants are not considered')
    if m == 1:
        return Verdict(True, 'linear')
    if not tw.finite:
        return _funcfield_norm_certificate(tw, f, m)
    if m == 2:
        return irreducible_deg2(tw, f)
    if m == 3:
        return irreducible_deg3(tw, f)
    if m == 4 and tw.delta_is_zero:
        return irreducible_deg4(tw, f)
    is_tm = all(tw.field.is_zero(c) for c in f[1:m])
    if is_tm and _is_prime(m):
        return tm_minus_a_prime(tw, m, tw.field.neg(f[0]))
    raise PreconditionError(f'no criterion for degree {m}; use oracle-factor')
