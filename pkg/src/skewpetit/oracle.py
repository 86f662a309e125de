"""Brute-force factorization of skew polynomials over finite fields.

Pure enumeration of monic right divisors.  Nothing here uses an
irreducibility criterion, so these answers can be used to check them.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import GuardExceeded, InfiniteDimensionalError
from .skew import SkewPoly, Twist, format_poly, make_monic, right_divmod, right_rem, skew_mul, trim

GUARD = 1 << 24


@dataclass(frozen=True)
class Factorization:
    """Monic irreducible factors whose left-to-right product is f."""

    factors: tuple[SkewPoly, ...]

    def degrees(self) -> list[int]:
        return [len(g) - 1 for g in self.factors]

    def expand(self, tw: Twist) -> SkewPoly:
        out: SkewPoly = (tw.field.one,)
        for g in self.factors:
            out = skew_mul(tw, out, g)
        return out

    def as_dict(self, tw: Twist) -> dict:
        return {'factors': [format_poly(tw, g) for g in self.factors], 'degrees': self.degrees()}


def element_rank(K, a: int) -> int:
    """Position of a in the order 0, z^0, z^1, ..., z^(q-2)."""
    return 0 if a == 0 else K.log(a) + 1


def poly_key(tw: Twist, g: SkewPoly) -> tuple:
    """Sort key: degree, then coefficients low-to-high in z-power order."""
    return (len(g),) + tuple(element_rank(tw.field, c) for c in g)


def _check(tw: Twist, f: SkewPoly, d: int):
    if not tw.finite:
        raise InfiniteDimensionalError('the oracle enumerates a finite field')
    if tw.field.q**d > GUARD:
        raise GuardExceeded(f'{tw.field.q}^{d} candidates exceed the guard 2^24')


def _scan(tw: Twist, f: SkewPoly, d: int, first: int) -> list[SkewPoly]:
    one = tw.field.one
    found = []
    for rest in itertools.product(range(tw.field.q), repeat=d - 1):
        g = (first,) + rest + (one,)
        if not right_rem(tw, f, g):
            found.append(g)
    return found


def right_factors(tw: Twist, f: SkewPoly, d: int, jobs: int = 1) -> list[SkewPoly]:
    """All monic right divisors of f of degree d, sorted canonically."""
    f = trim(tw, f)
    m = len(f) - 1
    if not 1 <= d < m:
        raise ValueError(f'divisor degree must lie in [1, {m - 1}]')
    _check(tw, f, d)
    f = make_monic(tw, f)
    q = tw.field.q
    if jobs > 1 and q**d >= 4096:
        with ProcessPoolExecutor(jobs) as pool:
            parts = pool.map(_scan, *zip(*[(tw, f, d, a) for a in range(q)]))
            found = [g for part in parts for g in part]
    else:
        found = [g for a in range(q) for g in _scan(tw, f, d, a)]
    return sorted(found, key=lambda g: poly_key(tw, g))


def is_irreducible_bruteforce(tw: Twist, f: SkewPoly, jobs: int = 1) -> bool:
    """No monic right divisor of any degree 1..deg f - 1."""
    f = trim(tw, f)
    m = len(f) - 1
    if m < 1:
        raise ValueError('constants are neither irreducible nor reducible')
    return all(not right_factors(tw, f, d, jobs) for d in range(1, m))


def least_right_factor(tw: Twist, f: SkewPoly, jobs: int = 1):
    """The canonical minimal-degree proper monic right factor, or None."""
    m = len(f) - 1
    for d in range(1, m):
        found = right_factors(tw, f, d, jobs)
        if found:
            return found[0]
    return None


def full_factorization(tw: Twist, f: SkewPoly, jobs: int = 1) -> Factorization:
    """Peel the least minimal-degree right factor, then recurse on the quotient."""
    f = make_monic(tw, trim(tw, f))
    if len(f) < 2:
        raise ValueError('cannot factor a constant')
    right: list[SkewPoly] = []
    rest = f
    while True:
        g = least_right_factor(tw, rest, jobs)
        if g is None:
            break
        quo, rem = right_divmod(tw, rest, g)
        assert not rem
        right.append(g)
        rest = quo
    fac = Factorization((rest,) + tuple(reversed(right)))
    if fac.expand(tw) != f:
        raise AssertionError('factorization does not re-expand to f')
    return fac
