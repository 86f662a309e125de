import random

import pytest

from skewpetit import oracle
from skewpetit.errors import GuardExceeded
from skewpetit.ff import fq_make
from skewpetit.petit import PetitAlgebra
from skewpetit.skew import Twist, monic_polys, parse_poly, skew_mul

F4 = fq_make(2, 2)
TW = Twist(F4, 1)


def P(text):
    return parse_poly(TW, text)


def test_right_factors_examples():
    assert oracle.right_factors(TW, P('t^2 - 1'), 1) == [P('t + 1'), P('t + z'), P('t + z^2')]
    assert oracle.right_factors(TW, P('t^2 - z'), 1) == []
    g, h = P('t^2 + z*t + 1'), P('t + z^2')
    assert h in oracle.right_factors(TW, skew_mul(TW, g, h), 1)


def test_irreducibility_examples():
    assert oracle.is_irreducible_bruteforce(TW, P('t^2 - z'))
    assert not oracle.is_irreducible_bruteforce(TW, P('t^2 - 1'))
    assert oracle.is_irreducible_bruteforce(TW, P('t - z'))


def test_full_factorization():
    fac = oracle.full_factorization(TW, P('t^2 - 1'))
    assert fac.degrees() == [1, 1] and fac.expand(TW) == P('t^2 + 1')
    assert oracle.full_factorization(TW, P('t^2 - z')).factors == (P('t^2 + z'),)
    rng = random.Random(2)
    for _ in range(40):
        f = tuple(rng.randrange(4) for _ in range(4)) + (1,)
        fac = oracle.full_factorization(TW, f)
        assert fac.expand(TW) == f
        assert all(oracle.is_irreducible_bruteforce(TW, g) for g in fac.factors)
        assert fac == oracle.full_factorization(TW, f)


def test_guard():
    K = fq_make(2, 8)
    tw = Twist(K, 1)
    f = (1,) * 8 + (1,)
    with pytest.raises(GuardExceeded):
        oracle.right_factors(tw, f, 4)


def test_parallel_matches_serial():
    K = fq_make(2, 6)
    tw = Twist(K, 1)
    f = skew_mul(tw, (5, 7, 1), (9, 3, 1))
    assert oracle.right_factors(tw, f, 2, jobs=2) == oracle.right_factors(tw, f, 2)


def test_oracle_agrees_with_algebra():
    for c in (None, 2):
        tw = TW if c is None else Twist(F4, 1, 'inner', c)
        for f in monic_polys(tw, 3):
            A = PetitAlgebra(tw, f)
            irr = oracle.is_irreducible_bruteforce(tw, f)
            assert irr == A.division_verdicts()['right_division'] == (A.zero_divisor_to_factor() is None)
