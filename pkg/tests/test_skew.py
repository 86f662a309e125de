import random

import pytest
from hypothesis import given, settings, strategies as st

from skewpetit.errors import PreconditionError
from skewpetit.ff import fq_make
from skewpetit.funcfield import FuncField
from skewpetit.skew import (
    Twist,
    delta_nj,
    dilate,
    format_poly,
    gcrd,
    lclm,
    left_divmod,
    left_linear_remainder,
    m_seq,
    n_seq,
    parse_poly,
    poly_add,
    right_divmod,
    right_linear_remainder,
    skew_mul,
    to_right_coefficients,
    trim,
)
from skewpetit.text import ParseError

F4 = fq_make(2, 2)
W, W2 = 2, 3
TW = Twist(F4, 1)


def P(tw, text):
    return parse_poly(tw, text)


def test_twist_normalization_and_checks():
    assert Twist(F4, 1, 'inner', 0).delta_is_zero
    assert Twist(F4, 0, 'inner', W).delta_is_zero
    with pytest.raises(ValueError):
        Twist(F4, 0, 'ddy')
    with pytest.raises(ValueError):
        Twist(FuncField(2), 1, 'ddy')
    with pytest.raises(ValueError):
        Twist(FuncField(2), 2)


def test_delta_nj_examples():
    assert delta_nj(TW, 2, 2, W) == W
    inner = Twist(F4, 1, 'inner', W)
    assert delta_nj(inner, 1, 0, W) == W
    assert delta_nj(TW, 3, 1, W) == 0


def test_mul_examples():
    assert skew_mul(TW, P(TW, 't'), (W,)) == (0, W2)
    assert skew_mul(TW, P(TW, 't + z^2'), P(TW, 't - z')) == P(TW, 't^2 - 1')
    h = P(TW, 'z*t^2 + t + 1')
    assert skew_mul(TW, (1,), h) == h


def test_divmod_examples():
    q, r = right_divmod(TW, P(TW, 't^2'), P(TW, 't - z'))
    assert q == P(TW, 't + z^2') and r == (1,)
    f = P(TW, 't^2 + z*t')
    assert right_divmod(TW, f, f) == ((1,), ())
    assert right_divmod(TW, P(TW, 't'), f) == ((), P(TW, 't'))
    q, r = left_divmod(TW, P(TW, 't^2'), P(TW, 't - z'))
    assert r == (1,)
    assert left_divmod(TW, f, f) == ((1,), ())
    with pytest.raises(PreconditionError):
        tw = Twist(FuncField(2), 1)
        left_divmod(tw, P(tw, 't^2'), P(tw, 't - y'))


def test_gcrd_lclm_examples():
    assert gcrd(TW, P(TW, 't^2 - 1'), P(TW, 't - 1')) == P(TW, 't - 1')
    f = P(TW, 'z*t^3 + t + z')
    assert gcrd(TW, f, (1,)) == (1,)
    assert gcrd(TW, f, f) == P(TW, 't^3 + z^2*t + 1')
    assert lclm(TW, P(TW, 't - 1'), P(TW, 't - 1')) == P(TW, 't - 1')
    L = lclm(TW, P(TW, 't - z'), P(TW, 't - 1'))
    assert len(L) == 3
    assert right_divmod(TW, L, P(TW, 't - z'))[1] == ()
    assert right_divmod(TW, L, P(TW, 't - 1'))[1] == ()
    assert lclm(TW, f, (1,)) == gcrd(TW, f, f)


def test_sequences():
    assert n_seq(TW, 0, W) == 1 and n_seq(TW, 2, W) == 1
    inner = Twist(F4, 1, 'inner', W)
    for b in F4.elements():
        assert n_seq(inner, 2, b) == F4.add(F4.mul(inner.sigma(b), b), inner.delta(b))
        assert m_seq(inner, 1, b) == b
    assert m_seq(TW, 2, W) == 1


def test_linear_remainders():
    assert right_linear_remainder(TW, P(TW, 't^2 - z'), 1) == F4.sub(1, W)
    assert right_linear_remainder(TW, P(TW, 't^2 - 1'), 1) == 0
    assert right_linear_remainder(TW, P(TW, 't - z'), W) == 0
    assert left_linear_remainder(TW, P(TW, 't^2 - 1'), W) == 0
    assert left_linear_remainder(TW, P(TW, 't - z'), W) == 0
    assert left_linear_remainder(TW, P(TW, 't^2 - z'), 1) == F4.sub(1, W)


def test_right_coefficients():
    rc = to_right_coefficients(TW, P(TW, 't^2 - z*t - 1'))
    assert rc[1] == W2 and rc[0] == 1
    assert to_right_coefficients(TW, P(TW, 't^2 + t + 1')) == (1, 1, 1)
    assert to_right_coefficients(TW, P(TW, 't^3')) == (0, 0, 0, 1)


def test_dilate():
    F9 = fq_make(3, 2)
    tw = Twist(F9, 1)
    assert dilate(tw, P(tw, 't^2 + t + 1'), 2) == P(tw, 't^2 + 2*t + 1')
    f = P(tw, 'z*t^2 + t')
    assert dilate(tw, f, 1) == f
    with pytest.raises(PreconditionError):
        dilate(TW, P(TW, 't^2'), W)


def test_parse_errors_and_roundtrip():
    for text in ('t^2 - z*t + z^2', 'z^5*t^3 + 1', 'z*(t^2 + t) + 1'):
        f = P(TW, text)
        assert P(TW, format_poly(TW, f)) == f
    with pytest.raises(ParseError) as err:
        P(TW, 't^2 + q')
    assert err.value.pos == 6
    with pytest.raises(ParseError):
        P(TW, 't*z')


CONFIGS = [(2, 2, 1, None), (2, 3, 2, 3), (3, 2, 1, 4), (2, 4, 3, 7), (5, 2, 1, 11)]


def _twist(cfg):
    p, h, r, c = cfg
    K = fq_make(p, h)
    return Twist(K, r) if c is None else Twist(K, r, 'inner', c)


def polys(tw, max_deg):
    q = tw.field.q
    return st.lists(st.integers(0, q - 1), max_size=max_deg + 1).map(lambda cs: trim(tw, cs))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CONFIGS), st.data())
def test_ring_laws_and_division(cfg, data):
    tw = _twist(cfg)
    g = data.draw(polys(tw, 4))
    h = data.draw(polys(tw, 3))
    k = data.draw(polys(tw, 2))
    assert skew_mul(tw, skew_mul(tw, g, h), k) == skew_mul(tw, g, skew_mul(tw, h, k))
    assert skew_mul(tw, g, poly_add(tw, h, k)) == poly_add(tw, skew_mul(tw, g, h), skew_mul(tw, g, k))
    if h:
        assert len(skew_mul(tw, g, h)) == (len(g) + len(h) - 1 if g else 0)
        q, r = right_divmod(tw, g, h)
        assert poly_add(tw, skew_mul(tw, q, h), r) == g and len(r) < len(h)
        q, r = left_divmod(tw, g, h)
        assert poly_add(tw, skew_mul(tw, h, q), r) == g and len(r) < len(h)
    if g and h:
        d = gcrd(tw, g, h)
        assert right_divmod(tw, g, d)[1] == () and right_divmod(tw, h, d)[1] == ()
        L = lclm(tw, g, h)
        assert right_divmod(tw, L, g)[1] == () and right_divmod(tw, L, h)[1] == ()


def test_linear_remainder_matches_division():
    rng = random.Random(3)
    for cfg in CONFIGS:
        tw = _twist(cfg)
        K = tw.field
        if K.q > 16:
            continue
        for _ in range(60):
            f = trim(tw, [rng.randrange(K.q) for _ in range(rng.randint(1, 6))])
            if not f:
                continue
            for b in K.elements():
                lin = (K.neg(b), K.one)
                r = right_divmod(tw, f, lin)[1]
                assert (r[0] if r else 0) == right_linear_remainder(tw, f, b)
                r = left_divmod(tw, f, lin)[1]
                assert (r[0] if r else 0) == left_linear_remainder(tw, f, b)


def test_delta_power_identity_finite():
    for p, h, r in [(2, 2, 1), (2, 3, 1), (2, 3, 2)]:
        K = fq_make(p, h)
        for c in K.nonzero():
            tw = Twist(K, r, 'inner', c)
            for b in K.elements():
                for n in range(1, 7):
                    rhs = K.sum(K.mul(K.mul(K.pow(tw.sigma(b), i), tw.delta(b)), K.pow(b, n - 1 - i))
                                for i in range(n))
                    assert tw.delta(K.pow(b, n)) == rhs


def test_function_field_ddy_ring():
    K = FuncField(7)
    tw = Twist(K, 0, 'ddy')
    t_y = skew_mul(tw, P(tw, 't'), (K.y,))
    assert t_y == (K.one, K.y)  # t y = y t + 1
    f = P(tw, 't^2 + y*t + 1/y')
    g = P(tw, 't + y^2')
    q, r = right_divmod(tw, f, g)
    assert poly_add(tw, skew_mul(tw, q, g), r) == f
