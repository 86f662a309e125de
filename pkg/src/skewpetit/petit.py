"""Petit algebras S_f = R/Rf for monic f in R = K[t; sigma, delta].

Elements are skew polynomials of degree < m with product g o h = g h mod_r f.
Over GF(p^h) the algebra is an mh-dimensional GF(p)-space; an element's
coordinate vector lists the GF(p)-coordinates of c_0, then c_1, and so on.
Nuclei, commuter and center are computed from the structure constants by
exact linear algebra, which is valid because the associator is additive and
GF(p)-linear in each argument.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import linalg
from .errors import GuardExceeded, InfiniteDimensionalError, PreconditionError
from .skew import (
    SkewPoly,
    Twist,
    delta_nj,
    format_poly,
    gcrd,
    is_monic,
    make_monic,
    monomial,
    poly_sub,
    right_rem,
    skew_mul,
    trim,
)

ENUM_LIMIT = 1 << 20


@dataclass(frozen=True)
class Subspace:
    """A GF(p)-subspace of GF(p)^n, stored as its reduced echelon basis."""

    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, p: int, n: int, vectors: Iterable[Sequence[int]]) -> 'Subspace':
        rows, _ = linalg.rref([list(v) for v in vectors], p)
        return cls(p, n, tuple(tuple(r) for r in rows))

    @classmethod
    def full(cls, p: int, n: int) -> 'Subspace':
        return cls.span(p, n, np.eye(n, dtype=int).tolist())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.p**self.dim

    def __contains__(self, v) -> bool:
        return linalg.rank(list(self.basis) + [list(v)], self.p) == self.dim

    def __le__(self, other: 'Subspace') -> bool:
        return all(v in other for v in self.basis)

    def __and__(self, other: 'Subspace') -> 'Subspace':
        """Intersection: solve sum a_i u_i - sum b_j w_j = 0."""
        p, n = self.p, self.n
        if not self.basis or not other.basis:
            return Subspace(p, n, ())
        gens = list(self.basis) + [[(-x) % p for x in w] for w in other.basis]
        rows = [[g[i] for g in gens] for i in range(n)]
        kernel = linalg.nullspace(rows, len(gens), p)
        vecs = []
        for coeffs in kernel:
            a = coeffs[:self.dim]
            vecs.append([sum(ai * u[i] for ai, u in zip(a, self.basis)) % p for i in range(n)])
        return Subspace.span(p, n, vecs)

    def elements(self):
        """All members (p^dim of them)."""
        if self.size > ENUM_LIMIT:
            raise GuardExceeded(f'subspace has {self.size} elements')
        p, n = self.p, self.n
        for coeffs in itertools.product(range(p), repeat=self.dim):
            yield tuple(sum(c * b[i] for c, b in zip(coeffs, self.basis)) % p for i in range(n))


class PetitAlgebra:
    """S_f for f of degree m >= 2 (normalized to be monic; S_f = S_{af})."""

    def __init__(self, tw: Twist, f: SkewPoly):
        f = trim(tw, f)
        if len(f) < 3:
            raise ValueError('Petit algebras need deg f >= 2')
        if not is_monic(tw, f):
            f = make_monic(tw, f)
        self.tw = tw
        self.f = f
        self.m = len(f) - 1
        self.K = tw.field
        self.finite = tw.finite
        if self.finite:
            self.p = self.K.p
            self.h = self.K.h
            self.dim = self.m * self.h

    def __repr__(self):
        return f'PetitAlgebra({format_poly(self.tw, self.f)}; {self.tw.describe()})'

    # -- multiplication -------------------------------------------------

    def pmul(self, g: SkewPoly, h: SkewPoly) -> SkewPoly:
        prod = skew_mul(self.tw, g, h)
        if len(prod) <= self.m:
            return prod
        return right_rem(self.tw, prod, self.f)

    def associator(self, x: SkewPoly, y: SkewPoly, z: SkewPoly) -> SkewPoly:
        return poly_sub(self.tw, self.pmul(self.pmul(x, y), z), self.pmul(x, self.pmul(y, z)))

    def t(self) -> SkewPoly:
        return monomial(self.tw, 1)

    # -- coordinates ----------------------------------------------------

    def _need_finite(self):
        if not self.finite:
            raise InfiniteDimensionalError('S_f over GF(p)(y) is infinite-dimensional over GF(p)')

    def coords(self, g: SkewPoly) -> tuple[int, ...]:
        self._need_finite()
        out = []
        for i in range(self.m):
            c = g[i] if i < len(g) else 0
            out.extend(self.K.coeffs(c))
        return tuple(out)

    def from_coords(self, v: Sequence[int]) -> SkewPoly:
        self._need_finite()
        h = self.h
        return trim(self.tw, [self.K.from_coeffs(v[i * h:(i + 1) * h]) for i in range(self.m)])

    def basis(self) -> list[SkewPoly]:
        self._need_finite()
        return [monomial(self.tw, i, self.p**k) for i in range(self.m) for k in range(self.h)]

    def elements(self):
        """Every element, in coordinate order; guarded against huge algebras."""
        self._need_finite()
        if self.p**self.dim > ENUM_LIMIT:
            raise GuardExceeded(f'S_f has {self.p ** self.dim} elements')
        q = self.K.q
        for cs in itertools.product(range(q), repeat=self.m):
            yield trim(self.tw, cs)

    def coordinate_array(self) -> np.ndarray:
        """All coordinate vectors, shape (p^dim, dim)."""
        self._need_finite()
        if self.p**self.dim > ENUM_LIMIT:
            raise GuardExceeded(f'S_f has {self.p ** self.dim} elements')
        return np.array(list(itertools.product(range(self.p), repeat=self.dim)), dtype=np.int64).reshape(-1, self.dim)

    @functools.cached_property
    def structure(self) -> np.ndarray:
        """T[i, j, :] = coordinates of e_i o e_j."""
        B = self.basis()
        n = self.dim
        T = np.zeros((n, n, n), dtype=np.int64)
        for i, bi in enumerate(B):
            for j, bj in enumerate(B):
                T[i, j] = self.coords(self.pmul(bi, bj))
        return T

    @functools.cached_property
    def associator_tensor(self) -> np.ndarray:
        """A[i, j, k, :] = coordinates of [e_i, e_j, e_k]."""
        T, p = self.structure, self.p
        left = np.einsum('ijl,lko->ijko', T, T)
        right = np.einsum('jkl,ilo->ijko', T, T)
        return (left - right) % p

    def k_slice(self) -> Subspace:
        """The embedded coefficient field K (degree-0 elements)."""
        return Subspace.span(self.p, self.dim, [self.coords((self.p**k,)) for k in range(self.h)])

    def embed(self, elems: Iterable) -> Subspace:
        """GF(p)-span of the given coefficient-field elements, as constants of S_f."""
        return Subspace.span(self.p, self.dim, [self.coords(trim(self.tw, (a,))) for a in elems])

    def _kernel(self, rows: np.ndarray) -> Subspace:
        uniq = {tuple(r) for r in rows.tolist() if any(r)}
        kernel = linalg.nullspace([list(r) for r in uniq], self.dim, self.p)
        return Subspace.span(self.p, self.dim, kernel)

    # -- nuclei ---------------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def nucleus(self, which: str) -> Subspace:
        """Left ('l'), middle ('m') or right ('r') nucleus."""
        self._need_finite()
        A, n = self.associator_tensor, self.dim
        slot = {'l': 0, 'left': 0, 'm': 1, 'middle': 1, 'r': 2, 'right': 2}[which]
        order = [a for a in range(3) if a != slot] + [3, slot]
        rows = A.transpose(order).reshape(-1, n)
        return self._kernel(rows)

    def eigenring(self) -> Subspace:
        """E(f) = {g : deg g < m, f g in R f}; equal to the right nucleus."""
        nr = self.nucleus('r')
        for v in nr.basis:
            g = self.from_coords(v)
            if right_rem(self.tw, skew_mul(self.tw, self.f, g), self.f):
                raise AssertionError(f'right nucleus element {g} is not in the idealizer')
        return nr

    def idealizer_member(self, g: SkewPoly) -> bool:
        return not right_rem(self.tw, skew_mul(self.tw, self.f, g), self.f)

    def eigenring_table(self):
        """(basis polynomials, table[i][j] = coordinates of b_i o b_j in that basis)."""
        E = self.eigenring()
        polys = [self.from_coords(v) for v in E.basis]
        cols = [[row[i] for row in E.basis] for i in range(self.dim)]
        table = []
        for bi in polys:
            row = []
            for bj in polys:
                v = self.coords(self.pmul(bi, bj))
                row.append(linalg.solve(cols, v, E.dim, self.p))
            table.append(row)
        return polys, table

    @functools.cached_property
    def commuter(self) -> Subspace:
        T, n = self.structure, self.dim
        D = (T - T.transpose(1, 0, 2)) % self.p
        return self._kernel(D.transpose(1, 2, 0).reshape(-1, n))

    def center(self) -> Subspace:
        return self.commuter & self.nucleus('l') & self.nucleus('m') & self.nucleus('r')

    def s0(self) -> Subspace:
        return self.commuter & self.k_slice()

    def commuter_center_s0(self) -> tuple[Subspace, Subspace, Subspace]:
        return self.commuter, self.center(), self.s0()

    # -- associativity and semi-invariance ------------------------------

    def t_in_right_nucleus(self) -> bool:
        """f t in R f; works over any coefficient field."""
        return not right_rem(self.tw, skew_mul(self.tw, self.f, self.t()), self.f)

    def is_associative(self) -> bool:
        """Associator vanishes on all GF(p)-basis triples (hence everywhere)."""
        return not self.associator_tensor.any()

    def _field_basis(self) -> list[int]:
        return [self.p**k for k in range(self.h)]

    def semi_invariance_holds(self, cs: Iterable) -> bool:
        """sigma^m(c) a_j = sum_{i=j}^m a_i Delta_{i,j}(c) for all given c and j < m."""
        K, tw, f, m = self.K, self.tw, self.f, self.m
        for c in cs:
            lhs_c = tw.sigma_pow(c, m)
            for j in range(m):
                lhs = K.mul(lhs_c, f[j])
                rhs = K.sum(K.mul(f[i], delta_nj(tw, i, j, c)) for i in range(j, m + 1))
                if lhs != rhs:
                    return False
        return True

    def _eq2_holds(self, cs) -> bool:
        K, tw, f, m = self.K, self.tw, self.f, self.m
        for c in cs:
            for j in range(m):
                if K.is_zero(f[j]):
                    continue
                rhs = K.mul(K.mul(f[j], tw.sigma_pow(c, j)), K.inv(f[j]))
                if tw.sigma_pow(c, m) != rhs:
                    return False
        return True

    def _eq3_holds(self, cs) -> bool:
        K, tw, f, m = self.K, self.tw, self.f, self.m
        for c in cs:
            dpow = [c]
            for _ in range(m):
                dpow.append(tw.delta(dpow[-1]))
            for j in range(m):
                rhs = K.sum(
                    K.mul(K.from_int(math.comb(i, j)), K.mul(f[i], dpow[i - j]))
                    for i in range(j, m + 1))
                if K.mul(c, f[j]) != rhs:
                    return False
        return True

    def is_right_semi_invariant(self) -> bool:
        """f K subset K f, tested on a GF(p)-basis of K; both sides are GF(p)-linear in c."""
        self._need_finite()
        cs = self._field_basis()
        verdict = self.semi_invariance_holds(cs)
        if self.tw.delta_is_zero and verdict != self._eq2_holds(cs):
            raise AssertionError('semi-invariance equations disagree (delta = 0 form)')
        if self.tw.sigma_is_identity and verdict != self._eq3_holds(cs):
            raise AssertionError('semi-invariance equations disagree (sigma = id form)')
        return verdict

    def is_right_invariant(self) -> bool:
        return self.is_right_semi_invariant() and self.t_in_right_nucleus()

    def is_B_weak_semi_invariant(self, B: Sequence[int]) -> bool:
        """f B subset K f for the subring B spanned over GF(p) by the given elements."""
        self._need_finite()
        K, p, h = self.K, self.p, self.h
        span = Subspace.span(p, h, [K.coeffs(b) for b in B])
        if K.coeffs(1) not in span:
            raise PreconditionError('B does not contain 1')
        basis = [K.from_coeffs(v) for v in span.basis]
        for a in basis:
            for b in basis:
                if K.coeffs(K.mul(a, b)) not in span:
                    raise PreconditionError('B is not closed under multiplication')
        verdict = self.semi_invariance_holds(basis)
        if self.tw.delta_is_zero:
            tw, f, m = self.tw, self.f, self.m
            short = all(K.mul(tw.sigma_pow(c, m), f[j]) == K.mul(f[j], tw.sigma_pow(c, j))
                        for c in basis for j in range(m))
            if short != verdict:
                raise AssertionError('B-weak semi-invariance forms disagree')
        return verdict

    # -- multiplication maps and division -------------------------------

    def mult_matrix(self, a: SkewPoly, side: str = 'left') -> np.ndarray:
        """Matrix M with coords(L_a x) = M coords(x) (or R_a for side='right')."""
        T, p = self.structure, self.p
        va = np.array(self.coords(a), dtype=np.int64)
        if side in ('left', 'l'):
            return np.einsum('i,ijo->oj', va, T) % p
        if side in ('right', 'r'):
            return np.einsum('j,ijo->oi', va, T) % p
        raise ValueError(f'unknown side {side!r}')

    def matrix_rank(self, M: np.ndarray) -> int:
        return linalg.rank(M.tolist(), self.p)

    def is_right_unit(self, a: SkewPoly) -> bool:
        """gcrd(f, a) = 1, i.e. R_a bijective; the matrix rank is checked to agree."""
        a = trim(self.tw, a)
        if not a:
            raise ValueError('zero is not a right unit')
        verdict = gcrd(self.tw, self.f, a) == (self.K.one,)
        if self.finite:
            full = self.matrix_rank(self.mult_matrix(a, 'right')) == self.dim
            if full != verdict:
                raise AssertionError('gcrd and rank of R_a disagree')
        return verdict

    def _monic_elements(self):
        q = self.K.q
        one = self.K.one
        for d in range(self.m):
            for lower in itertools.product(range(q), repeat=d):
                yield tuple(lower) + (one,)

    def division_verdicts(self) -> dict:
        """right_division (gcrd route), zero_divisor_free and division (rank route).

        gcrd(f, c a) = gcrd(f, a) for constants c != 0, so only monic a are
        checked on the gcrd route.  The rank route runs over every nonzero
        element at once.
        """
        self._need_finite()
        one = (self.K.one,)
        right_division = all(gcrd(self.tw, self.f, a) == one for a in self._monic_elements())
        X = self.coordinate_array()[1:]
        T, p = self.structure, self.p
        L = np.einsum('ai,ijo->aoj', X, T) % p
        R = np.einsum('aj,ijo->aoi', X, T) % p
        left_ok = bool(linalg.batch_nonsingular(L, p).all())
        right_ok = bool(linalg.batch_nonsingular(R, p).all())
        return {
            'right_division': right_division,
            'zero_divisor_free': left_ok and right_ok,
            'division': right_division and left_ok,
            'right_mult_bijective': right_ok,
        }

    def zero_divisor_to_factor(self) -> Optional[dict]:
        """Find nonzero u, v with v o u = 0; then gcrd(f, u) is a proper right factor of f.

        The eigenring is searched first, then the whole algebra.
        """
        self._need_finite()
        found = self._eigenring_zero_divisor()
        source = 'eigenring'
        if found is None:
            found = self._algebra_zero_divisor()
            source = 'algebra'
        if found is None:
            return None
        u, v, g = found
        if not (1 <= len(g) - 1 < self.m) or right_rem(self.tw, self.f, g):
            raise AssertionError('zero divisor did not yield a proper right factor')
        return {'u': u, 'v': v, 'factor': g, 'source': source}

    def _eigenring_zero_divisor(self):
        E = self.eigenring()
        if E.size > ENUM_LIMIT:
            return None
        one = (self.K.one,)
        B = np.array(E.basis, dtype=np.int64).T
        for vu in E.elements():
            if not any(vu):
                continue
            u = self.from_coords(vu)
            # kernel of x -> x o u restricted to the eigenring
            M = self.mult_matrix(u, 'right')
            ker = linalg.nullspace(((M @ B) % self.p).tolist(), E.dim, self.p)
            if not ker:
                continue
            v = self.from_coords([int(x) for x in (B @ np.array(ker[0])) % self.p])
            g = gcrd(self.tw, self.f, u)
            if g == one or self.pmul(v, u):
                raise AssertionError('eigenring zero divisor is inconsistent')
            return u, v, g
        return None

    def _algebra_zero_divisor(self):
        one = (self.K.one,)
        for u in self._monic_elements():
            g = gcrd(self.tw, self.f, u)
            if g == one:
                continue
            ker = linalg.nullspace(self.mult_matrix(u, 'right').tolist(), self.dim, self.p)
            v = self.from_coords(ker[0])
            if self.pmul(v, u):
                raise AssertionError('kernel vector of R_u is not annihilated')
            return u, v, g
        return None

    # -- L_t identities ----------------------------------------------------

    def lt_power_identity(self, pairs_limit: int = 16) -> bool:
        """L_{t^j} = L_t^j, L_h = sum a_i L_t^i, and (delta = 0) L_t(a h) = sigma(a) L_t(h)."""
        self._need_finite()
        p, m = self.p, self.m
        Lt = self.mult_matrix(self.t(), 'left')
        power = np.eye(self.dim, dtype=np.int64)
        powers = [power]
        for j in range(1, m):
            power = (Lt @ power) % p
            powers.append(power)
            if not np.array_equal(self.mult_matrix(monomial(self.tw, j), 'left'), power):
                return False
        for h in self._sample_elements(pairs_limit):
            total = np.zeros((self.dim, self.dim), dtype=np.int64)
            for i, a in enumerate(h):
                total += self.mult_matrix(trim(self.tw, (a,)), 'left') @ powers[i]
            if not np.array_equal(total % p, self.mult_matrix(h, 'left')):
                return False
        if self.tw.delta_is_zero and self.K.q <= pairs_limit:
            t, tw = self.t(), self.tw
            for a in self.K.elements():
                for h in self.elements():
                    ah = trim(tw, [self.K.mul(a, c) for c in h])
                    lhs = self.pmul(t, ah)
                    rhs = trim(tw, [self.K.mul(tw.sigma(a), c) for c in self.pmul(t, h)])
                    if lhs != rhs:
                        return False
        return True

    def _sample_elements(self, limit: int):
        if self.K.q**self.m <= limit * limit:
            yield from self.elements()
            return
        import random
        rng = random.Random(12345)
        for _ in range(limit * limit):
            yield trim(self.tw, [rng.randrange(self.K.q) for _ in range(self.m)])

    # -- subalgebras ------------------------------------------------------

    def generated_subalgebra(self, gens: Iterable[SkewPoly]) -> Subspace:
        """Smallest GF(p)-subspace containing 1 and gens and closed under o."""
        vecs = [self.coords((self.K.one,))] + [self.coords(g) for g in gens]
        S = Subspace.span(self.p, self.dim, vecs)
        while True:
            polys = [self.from_coords(v) for v in S.basis]
            new = [self.coords(self.pmul(a, b)) for a in polys for b in polys]
            S2 = Subspace.span(self.p, self.dim, list(S.basis) + new)
            if S2.dim == S.dim:
                return S
            S = S2

    def has_nonzero_associator(self, S: Subspace) -> bool:
        polys = [self.from_coords(v) for v in S.basis]
        return any(self.associator(a, b, c) for a in polys for b in polys for c in polys)

    # -- report -------------------------------------------------------------

    def report(self) -> dict:
        """Summary for the `algebra-info` command."""
        tw = self.tw
        nl, nm, nr = self.nucleus('l'), self.nucleus('m'), self.nucleus('r')
        comm, center, s0 = self.commuter_center_s0()
        verdicts = self.division_verdicts()
        zd = self.zero_divisor_to_factor()
        witnesses: dict = {}
        if zd is not None:
            witnesses['zero_divisor'] = {'u': format_poly(tw, zd['u']), 'v': format_poly(tw, zd['v'])}
            witnesses['factor'] = format_poly(tw, zd['factor'])
            witnesses['source'] = zd['source']
        return {
            'f': format_poly(tw, self.f),
            'twist': tw.describe(),
            'dims': {'nuc_l': nl.dim, 'nuc_m': nm.dim, 'nuc_r': nr.dim,
                     'comm': comm.dim, 'center': center.dim, 's0': s0.dim},
            'flags': {
                'associative': self.is_associative(),
                'right_semi_invariant': self.is_right_semi_invariant(),
                'right_invariant': self.is_right_invariant(),
                't_in_nuc_r': self.t_in_right_nucleus(),
                'right_division': verdicts['right_division'],
                'division': verdicts['division'],
            },
            'witnesses': witnesses,
        }


def find_right_semi_invariant(tw: Twist, m: int) -> list[SkewPoly]:
    """Every monic f of degree m with f c = sigma^m(c) f for all c in K.

    The conditions are GF(p)-affine in the unknown coefficients a_0..a_{m-1},
    so they are solved exactly and the solution set is enumerated.
    """
    if not tw.finite:
        raise InfiniteDimensionalError('needs a finite coefficient field')
    if m < 1:
        raise ValueError('degree must be at least 1')
    K = tw.field
    p, h = K.p, K.h
    n = m * h
    cs = [p**k for k in range(h)]

    def residual(a: list[int]) -> list[int]:
        f = list(a) + [K.one]
        out = []
        for c in cs:
            sm = tw.sigma_pow(c, m)
            for j in range(m):
                lhs = K.mul(sm, f[j])
                rhs = K.sum(K.mul(f[i], delta_nj(tw, i, j, c)) for i in range(j, m + 1))
                out.extend(K.coeffs(K.sub(lhs, rhs)))
        return out

    def unpack(x) -> list[int]:
        return [K.from_coeffs(x[i * h:(i + 1) * h]) for i in range(m)]

    base = residual([0] * m)
    cols = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        r = residual(unpack(e))
        cols.append([(x - y) % p for x, y in zip(r, base)])
    rows = [[col[i] for col in cols] for i in range(len(base))]
    x0 = linalg.solve(rows, [(-b) % p for b in base], n, p)
    if x0 is None:
        return []
    kernel = linalg.nullspace(rows, n, p)
    if p**len(kernel) > ENUM_LIMIT:
        raise GuardExceeded(f'{p ** len(kernel)} semi-invariant polynomials')
    out = []
    for coeffs in itertools.product(range(p), repeat=len(kernel)):
        x = [(x0[i] + sum(c * v[i] for c, v in zip(coeffs, kernel))) % p for i in range(n)]
        out.append(tuple(unpack(x)) + (K.one,))
    out.sort()
    return out


def semi_invariant_closed_form(tw: Twist, m: int) -> list[SkewPoly]:
    """Monic sum_j c_j t^(jk) of degree m, k the order of sigma (delta = 0 only)."""
    if not tw.finite or not tw.delta_is_zero:
        raise PreconditionError('closed form needs delta = 0 over a finite field')
    K = tw.field
    k = tw.sigma_order()
    if m % k:
        return []
    n = m // k
    out = []
    for cs in itertools.product(range(K.q), repeat=n):
        f = [K.zero] * (m + 1)
        for j, c in enumerate(cs):
            f[j * k] = c
        f[m] = K.one
        out.append(tuple(f))
    out.sort()
    return out
