"""Finite fields GF(p^h) with Frobenius maps, fixed subfields and logarithms.

An element is a plain int: the coefficient vector (c_0, ..., c_{h-1}) of its
representative modulo the defining polynomial, packed in base p as
c_0 + c_1 p + ... + c_{h-1} p^{h-1}.  So 0 and 1 are the field's zero and one
and the ints 0 .. p-1 are exactly the prime field.  Elements carry no
reference to their field; every operation goes through an ``FqContext``.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

from . import fpx, linalg

TABLE_LIMIT = 1 << 16        # log/antilog tables up to this field size
FULL_TABLE_LIMIT = 1 << 8    # complete add/mul tables up to this size
BRUTE_LOG_LIMIT = 1 << 20    # discrete log by scanning below this size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Subfield:
    """The fixed field of k -> k^(p^r) inside an ambient GF(p^h)."""

    r: int
    q: int
    degree: int
    basis: tuple[int, ...]       # GF(p)-basis, as ambient elements
    elements: tuple[int, ...]    # all members, sorted by packed value

    def __contains__(self, a: int) -> bool:
        return a in self._members

    @functools.cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


class FqContext:
    """GF(p^h) given by a monic irreducible modulus and a primitive element.

    Immutable after construction.
    """

    def __init__(self, p: int, h: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f'{p} is not prime')
        if h < 1:
            raise ValueError('extension degree must be at least 1')
        self.p = p
        self.h = h
        self.q = p**h
        if modulus is None:
            modulus = self._least_irreducible(p, h)
        else:
            modulus = fpx.trim(int(c) % p for c in modulus)
            if fpx.deg(modulus) != h or modulus[-1] != 1:
                raise ValueError(f'modulus must be monic of degree {h}')
            if not fpx.is_irreducible(modulus, p):
                raise ValueError(f'modulus {list(modulus)} is reducible over GF({p})')
        self.modulus: tuple[int, ...] = modulus
        self._frob_tables: dict[int, list[int]] = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add: list[list[int]] | None = None
        self._mul: list[list[int]] | None = None
        self._neg = None
        self.z = self._find_primitive()
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    @staticmethod
    def _least_irreducible(p: int, h: int) -> tuple[int, ...]:
        if h == 1:
            return (0, 1)
        for cand in fpx.monics(h, p):
            if fpx.is_irreducible(cand, p):
                return cand
        raise AssertionError('no irreducible polynomial found')  # unreachable

    # -- representation -------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.h):
            a, c = divmod(a, p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.h:
            coeffs = list(fpx.mod(fpx.trim(c % self.p for c in coeffs), self.modulus, self.p))
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    zero = 0
    one = 1

    def is_zero(self, a: int) -> bool:
        return a == 0

    # -- arithmetic -----------------------------------------------------

    def _poly(self, a: int) -> fpx.Poly:
        return fpx.trim(self.coeffs(a))

    def _raw_mul(self, a: int, b: int) -> int:
        prod = fpx.mod(fpx.mul(self._poly(a), self._poly(b), self.p), self.modulus, self.p)
        return self.from_coeffs(prod)

    def _raw_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _raw_neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs((-c) % self.p for c in self.coeffs(a))

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        n = self.q - 1
        cofactors = [n // f for f in prime_factors(n)]
        for a in range(1, self.q):
            if all(self._raw_pow(a, e) != 1 for e in cofactors):
                return a
        raise AssertionError('multiplicative group is not cyclic')  # unreachable

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.z)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log
        self._neg = [self._raw_neg(a) for a in range(self.q)]
        if self.q <= FULL_TABLE_LIMIT:
            q = self.q
            self._add = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]
            mul = [[0] * q for _ in range(q)]
            for a in range(1, q):
                la = log[a]
                row = mul[a]
                for b in range(1, q):
                    row[b] = exp[la + log[b]]
            self._mul = mul

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self._raw_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError('inverse of zero in GF(%d)' % self.q)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._raw_pow(a, e % (self.q - 1))

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError('zero has no multiplicative order')
        n = self.q - 1
        k = n
        for f in prime_factors(n):
            while k % f == 0 and self.pow(a, k // f) == 1:
                k //= f
        return k

    def sum(self, items) -> int:
        s = 0
        for x in items:
            s = self.add(s, x)
        return s

    # -- Frobenius ------------------------------------------------------

    def frobenius(self, a: int, r: int = 1) -> int:
        """a^(p^r); r is reduced modulo h, negative r gives the inverse map."""
        r %= self.h
        if r == 0 or a == 0:
            return a
        tab = self._frob_tables.get(r)
        if tab is not None:
            return tab[a]
        if self._exp is not None:
            return self._exp[self._log[a] * self.p**r % (self.q - 1)]
        return self._raw_pow(a, self.p**r)

    def frobenius_table(self, r: int) -> list[int]:
        r %= self.h
        tab = self._frob_tables.get(r)
        if tab is None:
            tab = [self.frobenius(a, r) for a in range(self.q)]
            self._frob_tables[r] = tab
        return tab

    def sigma_order(self, r: int) -> int:
        """Order of k -> k^(p^r) as an automorphism: h / gcd(r, h)."""
        return self.h // math.gcd(r % self.h, self.h)

    def fixed_subfield(self, r: int) -> Subfield:
        """Fix(k -> k^(p^r)), computed as the kernel of Frob^r - id over GF(p)."""
        p, h = self.p, self.h
        # column k of (Frob^r - id) is the image of the k-th power basis element
        cols = []
        for k in range(h):
            e = p**k
            cols.append(self.coeffs(self.sub(self.frobenius(e, r), e)))
        rows = [[cols[k][i] for k in range(h)] for i in range(h)]
        kernel = linalg.nullspace(rows, h, p)
        basis = tuple(self.from_coeffs(v) for v in kernel)
        members = {0}
        for b in basis:
            members |= {self.add(m, self.mul(self.from_int(c), b)) for m in members for c in range(p)}
        d = len(basis)
        return Subfield(r=r % h, q=p**d, degree=d, basis=basis, elements=tuple(sorted(members)))

    def norm(self, b: int, r: int) -> int:
        """prod_{l < n} sigma^l(b) with sigma = Frob^r of order n."""
        out = 1
        for l in range(self.sigma_order(r)):
            out = self.mul(out, self.frobenius(b, r * l))
        return out

    # -- logarithms -----------------------------------------------------

    def exp(self, u: int) -> int:
        return self.pow(self.z, u)

    def log(self, a: int) -> int:
        """The unique u in [0, q-1) with z^u = a."""
        if a == 0:
            raise ValueError('discrete log of zero')
        n = self.q - 1
        if self._log is not None:
            return self._log[a]
        if self.q <= BRUTE_LOG_LIMIT:
            x = 1
            for u in range(n):
                if x == a:
                    return u
                x = self.mul(x, self.z)
            raise AssertionError('element not in the group generated by z')
        # baby-step giant-step
        m = math.isqrt(n) + 1
        baby = {}
        x = 1
        for j in range(m):
            baby.setdefault(x, j)
            x = self.mul(x, self.z)
        giant = self.inv(self.pow(self.z, m))
        y = a
        for i in range(m):
            if y in baby:
                return (i * m + baby[y]) % n
            y = self.mul(y, giant)
        raise AssertionError('element not in the group generated by z')

    # -- text forms -----------------------------------------------------

    def format(self, a: int) -> str:
        if a == 0:
            return '0'
        if a == 1:
            return '1'
        if self.h == 1:
            return str(a)
        u = self.log(a)
        return 'z' if u == 1 else f'z^{u}'

    def format_coeffs(self, a: int) -> str:
        return '[' + ','.join(map(str, self.coeffs(a))) + ']'

    def parse(self, text: str) -> int:
        """Parse `0`, an integer, `z`, `z^u` or a bracketed coefficient vector."""
        s = text.replace(' ', '')
        m = re.fullmatch(r'z(?:\^(-?\d+))?', s)
        if m:
            return self.exp(int(m.group(1) or 1))
        m = re.fullmatch(r'\[([\d,\-]*)\]', s)
        if m:
            parts = [int(x) for x in m.group(1).split(',') if x]
            if len(parts) > self.h:
                raise ValueError(f'coefficient vector longer than {self.h}')
            return self.from_coeffs(parts)
        if re.fullmatch(r'-?\d+', s):
            return self.from_int(int(s))
        raise ValueError(f'cannot parse field element {text!r}')

    def describe(self) -> str:
        return f'{self.p}^{self.h}/mod=[' + ','.join(map(str, self.modulus)) + ']'

    def __repr__(self):
        return f'FqContext({self.describe()})'

    def __eq__(self, other):
        return isinstance(other, FqContext) and (self.p, self.h, self.modulus) == (
            other.p, other.h, other.modulus)

    def __hash__(self):
        return hash((self.p, self.h, self.modulus))

    def __reduce__(self):
        return (fq_make, (self.p, self.h, self.modulus))


@functools.lru_cache(maxsize=None)
def _cached(p: int, h: int, modulus) -> FqContext:
    return FqContext(p, h, modulus)


def fq_make(p: int, h: int, modulus=None) -> FqContext:
    """Shared, cached context for GF(p^h)."""
    return _cached(p, h, None if modulus is None else tuple(modulus))


def parse_field(text: str) -> FqContext:
    """Parse `p^h` with optional `/mod=[c0,...,ch]`."""
    m = re.fullmatch(r'\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:/\s*mod\s*=\s*\[([\d,\s]*)\])?\s*', text)
    if not m:
        raise ValueError(f'cannot parse field description {text!r}')
    p = int(m.group(1))
    h = int(m.group(2) or 1)
    modulus = None
    if m.group(3) is not None:
        modulus = tuple(int(x) for x in m.group(3).split(',') if x.strip())
    return fq_make(p, h, modulus)
