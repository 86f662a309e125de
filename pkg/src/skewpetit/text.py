"""Parsing of element and skew polynomial literals.

Grammar (whitespace-insensitive)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | 'z' | 'y' | 't' | '[' INT (',' INT)* ']' | '(' expr ')'

`z` is the primitive element of a finite field, `y` the function field
variable, `t` the skew variable.  Coefficients must stand to the left of t.
"""

from __future__ import annotations

import re

from .ff import FqContext

_TOKEN = re.compile(r'\s*(?:(\d+)|([a-zA-Z]+)|(.))')


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f'{message} at position {pos}\n  {text}\n  {" " * pos}^')


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            toks.append(('int', int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(('name', m.group(2), m.start(2)))
        elif m.group(3) is not None and not m.group(3).isspace():
            toks.append(('op', m.group(3), m.start(3)))
    toks.append(('end', None, len(text)))
    return toks


class _Parser:
    def __init__(self, field, text: str, allow_t: bool):
        self.K = field
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_t = allow_t

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.toks[self.i][2] if pos is None else pos)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != 'op' or tok[1] != op:
            self.i -= 1
            self.error(f'expected {op!r}')

    # values are dicts {power of t: coefficient}
    def add(self, a, b, sign=1):
        K = self.K
        out = dict(a)
        for k, c in b.items():
            c = c if sign > 0 else K.neg(c)
            out[k] = K.add(out.get(k, K.zero), c)
        return {k: c for k, c in out.items() if not K.is_zero(c)}

    def const(self, c):
        return {} if self.K.is_zero(c) else {0: c}

    def as_const(self, v, pos, what):
        if any(k for k in v):
            self.error(f'{what} must not contain t', pos)
        return v.get(0, self.K.zero)

    def mul(self, a, b, pos):
        K = self.K
        if all(k == 0 for k in a):
            c = a.get(0, K.zero)
            return {k: K.mul(c, v) for k, v in b.items() if not K.is_zero(K.mul(c, v))}
        if len(b) == 1 and next(iter(b.values())) == K.one:
            j = next(iter(b))
            return {k + j: v for k, v in a.items()}
        self.error('coefficients must be written to the left of t', pos)

    def parse(self):
        v = self.expr()
        if self.peek()[0] != 'end':
            self.error('unexpected input')
        return v

    def expr(self):
        neg = False
        if self.peek()[:2] == ('op', '-'):
            self.take()
            neg = True
        v = self.term()
        if neg:
            v = self.add({}, v, -1)
        while self.peek()[0] == 'op' and self.peek()[1] in '+-':
            op = self.take()[1]
            v = self.add(v, self.term(), 1 if op == '+' else -1)
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] == 'op' and self.peek()[1] in '*/':
            op, pos = self.take()[1], self.peek()[2]
            rhs = self.factor()
            if op == '*':
                v = self.mul(v, rhs, pos)
            else:
                den = self.as_const(rhs, pos, 'divisor')
                if self.K.is_zero(den):
                    self.error('division by zero', pos)
                num = self.as_const(v, pos, 'dividend')
                v = self.const(self.K.div(num, den))
        return v

    def factor(self):
        pos = self.peek()[2]
        v, is_t = self.atom()
        if self.peek()[:2] == ('op', '^'):
            self.take()
            sign = 1
            if self.peek()[:2] == ('op', '-'):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != 'int':
                self.i -= 1
                self.error('expected integer exponent')
            e = sign * tok[1]
            if is_t:
                if e < 0:
                    self.error('negative power of t', pos)
                return {e: self.K.one}
            c = self.as_const(v, pos, 'base of a power')
            if self.K.is_zero(c) and e < 0:
                self.error('zero to a negative power', pos)
            return self.const(self.K.pow(c, e))
        return v

    def atom(self):
        K = self.K
        kind, val, pos = self.take()
        if kind == 'int':
            return self.const(K.from_int(val)), False
        if kind == 'name':
            if val == 't':
                if not self.allow_t:
                    self.error('t is not allowed in a field element', pos)
                return {1: K.one}, True
            if val == 'z' and isinstance(K, FqContext):
                return self.const(K.z), False
            if val == 'y' and not isinstance(K, FqContext):
                return self.const(K.y), False
            self.error(f'unknown symbol {val!r}', pos)
        if kind == 'op' and val == '(':
            v = self.expr()
            self.expect(')')
            return v, False
        if kind == 'op' and val == '[':
            if not isinstance(K, FqContext):
                self.error('coefficient vectors need a finite field', pos)
            coeffs = []
            neg = False
            while True:
                tok = self.take()
                if tok[:2] == ('op', '-'):
                    neg = True
                    continue
                if tok[0] != 'int':
                    self.i -= 1
                    self.error('expected integer')
                coeffs.append(-tok[1] if neg else tok[1])
                neg = False
                tok = self.take()
                if tok[:2] == ('op', ']'):
                    break
                if tok[:2] != ('op', ','):
                    self.i -= 1
                    self.error("expected ',' or ']'")
            if len(coeffs) > K.h:
                self.error(f'more than {K.h} coefficients', pos)
            return self.const(K.from_coeffs(coeffs)), False
        self.i -= 1
        self.error('unexpected token')


def parse_coefficient(field, text: str):
    """A field element literal (no t)."""
    v = _Parser(field, text, allow_t=False).parse()
    return v.get(0, field.zero)


def parse_skew_poly(field, text: str) -> tuple:
    """A skew polynomial literal as a coefficient tuple, low-to-high."""
    v = _Parser(field, text, allow_t=True).parse()
    if not v:
        return ()
    n = max(v)
    return tuple(v.get(k, field.zero) for k in range(n + 1))
