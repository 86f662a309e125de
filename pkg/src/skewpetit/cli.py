"""Command-line front end.

Global options describe the twisted ring; the verb selects the operation.
JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 refused precondition, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import irred, oracle
from .errors import PreconditionError
from .ff import parse_field
from .funcfield import FuncField, parse_funcfield
from .petit import PetitAlgebra, find_right_semi_invariant
from .skew import (
    Twist,
    format_poly,
    gcrd,
    lclm,
    left_divmod,
    parse_poly,
    right_divmod,
    skew_mul,
)
from .text import ParseError, parse_coefficient

SCHEMA = 1


def build_twist(args) -> Twist:
    """Twist from the global options; warns on stderr when an inner derivation vanishes."""
    desc = args.field.strip()
    if desc.startswith('funcfield'):
        K = parse_funcfield(desc)
        if args.r is not None:
            r = args.r
        else:
            r = 0 if args.sigma == 'id' else 1
    else:
        K = parse_field(desc)
        if args.modulus:
            K = parse_field(f'{K.p}^{K.h}/mod={args.modulus}')
        if args.r is not None:
            r = args.r
        else:
            r = 0 if args.sigma == 'id' else 1
    delta = args.delta.strip()
    if delta.startswith('inner'):
        _, _, elem = delta.partition(':')
        if not elem:
            raise ValueError('inner derivation needs an element: inner:ELEM')
        c = parse_coefficient(K, elem)
        tw = Twist(K, r, 'inner', c)
        if tw.delta_is_zero:
            print('warning: inner derivation is identically zero; using delta = 0', file=sys.stderr)
        return tw
    if delta in ('zero', 'ddy'):
        return Twist(K, r, delta)
    raise ValueError(f'unknown derivation {args.delta!r} (zero | inner:ELEM | ddy)')


def _poly(tw, text):
    return parse_poly(tw, text)


def _fmt(tw, g):
    return format_poly(tw, g)


# -- verbs -----------------------------------------------------------------

def cmd_mul(tw, args):
    f, g = _poly(tw, args.f), _poly(tw, args.g)
    return {'product': _fmt(tw, skew_mul(tw, f, g))}


def cmd_divmod(tw, args):
    f, g = _poly(tw, args.f), _poly(tw, args.g)
    if args.side == 'right':
        q, r = right_divmod(tw, f, g)
        identity = 'f = q g + r'
    else:
        q, r = left_divmod(tw, f, g)
        identity = 'f = g q + r'
    return {'side': args.side, 'quotient': _fmt(tw, q), 'remainder': _fmt(tw, r), 'identity': identity}


def cmd_gcrd(tw, args):
    return {'gcrd': _fmt(tw, gcrd(tw, _poly(tw, args.f), _poly(tw, args.g)))}


def cmd_lclm(tw, args):
    return {'lclm': _fmt(tw, lclm(tw, _poly(tw, args.f), _poly(tw, args.g)))}


def cmd_irreducible(tw, args):
    f = _poly(tw, args.f)
    out = {'f': _fmt(tw, f)}
    out.update(irred.irreducible(tw, f).as_dict())
    return out


def cmd_census(tw, args):
    return irred.census(tw, args.m).as_dict()


def cmd_algebra_info(tw, args):
    return PetitAlgebra(tw, _poly(tw, args.f)).report()


def cmd_nucleus(tw, args):
    A = PetitAlgebra(tw, _poly(tw, args.f))
    N = A.nucleus(args.which)
    return {'f': _fmt(tw, A.f), 'which': args.which, 'dim': N.dim, 'size': N.size,
            'basis': [_fmt(tw, A.from_coords(v)) for v in N.basis]}


def cmd_semi_invariant(tw, args):
    A = PetitAlgebra(tw, _poly(tw, args.f))
    out = {'f': _fmt(tw, A.f)}
    if args.B:
        B = [parse_coefficient(tw.field, x) for x in args.B.split(',')]
        out['B'] = [tw.field.format(b) for b in B]
        out['B_weak_semi_invariant'] = A.is_B_weak_semi_invariant(B)
        out['B_in_nuc_r'] = A.embed(B) <= A.nucleus('r')
    else:
        out['right_semi_invariant'] = A.is_right_semi_invariant()
        out['right_invariant'] = A.is_right_invariant()
        out['K_in_nuc_r'] = A.k_slice() <= A.nucleus('r')
    return out


def cmd_find_semi_invariant(tw, args):
    found = find_right_semi_invariant(tw, args.deg)
    return {'deg': args.deg, 'count': len(found), 'polynomials': [_fmt(tw, f) for f in found]}


def cmd_factor(tw, args):
    A = PetitAlgebra(tw, _poly(tw, args.f))
    zd = A.zero_divisor_to_factor()
    if zd is None:
        return {'f': _fmt(tw, A.f), 'zero_divisor': None, 'factor': None}
    return {'f': _fmt(tw, A.f), 'zero_divisor': {'u': _fmt(tw, zd['u']), 'v': _fmt(tw, zd['v'])},
            'relation': 'v o u = 0', 'factor': _fmt(tw, zd['factor']), 'source': zd['source']}


def cmd_oracle_factor(tw, args):
    f = _poly(tw, args.f)
    fac = oracle.full_factorization(tw, f, args.jobs)
    out = {'f': _fmt(tw, f), 'irreducible': len(fac.factors) == 1}
    out.update(fac.as_dict(tw))
    return out


def cmd_certify(tw, args):
    if not isinstance(tw.field, FuncField):
        raise PreconditionError('certify works over funcfield:p')
    a = parse_coefficient(tw.field, args.a)
    v = irred.certify_tm_minus_a(tw, args.m, a)
    out = {'family': args.family, 'm': args.m, 'a': tw.field.format(a)}
    out.update(v.as_dict())
    return out


VERBS = {
    'mul': cmd_mul,
    'divmod': cmd_divmod,
    'gcrd': cmd_gcrd,
    'lclm': cmd_lclm,
    'irreducible': cmd_irreducible,
    'census': cmd_census,
    'algebra-info': cmd_algebra_info,
    'nucleus': cmd_nucleus,
    'semi-invariant': cmd_semi_invariant,
    'find-semi-invariant': cmd_find_semi_invariant,
    'factor': cmd_factor,
    'oracle-factor': cmd_oracle_factor,
    'certify': cmd_certify,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog='skewpetit', allow_abbrev=False,
        description='Exact arithmetic in K[t; sigma, delta] and the algebras S_f = R/Rf.',
        epilog='Elements: z^k, integers or [c0,c1,...] over GF(p^h); fractions of '
               'y-polynomials over funcfield:p.  Polynomials: e.g. "t^2 - z*t + z^2".')
    ap.add_argument('--field', required=True, help='p^h, p^h/mod=[c0,...,ch] or funcfield:p')
    ap.add_argument('--modulus', help='modulus override [c0,...,ch] (low to high)')
    ap.add_argument('--r', type=int, help='sigma = Frobenius^r (funcfield: 0 or 1)')
    ap.add_argument('--sigma', choices=['frob', 'id'], default='frob',
                    help='shorthand for r = 1 or r = 0 when --r is absent')
    ap.add_argument('--delta', default='zero', help='zero | inner:ELEM | ddy')
    ap.add_argument('--format', choices=['json', 'text'], default='json')
    ap.add_argument('--jobs', type=int, default=1, help='worker processes for oracle sweeps')
    # output options are also accepted after the verb
    late = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    late.add_argument('--format', choices=['json', 'text'], default=argparse.SUPPRESS)
    late.add_argument('--jobs', type=int, default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest='verb', required=True)

    def verb(name, help_):
        return sub.add_parser(name, help=help_, parents=[late], allow_abbrev=False)

    def two(name, help_):
        p = verb(name, help_)
        p.add_argument('--f', required=True)
        p.add_argument('--g', required=True)
        return p

    two('mul', 'skew product f g')
    two('divmod', 'division with remainder').add_argument(
        '--side', choices=['left', 'right'], default='right')
    two('gcrd', 'greatest common right divisor (monic)')
    two('lclm', 'least common left multiple (monic)')
    verb('irreducible', 'irreducibility by the matching criterion').add_argument(
        '--f', required=True)
    verb('census', 'census of t^m - a').add_argument('--m', type=int, required=True)
    verb('algebra-info', 'report on S_f').add_argument('--f', required=True)
    p = verb('nucleus', 'left, middle or right nucleus of S_f')
    p.add_argument('--f', required=True)
    p.add_argument('--which', choices=['l', 'm', 'r'], default='r')
    p = verb('semi-invariant', '(B-weak) right semi-invariance of f')
    p.add_argument('--f', required=True)
    p.add_argument('--B', help='comma-separated GF(p)-spanning set of a subring B')
    verb('find-semi-invariant', 'all monic right semi-invariant f of a degree').add_argument(
        '--deg', type=int, required=True)
    verb('factor', 'right factor of f from a zero divisor of S_f').add_argument(
        '--f', required=True)
    verb('oracle-factor', 'brute-force complete factorization').add_argument(
        '--f', required=True)
    p = verb('certify', 'function-field certificates')
    p.add_argument('--family', choices=['tm-a'], default='tm-a')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--a', required=True)
    return ap


def _emit(obj: dict, fmt: str):
    if fmt == 'json':
        print(json.dumps(obj, indent=2))
        return
    for key, val in obj.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val)
        print(f'{key}: {val}')


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        tw = build_twist(args)
        result = VERBS[args.verb](tw, args)
    except PreconditionError as exc:
        _emit({'schema': SCHEMA, 'verb': args.verb, 'refused': True, 'reason': str(exc)}, args.format)
        print(f'refused: {exc}', file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 1
    out = {'schema': SCHEMA, 'verb': args.verb, 'twist': tw.describe()}
    out.update(result)
    _emit(out, args.format)
    return 0


if __name__ == '__main__':
    sys.exit(main())
