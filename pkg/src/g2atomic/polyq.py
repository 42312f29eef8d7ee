"""Sparse integer Laurent polynomials in q.

A polynomial is a dict mapping exponent to nonzero integer coefficient; the
zero polynomial is the empty dict.  Canonical form means no zero entries, so
dict equality is polynomial equality.  Functions never mutate their
arguments.  Exponents may be negative in principle; every basis change in
this package produces only non-negative ones.
"""

from __future__ import annotations

Poly = dict[int, int]


def zero() -> Poly:
    return {}


def one() -> Poly:
    return {0: 1}


def monomial(exp: int, coeff: int = 1) -> Poly:
    return {exp: coeff} if coeff else {}


def poly_add(p: Poly, r: Poly) -> Poly:
    out = dict(p)
    for e, c in r.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_sub(p: Poly, r: Poly) -> Poly:
    out = dict(p)
    for e, c in r.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_mul(p: Poly, r: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def poly_scale_qpow(p: Poly, k: int, coeff: int = 1) -> Poly:
    """coeff * q**k * p."""
    if not coeff:
        return {}
    return {e + k: c * coeff for e, c in p.items()}


def iadd_scaled(acc: Poly, p: Poly, k: int = 0, coeff: int = 1) -> None:
    """In-place acc += coeff * q**k * p.  Internal accumulator plumbing;
    acc must be a dict owned by the caller."""
    if not coeff:
        return
    for e, c in p.items():
        e2 = e + k
        s = acc.get(e2, 0) + c * coeff
        if s:
            acc[e2] = s
        else:
            del acc[e2]


def eval_at_one(p: Poly) -> int:
    return sum(p.values())


def is_nonnegative(p: Poly) -> bool:
    return all(c >= 0 for c in p.values())


def degree(p: Poly):
    """Largest exponent, or None for the zero polynomial."""
    return max(p) if p else None


def trailing_degree(p: Poly):
    """Smallest exponent, or None for the zero polynomial."""
    return min(p) if p else None


def leading_coeff(p: Poly) -> int:
    return p[max(p)] if p else 0


def to_pairs(p: Poly) -> list[list[int]]:
    """Serialize as [exponent, coefficient] pairs, ascending exponent."""
    return [[e, p[e]] for e in sorted(p)]


def from_pairs(pairs) -> Poly:
    """Inverse of to_pairs.  Rejects duplicate exponents and zero
    coefficients so that serialized form stays canonical."""
    out: Poly = {}
    for e, c in pairs:
        e = int(e)
        c = int(c)
        if c == 0:
            raise ValueError("zero coefficient in serialized polynomial")
        if e in out:
            raise ValueError("duplicate exponent in serialized polynomial")
        out[e] = c
    return out
