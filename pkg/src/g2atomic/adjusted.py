"""Adjusted bases and the second route to the atomic decomposition.

The adjusted element at level k subtracts one q-shifted term from the
level-(k+1) element when the indexing weight lies in the correction set X_k,
and is the level-(k+1) element otherwise:

    tN^k(lam) = tN^{k+1}(lam) - q * tN^{k+1}(lam - gamma_k)   if lam in X_k
    tN^k(lam) = tN^{k+1}(lam)                                 otherwise,

with tN^6 the canonical basis.  Unwinding the recursion across all four
levels expresses an adjusted element as a signed sum of canonical elements
over the sets X_I (adjusted_in_canonical).  In the other direction each
level inverts to a chain with all-positive powers of q (adjusted_expand_up),
and the level-2 adjusted elements expand positively into the atomic basis
(adjusted2_in_atomic), which yields a second, manifestly positive expansion
of the canonical basis into the atomic one (atomic_second).
"""

from __future__ import annotations

from functools import cache

from .lattice import (Weight, GAMMA, dominance_leq, gamma_sum, is_dominant,
                      sub, x_I_member, x_set_member)
from .polyq import Poly, poly_add, monomial, iadd_scaled
from .combo import Combination, CANONICAL, ATOMIC, adjusted_label, substitute

_INDEX_SUBSETS = tuple(
    tuple(i for i in (2, 3, 4, 5) if mask & (1 << (i - 2)))
    for mask in range(16)
)


def _check_dominant(w: Weight) -> None:
    if not is_dominant(w):
        raise ValueError(f"weight {w!r} is not dominant")


def _check_level(k: int) -> None:
    if k not in (2, 3, 4, 5):
        raise ValueError(f"level must be in 2..5, got {k!r}")


def adjusted_step_down(k: int, lam: Weight) -> Combination:
    """Adjusted level-k element in the level-(k+1) adjusted basis: the
    defining one- or two-term relation."""
    _check_level(k)
    _check_dominant(lam)
    terms: dict[Weight, Poly] = {lam: {0: 1}}
    if x_set_member(k, lam):
        terms[sub(lam, GAMMA[k])] = {1: -1}
    return Combination(adjusted_label(k + 1), terms)


def adjusted_expand_up(k: int, lam: Weight) -> Combination:
    """Adjusted level-(k+1) element in the level-k adjusted basis: the
    inverse chain, walking down by gamma_k while membership in X_k holds."""
    _check_level(k)
    _check_dominant(lam)
    terms: dict[Weight, Poly] = {}
    w = lam
    j = 0
    while True:
        terms[w] = {j: 1}
        if x_set_member(k, w):
            w = sub(w, GAMMA[k])
            j += 1
        else:
            break
    return Combination(adjusted_label(k), terms)


def adjusted_in_canonical(k: int, lam: Weight) -> Combination:
    """Adjusted level-k element in the canonical basis: the recursion
    unwound, a signed sum over index subsets I with min I >= k whose
    membership set X_I contains lam."""
    if k not in (2, 3, 4, 5, 6):
        raise ValueError(f"level must be in 2..6, got {k!r}")
    _check_dominant(lam)
    acc: dict[Weight, Poly] = {}
    for I in _INDEX_SUBSETS:
        if I and I[0] < k:
            continue
        if not x_I_member(I, lam):
            continue
        w = sub(lam, gamma_sum(I))
        # membership guarantees the shifted weight stays dominant
        if not is_dominant(w):
            raise RuntimeError(f"index set {I!r} left the dominant cone at {lam!r}")
        size = len(I)
        cur = poly_add(acc.get(w, {}), monomial(size, 1 if size % 2 == 0 else -1))
        if cur:
            acc[w] = cur
        else:
            acc.pop(w, None)
    return Combination(CANONICAL, acc)


@cache
def adjusted2_in_atomic(lam: Weight) -> Combination:
    """Adjusted level-2 element in the atomic basis.

    Case split on the first coordinate; every branch is manifestly positive.
    Recursion descends in the coordinate sum, so it terminates.
    """
    _check_dominant(lam)
    a, b = lam
    if a >= 3 or a + b < 2:
        return Combination(ATOMIC, {lam: {0: 1}})
    terms: dict[Weight, Poly] = {lam: {0: 1}}
    if a == 2:
        _acc_scaled(terms, adjusted2_in_atomic((0, b)), 2)
    elif a == 1:  # b >= 1 here
        _acc_scaled(terms, adjusted2_in_atomic((1, b - 1)), 2)
        for k in range(1, b + 1):
            _acc_poly(terms, (1 + k, b - k), monomial(k))
    else:  # a == 0, b >= 2
        _acc_scaled(terms, adjusted2_in_atomic((0, b - 2)), 4)
        for k in range(2, b + 1):
            _acc_poly(terms, (k, b - k), monomial(k))
    return Combination(ATOMIC, terms)


def _acc_scaled(dst: dict[Weight, Poly], x: Combination, exp: int) -> None:
    # dst += q**exp * x, in place
    for w, p in x.terms.items():
        tgt = dst.get(w)
        if tgt is None:
            tgt = dst[w] = {}
        iadd_scaled(tgt, p, exp, 1)
        if not tgt:
            del dst[w]


def _acc_poly(dst: dict[Weight, Poly], w: Weight, p: Poly) -> None:
    cur = poly_add(dst.get(w, {}), p)
    if cur:
        dst[w] = cur
    else:
        dst.pop(w, None)


# Second atomic pipeline: expand the canonical element down through the
# adjusted levels, then substitute the atomic expansion of level 2.
# Cached Combinations are shared; callers must not mutate them.

@cache
def _t3_atomic(mu: Weight) -> Combination:
    return substitute(adjusted_expand_up(2, mu), adjusted2_in_atomic, basis=ATOMIC)


@cache
def _t4_atomic(mu: Weight) -> Combination:
    return substitute(adjusted_expand_up(3, mu), _t3_atomic, basis=ATOMIC)


@cache
def _t5_atomic(mu: Weight) -> Combination:
    return substitute(adjusted_expand_up(4, mu), _t4_atomic, basis=ATOMIC)


@cache
def atomic_second(lam: Weight) -> Combination:
    """Expansion of the canonical element at lam in the atomic basis,
    computed along the adjusted-basis route.  Every substitution step has
    non-negative coefficients, so positivity holds by construction; the
    result must agree with the pre-canonical route, which the verification
    sweep asserts."""
    _check_dominant(lam)
    expansion = substitute(adjusted_expand_up(5, lam), _t5_atomic, basis=ATOMIC)
    terms = expansion.terms
    if terms.get(lam) != {0: 1}:
        raise RuntimeError(f"atomic expansion at {lam!r} is not unitriangular")
    for w, p in terms.items():
        if not dominance_leq(w, lam):
            raise RuntimeError(f"atomic expansion at {lam!r} has support at {w!r}")
        if any(c < 0 for c in p.values()):
            raise RuntimeError(f"atomic expansion at {lam!r} has a negative "
                               f"coefficient at {w!r}: {p!r}")
    return Combination(ATOMIC, terms)
