"""Congruence classification of quadratic forms and exact value counts.

classify() assigns the type of the form x -> x B x^T: rank 0 is zero, odd
rank parabolic, and positive even rank 2s hyperbolic when
chi((-1)^s * disc) = +1, elliptic otherwise. lambda_count and gamma_count
give the number of row-span vectors where the form takes the value 0 and
-alpha respectively; both have closed forms keyed on the class, plus
brute-force twins over F_q^rank used as oracles. The zero class behaves
like a hyperbolic form of rank 0 wherever a type is needed (one zero of the
empty form, gamma identically 0).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .gf import PrimeField
from .symmat import SymMatrix, congruence_diagonalize

ZERO = "zero"
PARABOLIC = "parabolic"
HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"


class ZeroAlphaError(ValueError):
    """gamma is only defined for non-zero alpha."""


@dataclass(frozen=True)
class QuadFormClass:
    """Complete congruence invariant: rank, type, discriminant class."""

    rank: int
    kind: str
    disc_class: int  # chi of the discriminant; 0 for rank 0


def class_from_invariants(field: PrimeField, rank: int, disc_class: int) -> QuadFormClass:
    if rank == 0:
        return QuadFormClass(0, ZERO, 0)
    if disc_class not in (1, -1):
        raise ValueError("disc_class must be +1 or -1 for positive rank")
    if rank % 2 == 1:
        return QuadFormClass(rank, PARABOLIC, disc_class)
    sign = field.chi((-1) ** (rank // 2))
    kind = HYPERBOLIC if sign * disc_class == 1 else ELLIPTIC
    return QuadFormClass(rank, kind, disc_class)


def classify(b: SymMatrix) -> QuadFormClass:
    df = congruence_diagonalize(b)
    return class_from_invariants(b.field, df.rank, df.delta_class)


def lambda_count_class(q: int, cls: QuadFormClass) -> int:
    """Zeros of a form of the given class on F_q^rank."""
    r = cls.rank
    if r == 0:
        return 1
    if cls.kind == PARABOLIC:
        return q ** (r - 1)
    s = r // 2
    if cls.kind == HYPERBOLIC:
        return q ** (r - 1) + q**s - q ** (s - 1)
    return q ** (r - 1) - q**s + q ** (s - 1)


def lambda_count(b: SymMatrix) -> int:
    """Number of row-span vectors XB with X B X^T = 0, by closed form."""
    return lambda_count_class(b.field.q, classify(b))


def lambda_count_bf(b: SymMatrix) -> int:
    """Brute-force twin of lambda_count over the diagonalized rank-r form."""
    df = congruence_diagonalize(b)
    q = b.field.q
    count = 0
    for xs in itertools.product(range(q), repeat=df.rank):
        if sum(d * x * x for d, x in zip(df.pivots, xs)) % q == 0:
            count += 1
    return count


def gamma_count_class(field: PrimeField, rank: int, disc_class: int, alpha: int) -> int:
    """Solutions of (form of the given class) = -alpha on F_q^rank.

    Computed as (lambda(diag(B, alpha)) - lambda(B)) / (q - 1): appending the
    diagonal entry alpha raises the rank by one and multiplies the
    discriminant by alpha, and each non-zero value -alpha*y^2 is hit q-1
    times as y runs over the non-zero scalars.
    """
    q = field.q
    if alpha % q == 0:
        raise ZeroAlphaError("alpha must be non-zero")
    base = lambda_count_class(q, class_from_invariants(field, rank, disc_class))
    disc_ext = field.chi(alpha) if rank == 0 else disc_class * field.chi(alpha)
    ext = lambda_count_class(q, class_from_invariants(field, rank + 1, disc_ext))
    diff, rem = divmod(ext - base, q - 1)
    if rem:
        raise ArithmeticError("gamma count is not integral")
    return diff


def gamma_count(b: SymMatrix, alpha: int) -> int:
    """Number of row-span vectors XB with X B X^T + alpha = 0, closed form."""
    df = congruence_diagonalize(b)
    return gamma_count_class(b.field, df.rank, df.delta_class, alpha)


def gamma_count_bf(b: SymMatrix, alpha: int) -> int:
    """Brute-force twin of gamma_count over the diagonalized rank-r form."""
    q = b.field.q
    if alpha % q == 0:
        raise ZeroAlphaError("alpha must be non-zero")
    df = congruence_diagonalize(b)
    target = (-alpha) % q
    count = 0
    for xs in itertools.product(range(q), repeat=df.rank):
        if sum(d * x * x for d, x in zip(df.pivots, xs)) % q == target:
            count += 1
    return count


def value_count_table(field: PrimeField, m: int) -> np.ndarray:
    """expected[rank, cidx, v] = #{x in F^rank : form(x) = v} by closed form.

    cidx 0 is discriminant class +1, cidx 1 is -1. Feed to
    _kernels.value_distribution_mismatches to certify lambda and gamma
    against every matrix at once.
    """
    q = field.q
    table = np.zeros((m + 1, 2, q), dtype=np.int64)
    for rank in range(m + 1):
        for cidx in (0, 1):
            dc = 1 if cidx == 0 else -1
            cls = class_from_invariants(field, rank, dc)
            table[rank, cidx, 0] = lambda_count_class(q, cls)
            if rank == 0:
                continue  # non-zero values unreachable, leave 0
            for v in range(1, q):
                # form(x) = v is gamma_alpha with alpha = -v
                table[rank, cidx, v] = gamma_count_class(field, rank, dc, (q - v) % q)
    return table


@dataclass(frozen=True)
class TypeSplit:
    """Counts of S(r, m) matrices with f_k^delta = 0, split by type."""

    parabolic: int
    hyperbolic: int
    elliptic: int


def type_split(
    field: PrimeField,
    k: int,
    delta_class: int,
    r: int,
    m: int,
    budget=None,
    workers=None,
) -> TypeSplit:
    """p, h, e counts at rank r by full enumeration of S_m.

    k = 0 means the zero functional, so the split of the whole rank stratum.
    The rank-0 stratum counts as hyperbolic.
    """
    if not 0 <= k <= m:
        raise ValueError("k out of range")
    if not 0 <= r <= m:
        raise ValueError("r out of range")
    didx = 0 if delta_class == 1 else 1
    cen = _kernels.joint_census(field.q, m, budget=budget, workers=workers)
    if r % 2 == 1:
        p = int(cen[k, didx, r, 0, 0] + cen[k, didx, r, 1, 0])
        return TypeSplit(parabolic=p, hyperbolic=0, elliptic=0)
    h = 0
    e = 0
    for cidx in (0, 1):
        n = int(cen[k, didx, r, cidx, 0])
        if n == 0:
            continue
        cls = class_from_invariants(field, r, 1 if cidx == 0 else -1)
        if cls.kind in (HYPERBOLIC, ZERO):
            h += n
        else:
            e += n
    return TypeSplit(parabolic=0, hyperbolic=h, elliptic=e)
