"""Evaluation codes on symmetric matrices of bounded rank.

The affine code evaluates every functional tr(F .) at all symmetric m x m
matrices of rank <= t, the zero matrix included; the projective variant
evaluates at one representative per scaling class, the matrices whose first
non-zero packed coordinate is 1, in enumeration order. Affine weights are
(q-1) times projective weights codeword by codeword. Everything here is the
brute-force side; the formula layer in spectrum must agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .gf import Fe, PrimeField
from .symmat import SymMatrix, canonical_form, census, iter_rank_le, packed_size

VARIANTS = ("affine", "projective")


class DimensionMismatchError(ValueError):
    """Operands live over different fields or sizes."""


@dataclass(frozen=True)
class CodeId:
    """Parameters naming one code: field order, size, rank bound, variant."""

    q: int
    m: int
    t: int
    variant: str

    def __post_init__(self):
        PrimeField(self.q)  # validates the field order
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not 1 <= self.t <= self.m:
            raise ValueError("t must satisfy 1 <= t <= m")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int


@dataclass(frozen=True)
class WeightRecord:
    """Weight of the class functional f_k^delta with its per-rank pieces."""

    k: int
    delta_class: int
    t: int
    m: int
    weight: int
    restricted: tuple[int, ...]  # w(r) for r = 1..t


def functional_matrix(field: PrimeField, m: int, k: int, delta_class: int) -> SymMatrix:
    """The matrix diag(1, ..., 1, delta, 0, ..., 0) of f_k^delta (k ones total)."""
    if not 0 <= k <= m:
        raise ValueError("k out of range")
    values = [0] * m
    for i in range(k - 1):
        values[i] = 1
    if k >= 1:
        values[k - 1] = field.delta_rep(delta_class)
    return SymMatrix.diagonal(field, values)


def trace_pairing(f: SymMatrix, a: SymMatrix) -> Fe:
    """tr(FA) for symmetric F, A: sum of F_ij * A_ij over all entries."""
    if f.field != a.field or f.m != a.m:
        raise DimensionMismatchError("operands must share field and size")
    q = f.field.q
    total = 0
    pos = 0
    for i in range(f.m):
        for j in range(i, f.m):
            term = f.entries[pos] * a.entries[pos]
            total += term if i == j else 2 * term
            pos += 1
    return f.field.element(total % q)


def symmetrize(field: PrimeField, rows) -> SymMatrix:
    """(F + F^T)/2: the symmetric matrix with the same trace pairing values."""
    rows = [list(r) for r in rows]
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("rows must form a square matrix")
    inv2 = field.inv(2)
    sym = [
        [((rows[i][j] + rows[j][i]) * inv2) % field.q for j in range(m)]
        for i in range(m)
    ]
    return SymMatrix.from_rows(field, sym)


def code_params(cid: CodeId) -> CodeParams:
    """Exact length and dimension; dimension is always m(m+1)/2."""
    cen = census(cid.q, cid.m)
    n = cen.n_le(cid.t) if cid.variant == "affine" else cen.n_proj(cid.t)
    return CodeParams(n=n, k=packed_size(cid.m))


def evaluation_points(cid: CodeId, budget=None) -> Iterator[SymMatrix]:
    """The code's evaluation points in enumeration order."""
    for a in iter_rank_le(cid.field, cid.m, cid.t, budget=budget):
        if cid.variant == "affine":
            yield a
        else:
            nz = next((e for e in a.entries if e != 0), None)
            if nz == 1:
                yield a


def codeword_weight_bf(f: SymMatrix, cid: CodeId, budget=None, workers=None) -> int:
    """|{A : tr(FA) != 0}| over the code's evaluation points, by enumeration."""
    if f.field.q != cid.q or f.m != cid.m:
        raise DimensionMismatchError("functional does not match the code")
    aff, proj = _kernels.weights_batch(
        cid.q, cid.m, cid.t, [f.entries], budget=budget, workers=workers
    )
    return int(aff[0] if cid.variant == "affine" else proj[0])


def restricted_weight_bf(
    field: PrimeField, k: int, delta_class: int, r: int, m: int, budget=None, workers=None
) -> int:
    """|{A in S(r, m) : f_k^delta(A) != 0}| by enumeration (k = 0 gives 0)."""
    if not 0 <= k <= m:
        raise ValueError("k out of range")
    if r < 0 or r > m:
        return 0
    didx = 0 if delta_class == 1 else 1
    cen = _kernels.joint_census(field.q, m, budget=budget, workers=workers)
    return int(cen[k, didx, r, :, 1:].sum())


def weight_record_bf(
    field: PrimeField, k: int, delta_class: int, t: int, m: int, budget=None, workers=None
) -> WeightRecord:
    """Brute-force weight of f_k^delta with its restricted-weight breakdown."""
    parts = tuple(
        restricted_weight_bf(field, k, delta_class, r, m, budget=budget, workers=workers)
        for r in range(1, t + 1)
    )
    return WeightRecord(
        k=k, delta_class=delta_class, t=t, m=m, weight=sum(parts), restricted=parts
    )


def class_multiplicities(field: PrimeField, m: int, budget=None, workers=None, method="enumerate"):
    """Number of matrices per congruence class (rank k, delta class), plus rank 0.

    Returns a dict {(k, delta_class): count} with (0, 0) for the zero class.
    """
    out: dict[tuple[int, int], int] = {(0, 0): 1}
    if method == "enumerate":
        cen = _kernels.joint_census(field.q, m, budget=budget, workers=workers)
        for k in range(1, m + 1):
            for cidx, dc in ((0, 1), (1, -1)):
                cnt = int(cen[0, 0, k, cidx, 0])
                if cnt:
                    out[(k, dc)] = cnt
        return out
    if method == "closed":
        cen = census(field.q, m)
        for k in range(1, m + 1):
            if k % 2 == 1:
                half, rem = divmod(cen.s[k], 2)
                if rem:
                    raise ArithmeticError("odd-rank class count is not even")
                out[(k, 1)] = half
                out[(k, -1)] = half
            else:
                # discriminant class of a hyperbolic form is chi((-1)^{k/2})
                sign = field.chi((-1) ** (k // 2))
                out[(k, sign)] = cen.v_plus[k]
                out[(k, -sign)] = cen.v_minus[k]
        return out
    raise ValueError("method must be 'enumerate' or 'closed'")


def spectrum(cid: CodeId, budget=None, workers=None, method="auto"):
    """Full weight spectrum as a sorted tuple of (weight, multiplicity).

    Weights depend only on the congruence class of F, so the spectrum is
    assembled from the 2m class representatives f_k^delta plus the zero
    word. method 'enumerate' takes class weights and multiplicities from
    full sweeps; 'formula' uses the formula layer and closed class counts;
    'auto' enumerates when the budget allows and falls back to formulas.
    """
    field = cid.field
    m = cid.m
    from .symmat import DEFAULT_BUDGET

    limit = DEFAULT_BUDGET if budget is None else budget
    if method == "auto":
        method = "enumerate" if cid.q ** packed_size(m) <= limit else "formula"
    reps = [(k, dc) for k in range(1, m + 1) for dc in (1, -1)]
    if method == "enumerate":
        mults = class_multiplicities(field, m, budget=budget, workers=workers)
        packed = [functional_matrix(field, m, k, dc).entries for k, dc in reps]
        aff, proj = _kernels.weights_batch(
            cid.q, m, cid.t, packed, budget=budget, workers=workers
        )
        weights = {
            (k, dc): int(a if cid.variant == "affine" else p)
            for (k, dc), a, p in zip(reps, aff, proj)
        }
    elif method == "formula":
        from .spectrum import weight_theorem

        mults = class_multiplicities(field, m, method="closed")
        weights = {}
        for k, dc in reps:
            w = weight_theorem(field, k, dc, cid.t, m, budget=budget, workers=workers)
            if cid.variant == "projective":
                w, rem = divmod(w, cid.q - 1)
                if rem:
                    raise ArithmeticError("affine weight not divisible by q-1")
            weights[(k, dc)] = w
    else:
        raise ValueError("method must be 'auto', 'enumerate', or 'formula'")
    spec: dict[int, int] = {0: 1}
    for key in reps:
        w = weights[key]
        spec[w] = spec.get(w, 0) + mults.get(key, 0)
    return tuple(sorted(spec.items()))


def generator_matrix(cid: CodeId, budget=None) -> list[list[int]]:
    """Rows = basis functionals X_ii and X_ij + X_ji in packed order.

    Columns follow the evaluation points in enumeration order; entries are
    integers in [0, q).
    """
    field = cid.field
    m = cid.m
    points = list(evaluation_points(cid, budget=budget))
    out = []
    for i in range(m):
        for j in range(i, m):
            basis = SymMatrix.from_rows(
                field,
                [
                    [1 if (r, c) in ((i, j), (j, i)) else 0 for c in range(m)]
                    for r in range(m)
                ],
            )
            out.append([int(trace_pairing(basis, a)) for a in points])
    return out


def matrix_rank_mod_q(field: PrimeField, rows) -> int:
    """Rank of an integer matrix over F_q (row reduction, no pivoting tricks)."""
    q = field.q
    mat = [[e % q for e in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv_p = field.inv(mat[rank][col])
        mat[rank] = [(e * inv_p) % q for e in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [(e - c * p) % q for e, p in zip(mat[r], mat[rank])]
        rank += 1
    return rank
