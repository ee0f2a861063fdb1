"""Symmetric m x m matrices over F_q: packed storage, congruence
diagonalization, enumeration, and rank/type censuses.

Storage packs the upper triangle row-major: position (i, j) with i <= j sits
at index i*m - i*(i-1)/2 + (j-i). Enumeration order is lexicographic in the
packed entries with the first packed entry most significant, i.e. matrix
number idx has packed digits of idx written in base q. Every enumeration in
the package (python iterators here, compiled kernels elsewhere) follows this
single order, so block partitions of the index range are deterministic and
independent of worker count.

Censuses: s(r, m) counts symmetric matrices of rank exactly r, split for even
rank into hyperbolic (v_plus) and elliptic (v_minus) congruence types. Both
have closed product forms, evaluated here in exact rational arithmetic with
an integrality assertion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .gf import PrimeField

# Hard ceiling on matrices an enumeration may touch unless the caller raises it.
DEFAULT_BUDGET = 2**31


class BudgetExceededError(RuntimeError):
    """An enumeration would touch more matrices than the configured budget."""


def packed_size(m: int) -> int:
    return m * (m + 1) // 2


def packed_index(m: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * m - i * (i - 1) // 2 + (j - i)


def check_budget(total: int, budget: int | None) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceededError(
            f"enumeration of {total} matrices exceeds budget {limit}"
        )


class SymMatrix:
    """Immutable symmetric matrix over a PrimeField, packed upper triangle."""

    __slots__ = ("field", "m", "entries")

    def __init__(self, field: PrimeField, m: int, entries):
        entries = tuple(e % field.q for e in entries)
        if len(entries) != packed_size(m):
            raise ValueError(
                f"need {packed_size(m)} packed entries for m={m}, got {len(entries)}"
            )
        self.field = field
        self.m = m
        self.entries = entries

    @classmethod
    def zero(cls, field: PrimeField, m: int) -> "SymMatrix":
        return cls(field, m, (0,) * packed_size(m))

    @classmethod
    def identity(cls, field: PrimeField, m: int) -> "SymMatrix":
        return cls.diagonal(field, (1,) * m)

    @classmethod
    def diagonal(cls, field: PrimeField, values) -> "SymMatrix":
        values = tuple(values)
        m = len(values)
        entries = [0] * packed_size(m)
        for i, v in enumerate(values):
            entries[packed_index(m, i, i)] = v % field.q
        return cls(field, m, entries)

    @classmethod
    def from_rows(cls, field: PrimeField, rows) -> "SymMatrix":
        rows = [list(r) for r in rows]
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("rows must form a square matrix")
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] % field.q != rows[j][i] % field.q:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
        entries = [rows[i][j] for i in range(m) for j in range(i, m)]
        return cls(field, m, entries)

    @classmethod
    def from_index(cls, field: PrimeField, m: int, idx: int) -> "SymMatrix":
        """Matrix number idx in enumeration order (packed digits base q)."""
        np_ = packed_size(m)
        total = field.q**np_
        if not 0 <= idx < total:
            raise ValueError(f"index {idx} out of range for m={m}, q={field.q}")
        digits = [0] * np_
        for pos in range(np_ - 1, -1, -1):
            idx, digits[pos] = divmod(idx, field.q)
        return cls(field, m, digits)

    def index(self) -> int:
        """Position of this matrix in enumeration order."""
        idx = 0
        for e in self.entries:
            idx = idx * self.field.q + e
        return idx

    def entry(self, i: int, j: int) -> int:
        return self.entries[packed_index(self.m, i, j)]

    def rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.m)] for i in range(self.m)]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def trailing_minor(self) -> "SymMatrix":
        """Lower-right (m-1) x (m-1) block, the B of A = [[a, u^T], [u, B]]."""
        if self.m == 0:
            raise ValueError("no trailing minor of an empty matrix")
        ents = [
            self.entry(i, j)
            for i in range(1, self.m)
            for j in range(i, self.m)
        ]
        return SymMatrix(self.field, self.m - 1, ents)

    def bordered(self, corner: int) -> "SymMatrix":
        """The (m+1) x (m+1) matrix diag(self, corner)."""
        m2 = self.m + 1
        ents = [0] * packed_size(m2)
        for i in range(self.m):
            for j in range(i, self.m):
                ents[packed_index(m2, i, j)] = self.entry(i, j)
        ents[packed_index(m2, self.m, self.m)] = corner % self.field.q
        return SymMatrix(self.field, m2, ents)

    def rank(self) -> int:
        return canonical_form(self).rank

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymMatrix)
            and other.field == self.field
            and other.m == self.m
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.m, self.entries))

    def __repr__(self) -> str:
        return f"SymMatrix(q={self.field.q}, m={self.m}, rows={self.rows()})"


@dataclass(frozen=True)
class DiagForm:
    """Congruence-diagonalization result: L A L^T = diag(pivots)."""

    rank: int
    delta_class: int  # chi of the product of non-zero pivots; 0 for rank 0
    pivots: tuple[int, ...]  # non-zero diagonal values, length == rank
    transform: tuple[tuple[int, ...], ...]  # the invertible L


def congruence_diagonalize(a: SymMatrix) -> DiagForm:
    """Diagonalize by symmetric row/column operations, returning pivots and L.

    The off-diagonal fix when the whole remaining diagonal vanishes adds row
    and column j to row and column i, producing the pivot 2*M[i][j]; this is
    where odd characteristic is required.
    """
    fld = a.field
    q = fld.q
    m = a.m
    mat = a.rows()
    lt = [[1 if r == c else 0 for c in range(m)] for r in range(m)]

    def row_add(dst, src, c):
        # row_dst += c * row_src, applied to M and L; then col_dst += c * col_src on M
        for col in range(m):
            mat[dst][col] = (mat[dst][col] + c * mat[src][col]) % q
        for col in range(m):
            lt[dst][col] = (lt[dst][col] + c * lt[src][col]) % q
        for row in range(m):
            mat[row][dst] = (mat[row][dst] + c * mat[row][src]) % q

    def swap(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        lt[i], lt[j] = lt[j], lt[i]
        for row in range(m):
            mat[row][i], mat[row][j] = mat[row][j], mat[row][i]

    rank = 0
    for col in range(m):
        pivot_row = -1
        for r in range(col, m):
            if mat[r][r] != 0:
                pivot_row = r
                break
        if pivot_row < 0:
            # all trailing diagonal zero; hunt an off-diagonal entry
            found = False
            for r in range(col, m):
                for c in range(r + 1, m):
                    if mat[r][c] != 0:
                        row_add(r, c, 1)  # makes mat[r][r] = 2*old entry != 0
                        pivot_row = r
                        found = True
                        break
                if found:
                    break
            if not found:
                break  # trailing block is zero
        if pivot_row != col:
            swap(col, pivot_row)
        inv_p = fld.inv(mat[col][col])
        for r in range(col + 1, m):
            if mat[r][col] != 0:
                row_add(r, col, (-mat[r][col] * inv_p) % q)
        rank += 1

    pivots = tuple(mat[i][i] for i in range(rank))
    disc = 1
    for p in pivots:
        disc = (disc * p) % q
    delta_class = fld.chi(disc) if rank > 0 else 0
    return DiagForm(
        rank=rank,
        delta_class=delta_class,
        pivots=pivots,
        transform=tuple(tuple(r) for r in lt),
    )


def canonical_form(a: SymMatrix) -> DiagForm:
    """Congruence invariants of a: rank and square class of the discriminant."""
    return congruence_diagonalize(a)


def apply_congruence(l_rows, a: SymMatrix) -> SymMatrix:
    """Compute L A L^T for an explicit matrix L (rows of integers)."""
    fld = a.field
    q = fld.q
    m = a.m
    l_rows = [list(r) for r in l_rows]
    if len(l_rows) != m or any(len(r) != m for r in l_rows):
        raise ValueError("transform must be m x m")
    am = a.rows()
    la = [
        [sum(l_rows[i][k] * am[k][j] for k in range(m)) % q for j in range(m)]
        for i in range(m)
    ]
    lal = [
        [sum(la[i][k] * l_rows[j][k] for k in range(m)) % q for j in range(m)]
        for i in range(m)
    ]
    return SymMatrix.from_rows(fld, lal)


def iter_all(field: PrimeField, m: int, budget: int | None = None) -> Iterator[SymMatrix]:
    """All symmetric m x m matrices in enumeration order."""
    np_ = packed_size(m)
    check_budget(field.q**np_, budget)
    for digits in itertools.product(range(field.q), repeat=np_):
        yield SymMatrix(field, m, digits)


def iter_rank_le(
    field: PrimeField, m: int, t: int, budget: int | None = None
) -> Iterator[SymMatrix]:
    """Matrices of rank at most t, in enumeration order."""
    for a in iter_all(field, m, budget):
        if canonical_form(a).rank <= t:
            yield a


def iter_rank_eq(
    field: PrimeField, m: int, r: int, budget: int | None = None
) -> Iterator[SymMatrix]:
    """Matrices of rank exactly r, in enumeration order."""
    for a in iter_all(field, m, budget):
        if canonical_form(a).rank == r:
            yield a


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return int(x)


def rank_count(q: int, r: int, m: int) -> int:
    """s(r, m): number of symmetric m x m matrices over F_q of rank r."""
    if r < 0 or r > m:
        return 0
    if r == 0:
        return 1
    val = Fraction(1)
    for i in range(1, r // 2 + 1):
        val *= Fraction(q ** (2 * i), q ** (2 * i) - 1)
    for i in range(r):
        val *= q ** (m - i) - 1
    return _exact_int(val, f"s({r},{m}) at q={q}")


def type_count(q: int, eps: int, two_r: int, m: int) -> int:
    """v_eps(2r, m): rank-2r matrices of hyperbolic (+1) or elliptic (-1) type."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if two_r % 2 != 0 or two_r < 0 or two_r > m:
        return 0
    if two_r == 0:
        return 1 if eps == 1 else 0
    r = two_r // 2
    val = Fraction(q**r + (1 if eps == 1 else -1), 2)
    for i in range(two_r):
        val *= q**m - q**i
    for i in range(r):
        val /= q**two_r - q ** (2 * i)
    return _exact_int(val, f"v_{eps}({two_r},{m}) at q={q}")


@dataclass(frozen=True)
class RankCensus:
    """Counts of symmetric m x m matrices by rank and congruence type."""

    q: int
    m: int
    s: tuple[int, ...]  # s[r] = matrices of rank exactly r
    v_plus: tuple[int, ...]  # hyperbolic count per rank (0 at odd ranks)
    v_minus: tuple[int, ...]  # elliptic count per rank (0 at odd ranks)

    def n_le(self, t: int) -> int:
        """n_s(t, m): matrices of rank at most t."""
        if t < 0:
            return 0
        return sum(self.s[: min(t, self.m) + 1])

    def n_proj(self, t: int) -> int:
        """N_s(t, m): rank <= t matrices up to scalar, excluding zero."""
        num = self.n_le(t) - 1
        cls, rem = divmod(num, self.q - 1)
        if rem:
            raise ArithmeticError(
                f"n_s({t},{self.m}) - 1 = {num} not divisible by q-1 = {self.q - 1}"
            )
        return cls


def census(q: int, m: int) -> RankCensus:
    """Exact rank/type census from the closed product formulas."""
    PrimeField(q)  # validates q
    s = tuple(rank_count(q, r, m) for r in range(m + 1))
    vp = tuple(
        type_count(q, 1, r, m) if r % 2 == 0 else 0 for r in range(m + 1)
    )
    vm = tuple(
        type_count(q, -1, r, m) if r % 2 == 0 else 0 for r in range(m + 1)
    )
    for r in range(0, m + 1, 2):
        if vp[r] + vm[r] != s[r]:
            raise ArithmeticError(
                f"type split v+({r})+v-({r}) = {vp[r]}+{vm[r]} != s({r}) = {s[r]}"
            )
    return RankCensus(q=q, m=m, s=s, v_plus=vp, v_minus=vm)


def census_enumerated(q: int, m: int, budget: int | None = None) -> RankCensus:
    """The same census by brute-force classification of every matrix."""
    fld = PrimeField(q)
    s = [0] * (m + 1)
    vp = [0] * (m + 1)
    vm = [0] * (m + 1)
    for a in iter_all(fld, m, budget):
        df = canonical_form(a)
        s[df.rank] += 1
        if df.rank % 2 == 0:
            # even rank 2u is hyperbolic iff chi((-1)^u * disc) = +1
            u = df.rank // 2
            sign = fld.chi((-1) ** u) if df.rank > 0 else 1
            disc_chi = df.delta_class if df.rank > 0 else 1
            if sign * disc_chi == 1:
                vp[df.rank] += 1
            else:
                vm[df.rank] += 1
    return RankCensus(q=q, m=m, s=tuple(s), v_plus=tuple(vp), v_minus=tuple(vm))
