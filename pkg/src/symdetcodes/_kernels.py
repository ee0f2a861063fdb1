"""Compiled enumeration kernels backing every heavy sweep.

All kernels walk matrices in the package-wide enumeration order (packed
upper-triangle digits of the matrix index, base q, first digit most
significant) and split index ranges into a fixed number of blocks, so counts
are reproducible for any worker setting.

The in-kernel congruence diagonalization mirrors
symmat.congruence_diagonalize without tracking the transform: the pivot
search, zero-diagonal fix, and swap touch only the trailing block, and the
elimination updates rows only, which keeps the trailing block symmetric and
equal to the Schur complement.
"""
from __future__ import annotations

import numpy as np
from numba import config as _nb_config
from numba import njit, prange, set_num_threads

from .gf import PrimeField
from .symmat import check_budget, packed_size

_NBLOCKS = 64

_census_cache: dict[tuple[int, int], np.ndarray] = {}
_fiber_cache: dict[tuple[int, int, int], np.ndarray] = {}


def field_arrays(q: int):
    """Inverse table, chi table, and canonical non-square as kernel arguments."""
    fld = PrimeField(q)
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = fld.inv(a)
    chi = np.array(fld.chi_table, dtype=np.int64)
    return inv, chi, fld.canonical_nonsquare


def pos_maps(m: int):
    """Row and column of each packed position, as kernel-friendly arrays."""
    ii = np.zeros(packed_size(m), dtype=np.int64)
    jj = np.zeros(packed_size(m), dtype=np.int64)
    pos = 0
    for i in range(m):
        for j in range(i, m):
            ii[pos] = i
            jj[pos] = j
            pos += 1
    return ii, jj


def apply_workers(workers) -> None:
    if workers is None:
        return
    if workers < 1:
        raise ValueError("workers must be >= 1")
    set_num_threads(min(int(workers), _nb_config.NUMBA_NUM_THREADS))


@njit(cache=True)
def _decode_fill(idx, q, npk, ii, jj, dig, M, dg, m):
    v = idx
    for pos in range(npk - 1, -1, -1):
        dig[pos] = v % q
        v //= q
    for pos in range(npk):
        e = dig[pos]
        M[ii[pos], jj[pos]] = e
        M[jj[pos], ii[pos]] = e
    for i in range(m):
        dg[i] = M[i, i]


@njit(cache=True)
def _diag(M, m, q, inv, piv):
    """Destructive diagonalization; returns (rank, discriminant product)."""
    rank = 0
    disc = 1
    for col in range(m):
        pr = -1
        for r in range(col, m):
            if M[r, r] != 0:
                pr = r
                break
        if pr < 0:
            fr = -1
            fc = -1
            for r in range(col, m):
                done = False
                for c in range(r + 1, m):
                    if M[r, c] != 0:
                        fr = r
                        fc = c
                        done = True
                        break
                if done:
                    break
            if fr < 0:
                break
            # whole trailing diagonal is zero: row/col add makes 2*M[fr,fc]
            for cc in range(col, m):
                M[fr, cc] = (M[fr, cc] + M[fc, cc]) % q
            for rr in range(col, m):
                M[rr, fr] = (M[rr, fr] + M[rr, fc]) % q
            pr = fr
        if pr != col:
            for cc in range(col, m):
                tmp = M[col, cc]
                M[col, cc] = M[pr, cc]
                M[pr, cc] = tmp
            for rr in range(col, m):
                tmp = M[rr, col]
                M[rr, col] = M[rr, pr]
                M[rr, pr] = tmp
        p = M[col, col]
        piv[rank] = p
        disc = (disc * p) % q
        ip = inv[p]
        for r in range(col + 1, m):
            u = (M[r, col] * ip) % q
            if u != 0:
                for c in range(col + 1, m):
                    M[r, c] = (M[r, c] - u * M[col, c]) % q
        rank += 1
    return rank, disc


@njit(cache=True)
def _census_block(q, m, npk, inv, chi, ns, ii, jj, start, stop, C, dig, M, dg, piv):
    for idx in range(start, stop):
        _decode_fill(idx, q, npk, ii, jj, dig, M, dg, m)
        rank, disc = _diag(M, m, q, inv, piv)
        cidx = 0 if chi[disc] == 1 else 1
        C[0, 0, rank, cidx, 0] += 1
        C[0, 1, rank, cidx, 0] += 1
        acc = 0
        for k in range(1, m + 1):
            d = dg[k - 1]
            C[k, 0, rank, cidx, (acc + d) % q] += 1
            C[k, 1, rank, cidx, (acc + ns * d) % q] += 1
            acc = (acc + d) % q


@njit(parallel=True, cache=True)
def _census_run(q, m, npk, inv, chi, ns, ii, jj, total, Cb):
    nb = Cb.shape[0]
    for b in prange(nb):
        dig = np.empty(npk, dtype=np.int64)
        M = np.empty((m, m), dtype=np.int64)
        dg = np.empty(m, dtype=np.int64)
        piv = np.empty(m, dtype=np.int64)
        start = total * b // nb
        stop = total * (b + 1) // nb
        _census_block(
            q, m, npk, inv, chi, ns, ii, jj, start, stop, Cb[b], dig, M, dg, piv
        )


def joint_census(q: int, m: int, budget=None, workers=None) -> np.ndarray:
    """Census C[k, d, rank, cidx, v] of all symmetric m x m matrices.

    d indexes the delta representative (0 -> 1, 1 -> canonical non-square),
    cidx the discriminant class (0 -> square, 1 -> non-square; rank 0 lands
    in cidx 0), and v the value of f_k^delta = B_11 + ... + B_{k-1,k-1} +
    delta*B_kk. The k = 0 slices hold the plain rank/class census at v = 0.
    Results are cached per (q, m); the returned array is read-only.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    key = (q, m)
    hit = _census_cache.get(key)
    if hit is not None:
        return hit
    npk = packed_size(m)
    check_budget(q**npk, budget)
    apply_workers(workers)
    inv, chi, ns = field_arrays(q)
    ii, jj = pos_maps(m)
    Cb = np.zeros((_NBLOCKS, m + 1, 2, m + 1, 2, q), dtype=np.int64)
    _census_run(q, m, npk, inv, chi, ns, ii, jj, q**npk, Cb)
    C = Cb.sum(axis=0)
    C.flags.writeable = False
    _census_cache[key] = C
    return C


@njit(cache=True)
def _valdist_block(
    q, m, npk, inv, chi, ii, jj, start, stop, expected, dig, M, dg, piv, cnt, new
):
    mism = 0
    for idx in range(start, stop):
        _decode_fill(idx, q, npk, ii, jj, dig, M, dg, m)
        rank, disc = _diag(M, m, q, inv, piv)
        cidx = 0 if chi[disc] == 1 else 1
        for vv in range(q):
            cnt[vv] = 0
        cnt[0] = 1
        for i in range(rank):
            d = piv[i]
            for vv in range(q):
                acc = cnt[vv]
                for u in range(1, q):
                    c = 1 + chi[(u * d) % q]
                    if c != 0:
                        acc += c * cnt[(vv - u) % q]
                new[vv] = acc
            for vv in range(q):
                cnt[vv] = new[vv]
        for vv in range(q):
            if cnt[vv] != expected[rank, cidx, vv]:
                mism += 1
    return mism


@njit(parallel=True, cache=True)
def _valdist_run(q, m, npk, inv, chi, ii, jj, total, expected, mismb):
    nb = mismb.shape[0]
    for b in prange(nb):
        dig = np.empty(npk, dtype=np.int64)
        M = np.empty((m, m), dtype=np.int64)
        dg = np.empty(m, dtype=np.int64)
        piv = np.empty(m, dtype=np.int64)
        cnt = np.empty(q, dtype=np.int64)
        new = np.empty(q, dtype=np.int64)
        start = total * b // nb
        stop = total * (b + 1) // nb
        mismb[b] = _valdist_block(
            q, m, npk, inv, chi, ii, jj, start, stop, expected, dig, M, dg, piv, cnt, new
        )


def value_distribution_mismatches(
    q: int, m: int, expected: np.ndarray, budget=None, workers=None
) -> int:
    """Count matrices whose per-value form counts differ from expected.

    For every symmetric matrix B the kernel diagonalizes, builds the exact
    distribution #{x in F^rank : sum d_i x_i^2 = v} by convolution over the
    pivots d_i, and compares all q entries against expected[rank, cidx, :].
    A return of 0 certifies the closed zero/value counts for every matrix.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    npk = packed_size(m)
    check_budget(q**npk, budget)
    apply_workers(workers)
    inv, chi, _ = field_arrays(q)
    ii, jj = pos_maps(m)
    exp = np.ascontiguousarray(expected, dtype=np.int64)
    if exp.shape != (m + 1, 2, q):
        raise ValueError("expected table must have shape (m+1, 2, q)")
    mismb = np.zeros(_NBLOCKS, dtype=np.int64)
    _valdist_run(q, m, npk, inv, chi, ii, jj, q**npk, exp, mismb)
    return int(mismb.sum())


@njit(cache=True)
def _fiber_scan(
    q, m, npk, qn1, inv, chi, ns, ii, jj, two_t, tsign, total, fib, dig, M, dg, piv
):
    for idx in range(total):
        _decode_fill(idx, q, npk, ii, jj, dig, M, dg, m)
        rank, disc = _diag(M, m, q, inv, piv)
        if rank != two_t:
            continue
        ty = 0 if tsign * chi[disc] == 1 else 1
        bidx = idx % qn1
        acc = 0
        for k in range(1, m + 1):
            d = dg[k - 1]
            if (acc + d) % q == 0:
                fib[k - 1, 0, ty, bidx] += 1
            if (acc + ns * d) % q == 0:
                fib[k - 1, 1, ty, bidx] += 1
            acc = (acc + d) % q


def fiber_arrays(q: int, m: int, two_t: int, budget=None, workers=None) -> np.ndarray:
    """Per-trailing-minor fiber counts fib[k-1, d, ty, bidx].

    Entry counts matrices A of rank exactly two_t and type ty (0 hyperbolic,
    1 elliptic) with f_k^delta(A) = 0 whose trailing (m-1)-minor has packed
    index bidx. Cached per (q, m, two_t); read-only result.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if two_t < 2 or two_t % 2 != 0 or two_t > m:
        raise ValueError("two_t must be a positive even rank <= m")
    key = (q, m, two_t)
    hit = _fiber_cache.get(key)
    if hit is not None:
        return hit
    npk = packed_size(m)
    check_budget(q**npk, budget)
    apply_workers(workers)
    fld = PrimeField(q)
    inv, chi, ns = field_arrays(q)
    ii, jj = pos_maps(m)
    qn1 = q ** packed_size(m - 1)
    tsign = fld.chi((-1) ** (two_t // 2))
    fib = np.zeros((m, 2, 2, qn1), dtype=np.int64)
    dig = np.empty(npk, dtype=np.int64)
    M = np.empty((m, m), dtype=np.int64)
    dg = np.empty(m, dtype=np.int64)
    piv = np.empty(m, dtype=np.int64)
    _fiber_scan(
        q, m, npk, qn1, inv, chi, ns, ii, jj, two_t, tsign, q**npk, fib, dig, M, dg, piv
    )
    fib.flags.writeable = False
    _fiber_cache[key] = fib
    return fib


@njit(cache=True)
def _weights_block(q, m, npk, t, inv, ii, jj, G, start, stop, out, dig, M, dg, piv):
    nF = G.shape[0]
    for idx in range(start, stop):
        _decode_fill(idx, q, npk, ii, jj, dig, M, dg, m)
        rank, _ = _diag(M, m, q, inv, piv)
        if rank > t:
            continue
        canon = False
        for pos in range(npk):
            if dig[pos] != 0:
                canon = dig[pos] == 1
                break
        for fi in range(nF):
            s = 0
            for pos in range(npk):
                s += G[fi, pos] * dig[pos]
            if s % q != 0:
                out[fi, 0] += 1
                if canon:
                    out[fi, 1] += 1


@njit(parallel=True, cache=True)
def _weights_run(q, m, npk, t, inv, ii, jj, G, total, outb):
    nb = outb.shape[0]
    for b in prange(nb):
        dig = np.empty(npk, dtype=np.int64)
        M = np.empty((m, m), dtype=np.int64)
        dg = np.empty(m, dtype=np.int64)
        piv = np.empty(m, dtype=np.int64)
        start = total * b // nb
        stop = total * (b + 1) // nb
        _weights_block(
            q, m, npk, t, inv, ii, jj, G, start, stop, outb[b], dig, M, dg, piv
        )


def weights_batch(q: int, m: int, t: int, packed_fs, budget=None, workers=None):
    """Affine and projective weights of the functionals tr(F .) on rank <= t.

    packed_fs is a sequence of packed coefficient tuples (one per F). Returns
    (affine, projective) int arrays: counts of evaluation points A with
    tr(F A) != 0, over all rank <= t matrices and over the canonical
    projective representatives (first non-zero packed coordinate 1).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= t <= m:
        raise ValueError("t out of range")
    npk = packed_size(m)
    check_budget(q**npk, budget)
    apply_workers(workers)
    inv, _, _ = field_arrays(q)
    ii, jj = pos_maps(m)
    fs = list(packed_fs)
    G = np.zeros((len(fs), npk), dtype=np.int64)
    for fi, row in enumerate(fs):
        if len(row) != npk:
            raise ValueError("packed functional has wrong length")
        for pos in range(npk):
            coef = 1 if ii[pos] == jj[pos] else 2
            G[fi, pos] = (coef * row[pos]) % q
    outb = np.zeros((_NBLOCKS, len(fs), 2), dtype=np.int64)
    _weights_run(q, m, npk, t, inv, ii, jj, G, q**npk, outb)
    out = outb.sum(axis=0)
    return out[:, 0].copy(), out[:, 1].copy()
