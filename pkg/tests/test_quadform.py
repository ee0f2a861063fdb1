"""Quadratic form classes and the lambda/gamma value counts."""
import itertools

import pytest

from symdetcodes.gf import PrimeField
from symdetcodes.quadform import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    ZERO,
    ZeroAlphaError,
    class_from_invariants,
    classify,
    gamma_count,
    gamma_count_bf,
    lambda_count,
    lambda_count_bf,
    type_split,
    value_count_table,
)
from symdetcodes.symmat import SymMatrix, iter_all, rank_count, type_count


class TestClassify:
    def test_hyperbolic_plane(self, f3):
        cls = classify(SymMatrix.from_rows(f3, [[0, 1], [1, 0]]))
        assert (cls.rank, cls.kind) == (2, HYPERBOLIC)

    def test_elliptic_example(self, f3):
        # disc = 1, chi((-1)^1 * 1) = chi(-1) = -1 at q = 3: elliptic
        cls = classify(SymMatrix.diagonal(f3, [1, 1]))
        assert (cls.rank, cls.kind) == (2, ELLIPTIC)

    def test_hyperbolic_by_discriminant(self, f3):
        cls = classify(SymMatrix.diagonal(f3, [1, 2]))
        assert (cls.rank, cls.kind) == (2, HYPERBOLIC)

    def test_parabolic(self, f3):
        assert classify(SymMatrix.diagonal(f3, [2])).kind == PARABOLIC
        assert classify(SymMatrix.diagonal(f3, [1, 0, 0])).kind == PARABOLIC
        assert classify(SymMatrix.diagonal(f3, [1, 1, 1])).kind == PARABOLIC

    def test_zero(self, f3):
        cls = classify(SymMatrix.zero(f3, 3))
        assert (cls.rank, cls.kind, cls.disc_class) == (0, ZERO, 0)

    def test_q5_sign_flip(self, f5):
        # at q = 5, chi(-1) = +1, so disc 1 at rank 2 is hyperbolic
        cls = classify(SymMatrix.diagonal(f5, [1, 1]))
        assert cls.kind == HYPERBOLIC

    def test_class_from_invariants_rejects_bad_disc(self, f3):
        with pytest.raises(ValueError):
            class_from_invariants(f3, 2, 0)


class TestLambda:
    def test_examples(self, f3):
        assert lambda_count(SymMatrix.from_rows(f3, [[0, 1], [1, 0]])) == 5
        assert lambda_count(SymMatrix.diagonal(f3, [1, 1])) == 1
        assert lambda_count(SymMatrix.diagonal(f3, [1])) == 1
        assert lambda_count(SymMatrix.zero(f3, 2)) == 1

    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2)])
    def test_closed_matches_brute_force(self, q, m):
        field = PrimeField(q)
        for b in iter_all(field, m):
            assert lambda_count(b) == lambda_count_bf(b)

    def test_type_determined_by_zero_count(self, f3):
        # even rank: hyperbolic iff lambda hits the larger closed value
        for b in iter_all(f3, 3):
            cls = classify(b)
            if cls.rank % 2 != 0 or cls.rank == 0:
                continue
            s = cls.rank // 2
            lam_h = 3 ** (cls.rank - 1) + 3**s - 3 ** (s - 1)
            if cls.kind == HYPERBOLIC:
                assert lambda_count(b) == lam_h
            else:
                assert lambda_count(b) < lam_h


class TestGamma:
    def test_examples(self, f3):
        b = SymMatrix.diagonal(f3, [1])
        assert gamma_count(b, 2) == 2  # x^2 + 2 = 0 has solutions x = 1, 2
        assert gamma_count(b, 1) == 0  # x^2 + 1 = 0 has none at q = 3

    def test_zero_alpha_rejected(self, f3):
        with pytest.raises(ZeroAlphaError):
            gamma_count(SymMatrix.diagonal(f3, [1]), 0)
        with pytest.raises(ZeroAlphaError):
            gamma_count_bf(SymMatrix.diagonal(f3, [1]), 0)

    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2)])
    def test_closed_matches_brute_force_all_alpha(self, q, m):
        field = PrimeField(q)
        for b in iter_all(field, m):
            for alpha in range(1, q):
                assert gamma_count(b, alpha) == gamma_count_bf(b, alpha)

    @pytest.mark.parametrize("q,m", [(3, 3), (5, 2)])
    def test_partition_identity(self, q, m):
        field = PrimeField(q)
        for b in iter_all(field, m):
            r = b.rank()
            total = lambda_count(b) + sum(gamma_count(b, a) for a in range(1, q))
            assert total == q**r


class TestValueCountTable:
    @pytest.mark.parametrize("q,m", [(3, 3), (5, 2), (7, 2)])
    def test_rows_sum_to_power(self, q, m):
        field = PrimeField(q)
        table = value_count_table(field, m)
        assert table.shape == (m + 1, 2, q)
        for r in range(m + 1):
            if r == 0:
                assert int(table[0, 0].sum()) == 1
                continue
            for cidx in (0, 1):
                assert int(table[r, cidx].sum()) == q**r

    def test_matches_direct_counts(self, f3):
        table = value_count_table(f3, 2)
        for b in iter_all(f3, 2):
            cls = classify(b)
            if cls.rank == 0:
                continue
            cidx = 0 if cls.disc_class == 1 else 1
            counts = [0] * 3
            for xs in itertools.product(range(3), repeat=2):
                v = 0
                for i in range(2):
                    for j in range(2):
                        v += xs[i] * b.entry(i, j) * xs[j]
                counts[v % 3] += 1
            # table counts over F^rank; the full space adds q^(m - rank) fibers
            scale = 3 ** (2 - cls.rank)
            assert counts == [scale * int(t) for t in table[cls.rank, cidx]]


class TestTypeSplit:
    def test_zero_functional_gives_global_split(self, f3):
        ts = type_split(f3, 0, 1, 2, 2)
        assert (ts.parabolic, ts.hyperbolic, ts.elliptic) == (0, 12, 6)
        ts1 = type_split(f3, 0, 1, 1, 2)
        assert (ts1.parabolic, ts1.hyperbolic, ts1.elliptic) == (8, 0, 0)

    def test_kernel_split_example(self, f3):
        # rank-2 matrices with zero (1,1) entry are all hyperbolic at q = 3
        for dc in (1, -1):
            ts = type_split(f3, 1, dc, 2, 2)
            assert (ts.hyperbolic, ts.elliptic) == (6, 0)

    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2)])
    def test_k0_matches_closed_type_counts(self, q, m):
        field = PrimeField(q)
        for r in range(m + 1):
            ts = type_split(field, 0, 1, r, m)
            if r % 2 == 1:
                assert ts.parabolic == rank_count(q, r, m)
            else:
                assert ts.hyperbolic == type_count(q, 1, r, m)
                assert ts.elliptic == type_count(q, -1, r, m)

    @pytest.mark.parametrize("q,m", [(3, 3), (5, 2)])
    def test_python_reference(self, q, m):
        field = PrimeField(q)
        delta = {1: 1, -1: field.canonical_nonsquare}
        for k in range(1, m + 1):
            for dc in (1, -1):
                for r in range(m + 1):
                    want_p = want_h = want_e = 0
                    for a in iter_all(field, m):
                        if a.rank() != r:
                            continue
                        fval = sum(a.entry(i, i) for i in range(k - 1))
                        fval = (fval + delta[dc] * a.entry(k - 1, k - 1)) % q
                        if fval != 0:
                            continue
                        kind = classify(a).kind
                        if kind == PARABOLIC:
                            want_p += 1
                        elif kind in (HYPERBOLIC, ZERO):
                            want_h += 1
                        else:
                            want_e += 1
                    ts = type_split(field, k, dc, r, m)
                    assert (ts.parabolic, ts.hyperbolic, ts.elliptic) == (
                        want_p,
                        want_h,
                        want_e,
                    )
