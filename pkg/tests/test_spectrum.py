"""Formula layer: weights, identities, bounds, fibers, gap reports."""
import pytest

from symdetcodes.codes import (
    CodeId,
    codeword_weight_bf,
    functional_matrix,
    restricted_weight_bf,
)
from symdetcodes.gf import PrimeField
from symdetcodes.spectrum import (
    bound_check,
    bound_rhs,
    conjecture_check,
    distinct_nonzero_weight_count,
    fiber_census,
    h_minus_e,
    min_distance,
    min_distance_projective_formula,
    restricted_weight_formula,
    w2_minus_w1_even,
    weight_diff_identity,
    weight_report,
    weight_theorem,
    weight_w1,
)
from symdetcodes.symmat import packed_size, type_count


class TestRestrictedWeightFormula:
    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2), (3, 4)])
    def test_matches_brute_force(self, q, m):
        field = PrimeField(q)
        for k in range(1, m + 1):
            for dc in (1, -1):
                for r in range(m + 1):
                    want = restricted_weight_bf(field, k, dc, r, m)
                    assert restricted_weight_formula(field, k, dc, r, m) == want

    def test_edges(self, f3):
        assert restricted_weight_formula(f3, 0, 1, 2, 3) == 0
        assert restricted_weight_formula(f3, 1, 1, -1, 3) == 0
        assert restricted_weight_formula(f3, 1, 1, 4, 3) == 0
        with pytest.raises(ValueError):
            restricted_weight_formula(f3, 4, 1, 2, 3)


class TestWeightTheorem:
    @pytest.mark.parametrize("q,m", [(3, 3), (5, 2)])
    def test_matches_brute_force(self, q, m):
        field = PrimeField(q)
        for t in range(1, m + 1):
            cid = CodeId(q, m, t, "affine")
            for k in range(1, m + 1):
                for dc in (1, -1):
                    f = functional_matrix(field, m, k, dc)
                    assert weight_theorem(field, k, dc, t, m) == codeword_weight_bf(f, cid)

    def test_edges(self, f3):
        assert weight_theorem(f3, 0, 1, 2, 3) == 0
        assert weight_theorem(f3, 1, 1, 0, 3) == 0
        with pytest.raises(ValueError):
            weight_theorem(f3, 4, 1, 2, 3)
        with pytest.raises(ValueError):
            weight_theorem(f3, 1, 1, 4, 3)

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_m1(self, q):
        field = PrimeField(q)
        assert weight_theorem(field, 1, 1, 1, 1) == q - 1
        assert weight_theorem(field, 1, -1, 1, 1) == q - 1

    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2), (7, 2)])
    def test_full_rank_bound_collapses(self, q, m):
        # at t = m every nonzero class has the full-space weight
        field = PrimeField(q)
        want = (q - 1) * q ** (packed_size(m) - 1)
        for k in range(1, m + 1):
            for dc in (1, -1):
                assert weight_theorem(field, k, dc, m, m) == want


class TestWeightW1:
    def test_anchors(self):
        assert weight_w1(3, 1, 3) == 18
        assert weight_w1(3, 2, 3) == 162
        assert weight_w1(3, 4, 5) == 3424842

    @pytest.mark.parametrize("q,m", [(3, 3), (3, 4), (5, 3), (7, 2)])
    def test_matches_theorem(self, q, m):
        field = PrimeField(q)
        for t in range(1, m + 1):
            assert weight_w1(q, t, m) == weight_theorem(field, 1, 1, t, m)

    def test_t_zero(self):
        assert weight_w1(3, 0, 3) == 0


class TestDiffIdentity:
    def test_m3_values(self, f3):
        # k = 2 never moves at even rank; k = 3 at 2t = 2 moves by q^2(q-1)
        assert weight_diff_identity(f3, 2, 1, 1, 3) == 0
        assert weight_diff_identity(f3, 2, -1, 1, 3) == 0
        assert weight_diff_identity(f3, 3, 1, 1, 3) == 18
        assert weight_diff_identity(f3, 3, -1, 1, 3) == 18

    @pytest.mark.parametrize("q,m", [(3, 3), (3, 4), (5, 3)])
    def test_matches_theorem_difference(self, q, m):
        field = PrimeField(q)
        for t_half in range(1, m // 2 + 1):
            t = 2 * t_half
            w1 = weight_w1(q, t, m)
            for k in range(1, m + 1):
                for dc in (1, -1):
                    want = weight_theorem(field, k, dc, t, m) - w1
                    assert weight_diff_identity(field, k, dc, t_half, m) == want


class TestHMinusE:
    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3)])
    def test_enumerate_matches_fiber(self, q, m):
        field = PrimeField(q)
        for t_half in range(1, m // 2 + 1):
            for k in range(m + 1):
                for dc in (1, -1):
                    enum, meth_e = h_minus_e(field, k, dc, t_half, m, method="enumerate")
                    fib, meth_f = h_minus_e(field, k, dc, t_half, m, method="fiber")
                    assert enum == fib
                    if k == 0:
                        # the zero functional short-circuits to the census
                        assert meth_e == meth_f == "closed"
                    else:
                        assert meth_e == "enumerate"
                        assert meth_f == "fiber"

    def test_k0_uses_closed_census(self, f3):
        val, meth = h_minus_e(f3, 0, 1, 1, 3)
        assert meth == "closed"
        assert val == type_count(3, 1, 2, 3) - type_count(3, -1, 2, 3)

    def test_rank_above_size_is_empty(self, f3):
        assert h_minus_e(f3, 1, 1, 2, 3) == (0, "empty")

    def test_bad_method(self, f3):
        with pytest.raises(ValueError):
            h_minus_e(f3, 1, 1, 1, 3, method="guess")


class TestEvenRankCollapse:
    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_w2_equals_w1(self, q):
        for m in range(2, 6):
            for t_half in range(1, m // 2 + 1):
                assert w2_minus_w1_even(q, t_half, m) == 0

    @pytest.mark.parametrize("q,m", [(3, 4), (5, 4), (7, 4)])
    def test_matches_diff_identity(self, q, m):
        field = PrimeField(q)
        for t_half in (1, 2):
            for dc in (1, -1):
                assert w2_minus_w1_even(q, t_half, m) == weight_diff_identity(
                    field, 2, dc, t_half, m
                )


class TestBound:
    def test_hand_computed_value(self):
        # 2t = 2, m = 2 at q = 3: the first product is q^{m-1} - 1 = 2, the
        # second contains the factor q^{m-1} - q = 0, so rhs = 3 * 2 = 6
        assert bound_rhs(3, 1, 2) == 6

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_bound_equals_type_difference(self, q):
        # the chain value v_plus - v_minus - rhs is exactly zero
        for m in range(2, 6):
            for t_half in range(1, m // 2 + 1):
                vdiff = type_count(q, 1, 2 * t_half, m) - type_count(q, -1, 2 * t_half, m)
                assert bound_rhs(q, t_half, m) == vdiff

    @pytest.mark.parametrize("q,m", [(3, 3), (3, 4), (5, 3)])
    def test_holds_across_classes(self, q, m):
        field = PrimeField(q)
        for t_half in range(1, m // 2 + 1):
            for k in range(1, m + 1):
                for dc in (1, -1):
                    rep = bound_check(field, k, dc, t_half, m)
                    assert rep.holds
                    assert rep.chain_value == 0
                    assert rep.lhs <= rep.rhs

    def test_k1_attains_bound(self, f3):
        rep = bound_check(f3, 1, 1, 1, 3)
        assert rep.lhs == rep.rhs

    def test_large_case_uses_fiber(self, f5):
        rep = bound_check(f5, 2, 1, 1, 5)
        assert rep.method == "fiber"
        assert rep.holds


class TestMinDistance:
    def test_even_t_affine(self, f3):
        rep = min_distance(f3, 2, 3, "affine")
        assert rep.d == 162
        assert rep.method == "closed-form"
        assert rep.closed_value == 162
        assert rep.scan_matches_closed
        assert (1, 1) in rep.minimizers

    def test_even_t_projective_note(self, f3):
        rep = min_distance(f3, 2, 3, "projective")
        assert rep.d == 81
        assert rep.closed_value == 81
        assert rep.scan_matches_closed
        assert rep.note != ""

    def test_odd_t_prediction(self, f3):
        rep = min_distance(f3, 1, 3, "affine")
        assert rep.d == 12
        assert rep.method == "candidate-scan"
        assert rep.predicted_minimizer == (2, -1)  # chi(-1) = -1 at q = 3
        assert rep.prediction_holds
        assert rep.minimizers == ((2, -1),)

    def test_full_rank_no_prediction(self, f3):
        rep = min_distance(f3, 3, 3, "affine")
        assert rep.d == 486
        assert rep.predicted_minimizer is None
        assert rep.prediction_holds is None
        assert len(rep.minimizers) == 6

    def test_projective_closed_matches_w1(self):
        for q in (3, 5):
            for m in (2, 3, 4, 5):
                for t_half in range(1, m // 2 + 1):
                    t = 2 * t_half
                    w1 = weight_w1(q, t, m)
                    assert w1 % (q - 1) == 0
                    assert min_distance_projective_formula(q, t_half, m) == w1 // (q - 1)

    def test_bad_args(self, f3):
        with pytest.raises(ValueError):
            min_distance(f3, 1, 3, "euclidean")
        with pytest.raises(ValueError):
            min_distance(f3, 4, 3, "affine")


class TestFiberCensus:
    @pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2)])
    def test_all_strata_pass(self, q, m):
        field = PrimeField(q)
        for k in range(1, m + 1):
            for dc in (1, -1):
                rep = fiber_census(field, k, dc, 1, m)
                assert rep.all_pass
                for st in rep.strata:
                    assert st.mismatches == 0

    def test_stratum_names(self, f3):
        # only strata that actually occur appear; k = 1 pins the minor's
        # f-value to zero, so no f_nonzero strata show up
        rep = fiber_census(f3, 1, 1, 1, 3)
        assert {st.name for st in rep.strata} == {
            "rank_0_hyperbolic",
            "rank_1_f_zero",
            "rank_2_hyperbolic_f_zero",
            "rank_2_elliptic_f_zero",
        }
        rep3 = fiber_census(f3, 3, 1, 1, 3)
        assert {st.name for st in rep3.strata} == {
            "rank_0_hyperbolic",
            "rank_1_f_nonzero",
            "rank_2_hyperbolic_f_zero",
            "rank_2_hyperbolic_f_nonzero",
            "rank_2_elliptic_f_zero",
            "rank_2_elliptic_f_nonzero",
        }

    def test_rank_other_stratum_at_m4(self, f3):
        # minors of size 3 reach rank 3, which no rank-2 fiber can touch
        rep = fiber_census(f3, 2, 1, 1, 4)
        byname = {st.name: st for st in rep.strata}
        assert "rank_other" in byname
        assert byname["rank_other"].phi1_total == 0
        assert byname["rank_other"].phi2_total == 0

    def test_counts_cover_minor_space(self, f3):
        rep = fiber_census(f3, 1, 1, 1, 3)
        assert sum(st.matrices for st in rep.strata) == 3 ** packed_size(2)

    def test_bad_k(self, f3):
        with pytest.raises(ValueError):
            fiber_census(f3, 0, 1, 1, 3)


class TestConjecture:
    def test_anchor_q3(self, f3):
        rep = conjecture_check(f3, 1, 3)
        assert rep.holds
        assert rep.theta == 6
        assert rep.low_class == -1
        assert (rep.w2_low, rep.w1, rep.w2_high) == (12, 18, 24)

    def test_anchor_q5(self, f5):
        rep = conjecture_check(f5, 1, 3)
        assert rep.holds
        assert rep.theta == 20
        assert rep.low_class == 1  # chi(-1) = +1 at q = 5

    def test_anchor_t3(self, f3, f5):
        assert conjecture_check(f3, 3, 4).theta == 324
        assert conjecture_check(f5, 3, 4).theta == 10000

    def test_rejects_even_or_full_rank(self, f3):
        with pytest.raises(ValueError):
            conjecture_check(f3, 2, 3)
        with pytest.raises(ValueError):
            conjecture_check(f3, 3, 3)


class TestWeightReport:
    def test_method_keys_k1_even_t(self, f3):
        rep = weight_report(f3, 1, 1, 2, 3)
        assert dict(rep.methods).keys() == {
            "formula",
            "restricted_sum",
            "closed_k1",
            "diff_identity",
            "brute_force",
        }
        assert rep.agree
        assert rep.value == 162

    def test_method_keys_k2_odd_t_no_brute(self, f3):
        rep = weight_report(f3, 2, -1, 1, 3, brute="never")
        assert dict(rep.methods).keys() == {"formula", "restricted_sum"}
        assert rep.agree
        assert rep.value == 12

    def test_brute_always(self, f3):
        rep = weight_report(f3, 3, 1, 2, 3, brute="always")
        assert dict(rep.methods)["brute_force"] == 180
        assert rep.agree

    def test_bad_brute(self, f3):
        with pytest.raises(ValueError):
            weight_report(f3, 1, 1, 1, 3, brute="sometimes")


class TestDistinctWeights:
    def test_even_t_counts(self, f3):
        assert distinct_nonzero_weight_count(f3, 2, 4) == 2
        assert distinct_nonzero_weight_count(f3, 2, 5) == 3
        assert distinct_nonzero_weight_count(f3, 4, 5) == 3

    def test_full_rank_single_weight(self, f3, f5):
        for field in (f3, f5):
            for m in (1, 2, 3, 4):
                assert distinct_nonzero_weight_count(field, m, m) == 1
