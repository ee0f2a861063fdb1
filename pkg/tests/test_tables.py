"""Reference-table fixtures: corrected offsets, class bindings, errata."""
import pytest

from symdetcodes.gf import PrimeField
from symdetcodes.spectrum import weight_theorem
from symdetcodes.tables import (
    ERRATA,
    FIXTURES,
    QM1,
    ZERO_POLY,
    corrected_weights,
    p_add,
    p_eval,
    p_mono,
    p_mul,
    p_neg,
    printed_pair,
)

# corrected class weights at q = 3, keyed (m, k, t) -> (W for square delta,
# W for nonsquare delta); frozen after checking every cell against full
# enumeration of S_m
WEIGHTS_Q3 = {
    # m = 3
    (3, 1, 1): (18, 18),
    (3, 1, 2): (162, 162),
    (3, 1, 3): (486, 486),
    (3, 2, 1): (24, 12),
    (3, 2, 2): (162, 162),
    (3, 2, 3): (486, 486),
    (3, 3, 1): (18, 18),
    (3, 3, 2): (180, 180),
    (3, 3, 3): (486, 486),
    # m = 4
    (4, 1, 1): (54, 54),
    (4, 1, 2): (1458, 1458),
    (4, 1, 3): (14094, 14094),
    (4, 1, 4): (39366, 39366),
    (4, 2, 1): (72, 36),
    (4, 2, 2): (1458, 1458),
    (4, 2, 3): (14418, 13770),
    (4, 2, 4): (39366, 39366),
    (4, 3, 1): (54, 54),
    (4, 3, 2): (1620, 1620),
    (4, 3, 3): (14094, 14094),
    (4, 3, 4): (39366, 39366),
    (4, 4, 1): (48, 60),
    (4, 4, 2): (1620, 1620),
    (4, 4, 3): (14148, 14040),
    (4, 4, 4): (39366, 39366),
    # m = 5
    (5, 1, 1): (162, 162),
    (5, 1, 2): (13122, 13122),
    (5, 1, 3): (392202, 392202),
    (5, 1, 4): (3424842, 3424842),
    (5, 1, 5): (9565938, 9565938),
    (5, 2, 1): (216, 108),
    (5, 2, 2): (13122, 13122),
    (5, 2, 3): (404838, 379566),
    (5, 2, 4): (3424842, 3424842),
    (5, 2, 5): (9565938, 9565938),
    (5, 3, 1): (162, 162),
    (5, 3, 2): (14580, 14580),
    (5, 3, 3): (392202, 392202),
    (5, 3, 4): (3451086, 3451086),
    (5, 3, 5): (9565938, 9565938),
    (5, 4, 1): (144, 180),
    (5, 4, 2): (14580, 14580),
    (5, 4, 3): (392364, 392040),
    (5, 4, 4): (3451086, 3451086),
    (5, 4, 5): (9565938, 9565938),
    (5, 5, 1): (162, 162),
    (5, 5, 2): (14742, 14742),
    (5, 5, 3): (392202, 392202),
    (5, 5, 4): (3449628, 3449628),
    (5, 5, 5): (9565938, 9565938),
}


class TestPolyHelpers:
    def test_basics(self):
        assert p_eval(QM1, 7) == 6
        assert p_eval(ZERO_POLY, 5) == 0
        assert p_mono(3) == (0, 0, 0, 1)
        assert p_eval(p_mono(3), 2) == 8
        assert p_add((1, 2), (0, 0, 5)) == (1, 2, 5)
        assert p_add((1,), (-1,)) == ()
        assert p_mul((0, 1), (0, 1)) == (0, 0, 1)
        assert p_mul((1, 1), (-1, 1)) == (-1, 0, 1)
        assert p_neg((1, -2)) == (-1, 2)
        assert p_mul((), (1, 2)) == ()


class TestFixtureShape:
    def test_complete_grids(self):
        for m, fix in FIXTURES.items():
            assert fix.m == m
            keys = {(c.k, c.t) for c in fix.cells}
            assert keys == {(k, t) for k in range(1, m + 1) for t in range(1, m + 1)}

    def test_cell_lookup(self):
        fix = FIXTURES[3]
        assert fix.cell(2, 1).minus_rule == "chi_of_minus_one"
        with pytest.raises(KeyError):
            fix.cell(4, 1)

    def test_split_cells_have_rules(self):
        # a class rule is needed exactly when the corrected weights split;
        # a printed-only split (corrected offset zero) needs none because
        # printed_pair is order-free
        for fix in FIXTURES.values():
            for c in fix.cells:
                assert (c.minus_rule != "") == (c.offset != ZERO_POLY)


class TestFrozenValues:
    def test_q3_corrected_weights(self, f3):
        for (m, k, t), (w_sq, w_ns) in WEIGHTS_Q3.items():
            cell = FIXTURES[m].cell(k, t)
            got = corrected_weights(cell, f3)
            assert (got[1], got[-1]) == (w_sq, w_ns), (m, k, t)

    def test_full_rank_column(self):
        from symdetcodes.symmat import packed_size

        for q in (3, 5, 7):
            for m, fix in FIXTURES.items():
                want = (q - 1) * q ** (packed_size(m) - 1)
                for k in range(1, m + 1):
                    got = corrected_weights(fix.cell(k, m), PrimeField(q))
                    assert got == {1: want, -1: want}


class TestAgainstTheorem:
    @pytest.mark.parametrize(
        "q,m",
        [(3, 3), (3, 4), (3, 5), (5, 3), (5, 4), (5, 5), (7, 3), (7, 4)],
    )
    def test_corrected_matches_formula(self, q, m):
        field = PrimeField(q)
        fix = FIXTURES[m]
        for cell in fix.cells:
            want = {
                dc: weight_theorem(field, cell.k, dc, cell.t, m) for dc in (1, -1)
            }
            assert corrected_weights(cell, field) == want, (q, m, cell.k, cell.t)


class TestErrata:
    def test_known_errata(self):
        assert ERRATA == ((4, 2, 3), (5, 2, 3), (5, 4, 3), (5, 5, 3))

    def test_errata_cells_carry_printed_offset(self):
        for m, k, t in ERRATA:
            cell = FIXTURES[m].cell(k, t)
            assert cell.printed_offset is not None
            assert cell.printed_offset != cell.offset

    def test_non_errata_cells_have_no_printed_offset(self):
        listed = set(ERRATA)
        for m, fix in FIXTURES.items():
            for c in fix.cells:
                if (m, c.k, c.t) not in listed:
                    assert c.printed_offset is None

    @pytest.mark.parametrize("q", [3, 5])
    def test_printed_pair_disagrees_exactly_on_errata(self, q):
        field = PrimeField(q)
        for m, fix in FIXTURES.items():
            for c in fix.cells:
                computed = tuple(sorted(corrected_weights(c, field).values()))
                disagrees = printed_pair(c, q) != computed
                assert disagrees == ((m, c.k, c.t) in ERRATA), (q, m, c.k, c.t)


class TestClassBindings:
    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_minus_class_follows_rule(self, q):
        field = PrimeField(q)
        chi_m1 = field.chi(-1)
        for m, fix in FIXTURES.items():
            for c in fix.cells:
                if c.minus_rule == "":
                    with pytest.raises(ValueError):
                        c.minus_class(field)
                    continue
                mc = c.minus_class(field)
                if c.k == 2:
                    assert c.minus_rule == "chi_of_minus_one"
                    assert mc == chi_m1
                elif (c.k, c.t) == (4, 1):
                    assert c.minus_rule == "square"
                    assert mc == 1
                elif (c.k, c.t) == (4, 3):
                    assert c.minus_rule == "nonsquare"
                    assert mc == -1

    def test_binding_matches_formula_at_q3(self, f3):
        # chi(-1) = -1 at q = 3, so the k = 2 minus class is the nonsquare
        cell = FIXTURES[3].cell(2, 1)
        assert cell.minus_class(f3) == -1
        w = corrected_weights(cell, f3)
        assert w[-1] < w[1]

    def test_binding_matches_formula_at_q5(self, f5):
        # chi(-1) = +1 at q = 5, so the k = 2 minus class is the square
        cell = FIXTURES[3].cell(2, 1)
        assert cell.minus_class(f5) == 1
        w = corrected_weights(cell, f5)
        assert w[1] < w[-1]
