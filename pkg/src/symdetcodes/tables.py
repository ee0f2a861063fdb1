"""Reference weight tables for m = 3, 4, 5 as polynomial fixtures in q.

Each cell stores the printed base-and-offset polynomials for the class
weight W_k^delta(t, m) together with the corrected offset where the
printed one disagrees with direct computation, and a rule resolving which
delta class receives base - offset (the tables print only a bare +-).
Polynomials are coefficient tuples, lowest degree first, so the fixtures
can be evaluated at any odd prime q.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gf import PrimeField

ZERO_POLY: tuple = ()
QM1 = (-1, 1)  # q - 1
Q2M1 = (-1, 0, 1)  # q^2 - 1


def p_mono(e: int) -> tuple:
    return (0,) * e + (1,)


def p_add(*ps: tuple) -> tuple:
    n = max((len(p) for p in ps), default=0)
    out = [0] * n
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def p_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def p_neg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def p_eval(p: tuple, q: int) -> int:
    v = 0
    for c in reversed(p):
        v = v * q + c
    return v


def _term(e: int, *factors: tuple) -> tuple:
    out = p_mono(e)
    for f in factors:
        out = p_mul(out, f)
    return out


@dataclass(frozen=True)
class TableCell:
    """One table entry W_k^delta(t, m) = base +- offset.

    offset is the corrected offset polynomial (ZERO_POLY when the two delta
    classes coincide). printed_offset is set only where the printed table
    disagrees with the corrected value. minus_rule names the delta class
    receiving base - offset: 'chi_of_minus_one' (the class of chi(-1)),
    'square', 'nonsquare', or '' when there is no split.
    """

    k: int
    t: int
    base: tuple
    offset: tuple = ZERO_POLY
    printed_offset: tuple | None = None
    minus_rule: str = ""
    note: str = ""

    def minus_class(self, field: PrimeField) -> int:
        if self.minus_rule == "chi_of_minus_one":
            return field.chi(-1)
        if self.minus_rule == "square":
            return 1
        if self.minus_rule == "nonsquare":
            return -1
        raise ValueError(f"cell ({self.k},{self.t}) has no class split")


@dataclass(frozen=True)
class TableFixture:
    m: int
    cells: tuple
    note: str = ""

    def cell(self, k: int, t: int) -> TableCell:
        for c in self.cells:
            if (c.k, c.t) == (k, t):
                return c
        raise KeyError((k, t))


def corrected_weights(cell: TableCell, field: PrimeField) -> dict:
    """{delta_class: weight} per the corrected offset and class rule."""
    base = p_eval(cell.base, field.q)
    off = p_eval(cell.offset, field.q)
    if off == 0:
        return {1: base, -1: base}
    mc = cell.minus_class(field)
    return {mc: base - off, -mc: base + off}


def printed_pair(cell: TableCell, q: int) -> tuple:
    """Sorted pair of the two printed class weights (equal when no split)."""
    base = p_eval(cell.base, q)
    off_poly = cell.offset if cell.printed_offset is None else cell.printed_offset
    off = p_eval(off_poly, q)
    return tuple(sorted((base - off, base + off)))


def _fixture_m3() -> TableFixture:
    w1 = {1: _term(2, QM1), 2: _term(4, QM1), 3: _term(5, QM1)}
    cells = (
        TableCell(1, 1, w1[1]),
        TableCell(1, 2, w1[2]),
        TableCell(1, 3, w1[3]),
        TableCell(2, 1, w1[1], _term(1, QM1), minus_rule="chi_of_minus_one"),
        TableCell(2, 2, w1[2]),
        TableCell(2, 3, w1[3]),
        TableCell(3, 1, w1[1]),
        TableCell(3, 2, p_add(w1[2], _term(2, QM1))),
        TableCell(3, 3, w1[3]),
    )
    return TableFixture(m=3, cells=cells)


def _fixture_m4() -> TableFixture:
    w1 = {
        1: _term(3, QM1),
        2: _term(6, QM1),
        3: p_add(_term(8, QM1), _term(5, QM1, QM1)),
        4: _term(9, QM1),
    }
    w32 = p_add(w1[2], _term(4, QM1))
    cells = (
        TableCell(1, 1, w1[1]),
        TableCell(1, 2, w1[2]),
        TableCell(1, 3, w1[3]),
        TableCell(1, 4, w1[4]),
        TableCell(2, 1, w1[1], _term(2, QM1), minus_rule="chi_of_minus_one"),
        TableCell(2, 2, w1[2]),
        TableCell(
            2,
            3,
            w1[3],
            _term(4, QM1, QM1),
            printed_offset=_term(4, QM1),
            minus_rule="chi_of_minus_one",
            note="printed offset lacks the squared q-1 factor",
        ),
        TableCell(2, 4, w1[4]),
        TableCell(3, 1, w1[1]),
        TableCell(3, 2, w32),
        TableCell(3, 3, w1[3]),
        TableCell(3, 4, w1[4]),
        TableCell(4, 1, w1[1], _term(1, QM1), minus_rule="square"),
        TableCell(4, 2, w32),
        TableCell(4, 3, w1[3], _term(3, QM1), minus_rule="nonsquare"),
        TableCell(4, 4, w1[4]),
    )
    return TableFixture(m=4, cells=cells)


def _fixture_m5() -> TableFixture:
    w1 = {
        1: _term(4, QM1),
        2: _term(8, QM1),
        3: p_add(_term(11, QM1), _term(8, QM1, QM1), _term(6, QM1, Q2M1)),
        4: p_add(_term(13, QM1), _term(10, QM1, QM1)),
        5: _term(14, QM1),
    }
    w32 = p_add(w1[2], _term(6, QM1))
    w34 = p_add(w1[4], _term(8, QM1, QM1))
    cells = (
        TableCell(1, 1, w1[1]),
        TableCell(1, 2, w1[2]),
        TableCell(1, 3, w1[3]),
        TableCell(1, 4, w1[4]),
        TableCell(1, 5, w1[5]),
        TableCell(2, 1, w1[1], _term(3, QM1), minus_rule="chi_of_minus_one"),
        TableCell(2, 2, w1[2]),
        TableCell(
            2,
            3,
            w1[3],
            p_add(_term(7, QM1, QM1), _term(5, QM1, Q2M1)),
            printed_offset=p_add(_term(7, QM1), _term(5, QM1, Q2M1)),
            minus_rule="chi_of_minus_one",
            note="printed offset lacks the squared q-1 factor on the q^7 term",
        ),
        TableCell(2, 4, w1[4]),
        TableCell(2, 5, w1[5]),
        TableCell(3, 1, w1[1]),
        TableCell(3, 2, w32),
        TableCell(3, 3, w1[3]),
        TableCell(3, 4, w34),
        TableCell(3, 5, w1[5]),
        TableCell(4, 1, w1[1], _term(2, QM1), minus_rule="square"),
        TableCell(4, 2, w32),
        TableCell(
            4,
            3,
            w1[3],
            _term(4, QM1),
            printed_offset=p_add(_term(6, QM1), _term(4, QM1, Q2M1)),
            minus_rule="nonsquare",
            note="printed offset is a different polynomial entirely",
        ),
        TableCell(4, 4, w34),
        TableCell(4, 5, w1[5]),
        TableCell(5, 1, w1[1]),
        TableCell(5, 2, p_add(w32, _term(4, QM1))),
        TableCell(
            5,
            3,
            w1[3],
            ZERO_POLY,
            printed_offset=_term(3, QM1),
            note="printed as a split pair; the two class weights coincide",
        ),
        TableCell(5, 4, p_add(w34, p_neg(_term(6, QM1)))),
        TableCell(5, 5, w1[5]),
    )
    return TableFixture(
        m=5,
        cells=cells,
        note="the printed table repeats the k=4 row label; the final row is k=5",
    )


FIXTURES: dict = {3: _fixture_m3(), 4: _fixture_m4(), 5: _fixture_m5()}

# cells whose printed offset disagrees with the corrected one, as (m, k, t)
ERRATA: tuple = tuple(
    sorted(
        (m, c.k, c.t)
        for m, fx in FIXTURES.items()
        for c in fx.cells
        if c.printed_offset is not None
    )
)
