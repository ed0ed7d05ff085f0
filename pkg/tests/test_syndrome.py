import random

from bmsadec import fixtures, gf, poly, syndrome
from bmsadec.gf import ZERO, FieldTower
from bmsadec.lattice import GRADED, LEX

A = FieldTower.parse


def test_build_table_matches_example1(tower, code):
    # syndromes of the known error reproduce the embedded table
    table = syndrome.build_table(tower, dict(fixtures.EXAMPLE1_ERROR),
                                 code.defining_set, (0, 0), code.alpha,
                                 (15, 15))
    for n, v in fixtures.EXAMPLE1_TABLE.items():
        assert table.get(n) == v, n
    assert not table.known((1, 2))


def test_build_table_zero_word(tower, code):
    table = syndrome.build_table(tower, {}, code.defining_set, (0, 0),
                                 code.alpha, (15, 15))
    assert table.all_known_zero()
    assert len(table.cells) == len(code.defining_set)


def test_periodic_wrap(table):
    assert table.get((16, 17)) == table.get((1, 2))
    assert table.get((15, 15)) == table.get((0, 0))
    assert table.get((1 + 15, 1)) == A("a^3")


def test_discrepancy_value(tower, table):
    one = {(0, 0): 0}
    d = syndrome.discrepancy(tower, one, table, (0, 0), LEX)
    assert d.kind == "value" and d.value == A("1")


def test_discrepancy_convention(tower, table):
    f = {(0, 3): 0, (0, 2): A("a^6"), (0, 1): A("a^5"), (0, 0): A("a^6")}
    d = syndrome.discrepancy(tower, f, table, (1, 1), LEX)
    assert d.kind == "convention"


def test_discrepancy_unknown_then_filled(tower, table):
    f = {(0, 1): 0, (1, 0): A("a^7"), (0, 0): A("a^12")}
    d = syndrome.discrepancy(tower, f, table, (1, 2), GRADED)
    assert d.kind == "unknown" and d.cell == (1, 2)
    filled = table.fill((1, 2), ZERO)
    d2 = syndrome.discrepancy(tower, f, filled, (1, 2), GRADED)
    assert d2.kind == "value" and d2.value == ZERO


def test_generates(tower, code):
    zero_table = syndrome.SyndromeTable(
        (15, 15), {(i, j): ZERO for i in range(15) for j in range(15)})
    assert syndrome.generates(tower, {(0, 0): 0}, zero_table, (14, 14), LEX)

    full = syndrome.table_of_error(tower, dict(fixtures.EXAMPLE1_ERROR),
                                   code.alpha, (15, 15))
    # X1 alone does not generate: u(1,0) != 0
    assert not syndrome.generates(tower, {(1, 0): 0}, full, (1, 1), LEX)
    # the final basis generates the completed table everywhere
    f1 = {(3, 0): 0, (2, 0): 12, (1, 0): 7, (0, 0): 2}
    f2 = {(0, 1): 0, (1, 0): 7, (0, 0): 12}
    for f in (f1, f2):
        assert syndrome.generates(tower, f, full, (15, 15), GRADED)


def test_discrepancy_shift_invariance(tower, code):
    rng = random.Random(11)
    full = syndrome.table_of_error(tower, dict(fixtures.EXAMPLE1_ERROR),
                                   code.alpha, (15, 15))
    for _ in range(100):
        f = {(rng.randrange(3), rng.randrange(3)): rng.randrange(15)
             for _ in range(3)}
        if not f:
            continue
        e = (rng.randrange(3), rng.randrange(3))
        n = (rng.randrange(4, 9), rng.randrange(4, 9))
        d1 = syndrome.discrepancy(tower, f, full, n, GRADED)
        d2 = syndrome.discrepancy(tower, poly.shift_mul(f, e), full, n,
                                  GRADED)
        if d1.kind == "value" and d2.kind == "value":
            assert d1.value == d2.value


def test_monic_window_exposes_cell(tower, table):
    # for monic f the cell at the step itself enters with coefficient 1,
    # which is what makes solving for a missing value linear
    f = {(0, 1): 0, (1, 0): A("a^7"), (0, 0): A("a^12")}
    filled = table.fill((1, 2), A("a^5"))
    d = syndrome.discrepancy(tower, f, filled, (1, 2), GRADED)
    base = syndrome.discrepancy(tower, f, table.fill((1, 2), ZERO),
                                (1, 2), GRADED)
    assert d.value == tower.add(base.value, A("a^5"))
