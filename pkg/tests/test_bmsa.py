import random

import pytest

from bmsadec import bmsa, fixtures, gf, lattice, poly, syndrome
from bmsadec.errors import FootprintOverflow
from bmsadec.gf import ZERO, FieldTower
from bmsadec.lattice import GRADED, LEX

A = FieldTower.parse


def run_trace(tower, table, t, order):
    trace = []
    out = bmsa.run(tower, table, t, order, trace=trace)
    return out, {tuple(r["l"]): r for r in trace}


def test_init(tower, table):
    st = bmsa.init(tower, table, 3, LEX)
    assert [dict(f) for f in st.F] == [{(0, 0): 0}]
    assert st.G == ()
    assert st.footprint == frozenset()
    assert st.l == (0, 0)


def test_lex_trace_steps(tower, table):
    out, recs = run_trace(tower, table, 3, LEX)
    assert recs[(0, 0)]["action"] == "proc2"
    assert recs[(0, 0)]["F"] == [{(1, 0): 0}, {(0, 1): 0}]
    assert recs[(0, 0)]["delta"] == [(0, 0)]
    assert recs[(0, 1)]["F"][1] == {(0, 1): 0, (0, 0): A("a^6")}
    assert recs[(0, 2)]["action"] == "none"
    assert recs[(0, 3)]["action"] == "proc2"
    assert recs[(0, 3)]["F"][1] == {(0, 3): 0, (0, 2): A("a^6"),
                                    (0, 0): A("a")}
    assert recs[(0, 3)]["delta"] == [(0, 0), (0, 1), (0, 2)]
    assert recs[(0, 3)]["G"] == [({(0, 1): 0, (0, 0): A("a^6")},
                                  (0, 3), A("a"))]
    assert recs[(0, 4)]["action"] == "none"
    assert recs[(0, 5)]["F"][1] == {(0, 3): 0, (0, 2): A("a^6"),
                                    (0, 1): A("a^5"), (0, 0): A("a^6")}
    assert recs[(1, 0)]["F"][0] == {(1, 0): 0, (0, 1): A("a"),
                                    (0, 0): A("a^2")}
    assert recs[(1, 1)]["action"] == "none"
    assert isinstance(out, bmsa.Blocked) and out.cell == (1, 2)


def test_graded_trace_steps(tower, table):
    out, recs = run_trace(tower, table, 3, GRADED)
    assert recs[(0, 0)]["F"] == [{(1, 0): 0}, {(0, 1): 0}]
    assert recs[(1, 0)]["F"][0] == {(1, 0): 0, (0, 0): A("a^12")}
    assert recs[(0, 1)]["F"][1] == {(0, 1): 0, (0, 0): A("a^6")}
    for l in [(2, 0), (1, 1), (0, 2)]:
        assert recs[l]["action"] == "none"
    assert recs[(3, 0)]["F"] == [
        dict(fixtures.EXAMPLE1_GRADED_F_AT_30[0]),
        dict(fixtures.EXAMPLE1_GRADED_F_AT_30[1])]
    assert recs[(3, 0)]["G"] == [({(1, 0): 0, (0, 0): A("a^12")},
                                  (3, 0), A("a^10"))]
    assert recs[(2, 1)]["F"] == [
        dict(fixtures.EXAMPLE1_GRADED_F_AT_21[0]),
        dict(fixtures.EXAMPLE1_GRADED_F_AT_21[1])]
    assert isinstance(out, bmsa.Blocked) and out.cell == (1, 2)


def test_footprint_monotone(tower, table):
    for order in (LEX, GRADED):
        trace = []
        bmsa.run(tower, table, 3, order, trace=trace)
        prev = set()
        for rec in trace:
            cur = set(rec["delta"])
            assert prev <= cur
            prev = cur


def test_check_condition(tower, table):
    assert bmsa.check_condition(table, 3, LEX)
    assert bmsa.check_condition(table, 3, GRADED)
    zero = syndrome.SyndromeTable((15, 15), {(0, j): ZERO for j in range(6)})
    assert not bmsa.check_condition(zero, 3, LEX)
    assert not bmsa.check_condition(zero, 3, GRADED)
    only10 = syndrome.SyndromeTable((15, 15), {(1, 0): 5})
    assert bmsa.check_condition(only10, 3, GRADED)
    assert not bmsa.check_condition(only10, 3, LEX)


def test_all_zero_table_returns_trivial_basis(tower):
    zero = syndrome.SyndromeTable(
        (15, 15), {(i, j): ZERO for i in range(15) for j in range(15)})
    out = bmsa.run(tower, zero, 3, LEX)
    assert isinstance(out, bmsa.Basis)
    assert [dict(f) for f in out.F] == [{(0, 0): 0}]


def test_first_nonzero_shapes(tower):
    rng = random.Random(99)
    for order in (LEX, GRADED):
        for _ in range(200):
            cells = {}
            for i in range(15):
                for j in range(15):
                    cells[(i, j)] = (rng.randrange(15)
                                     if rng.random() < 0.5 else ZERO)
            table = syndrome.SyndromeTable((15, 15), cells)
            if not bmsa.check_condition(table, 3, order):
                continue
            state = bmsa.init(tower, table, 3, order)
            first = None
            while not state.done:
                l = state.l
                nxt = bmsa.step(tower, state, table)
                if isinstance(nxt, bmsa.Blocked):
                    break
                if nxt.footprint and first is None:
                    first = l
                    state = nxt
                    break
                state = nxt
            if first is None:
                continue
            l1, l2 = first
            got = [dict(f) for f in state.F]
            if order is LEX:
                assert got == [{(1, 0): 0}, {(0, l2 + 1): 0}], first
            else:
                assert got == [{(l1 + 1, 0): 0}, {(0, l2 + 1): 0}], first


def test_schedule_restriction_matches_full_grid(tower, code):
    # on complete tables of decodable weight, iterating over the minimal
    # window gives the same basis as iterating over the whole period
    rng = random.Random(4)
    positions = [(i, j) for i in range(15) for j in range(15)]
    for trial in range(20):
        supp = rng.sample(positions, rng.randrange(1, 4))
        err = {p: 0 for p in supp}
        full = syndrome.table_of_error(tower, err, code.alpha, (15, 15))
        for order in (LEX, GRADED):
            out_win = bmsa.run(tower, full, 3, order)
            grid = sorted(positions, key=order.key)
            out_full = bmsa.run(tower, full, 3, order, schedule=grid)
            assert isinstance(out_win, bmsa.Basis)
            assert isinstance(out_full, bmsa.Basis)
            assert [dict(f) for f in out_win.F] == \
                [dict(f) for f in out_full.F], (trial, order.name)


def test_footprint_overflow(tower):
    rng = random.Random(5)
    # weight-5 error exceeds the capability: the run must fail loudly,
    # never silently
    positions = [(i, j) for i in range(15) for j in range(15)]
    alpha = gf.primitive_pair(tower)
    hits = 0
    for _ in range(30):
        supp = rng.sample(positions, 5)
        err = {p: 0 for p in supp}
        full = syndrome.table_of_error(tower, err, alpha, (15, 15))
        try:
            out = bmsa.run(tower, full, 3, GRADED)
        except FootprintOverflow:
            hits += 1
    assert hits > 0
