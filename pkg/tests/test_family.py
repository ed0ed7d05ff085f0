import random

import pytest

from bmsadec import bmsa, family, fixtures, gf, inference, locator, poly, syndrome
from bmsadec.errors import NoConsistentCandidate
from bmsadec.gf import ZERO, FieldTower
from bmsadec.lattice import GRADED, LEX

A = FieldTower.parse


def lex_exception_state(tower, table):
    out = bmsa.run(tower, table, 3, LEX)
    res = inference.infer(tower, out.cell, out.state, table)
    assert res.kind == "exception"
    return out.state, res.case


def test_template_single_repair_shape(tower, table):
    state, case = lex_exception_state(tower, table)
    tpl = family.build_family(tower, case, state, table)
    assert tpl.slots == ("b",)
    # instantiating at b reproduces the closed form
    # X1 + (a + b/a) X2 + (a^2 + a^5 b) alongside the untouched partner
    for b in [ZERO, 0, 5, 11]:
        got = tpl.instantiate({"b": b})
        coeff_x2 = tower.add(A("a"), tower.div(b, A("a")))
        const = tower.add(A("a^2"), tower.mul(A("a^5"), b))
        want = {(1, 0): 0}
        if coeff_x2 != ZERO:
            want[(0, 1)] = coeff_x2
        if const != ZERO:
            want[(0, 0)] = const
        assert got[0] == want
        assert got[1] == dict(state.F[1])


def test_enumeration_ledger(tower, table, code):
    state, case = lex_exception_state(tower, table)
    tpl = family.build_family(tower, case, state, table)
    trace = []
    (cand, est) = family.enumerate_and_select(tower, tpl, table,
                                              code.alpha, 3, trace=trace)
    ledger = {rec["params"]["b"]: rec.get("result") for rec in trace}
    assert ledger["0"] == "first failing index (2,1) value a^14"
    assert ledger["a"] == "first failing index (2,1) value a^7"
    assert ledger["a^11"] == "consistent"
    assert cand.params == {"b": A("a^11")}
    assert est == dict(fixtures.EXAMPLE1_ERROR)
    assert len(trace) == 16  # exhaustive walk over L


def test_selected_basis_matches_closed_form(tower, table, code):
    state, case = lex_exception_state(tower, table)
    tpl = family.build_family(tower, case, state, table)
    cand, est = family.enumerate_and_select(tower, tpl, table,
                                            code.alpha, 3)
    # b = a^11: X1 + a^8 X2 + a^5
    assert cand.basis[0] == {(1, 0): 0, (0, 1): A("a^8"), (0, 0): A("a^5")}
    D = locator.defining_set(tower, cand.basis, code.alpha, (15, 15))
    assert D == frozenset(fixtures.EXAMPLE1_ERROR)


def test_lex1c_slot_count(tower):
    table = fixtures.casos1c2c_table((1, 2))
    out = bmsa.run(tower, table, 3, LEX)
    case = inference.infer(tower, out.cell, out.state, table).case
    tpl = family.build_family(tower, case, out.state, table)
    # s^(2)_2 = 1: slots are b, b0, c
    assert tpl.slots == ("b", "b0", "c")


@pytest.mark.parametrize("mask,order", [
    ((1, 2), LEX), ((2, 1), LEX), ((1, 2), GRADED), ((2, 1), GRADED)])
def test_family_resolves_demonstration_table(tower, code, mask, order):
    # the irreducible exception states still decode through the family:
    # the reconstructed weight-3 pattern reproduces all known syndromes
    table = fixtures.casos1c2c_table(mask)
    out = bmsa.run(tower, table, 3, order)
    case = inference.infer(tower, out.cell, out.state, table).case
    tpl = family.build_family(tower, case, out.state, table)
    cand, est = family.enumerate_and_select(tower, tpl, table,
                                            code.alpha, 3)
    assert len(est) <= 3
    assert locator.verify(tower, est, table, code.alpha)


def test_no_consistent_candidate(tower, code):
    # corrupting a syndrome of the exception fixture breaks selection
    cells = dict(fixtures.EXAMPLE1_TABLE)
    cells[(2, 1)] = tower.add(cells[(2, 1)], 0)  # +1
    table = syndrome.SyndromeTable((15, 15), cells)
    out = bmsa.run(tower, table, 3, LEX)
    if not isinstance(out, bmsa.Blocked):
        pytest.skip("corruption moved the block point")
    res = inference.infer(tower, out.cell, out.state, table)
    if res.kind != "exception":
        pytest.skip("corruption changed the classification")
    tpl = family.build_family(tower, res.case, out.state, table)
    with pytest.raises(NoConsistentCandidate):
        family.enumerate_and_select(tower, tpl, table, code.alpha, 3)


def test_true_assignment_always_survives(tower, code):
    # randomized: whenever an exception fires on a decodable table, the
    # family enumeration recovers exactly the injected support
    rng = random.Random(77)
    positions = [(i, j) for i in range(15) for j in range(15)]
    seen = {}
    for _ in range(400):
        supp = rng.sample(positions, 3)
        err = {p: 0 for p in supp}
        full = syndrome.table_of_error(tower, err, code.alpha, (15, 15))
        cell = rng.choice([(1, 2), (2, 1)])
        masked = syndrome.SyndromeTable(
            (15, 15), {n: v for n, v in full.cells.items() if n != cell})
        order = rng.choice((LEX, GRADED))
        out = bmsa.run(tower, masked, 3, order)
        if not isinstance(out, bmsa.Blocked) or out.cell != cell:
            continue
        res = inference.infer(tower, out.cell, out.state, masked)
        if res.kind != "exception":
            continue
        tpl = family.build_family(tower, res.case, out.state, masked)
        cand, est = family.enumerate_and_select(tower, tpl, masked,
                                                code.alpha, 3)
        assert est == err, res.case.tag
        seen[res.case.tag] = seen.get(res.case.tag, 0) + 1
    assert sum(seen.values()) >= 20, seen
