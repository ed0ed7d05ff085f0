import pytest

from bmsadec import lattice
from bmsadec.errors import CapabilityOutOfRange, MalformedDefiningSequence
from bmsadec.lattice import GRADED, LEX


def test_successor_examples():
    assert GRADED.successor((0, 0), (15, 15)) == (1, 0)
    assert GRADED.successor((2, 1), (15, 15)) == (1, 2)
    assert LEX.successor((0, 14), (15, 15)) == (1, 0)
    assert LEX.successor((2, 3), (15, 15)) == (2, 4)


def test_successor_is_immediate():
    # no period point strictly between l and successor(l), both orders
    period = [(i, j) for i in range(15) for j in range(15)]
    for order in (LEX, GRADED):
        for l in period:
            succ = order.successor(l, (15, 15))
            assert order.lt(l, succ)
            assert not any(order.lt(l, n) and order.lt(n, succ)
                           for n in period)


def test_successor_chain_matches_sort_lex():
    period = [(i, j) for i in range(15) for j in range(15)]
    chain = sorted(period, key=LEX.key)
    cur = (0, 0)
    for expected in chain:
        assert cur == expected
        cur = LEX.successor(cur, (15, 15))


def test_cmp_examples():
    assert LEX.lt((0, 5), (1, 0))
    assert GRADED.lt((3, 0), (0, 4))
    assert GRADED.lt((2, 1), (1, 2))
    # graded chain from (0,0) visits (2,1) before (1,2)
    seq = [(0, 0)]
    for _ in range(8):
        seq.append(GRADED.successor(seq[-1], (15, 15)))
    assert seq.index((2, 1)) < seq.index((1, 2))


def test_s_t_set_t1():
    assert set(lattice.s_t_set(1, LEX, (15, 15))) == {(0, 0), (0, 1), (1, 0)}


def test_s_t_set_t3_shape():
    pts = set(lattice.s_t_set(3, LEX, (15, 15)))
    axes = {(0, j) for j in range(6)} | {(i, 0) for i in range(6)}
    assert pts == axes | {(1, 1), (1, 2), (2, 1)}


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_s_t_set_count_formula(t):
    assert len(lattice.s_t_set(t, GRADED, (15, 15))) == \
        4 * t - 1 + t * (t - 1) // 2


def test_s_t_set_membership_predicate():
    pts = set(lattice.s_t_set(4, LEX, (15, 15)))
    for i in range(8):
        for j in range(8):
            inside = (i == 0 and j <= 7) or (j == 0 and i <= 7) or (
                i > 0 and j > 0 and i + j <= 4)
            assert ((i, j) in pts) == inside


def test_s_t_set_capability_range():
    with pytest.raises(CapabilityOutOfRange):
        lattice.s_t_set(8, LEX, (15, 15))
    with pytest.raises(CapabilityOutOfRange):
        lattice.s_t_set(0, LEX, (15, 15))


def test_s_t_set_sorted_by_order():
    for order in (LEX, GRADED):
        pts = lattice.s_t_set(3, order, (15, 15))
        assert pts == sorted(pts, key=order.key)


def test_delta_rect():
    assert lattice.delta_rect((0, 0)) == {(0, 0)}
    assert lattice.delta_rect((2, 0)) == {(0, 0), (1, 0), (2, 0)}
    for a in range(1, 6):
        for b in range(1, 6):
            assert len(lattice.delta_rect((a - 1, b - 1))) == a * b


def test_footprint_from_defining_points():
    assert lattice.footprint_from_defining_points([(1, 0), (0, 1)]) == \
        frozenset({(0, 0)})
    assert lattice.footprint_from_defining_points([(1, 0), (0, 3)]) == \
        frozenset({(0, 0), (0, 1), (0, 2)})
    assert lattice.footprint_from_defining_points(
        [(2, 0), (1, 1), (0, 2)]) == frozenset({(0, 0), (1, 0), (0, 1)})


def test_corners():
    assert lattice.corners([(1, 0), (0, 1)]) == [(0, 0)]
    assert lattice.corners([(1, 0), (0, 3)]) == [(0, 2)]
    assert lattice.corners([(2, 0), (1, 1), (0, 2)]) == [(1, 0), (0, 1)]


def test_malformed_defining_sequence():
    with pytest.raises(MalformedDefiningSequence):
        lattice.corners([(0, 0), (1, 1)])
    with pytest.raises(MalformedDefiningSequence):
        lattice.corners([(2, 0), (2, 1), (0, 2)])


def test_staircase_roundtrip():
    cases = [
        [(1, 0), (0, 1)],
        [(1, 0), (0, 3)],
        [(2, 0), (1, 1), (0, 2)],
        [(3, 0), (2, 2), (1, 3), (0, 5)],
        [(0, 0)],
    ]
    for s_list in cases:
        fp = (lattice.footprint_from_defining_points(s_list)
              if len(s_list) > 1 else frozenset())
        assert lattice.is_downward_closed(fp)
        assert lattice.defining_points_of_footprint(fp) == s_list
