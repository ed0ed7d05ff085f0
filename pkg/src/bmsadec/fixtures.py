"""Built-in worked examples used by the demo command and the tests.

All of them live over GF(16) = GF(2)[x]/(x^4 + x + 1) with periods
15 x 15.  Values are written in the "a^k" notation of gf.FieldTower.
"""

from __future__ import annotations

from . import gf
from .gf import GF16_SPEC, FieldTower

_P = FieldTower.parse


def _cells(rows):
    return {(n1, n2): _P(v) for (n1, n2, v) in rows}


# A binary abelian code with t = 3 whose iteration window has exactly
# one unreachable syndrome, at (1, 2).
EXAMPLE1_ORBIT_REPS = ((0, 0), (0, 1), (0, 3), (0, 5), (1, 0), (3, 0),
                       (5, 0), (1, 1), (2, 1))
EXAMPLE1_T = 3

# Syndromes of the weight-3 error below at tau = (0, 0); cell (1, 2) is
# outside the defining set and therefore unknown.
EXAMPLE1_TABLE_ROWS = (
    (0, 0, "1"), (0, 1, "a^6"), (0, 2, "a^12"), (0, 3, "a^9"),
    (0, 4, "a^9"), (0, 5, "0"),
    (1, 0, "a^12"), (1, 1, "a^3"),
    (2, 0, "a^9"), (2, 1, "a^8"),
    (3, 0, "a^7"), (4, 0, "a^3"), (5, 0, "a^5"),
)
EXAMPLE1_TABLE = _cells(EXAMPLE1_TABLE_ROWS)
EXAMPLE1_MISSING = (1, 2)
EXAMPLE1_TRUE_MISSING_VALUE = _P("0")

EXAMPLE1_ERROR = {(14, 4): 0, (2, 8): 0, (1, 9): 0}

# Expected states along the two runs (polynomials as term dicts).
EXAMPLE1_LEX_F_AT_10 = (
    {(1, 0): 0, (0, 1): 1, (0, 0): 2},                  # X1 + a X2 + a^2
    {(0, 3): 0, (0, 2): 6, (0, 1): 5, (0, 0): 6},
)
EXAMPLE1_LEX_G = ({(0, 1): 0, (0, 0): 6}, (0, 3), 1)    # X2 + a^6, k, v=a
EXAMPLE1_GRADED_F_AT_30 = (
    {(3, 0): 0, (2, 0): 12, (0, 0): 10},                # X1^3 + a^12 X1^2 + a^10
    {(0, 1): 0, (0, 0): 6},
)
EXAMPLE1_GRADED_F_AT_21 = (
    {(3, 0): 0, (2, 0): 12, (0, 0): 10},
    {(0, 1): 0, (1, 0): 7, (0, 0): 12},                 # X2 + a^7 X1 + a^12
)

# Family walk over the lex exception state: the paper's candidate ledger.
EXAMPLE1_FAMILY_LEDGER = {
    "b=0": ((2, 1), "a^14"),
    "b=a": ((2, 1), "a^7"),
    "winner": "a^11",
}

# S(4) table at tau = (1, 0); the cell (3, 1) plays the unknown.  Built
# as a demonstration table (not derived from a received word here).
CASO2B_T = 4
CASO2B_TAU = (1, 0)
CASO2B_TABLE_ROWS = (
    (0, 0, "1"), (0, 1, "1"), (0, 2, "0"), (0, 3, "1"),
    (0, 4, "1"), (0, 5, "0"), (0, 6, "1"), (0, 7, "1"),
    (1, 0, "1"), (1, 1, "0"), (1, 2, "1"), (1, 3, "1"),
    (2, 0, "1"), (2, 1, "0"), (2, 2, "1"),
    (3, 0, "1"), (3, 1, "1"),
    (4, 0, "0"), (5, 0, "1"), (6, 0, "1"), (7, 0, "1"),
)
CASO2B_TABLE = _cells(CASO2B_TABLE_ROWS)
CASO2B_MISSING = (3, 1)
CASO2B_F_AT_BLOCK = (
    {(2, 0): 0, (1, 1): 0, (0, 0): 0},                  # X1^2 + X1 X2 + 1
    {(0, 2): 0, (0, 1): 0, (0, 0): 0},                  # X2^2 + X2 + 1
)
CASO2B_G_AT_BLOCK = ({(1, 1): 0, (1, 0): 0, (0, 0): 0}, (2, 2), 0)

# S(3) demonstration table exercising the irreducible exception states
# under both orders, depending on which of (1, 2) / (2, 1) is unknown.
CASOS1C2C_T = 3
CASOS1C2C_TABLE_ROWS = (
    (0, 0, "1"), (0, 1, "a^2"), (0, 2, "a^4"), (0, 3, "a^6"),
    (0, 4, "a^8"), (0, 5, "a^10"),
    (1, 0, "a^12"), (1, 1, "a^2"), (1, 2, "1"),
    (2, 0, "a^9"), (2, 1, "a^3"),
    (3, 0, "a^14"), (4, 0, "a^3"), (5, 0, "0"),
)
CASOS1C2C_TABLE = _cells(CASOS1C2C_TABLE_ROWS)

# Expected discrepancies of the eligible members at the blocked steps,
# evaluated on the fully known table.
CASOS1C2C_LEX_DISCS = (_P("a^4"), _P("a"))        # members 2 and 3 at (1,2)
CASOS1C2C_GRADED_DISCS = (_P("1"), _P("a^5"))     # members 1 and 2 at (2,1)


def tower():
    return gf.build_field(GF16_SPEC)


def example1_code():
    from .codes import make_code
    return make_code(GF16_SPEC, EXAMPLE1_ORBIT_REPS, EXAMPLE1_T)


def example1_table():
    from .syndrome import SyndromeTable
    return SyndromeTable((15, 15), EXAMPLE1_TABLE)


def caso2b_table(masked=True):
    from .syndrome import SyndromeTable
    cells = dict(CASO2B_TABLE)
    if masked:
        cells.pop(CASO2B_MISSING)
    return SyndromeTable((15, 15), cells, CASO2B_TAU)


def casos1c2c_table(masked_cell=None):
    from .syndrome import SyndromeTable
    cells = dict(CASOS1C2C_TABLE)
    if masked_cell is not None:
        cells.pop(tuple(masked_cell))
    return SyndromeTable((15, 15), cells)
