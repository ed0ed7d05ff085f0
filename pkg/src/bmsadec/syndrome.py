"""Doubly periodic syndrome tables and the discrepancy functional.

A table stores one period (r1 x r2) of a doubly periodic array, with a
known/unknown mask: absent cells are unknown.  Lookups wrap modulo the
periods.  The discrepancy of f at n is the windowed sum
sum_m f_m * u[m + n - LP(f)], taken over the support of f; it is zero
"by convention" whenever n does not dominate LP(f).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lattice, poly
from .gf import ZERO, FieldTower
from .lattice import MonomialOrder


@dataclass(frozen=True)
class Disc:
    """Result of a discrepancy evaluation."""

    kind: str          # "value" | "convention" | "unknown"
    value: int = ZERO  # meaningful for kind == "value"
    cell: tuple = None  # meaningful for kind == "unknown"

    @property
    def is_zero(self) -> bool:
        return self.kind == "convention" or (
            self.kind == "value" and self.value == ZERO)


CONVENTION = Disc("convention")


class SyndromeTable:
    """One period of a doubly periodic array with partial knowledge."""

    def __init__(self, periods, cells: dict, tau=(0, 0)):
        self.periods = tuple(periods)
        self.tau = tuple(tau)
        r1, r2 = self.periods
        self.cells = {((n[0] % r1, n[1] % r2)): v for n, v in cells.items()}

    def wrap(self, n):
        return (n[0] % self.periods[0], n[1] % self.periods[1])

    def get(self, n):
        """Known value at n (wrapping), or None when unknown."""
        return self.cells.get(self.wrap(n))

    def known(self, n) -> bool:
        return self.wrap(n) in self.cells

    def fill(self, n, value: int) -> "SyndromeTable":
        """New table with one more known cell."""
        cells = dict(self.cells)
        cells[self.wrap(n)] = value
        return SyndromeTable(self.periods, cells, self.tau)

    def known_cells(self):
        return self.cells.keys()

    def all_known_zero(self) -> bool:
        return all(v == ZERO for v in self.cells.values())


def build_table(tower: FieldTower, word: dict, defset, tau, alpha,
                periods) -> SyndromeTable:
    """Syndrome table of a received word: cell n is known iff tau + n
    falls in the defining set, where it equals word(alpha^(tau+n))."""
    r1, r2 = periods
    dset = {(d[0] % r1, d[1] % r2) for d in defset}
    cells = {}
    for n1 in range(r1):
        for n2 in range(r2):
            m = ((tau[0] + n1) % r1, (tau[1] + n2) % r2)
            if m in dset:
                cells[(n1, n2)] = poly.evaluate(tower, word, alpha, m)
    return SyndromeTable(periods, cells, tau)


def table_of_error(tower: FieldTower, error: dict, alpha, periods,
                   tau=(0, 0)) -> SyndromeTable:
    """Fully known table u_n = e(alpha^(tau+n)) over one period."""
    r1, r2 = periods
    cells = {}
    for n1 in range(r1):
        for n2 in range(r2):
            m = ((tau[0] + n1) % r1, (tau[1] + n2) % r2)
            cells[(n1, n2)] = poly.evaluate(tower, error, alpha, m)
    return SyndromeTable(periods, cells, tau)


def discrepancy(tower: FieldTower, f: dict, table: SyndromeTable, n,
                order: MonomialOrder) -> Disc:
    """f[U]_n.  Unknown referenced cells are reported, largest first."""
    s = poly.lp(f, order)
    if not lattice.preceq(s, n):
        return CONVENTION
    shiftv = lattice.sub(n, s)
    acc = ZERO
    missing = []
    for m, c in f.items():
        cell = lattice.add(m, shiftv)
        v = table.get(cell)
        if v is None:
            missing.append(cell)
        else:
            acc = tower.add(acc, tower.mul(c, v))
    if missing:
        return Disc("unknown", cell=order.max(missing))
    return Disc("value", value=acc)


def window_cells(f: dict, n, order: MonomialOrder):
    """The table cells referenced by the discrepancy of f at n."""
    s = poly.lp(f, order)
    shiftv = lattice.sub(n, s)
    return [lattice.add(m, shiftv) for m in f]


def generates(tower: FieldTower, f: dict, table: SyndromeTable, upto,
              order: MonomialOrder) -> bool:
    """True iff every discrepancy of f strictly below `upto` (within one
    period) is zero or holds by convention."""
    s = poly.lp(f, order)
    r1, r2 = table.periods
    for k1 in range(s[0], r1):
        for k2 in range(s[1], r2):
            k = (k1, k2)
            if not order.lt(k, upto):
                continue
            d = discrepancy(tower, f, table, k, order)
            if d.kind == "unknown":
                raise KeyError(f"unknown cell {d.cell} in window at {k}")
            if not d.is_zero:
                return False
    return True
