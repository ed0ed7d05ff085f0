"""The two-dimensional Berlekamp-Massey-Sakata iteration.

The state is the triple (F, G, footprint): F holds one monic generator
per defining point of the footprint, G holds one formerly failing
polynomial per footprint corner together with the index and value of
its last nonzero discrepancy, fuel for later updates.

At each scheduled index l the discrepancy of every F member is taken.
A failing member whose failure offset l - LP(f) lies inside the
footprint is repaired in place (procedure 1); offsets outside enlarge
the footprint and trigger a staircase rebuild (procedure 2).

The schedule normally covers only the minimal index set from
lattice.s_t_set.  Windows that reach outside the schedule are
guaranteed recurrences and are skipped when their cells are unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import lattice, poly, syndrome
from .errors import FootprintOverflow, InvariantBroken, NoCoveringCorner
from .gf import ZERO, FieldTower
from .lattice import MonomialOrder
from .syndrome import SyndromeTable


@dataclass(frozen=True)
class GEntry:
    """Auxiliary polynomial g with g[U]_k = v != 0 and its corner k - LP(g)."""

    g: dict
    k: tuple
    v: int
    corner: tuple


@dataclass(frozen=True)
class BmsaState:
    order: MonomialOrder
    t: int
    periods: tuple
    F: tuple            # polynomials, decreasing first coordinate of LP
    G: tuple            # GEntry, decreasing first coordinate of corner
    footprint: frozenset
    schedule: tuple
    pos: int            # index of the next schedule entry
    restriction: frozenset
    condition_ok: bool = True
    fallback_solves: int = 0

    @property
    def l(self):
        return self.schedule[self.pos]

    @property
    def done(self) -> bool:
        return self.pos >= len(self.schedule)

    def defining_points(self):
        return lattice.defining_points_of_footprint(self.footprint)


@dataclass(frozen=True)
class Basis:
    F: tuple
    state: BmsaState


@dataclass(frozen=True)
class Blocked:
    state: BmsaState
    cell: tuple


def check_condition(table: SyndromeTable, t: int,
                    order: MonomialOrder) -> bool:
    """Early-nonzero requirement for the active order."""
    if order.name == "lex":
        probe = [(0, j) for j in range(t)]
    else:
        probe = [(1, 0), (0, 1)]
    return any(table.get(n) not in (None, ZERO) for n in probe)


def init(tower: FieldTower, table: SyndromeTable, t: int,
         order: MonomialOrder, schedule=None) -> BmsaState:
    if schedule is None:
        schedule = lattice.s_t_set(t, order, table.periods)
    return BmsaState(
        order=order,
        t=t,
        periods=table.periods,
        F=({(0, 0): 0},),
        G=(),
        footprint=frozenset(),
        schedule=tuple(schedule),
        pos=0,
        restriction=frozenset(schedule),
        condition_ok=check_condition(table, t, order),
    )


def _step_discrepancy(tower, state, f, table, l):
    """Discrepancy for the scheduled step: unknown cells outside the
    schedule make the relation hold automatically (skip), unknown cells
    inside block the run."""
    s = poly.lp(f, state.order)
    if not lattice.preceq(s, l):
        return syndrome.CONVENTION
    shiftv = lattice.sub(l, s)
    acc = ZERO
    blocked = []
    for m, c in f.items():
        cell = lattice.add(m, shiftv)
        v = table.get(cell)
        if v is None:
            if cell not in state.restriction:
                return syndrome.CONVENTION  # guaranteed recurrence
            blocked.append(cell)
        else:
            acc = tower.add(acc, tower.mul(c, v))
    if blocked:
        return syndrome.Disc("unknown", cell=state.order.max(blocked))
    return syndrome.Disc("value", value=acc)


def _pick_cover(order, G, offset):
    """Auxiliary entry whose corner dominates the offset, smallest shift
    first, then position."""
    best = None
    for j, entry in enumerate(G):
        e = lattice.sub(entry.corner, offset)
        if lattice.nonneg(e):
            rank = (e[0] + e[1], j)
            if best is None or rank < best[0]:
                best = (rank, entry, e)
    if best is None:
        return None
    return best[1], best[2]


def procedure1(tower, state, f, d, l):
    """Repair f in place: subtract the aligned multiple of the covering
    auxiliary polynomial so that the discrepancy at l cancels."""
    offset = lattice.sub(l, poly.lp(f, state.order))
    picked = _pick_cover(state.order, state.G, offset)
    if picked is None:
        raise NoCoveringCorner(f"no corner covers {offset} at step {l}")
    entry, e = picked
    return poly.combine(tower, f, tower.div(d, entry.v), entry.g, e)


def _solve_member(tower, state, table, target_lp, new_fp, l):
    """Last-resort construction of a monic generator with the given
    leading point by exact linear algebra over the known cells.

    Used only when no state combination can cancel the discrepancy;
    such states have not been observed on tables of weight <= t.
    """
    order = state.order
    support = sorted((m for m in new_fp if order.lt(m, target_lp)),
                     key=order.key)
    cons = []
    r1, r2 = state.periods
    for k1 in range(target_lp[0], r1):
        for k2 in range(target_lp[1], r2):
            k = (k1, k2)
            if order.lt(l, k):
                continue
            shiftv = lattice.sub(k, target_lp)
            cells = [lattice.add(m, shiftv) for m in support]
            rhs_cell = k
            if table.get(rhs_cell) is None or any(
                    table.get(c) is None for c in cells):
                continue
            cons.append(([table.get(c) for c in cells],
                         tower.neg(table.get(rhs_cell))))
    ncols = len(support)
    rows = [list(r) + [b] for r, b in cons]
    piv_cols = []
    rix = 0
    for col in range(ncols):
        piv = next((i for i in range(rix, len(rows))
                    if rows[i][col] != ZERO), None)
        if piv is None:
            continue
        rows[rix], rows[piv] = rows[piv], rows[rix]
        inv = tower.inv(rows[rix][col])
        rows[rix] = [tower.mul(x, inv) for x in rows[rix]]
        for i in range(len(rows)):
            if i != rix and rows[i][col] != ZERO:
                c = rows[i][col]
                rows[i] = [tower.sub(x, tower.mul(c, y))
                           for x, y in zip(rows[i], rows[rix])]
        piv_cols.append(col)
        rix += 1
    for i in range(rix, len(rows)):
        if rows[i][-1] != ZERO:
            raise InvariantBroken(
                f"no generator with leading point {target_lp} exists")
    sol = [ZERO] * ncols
    for r, col in enumerate(piv_cols):
        sol[col] = rows[r][-1]
    h = {target_lp: 0}
    for m, c in zip(support, sol):
        if c != ZERO:
            h[m] = c
    return h


def procedure2(tower, state, table, failed_out, current_F, l):
    """Enlarge the footprint by the failure offsets, rebuild the
    staircase, and construct one generator per new defining point."""
    order = state.order
    new_fp = set(state.footprint)
    for f, d in failed_out:
        new_fp |= lattice.delta_rect(lattice.sub(l, poly.lp(f, order)))
    if len(new_fp) > state.t:
        raise FootprintOverflow(
            f"footprint size {len(new_fp)} exceeds t={state.t} at {l}")
    new_fp = frozenset(new_fp)
    new_pts = lattice.defining_points_of_footprint(new_fp)

    failed_lps = {id(f) for f, _ in failed_out}
    retained = {}
    for f in current_F:
        if id(f) not in failed_lps:
            retained[poly.lp(f, order)] = f

    fallback = 0
    new_F = []
    kept = [g for s, g in retained.items() if s in set(new_pts)]
    for sp in new_pts:
        if sp in retained:
            new_F.append(retained[sp])
            continue
        cands = [(f, d) for f, d in failed_out
                 if lattice.preceq(poly.lp(f, order), sp)]
        if not cands:
            h = _solve_member(tower, state, table, sp, new_fp, l)
            fallback += 1
            new_F.append(h)
            continue
        f, d = min(cands, key=lambda fd: order.key(poly.lp(fd[0], order)))
        base = poly.shift_mul(f, lattice.sub(sp, poly.lp(f, order)))
        offset = lattice.sub(l, sp)
        if lattice.nonneg(offset):
            picked = _pick_cover(order, state.G, offset)
            if picked is None:
                h = _solve_member(tower, state, table, sp, new_fp, l)
                fallback += 1
            else:
                entry, e = picked
                h = poly.combine(tower, base, tower.div(d, entry.v),
                                 entry.g, e)
        else:
            h = base  # discrepancy at l holds by convention
        h = poly.normal_form(tower, h, kept, order)
        new_F.append(h)

    # one auxiliary entry per corner: fresh failures first, then survivors
    new_G = []
    for corner in lattice.corners(new_pts):
        entry = None
        for f, d in failed_out:
            if lattice.sub(l, poly.lp(f, order)) == corner:
                entry = GEntry(f, l, d, corner)
                break
        if entry is None:
            entry = next((e for e in state.G if e.corner == corner), None)
        if entry is None:
            raise InvariantBroken(f"corner {corner} left uncovered at {l}")
        new_G.append(entry)

    return tuple(new_F), tuple(new_G), new_fp, fallback


def step(tower, state: BmsaState, table: SyndromeTable, trace=None):
    """Process one scheduled index; returns the advanced state or Blocked."""
    order = state.order
    l = state.l
    discs = [_step_discrepancy(tower, state, f, table, l) for f in state.F]

    blocked_cells = [d.cell for d in discs if d.kind == "unknown"]
    if blocked_cells:
        return Blocked(state, order.max(blocked_cells))

    failing = [(f, d.value) for f, d in zip(state.F, discs)
               if d.kind == "value" and d.value != ZERO]
    new_state = state
    action = "none"
    if failing:
        inside = [(f, d) for f, d in failing
                  if lattice.sub(l, poly.lp(f, order)) in state.footprint]
        outside = [(f, d) for f, d in failing
                   if lattice.sub(l, poly.lp(f, order)) not in state.footprint]
        current = list(state.F)
        for f, d in inside:
            h = procedure1(tower, state, f, d, l)
            i = current.index(f)
            others = [g for j, g in enumerate(current) if j != i]
            current[i] = poly.normal_form(tower, h, others, order)
        action = "proc1"
        if outside:
            F, G, fp, fb = procedure2(tower, state, table, outside,
                                      current, l)
            new_state = replace(state, F=F, G=G, footprint=fp,
                                fallback_solves=state.fallback_solves + fb)
            action = "proc2"
        else:
            new_state = replace(state, F=tuple(current))
    new_state = replace(new_state, pos=state.pos + 1)
    if trace is not None:
        trace.append(trace_record(new_state, l, action))
    return new_state


def run(tower, table: SyndromeTable, t: int, order: MonomialOrder,
        schedule=None, trace=None):
    """Iterate over the schedule; Basis on completion, Blocked on the
    first unknown cell required inside the schedule."""
    state = init(tower, table, t, order, schedule)
    return resume(tower, state, table, trace)


def resume(tower, state: BmsaState, table: SyndromeTable, trace=None):
    """Continue a run (e.g. after filling a blocked cell)."""
    while not state.done:
        out = step(tower, state, table, trace)
        if isinstance(out, Blocked):
            return out
        state = out
    return Basis(state.F, state)


def trace_record(state: BmsaState, l, action) -> dict:
    return {
        "l": l,
        "action": action,
        "F": [dict(f) for f in state.F],
        "G": [(dict(e.g), e.k, e.v) for e in state.G],
        "delta": sorted(state.footprint),
    }


def render_trace_line(rec: dict, order: MonomialOrder) -> str:
    fs = "; ".join(poly.render(f, order) for f in rec["F"])
    gs = "; ".join(
        f"({poly.render(g, order)}, k=({k[0]},{k[1]}), v={FieldTower.fmt(v)})"
        for g, k, v in rec["G"])
    ds = ",".join(f"({i},{j})" for i, j in rec["delta"])
    l = rec["l"]
    return (f"l=({l[0]},{l[1]}) {rec['action']} "
            f"F=[{fs}] G=[{gs}] D=[{ds}]")
