"""Recovery of a missing syndrome value at a blocked iteration step.

A missing value can only be inferred at a border index: the interior
diagonal l1 + l2 = t, the two edge points (1, t-1) and (t-1, 1), or the
axis tails.  Away from the tabulated exception states, some member of
the current minimal set is guaranteed to satisfy a linear recurring
relation at the blocked step, and solving that relation for the missing
cell recovers it (the leading coefficient is 1, so this is linear).

`resolve` chains the strategies: run one order, infer and resume on a
block, switch order on an exception or ambiguity, and finally fall back
to the parametrized basis families of the `family` module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bmsa, lattice, poly, syndrome
from .errors import (
    DecoderError,
    FootprintOverflow,
    InvariantBroken,
    MultipleConsistentCandidates,
    Undecodable,
    WitnessWindowUnknown,
)
from .gf import ZERO, FieldTower
from .lattice import GRADED, LEX, MonomialOrder


@dataclass(frozen=True)
class ExceptionCase:
    """A state in which no recurring relation is guaranteed to exist."""

    tag: str
    order_name: str
    l: tuple
    d: int
    s_list: tuple


@dataclass(frozen=True)
class InferenceResult:
    kind: str                 # "solved" | "ambiguous" | "exception"
    value: int = ZERO         # solved
    witness: int = -1         # solved: index into F
    candidates: tuple = ()    # ambiguous
    case: ExceptionCase = None


def classify(l, state: bmsa.BmsaState) -> str:
    """Border class of the blocked index, from the live minimal set."""
    t = state.t
    s_list = [poly.lp(f, state.order) for f in state.F]
    l1, l2 = l
    if l1 > 0 and l2 > 0 and l1 + l2 == t:
        if l == (1, t - 1):
            return "edge_low"
        if l == (t - 1, 1):
            return "edge_high"
        return "interior"
    if l1 == 0 and t + s_list[-1][1] - 1 <= l2 <= 2 * t - 1:
        return "axis_x2"
    if l2 == 0 and t + s_list[0][0] - 1 <= l1 <= 2 * t - 1:
        return "axis_x1"
    return "none"


def _witness_status(tower, state, f, table, l):
    """('usable', value) with the solved cell value, 'skipped' when the
    window leaves the schedule through an unknown cell, 'convention'
    when LP(f) does not divide l, or 'stuck' on a second unknown."""
    order = state.order
    s = poly.lp(f, order)
    if not lattice.preceq(s, l):
        return ("convention", ZERO)
    shiftv = lattice.sub(l, s)
    acc = ZERO
    coeff_at_l = None
    for m, c in f.items():
        cell = lattice.add(m, shiftv)
        if cell == l:
            coeff_at_l = c
            continue
        v = table.get(cell)
        if v is None:
            if cell not in state.restriction:
                return ("skipped", ZERO)
            return ("stuck", ZERO)
    for m, c in f.items():
        cell = lattice.add(m, shiftv)
        if cell != l:
            acc = tower.add(acc, tower.mul(c, table.get(cell)))
    return ("usable", tower.div(tower.neg(acc), coeff_at_l))


def _collect(tower, state, table, l, indices):
    usable, skipped = [], 0
    for i in indices:
        status, v = _witness_status(tower, state, state.F[i], table, l)
        if status == "usable":
            usable.append((i, v))
        elif status == "skipped":
            skipped += 1
        elif status == "stuck":
            raise WitnessWindowUnknown(
                f"second unknown cell in witness window at {l}")
    return usable, skipped


def _result_from(usable, skipped, guaranteed: bool) -> InferenceResult:
    """Fold witness values: a single unanimous value is Solved when the
    witness set carries a guarantee, otherwise every distinct value is
    kept for the downstream consistency check."""
    if not usable:
        raise WitnessWindowUnknown("no solvable witness window")
    values = []
    for _, v in usable:
        if v not in values:
            values.append(v)
    if len(values) == 1 and (guaranteed or skipped == 0):
        return InferenceResult("solved", value=values[0],
                               witness=usable[0][0])
    return InferenceResult("ambiguous", candidates=tuple(values))


def _edge_exception(l, state: bmsa.BmsaState):
    t = state.t
    order = state.order.name
    s = [poly.lp(f, state.order) for f in state.F]
    d = len(s)
    prefix = "Lex" if order == "lex" else "Grad"

    def case(tag):
        return ExceptionCase(tag, order, l, d, tuple(s))

    if l == (1, t - 1):
        if d == 2 and s[0][0] == 1 and s[1][1] == t and order == "lex":
            return case("Lex1a")
        if d == 2 and s[0] == (2, 0) and t == 2 * s[1][1]:
            if order == "lex" and l != (1, 1):
                return case("Lex1b")
            if order == "graded":
                return case("Grad1b")
        if d == 3 and s[0] == (2, 0) and t == s[1][1] + s[2][1]:
            return case(prefix + "1c")
    if l == (t - 1, 1) and t > 2:
        if d == 2 and s[0][0] == t and s[1][1] == 1 and order == "graded":
            return case("Grad2a")
        if d == 2 and s[1] == (0, 2) and t == 2 * s[0][0]:
            return case(prefix + "2b")
        if d == 3 and s[2] == (0, 2) and t == s[0][0] + s[1][0]:
            return case(prefix + "2c")
    return None


def infer_edge(tower, l, state, table) -> InferenceResult:
    exc = _edge_exception(l, state)
    if exc is not None:
        return InferenceResult("exception", case=exc)
    usable, skipped = _collect(tower, state, table, l, range(len(state.F)))
    return _result_from(usable, skipped, guaranteed=False)


def infer_interior(tower, l, state, table) -> InferenceResult:
    """Witness table for interior diagonal indexes (l1, l2 > 1)."""
    s = [poly.lp(f, state.order) for f in state.F]
    d = len(s)
    l1, l2 = l
    if d >= 4:
        designated = [0, d - 1]
        disjunctive = True
    elif l1 > s[0][0]:
        designated = [0]
        disjunctive = False
    elif l1 == s[0][0] and l2 >= s[-1][1]:
        designated = [0, d - 1]
        disjunctive = True
    elif l1 < s[0][0] and l2 > s[-1][1]:
        designated = [d - 1]
        disjunctive = False
    else:
        # narrow corner state; the middle member carries the relation
        designated = [1] if d == 3 else [0, d - 1]
        disjunctive = d != 3
    usable, skipped = _collect(tower, state, table, l, designated)
    return _result_from(usable, skipped,
                        guaranteed=not disjunctive)


def infer_axis(tower, l, state, table) -> InferenceResult:
    t = state.t
    s = [poly.lp(f, state.order) for f in state.F]
    d = len(s)
    if l[0] == 0:
        boundary = l[1] == t + s[-1][1] - 1
        if boundary and d == 2 and s[0] == (1, 0):
            return InferenceResult("exception", case=ExceptionCase(
                "AxisX2d2", state.order.name, l, d, tuple(s)))
        designated = [len(s) - 1]
    else:
        boundary = l[0] == t + s[0][0] - 1
        if boundary and d == 2 and s[-1] == (0, 1):
            return InferenceResult("exception", case=ExceptionCase(
                "AxisX1d2", state.order.name, l, d, tuple(s)))
        designated = [0]
    usable, skipped = _collect(tower, state, table, l, designated)
    return _result_from(usable, skipped, guaranteed=True)


_INFER = {
    "edge_low": infer_edge,
    "edge_high": infer_edge,
    "interior": infer_interior,
    "axis_x2": infer_axis,
    "axis_x1": infer_axis,
}


def infer(tower, l, state, table) -> InferenceResult | None:
    cls = classify(l, state)
    if cls == "none":
        return None
    return _INFER[cls](tower, l, state, table)


@dataclass
class Resolution:
    basis: tuple
    table: syndrome.SyndromeTable
    order: MonomialOrder
    error: dict | None = None          # set when the family path decided
    diagnostics: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def resolve(tower, table: syndrome.SyndromeTable, t: int,
            orders=(LEX, GRADED), allow_family: bool = True,
            alpha=None, exhaustive: bool = True,
            trace=None) -> Resolution:
    """Strategy chain: iterate each order, inferring and resuming at
    blocks; on exceptions or surviving ambiguity fall back to the
    candidate consistency check and the parametrized families.

    `alpha` is required for the family fallback and for ambiguity
    resolution (both reconstruct candidate errors).
    """
    from . import family as family_mod
    from . import locator

    diagnostics = []
    warnings = []
    exceptions = []   # (order, state, table)
    ambiguous = []    # (order, state, table, l, candidate values)

    for order in orders:
        tbl = table
        if not bmsa.check_condition(tbl, t, order):
            warnings.append(f"{order.name}: early-nonzero condition unmet")
        out = bmsa.run(tower, tbl, t, order, trace=trace)
        failed = False
        while isinstance(out, bmsa.Blocked):
            l = out.state.l
            if out.cell != l:
                diagnostics.append({"order": order.name, "blocked_at": l,
                                    "cell": out.cell,
                                    "class": "out_of_step"})
                failed = True
                break
            cls = classify(l, out.state)
            rec = {"order": order.name, "blocked_at": l, "class": cls}
            diagnostics.append(rec)
            if cls == "none":
                failed = True
                break
            try:
                res = _INFER[cls](tower, l, out.state, tbl)
            except WitnessWindowUnknown as e:
                rec["error"] = str(e)
                failed = True
                break
            if res.kind == "solved":
                rec["solved"] = res.value
                rec["witness"] = res.witness
                tbl = tbl.fill(l, res.value)
                try:
                    out = bmsa.resume(tower, out.state, tbl, trace=trace)
                except (FootprintOverflow, InvariantBroken) as e:
                    rec["error"] = str(e)
                    failed = True
                    break
            elif res.kind == "exception":
                rec["exception"] = res.case.tag
                exceptions.append((order, out.state, tbl, res.case))
                failed = True
                break
            else:
                rec["candidates"] = res.candidates
                ambiguous.append((order, out.state, tbl, l, res.candidates))
                failed = True
                break
        if not failed and isinstance(out, bmsa.Basis):
            return Resolution(out.F, tbl, order,
                              diagnostics=diagnostics, warnings=warnings)

    # candidate completions from ambiguous witnesses
    if ambiguous and alpha is not None:
        survivors = []
        for order, state, tbl, l, values in ambiguous:
            for v in values:
                t2 = tbl.fill(l, v)
                try:
                    out = bmsa.run(tower, t2, t, order)
                except DecoderError:
                    continue
                if not isinstance(out, bmsa.Basis):
                    continue
                est = locator.estimate_from_basis(
                    tower, out.F, t2, alpha, t)
                if est is None:
                    continue
                key = tuple(sorted(est.items()))
                if key not in [s[0] for s in survivors]:
                    survivors.append((key, out.F, t2, order, est))
        if len(survivors) == 1:
            _, F, t2, order, est = survivors[0]
            return Resolution(F, t2, order, error=est,
                              diagnostics=diagnostics, warnings=warnings)
        if len(survivors) > 1:
            raise MultipleConsistentCandidates(
                f"{len(survivors)} candidate completions verify")

    if exceptions and allow_family:
        order, state, tbl, case = exceptions[0]
        template = family_mod.build_family(tower, case, state, tbl)
        cand, est = family_mod.enumerate_and_select(
            tower, template, tbl, alpha, t, exhaustive=exhaustive,
            trace=diagnostics)
        return Resolution(tuple(cand.basis), tbl, order, error=est,
                          diagnostics=diagnostics, warnings=warnings)

    raise Undecodable(f"no strategy succeeded; diagnostics: {diagnostics}")
