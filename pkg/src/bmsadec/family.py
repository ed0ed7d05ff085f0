"""Parametrized basis families for the exception states.

When no recurring relation is guaranteed at the blocked step, the
missing discrepancy values become free parameters ("slots") ranging
over L.  Each exception state has a template prescribing how the
blocked-step state combines into a candidate basis for every slot
assignment, possibly followed by deterministic continuation updates of
the untouched members over later known steps.  Enumerating assignments
and keeping the unique one whose reconstructed error reproduces every
known syndrome inside the iteration window finishes the decoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import bmsa, lattice, locator, poly, syndrome
from .errors import (
    MultipleConsistentCandidates,
    NoConsistentCandidate,
    NonBaseFieldSolution,
    SingularSystem,
    UnknownCellInPostUpdate,
    UnsupportedCase,
)
from .gf import ZERO, FieldTower

MAX_SLOTS = 3


class _CandidateInvalid(Exception):
    """Assignment leads to a degenerate construction; skip it."""


@dataclass(frozen=True)
class FamilyTemplate:
    case: object
    slots: tuple
    state: bmsa.BmsaState
    table: syndrome.SyndromeTable
    build: object          # params dict -> list of polynomials
    extract: object = None  # filled table -> params dict (multi-slot only)

    def instantiate(self, params: dict) -> list:
        return self.build(params)


@dataclass(frozen=True)
class CandidateBasis:
    params: dict
    basis: tuple


def _replay(tower, state, table, f, steps, gpool):
    """Deterministic continuation of one member over later known steps,
    repairing every nonzero discrepancy with the covering pool entry."""
    order = state.order
    cur = dict(f)
    for k in sorted(steps, key=order.key):
        s = poly.lp(cur, order)
        if not lattice.preceq(s, k):
            continue
        shiftv = lattice.sub(k, s)
        acc = ZERO
        for m, c in cur.items():
            v = table.get(lattice.add(m, shiftv))
            if v is None:
                raise UnknownCellInPostUpdate(
                    f"cell {lattice.add(m, shiftv)} unknown at step {k}")
            acc = tower.add(acc, tower.mul(c, v))
        if acc == ZERO:
            continue
        picked = bmsa._pick_cover(order, gpool, lattice.sub(k, s))
        if picked is None:
            raise _CandidateInvalid(f"no cover for update at {k}")
        entry, e = picked
        if entry.v == ZERO:
            raise _CandidateInvalid(f"zero-valued pool entry at {k}")
        cur = poly.combine(tower, cur, tower.div(acc, entry.v), entry.g, e)
    return cur


def _corr(tower, f, slot_val, g, v, e=(0, 0)):
    """f - (slot/v) X^e g, the identity when the slot is zero."""
    if slot_val == ZERO:
        return dict(f)
    return poly.combine(tower, f, tower.div(slot_val, v), g, e)


def _axis_steps(order, t):
    if order.name == "lex":
        return [(1, j) for j in range(t)]
    return []


def build_family(tower, case, state: bmsa.BmsaState,
                 table: syndrome.SyndromeTable) -> FamilyTemplate:
    """Template for the captured exception state."""
    order = state.order
    t = state.t
    F = [dict(f) for f in state.F]
    G = list(state.G)
    s = [poly.lp(f, order) for f in F]
    tag = case.tag

    def template(slots, build, extract=None):
        if len(slots) > MAX_SLOTS:
            raise UnsupportedCase(
                f"{tag}: {len(slots)} slots exceeds enumeration cap")
        return FamilyTemplate(case, tuple(slots), state, table, build,
                              extract)

    if tag in ("Lex1a", "Lex2b"):
        # single repair of f1, partner untouched
        def build(p):
            return [_corr(tower, F[0], p["b"], G[0].g, G[0].v), F[1]]
        return template(("b",), build)

    if tag == "Lex1b":
        steps = ([(2, j) for j in range(t // 2)]
                 + [(3, j) for j in range(t // 2)])
        f1bar = _replay(tower, state, table, F[0], steps, G)

        def build(p):
            return [f1bar, _corr(tower, F[1], p["b"], G[0].g, G[0].v)]
        return template(("b",), build)

    if tag == "Lex1c":
        s22, s23 = s[1][1], s[2][1]
        steps = ([(2, j) for j in range(s23)]
                 + [(3, j) for j in range(s22)])
        f1bar = _replay(tower, state, table, F[0], steps, G)
        bslots = tuple(f"b{n}" for n in range(s22))

        def build(p):
            hb = _corr(tower, F[1], p["b"], G[1].g, G[1].v)
            for n in range(s22):
                hb = _corr(tower, hb, p[f"b{n}"], G[0].g, G[0].v,
                           (0, s22 - n - 1))
            hc = _corr(tower, F[2], p["c"], G[0].g, G[0].v)
            return [f1bar, hb, hc]

        def extract(filled):
            b = _disc_or_none(tower, F[1], filled, case.l, order)
            c = _disc_or_none(tower, F[2], filled, case.l, order)
            if b is None or c is None:
                return None
            p = {"b": b, "c": c}
            hb = _corr(tower, F[1], b, G[1].g, G[1].v)
            for n in range(s22):
                bn = _disc_or_none(tower, hb, filled, (2, s22 + n), order)
                if bn is None:
                    return None
                p[f"b{n}"] = bn
                hb = _corr(tower, hb, bn, G[0].g, G[0].v,
                           (0, s22 - n - 1))
            return p
        return template(("b",) + bslots + ("c",), build, extract)

    if tag == "Lex2c":
        s11, s21 = s[0][0], s[1][0]
        bslots = tuple(f"b{n}" for n in range(s11 - s21))

        def build(p):
            hb = _corr(tower, F[0], p["b"], G[1].g, G[1].v)
            for n in range(s11 - s21):
                hb = _corr(tower, hb, p[f"b{n}"], G[0].g, G[0].v,
                           (s11 - n - s21 - 1, 0))
            hc = _corr(tower, F[1], p["c"], G[0].g, G[0].v)
            return [hb, hc, F[2]]

        def extract(filled):
            b = _disc_or_none(tower, F[0], filled, case.l, order)
            c = _disc_or_none(tower, F[1], filled, case.l, order)
            if b is None or c is None:
                return None
            p = {"b": b, "c": c}
            hb = _corr(tower, F[0], b, G[1].g, G[1].v)
            for n in range(s11 - s21):
                bn = _disc_or_none(tower, hb, filled, (t + n, 0), order)
                if bn is None:
                    return None
                p[f"b{n}"] = bn
                hb = _corr(tower, hb, bn, G[0].g, G[0].v,
                           (s11 - n - s21 - 1, 0))
            return p
        return template(("b",) + bslots + ("c",), build, extract)

    if tag == "Grad1b":
        f1bar = (_replay(tower, state, table, F[0], [(3, 0)], G)
                 if t == 2 else F[0])

        def build(p):
            return [f1bar, _corr(tower, F[1], p["b"], G[0].g, G[0].v)]
        return template(("b",), build)

    if tag == "Grad1c":
        s22, s23 = s[1][1], s[2][1]
        cslots = tuple(f"c{n}" for n in range(s23 - s22))

        def build(p):
            hb = _corr(tower, F[1], p["b"], G[1].g, G[1].v)
            hc = _corr(tower, F[2], p["c"], G[0].g, G[0].v)
            for n in range(s23 - s22):
                hc = _corr(tower, hc, p[f"c{n}"], G[1].g, G[1].v,
                           (0, s23 - n - s22 - 1))
            return [F[0], hb, hc]

        def extract(filled):
            b = _disc_or_none(tower, F[1], filled, case.l, order)
            c = _disc_or_none(tower, F[2], filled, case.l, order)
            if b is None or c is None:
                return None
            p = {"b": b, "c": c}
            hc = _corr(tower, F[2], c, G[0].g, G[0].v)
            for n in range(s23 - s22):
                cn = _disc_or_none(tower, hc, filled, (0, t + n), order)
                if cn is None:
                    return None
                p[f"c{n}"] = cn
                hc = _corr(tower, hc, cn, G[1].g, G[1].v,
                           (0, s23 - n - s22 - 1))
            return p
        return template(("b", "c") + cslots, build, extract)

    if tag == "Grad2a":
        f1bar = _replay(tower, state, table, F[0],
                        [(k, 0) for k in range(t, 2 * t)], G)

        def build(p):
            return [f1bar, _corr(tower, F[1], p["b"], G[0].g, G[0].v)]
        return template(("b",), build)

    if tag == "Grad2b":
        f2bar = (_replay(tower, state, table, F[1], [(1, 3)], G)
                 if t == 4 else F[1])

        def build(p):
            return [_corr(tower, F[0], p["b"], G[0].g, G[0].v), f2bar]
        return template(("b",), build)

    if tag == "Grad2c":
        s11, s21 = s[0][0], s[1][0]
        steps = []
        if s21 <= 2:
            steps.append((t - 2, 2))
        if s11 <= 3:
            steps.append((t - 3, 3))
        if t == 3:
            steps.append((0, 3))
        steps = sorted({k for k in steps if order.lt(case.l, k)
                        and k in state.restriction}, key=order.key)
        f3bar = _replay(tower, state, table, F[2], steps, G)
        bslots = tuple(f"b{n}" for n in range(s11 - s21 - 1))

        def build(p):
            hb = _corr(tower, F[0], p["b"], G[1].g, G[1].v)
            for n in range(s11 - s21 - 1):
                hb = _corr(tower, hb, p[f"b{n}"], G[0].g, G[0].v,
                           (s11 - n - s21 - 2, 0))
            hc = _corr(tower, F[1], p["c"], G[0].g, G[0].v)
            hc = _corr(tower, hc, p["c0"], G[1].g, G[1].v)
            return [hb, hc, f3bar]

        def extract(filled):
            b = _disc_or_none(tower, F[0], filled, case.l, order)
            c = _disc_or_none(tower, F[1], filled, case.l, order)
            if b is None or c is None:
                return None
            p = {"b": b, "c": c}
            hb = _corr(tower, F[0], b, G[1].g, G[1].v)
            for n in range(s11 - s21 - 1):
                bn = _disc_or_none(tower, hb, filled, (t + n + 1, 0), order)
                if bn is None:
                    return None
                p[f"b{n}"] = bn
                hb = _corr(tower, hb, bn, G[0].g, G[0].v,
                           (s11 - n - s21 - 2, 0))
            hc = _corr(tower, F[1], c, G[0].g, G[0].v)
            c0 = _disc_or_none(tower, hc, filled, (t - 2, 2), order)
            if c0 is None:
                return None
            p["c0"] = c0
            return p
        return template(("b",) + bslots + ("c", "c0"), build, extract)

    if tag == "AxisX2d2":
        s22 = s[1][1]
        l = case.l
        if s22 == t:
            f1bar = _replay(tower, state, table, F[0],
                            _axis_steps(order, t), G)

            def build(p):
                return [f1bar, _corr(tower, F[1], p["b"], G[0].g, G[0].v)]
            return template(("b",), build)

        bslots = tuple(f"b{n}" for n in range(t - s22))

        def build(p):
            b = p["b"]
            if b == ZERO:
                fam = [_replay(tower, state, table, F[0],
                               _axis_steps(order, t), G), dict(F[1])]
                return fam
            h = poly.combine(tower, poly.shift_mul(F[1], (0, t - s22)),
                             tower.div(b, G[0].v), G[0].g, (0, 0))
            for n in range(t - s22):
                h = _corr(tower, h, p[f"b{n}"], F[1], b,
                          (0, t - s22 - n - 1))
            gpool = G + [bmsa.GEntry(F[1], l, b, (0, t - 1))]
            f1bar = _replay(tower, state, table, F[0],
                            _axis_steps(order, t), gpool)
            return [f1bar, h]

        def extract(filled):
            b = _disc_or_none(tower, F[1], filled, l, order)
            if b is None:
                return None
            p = {"b": b}
            if b == ZERO:
                for n in range(t - s22):
                    p[f"b{n}"] = ZERO
                return p
            h = poly.combine(tower, poly.shift_mul(F[1], (0, t - s22)),
                             tower.div(b, G[0].v), G[0].g, (0, 0))
            for n in range(t - s22):
                bn = _disc_or_none(tower, h, filled,
                                   (0, t + s22 + n), order)
                if bn is None:
                    return None
                p[f"b{n}"] = bn
                h = _corr(tower, h, bn, F[1], b, (0, t - s22 - n - 1))
            return p
        return template(("b",) + bslots, build, extract)

    if tag == "AxisX1d2":
        s11 = s[0][0]
        if s11 == t:
            def build(p):
                return [_corr(tower, F[0], p["b"], G[0].g, G[0].v), F[1]]
            return template(("b",), build)

        bslots = tuple(f"b{n}" for n in range(t - s11))

        def build(p):
            b = p["b"]
            if b == ZERO:
                return [dict(F[0]), dict(F[1])]
            h = poly.combine(tower, poly.shift_mul(F[0], (t - s11, 0)),
                             tower.div(b, G[0].v), G[0].g, (0, 0))
            for n in range(t - s11):
                h = _corr(tower, h, p[f"b{n}"], F[0], b,
                          (t - s11 - n - 1, 0))
            return [h, F[1]]

        def extract(filled):
            b = _disc_or_none(tower, F[0], filled, case.l, order)
            if b is None:
                return None
            p = {"b": b}
            if b == ZERO:
                for n in range(t - s11):
                    p[f"b{n}"] = ZERO
                return p
            h = poly.combine(tower, poly.shift_mul(F[0], (t - s11, 0)),
                             tower.div(b, G[0].v), G[0].g, (0, 0))
            for n in range(t - s11):
                bn = _disc_or_none(tower, h, filled,
                                   (t + s11 + n, 0), order)
                if bn is None:
                    return None
                p[f"b{n}"] = bn
                h = _corr(tower, h, bn, F[0], b, (t - s11 - n - 1, 0))
            return p
        return template(("b",) + bslots, build, extract)

    raise UnsupportedCase(f"no family template for {tag}")


def resolve_post_updates(tower, template: FamilyTemplate,
                         params: dict) -> CandidateBasis:
    """Instantiate the slots (continuations are baked into the build)."""
    members = template.instantiate(params)
    out = []
    for f in members:
        if f and not poly.is_monic(f, template.state.order):
            f = poly.make_monic(tower, f, template.state.order)
        out.append(f)
    return CandidateBasis(dict(params), tuple(out))


def _disc_or_none(tower, f, table, k, order):
    """Discrepancy value at k, zero by convention, None on unknown cells."""
    d = syndrome.discrepancy(tower, f, table, k, order)
    if d.kind == "unknown":
        return None
    return ZERO if d.kind == "convention" else d.value


def _candidate_assignments(tower, template, table):
    """Assignments worth the full consistency check.

    Single-slot templates are walked over all of L (the walk itself is
    part of the contract).  For larger templates every slot is a
    function of the one missing cell, so trial-filling that cell and
    reading the discrepancies along the template's own update chain
    enumerates the whole candidate line in |L| steps.
    """
    elems = [ZERO] + list(range(tower.n_units))
    if len(template.slots) == 1:
        return [{template.slots[0]: v} for v in elems]
    out, seen = [], set()
    for u in elems:
        filled = table.fill(template.case.l, u)
        params = template.extract(filled)
        if params is None:
            continue
        key = tuple(sorted(params.items()))
        if key not in seen:
            seen.add(key)
            out.append(params)
    return out


def enumerate_and_select(tower, template: FamilyTemplate,
                         table: syndrome.SyndromeTable, alpha, t: int,
                         exhaustive: bool = True, trace=None):
    """Walk assignments in the fixed order 0, a^0, a^1, ...; a candidate
    survives when its reconstructed error matches every known syndrome
    inside the iteration window.  Exactly one survivor is expected."""
    order = template.state.order
    window = [n for n in lattice.s_t_set(t, order, table.periods)
              if table.known(n)]
    # every known value is checked; the iteration window is walked first
    # so the first failing index is reported relative to it
    window += sorted(n for n in table.known_cells() if n not in set(window))
    consistent = []
    seen = set()
    for params in _candidate_assignments(tower, template, table):
        rec = {"params": {k: FieldTower.fmt(v) for k, v in params.items()}}
        try:
            cand = resolve_post_updates(tower, template, params)
        except (_CandidateInvalid, UnknownCellInPostUpdate) as e:
            rec["discarded"] = str(e)
            if trace is not None:
                trace.append(rec)
            continue
        key = tuple(tuple(sorted(f.items())) for f in cand.basis)
        if key in seen:
            continue
        seen.add(key)
        support = locator.defining_set(tower, cand.basis, alpha,
                                       table.periods)
        if not support or len(support) > t:
            rec["discarded"] = f"support size {len(support)}"
            if trace is not None:
                trace.append(rec)
            continue
        try:
            if tower.q == 2:
                est = {p: 0 for p in support}
            else:
                est = locator.error_values(tower, support, table, alpha)
        except (SingularSystem, NonBaseFieldSolution) as e:
            rec["discarded"] = str(e)
            if trace is not None:
                trace.append(rec)
            continue
        miss = locator.first_mismatch(tower, est, table, alpha, window)
        if miss is None:
            rec["result"] = "consistent"
            consistent.append((cand, est))
        else:
            rec["result"] = (f"first failing index ({miss[0][0]},{miss[0][1]})"
                             f" value {FieldTower.fmt(miss[1])}")
        if trace is not None:
            trace.append(rec)
        if consistent and not exhaustive:
            break
    if not consistent:
        raise NoConsistentCandidate(
            f"{template.case.tag}: no assignment matches the syndromes")
    if len(consistent) > 1:
        raise MultipleConsistentCandidates(
            f"{template.case.tag}: {len(consistent)} assignments match")
    return consistent[0]
