"""Brute-force ground truth for testing and the --oracle CLI flag.

Footprints are recomputed from scratch by exact linear algebra: a grid
point belongs to the footprint of a (fully known) subarray exactly when
no monic generator with that leading point exists, which is a rank
question about the window equations.  Decoding is redone by exhaustive
enumeration of error patterns.  Both are deliberately slow and
independent of the iteration they check.
"""

from __future__ import annotations

from itertools import combinations

from . import lattice, poly, syndrome
from .errors import NoMatch, NonUnique
from .gf import ZERO, FieldTower
from .lattice import MonomialOrder

try:
    import numpy as np
except ImportError:  # pragma: no cover
    np = None


class _GF2kMat:
    """Vectorized row reduction over GF(2^k), elements as table reps."""

    def __init__(self, tower: FieldTower):
        if tower.p != 2:
            raise NotImplementedError("vectorized path needs p = 2")
        self.n = tower.n_units
        self.exp = np.array(tower.exp + tower.exp, dtype=np.int64)
        log = np.zeros(self.n + 1, dtype=np.int64)
        for rep, k in tower.log.items():
            log[rep] = k
        self.log = log

    def mul_row(self, c, row):
        out = np.zeros_like(row)
        mask = row != 0
        out[mask] = self.exp[self.log[row[mask]] + self.log[c]]
        return out

    def consistent(self, rows, rhs):
        """rank(A) == rank(A|b) by elimination over the reps."""
        if not rows:
            return True
        A = np.array([r + [b] for r, b in zip(rows, rhs)], dtype=np.int64)
        nrows, ncols = A.shape
        r = 0
        for c in range(ncols - 1):
            piv = None
            for i in range(r, nrows):
                if A[i, c]:
                    piv = i
                    break
            if piv is None:
                continue
            A[[r, piv]] = A[[piv, r]]
            inv_log = (self.n - self.log[A[r, c]]) % self.n
            mask = A[:, c] != 0
            mask[r] = False
            if mask.any():
                coef = self.exp[self.log[A[mask, c]] + inv_log]
                prod = np.zeros((int(mask.sum()), ncols), dtype=np.int64)
                rowm = A[r] != 0
                if rowm.any():
                    prod[:, rowm] = self.exp[
                        (self.log[coef][:, None]
                         + self.log[A[r][rowm]][None, :]) % self.n]
                A[mask] ^= prod
            r += 1
        return not np.any((A[:, :-1] == 0).all(axis=1) & (A[:, -1] != 0))


def _feasible_lp(tower, table, target, upto_incl, order, mat):
    """Does a monic generator with the given leading point exist for the
    subarray of cells up to and including `upto_incl`?"""
    r1, r2 = table.periods
    support = [m for m in ((i, j) for i in range(r1) for j in range(r2))
               if order.lt(m, target)]
    rows, rhs = [], []
    for k1 in range(target[0], r1):
        for k2 in range(target[1], r2):
            k = (k1, k2)
            if order.lt(upto_incl, k):
                continue
            shiftv = lattice.sub(k, target)
            rows.append([tower.exp[table.get(lattice.add(m, shiftv))]
                         if table.get(lattice.add(m, shiftv)) != ZERO else 0
                         for m in support])
            v = table.get(k)
            rhs.append(tower.exp[v] if v != ZERO else 0)
    return mat.consistent(rows, rhs)


def brute_footprint(tower, table: syndrome.SyndromeTable, upto_incl,
                    order: MonomialOrder, t: int) -> frozenset:
    """Footprint of the subarray of all cells <=_T the given index, on a
    fully known table, found by per-point feasibility solves."""
    mat = _GF2kMat(tower)
    out = set()
    for i in range(t):
        for j in range(t):
            if (i + 1) * (j + 1) > t:
                continue
            if not _feasible_lp(tower, table, (i, j), upto_incl, order, mat):
                out.add((i, j))
    return frozenset(out)


def brute_decode(code, received: dict) -> dict:
    """Unique error of weight <= t matching every known syndrome.

    Exponential search; binary alphabets get a packed meet-in-the-middle
    shortcut.
    """
    tower = code.tower
    tau, _ = _tau_of(code)
    table = syndrome.build_table(tower, received, code.defining_set, tau,
                                 code.alpha, code.periods)
    known = sorted(table.cells.items())
    r1, r2 = code.periods
    positions = [(i, j) for i in range(r1) for j in range(r2)]

    if tower.q == 2:
        return _brute_decode_binary(tower, code, known, positions, table)

    matches = []
    felems = [(k * tower.subfield_step) % tower.n_units
              for k in range(tower.q - 1)]
    from itertools import product
    for w in range(code.t + 1):
        for supp in combinations(positions, w):
            for coeffs in product(felems, repeat=w):
                est = dict(zip(supp, coeffs))
                if all(poly.evaluate(tower, est, code.alpha,
                                     _shift(n, tau, code.periods)) == u
                       for n, u in known):
                    matches.append(est)
    return _unique(matches)


def _shift(n, tau, periods):
    return ((tau[0] + n[0]) % periods[0], (tau[1] + n[1]) % periods[1])


def _tau_of(code):
    from .codes import choose_tau
    return choose_tau(code)


def _brute_decode_binary(tower, code, known, positions, table):
    tau = table.tau
    nbits = 4 * len(known)

    def pack(values):
        acc = 0
        for v in values:
            acc = (acc << 4) | (tower.exp[v] if v != ZERO else 0)
        return acc

    target = pack([u for _, u in known])
    sig = {}
    for p in positions:
        vals = [(code.alpha.e1 * p[0] * (tau[0] + n[0])
                 + code.alpha.e2 * p[1] * (tau[1] + n[1]))
                % tower.n_units for n, _ in known]
        sig[p] = pack(vals)
    by_sig = {}
    for p, s in sig.items():
        by_sig.setdefault(s, []).append(p)

    matches = []
    if target == 0:
        matches.append({})
    for p, s in sig.items():
        if s == target:
            matches.append({p: 0})
    if code.t >= 2:
        for i, p in enumerate(positions):
            want = target ^ sig[p]
            for q in by_sig.get(want, []):
                if q > p:
                    matches.append({p: 0, q: 0})
    if code.t >= 3:
        for i, p in enumerate(positions):
            for q in positions[i + 1:]:
                want = target ^ sig[p] ^ sig[q]
                for z in by_sig.get(want, []):
                    if z > q:
                        matches.append({p: 0, q: 0, z: 0})
    if code.t >= 4:
        raise NotImplementedError("binary shortcut covers t <= 3")
    return _unique(matches)


def _unique(matches):
    dedup = {tuple(sorted(m.items())): m for m in matches}
    if not dedup:
        raise NoMatch("no error pattern of weight <= t fits")
    if len(dedup) > 1:
        raise NonUnique(f"{len(dedup)} patterns fit the syndromes")
    return next(iter(dedup.values()))
