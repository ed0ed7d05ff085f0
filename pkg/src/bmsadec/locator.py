"""From a generator basis to error locations and values.

The common roots of the basis over the period grid are exactly the
error support, read off as exponent pairs of alpha.  Coefficients then
come from an exact linear solve over the known syndromes, with a final
check that they lie in the base field.
"""

from __future__ import annotations

from . import poly
from .errors import NonBaseFieldSolution, SingularSystem
from .gf import ZERO, FieldTower


def defining_set(tower: FieldTower, basis, alpha, periods) -> frozenset:
    """Grid points n with g(alpha^n) = 0 for every g in the basis."""
    r1, r2 = periods
    pts = [(n1, n2) for n1 in range(r1) for n2 in range(r2)]
    for g in sorted(basis, key=len):
        if not g:
            continue
        pts = [n for n in pts
               if poly.evaluate(tower, g, alpha, n) == ZERO]
        if not pts:
            break
    return frozenset(pts)


def _gauss_solve(tower, rows, rhs):
    """Unique solution of an overdetermined consistent system over L.

    Raises SingularSystem on rank deficiency or inconsistency.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rix = 0
    piv_cols = []
    for col in range(ncols):
        piv = next((i for i in range(rix, len(aug))
                    if aug[i][col] != ZERO), None)
        if piv is None:
            raise SingularSystem(f"rank deficient at column {col}")
        aug[rix], aug[piv] = aug[piv], aug[rix]
        inv = tower.inv(aug[rix][col])
        aug[rix] = [tower.mul(x, inv) for x in aug[rix]]
        for i in range(len(aug)):
            if i != rix and aug[i][col] != ZERO:
                c = aug[i][col]
                aug[i] = [tower.sub(x, tower.mul(c, y))
                          for x, y in zip(aug[i], aug[rix])]
        piv_cols.append(col)
        rix += 1
    for i in range(rix, len(aug)):
        if aug[i][-1] != ZERO:
            raise SingularSystem("inconsistent system")
    return [aug[r][-1] for r in range(len(piv_cols))]


def error_values(tower: FieldTower, support, table, alpha) -> dict:
    """Solve sum_p x_p * (alpha^(tau+n))^p = u_n over all known n."""
    supp = sorted(support)
    if not supp:
        return {}
    tau = table.tau
    n_units = tower.n_units
    rows, rhs = [], []
    for n, u in sorted(table.cells.items()):
        row = [(alpha.e1 * p[0] * (tau[0] + n[0])
                + alpha.e2 * p[1] * (tau[1] + n[1])) % n_units
               for p in supp]
        rows.append(row)
        rhs.append(u)
    sol = _gauss_solve(tower, rows, rhs)
    out = {}
    for p, x in zip(supp, sol):
        if x == ZERO:
            continue
        if not tower.in_subfield(x):
            raise NonBaseFieldSolution(
                f"coefficient {FieldTower.fmt(x)} at {p} not in GF(q)")
        out[p] = x
    return out


def verify(tower: FieldTower, estimate: dict, table, alpha,
           cells=None) -> bool:
    """True iff the estimate reproduces every known syndrome value."""
    return first_mismatch(tower, estimate, table, alpha, cells) is None


def first_mismatch(tower: FieldTower, estimate: dict, table, alpha,
                   cells=None):
    """First cell (in the given sequence) whose value disagrees, with
    the value produced by the estimate; None when all agree."""
    tau = table.tau
    if cells is None:
        cells = sorted(table.cells.keys())
    for n in cells:
        u = table.get(n)
        if u is None:
            continue
        m = ((tau[0] + n[0]) % table.periods[0],
             (tau[1] + n[1]) % table.periods[1])
        got = poly.evaluate(tower, estimate, alpha, m)
        if got != u:
            return (n, got)
    return None


def estimate_from_basis(tower: FieldTower, basis, table, alpha,
                        t: int) -> dict | None:
    """Support from common roots, values from the linear solve, checked
    against every known cell; None when anything fails."""
    support = defining_set(tower, basis, alpha, table.periods)
    if not support or len(support) > t:
        return None
    try:
        if tower.q == 2:
            est = {p: 0 for p in support}
        else:
            est = error_values(tower, support, table, alpha)
    except (SingularSystem, NonBaseFieldSolution):
        return None
    if len(est) != len(support):
        return None
    if not verify(tower, est, table, alpha):
        return None
    return est
