"""Bivariate polynomials over the extension field.

A polynomial is a dict mapping exponent pairs (i, j) to nonzero
coefficients in log form; the zero polynomial is the empty dict.
"""

from __future__ import annotations

from . import lattice
from .errors import MalformedDefiningSequence, NonReducible, ZeroPolynomial
from .gf import ZERO, FieldTower
from .lattice import MonomialOrder


def lp(f: dict, order: MonomialOrder):
    """Leading power product (multidegree) of a nonzero polynomial."""
    if not f:
        raise ZeroPolynomial("LP of the zero polynomial")
    return order.max(f.keys())


def leading_coeff(f: dict, order: MonomialOrder) -> int:
    return f[lp(f, order)]


def is_monic(f: dict, order: MonomialOrder) -> bool:
    return bool(f) and f[lp(f, order)] == 0


def add(tower: FieldTower, f: dict, g: dict) -> dict:
    out = dict(f)
    for m, c in g.items():
        acc = tower.add(out.get(m, ZERO), c)
        if acc == ZERO:
            out.pop(m, None)
        else:
            out[m] = acc
    return out


def scale(tower: FieldTower, f: dict, c: int) -> dict:
    if c == ZERO:
        return {}
    return {m: tower.mul(cf, c) for m, cf in f.items()}


def shift_mul(f: dict, e) -> dict:
    """Multiply by the monomial X^e: translate every support point by e."""
    if e == (0, 0):
        return dict(f)
    return {lattice.add(m, e): c for m, c in f.items()}


def combine(tower: FieldTower, f: dict, c: int, g: dict, e=(0, 0)) -> dict:
    """f - c * X^e * g, the Berlekamp update shape."""
    return add(tower, f, scale(tower, shift_mul(g, e), tower.neg(c)))


def make_monic(tower: FieldTower, f: dict, order: MonomialOrder) -> dict:
    c = leading_coeff(f, order)
    if c == 0:
        return f
    return scale(tower, f, tower.inv(c))


def evaluate(tower: FieldTower, f: dict, alpha, n) -> int:
    """Evaluate f at the point alpha^n = (a^(e1*n1), a^(e2*n2))."""
    x = (alpha.e1 * n[0]) % tower.n_units
    y = (alpha.e2 * n[1]) % tower.n_units
    acc = ZERO
    for (m1, m2), c in f.items():
        acc = tower.add(acc, (c + m1 * x + m2 * y) % tower.n_units)
    return acc


def normal_form(tower: FieldTower, f: dict, family, order: MonomialOrder,
                strict: bool = False) -> dict:
    """Reduce every non-leading support point that is divisible by a
    family leading term.  The leading term of f is never touched.

    With strict=True the family must account for every support point
    outside its footprint; a leftover raises NonReducible.
    """
    if not f:
        return {}
    lead = lp(f, order)
    lps = [(lp(g, order), g) for g in family if g]
    out = dict(f)
    while True:
        offenders = [m for m in out
                     if m != lead and any(lattice.preceq(s, m) for s, _ in lps)]
        if not offenders:
            break
        m = order.max(offenders)
        s, g = max(((s, g) for s, g in lps if lattice.preceq(s, m)),
                   key=lambda p: order.key(p[0]))
        out = combine(tower, out, out[m], g, lattice.sub(m, s))
    if strict:
        try:
            fp = lattice.footprint_from_defining_points(
                sorted((s for s, _ in lps), key=lambda s: -s[0]))
        except MalformedDefiningSequence:
            raise NonReducible("family leading points are not a staircase")
        bad = [m for m in out if m != lead and m not in fp]
        if bad:
            raise NonReducible(f"support points {bad} have no reducer")
    return out


def render(f: dict, order: MonomialOrder) -> str:
    """Stable text form: terms in decreasing order, 'a^k X1^i X2^j'."""
    if not f:
        return "0"
    parts = []
    for m in sorted(f.keys(), key=order.key, reverse=True):
        c = f[m]
        factors = []
        if c != 0:
            factors.append("a" if c == 1 else f"a^{c}")
        for name, e in zip(("X1", "X2"), m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            factors.append("1")
        parts.append(" ".join(factors))
    return " + ".join(parts)


def from_terms(terms) -> dict:
    """Build from ((i, j), log_coeff) pairs, dropping zeros."""
    out = {}
    for m, c in terms:
        if c != ZERO:
            out[tuple(m)] = c
    return out
