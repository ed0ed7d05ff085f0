"""Arithmetic in GF(q) and a fixed extension L = GF(q^s).

Elements of L are kept in log form relative to a primitive element `a`:
the integer k stands for a^k (0 <= k <= q^s - 2) and ZERO (= -1) stands
for the zero element.  A one-time antilog table maps logs to polynomial
representatives (integers whose base-p digits are the coefficients), and
a log table maps back, so multiplication is exponent arithmetic and
addition is a table round trip (a plain XOR of representatives when
p = 2).

The base field F = GF(q) with q = p^m sits inside L as the fixed field
of the Frobenius x -> x^q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    GcdViolation,
    NonPrimitiveModulus,
    PeriodNotDividingGroupOrder,
)

ZERO = -1

# Log-form representation cap: antilog/log tables of size q^s.
MAX_FIELD_SIZE = 1 << 20


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of the field tower L = GF(p^(m*s)) over F = GF(p^m).

    `modulus` lists the coefficients of a monic primitive polynomial of
    degree m*s over GF(p), lowest degree first, including the leading 1.
    `r1`, `r2` are the array periods the tower must support.
    """

    p: int
    m: int
    s: int
    modulus: tuple
    r1: int
    r2: int

    @property
    def q(self) -> int:
        return self.p ** self.m


@dataclass(frozen=True)
class RootPair:
    """A point alpha = (a^e1, a^e2) whose components have orders (r1, r2)."""

    e1: int
    e2: int
    orders: tuple


class FieldTower:
    """Arithmetic context for L = GF(q^s) with its base field F = GF(q)."""

    def __init__(self, spec: FieldSpec):
        p, m, s = spec.p, spec.m, spec.s
        if _gcd(spec.q, spec.r1 * spec.r2) != 1:
            raise GcdViolation(
                f"gcd({spec.q}, {spec.r1}*{spec.r2}) != 1")
        degree = m * s
        if len(spec.modulus) != degree + 1 or spec.modulus[-1] % p != 1:
            raise NonPrimitiveModulus(
                f"modulus must be monic of degree {degree}")
        size = p ** degree
        if size > MAX_FIELD_SIZE:
            raise NonPrimitiveModulus(f"field size {size} exceeds table cap")
        n_units = size - 1
        for r in (spec.r1, spec.r2):
            if r <= 0 or n_units % r != 0:
                raise PeriodNotDividingGroupOrder(
                    f"period {r} does not divide {n_units}")

        self.spec = spec
        self.p = p
        self.q = spec.q
        self.s = s
        self.size = size
        self.n_units = n_units
        self._build_tables()
        # F* is the subgroup of index (q^s-1)/(q-1).
        self.subfield_step = n_units // (self.q - 1)

    # -- table construction ---------------------------------------------

    def _mul_by_x(self, rep: int) -> int:
        p = self.p
        degree = len(self.spec.modulus) - 1
        digits = [0] * (degree + 1)
        r = rep
        i = 1
        while r:
            digits[i] = r % p
            r //= p
            i += 1
        lead = digits[degree]
        if lead:
            for j in range(degree):
                digits[j] = (digits[j] - lead * self.spec.modulus[j]) % p
        out = 0
        for j in range(degree - 1, -1, -1):
            out = out * p + digits[j]
        return out

    def _build_tables(self) -> None:
        exp = [0] * self.n_units
        log = {}
        x = 1
        for k in range(self.n_units):
            if x in log:
                raise NonPrimitiveModulus(
                    "modulus is not primitive: root order "
                    f"{k} < {self.n_units}")
            exp[k] = x
            log[x] = k
            x = self._mul_by_x(x)
        if x != 1:
            raise NonPrimitiveModulus("modulus is reducible over GF(p)")
        self.exp = exp
        self.log = log

    # -- element arithmetic (log form) ------------------------------------

    def add(self, x: int, y: int) -> int:
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if self.p == 2:
            rep = self.exp[x] ^ self.exp[y]
        else:
            rep = self._rep_add(self.exp[x], self.exp[y])
        return ZERO if rep == 0 else self.log[rep]

    def _rep_add(self, ra: int, rb: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while ra or rb:
            out += ((ra + rb) % p) * mult
            ra //= p
            rb //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        if x == ZERO or self.p == 2:
            return x
        # -1 = a^(N/2) in odd characteristic
        return (x + self.n_units // 2) % self.n_units

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == ZERO or y == ZERO:
            return ZERO
        return (x + y) % self.n_units

    def inv(self, x: int) -> int:
        if x == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return (-x) % self.n_units

    def div(self, x: int, y: int) -> int:
        if y == ZERO:
            raise ZeroDivisionError("division by zero")
        if x == ZERO:
            return ZERO
        return (x - y) % self.n_units

    def pow(self, x: int, n: int) -> int:
        if x == ZERO:
            if n == 0:
                return 0
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO
        return (x * n) % self.n_units

    def frobenius(self, x: int) -> int:
        """x -> x^q, the generator of Gal(L/F)."""
        return self.pow(x, self.q)

    def in_subfield(self, x: int) -> bool:
        """True iff x lies in F = GF(q), the fixed field of Frobenius."""
        return x == ZERO or x % self.subfield_step == 0

    def elements(self):
        """All of L in the fixed enumeration 0, a^0, a^1, ..."""
        yield ZERO
        yield from range(self.n_units)

    # -- formatting --------------------------------------------------------

    @staticmethod
    def fmt(x: int) -> str:
        if x == ZERO:
            return "0"
        if x == 0:
            return "1"
        if x == 1:
            return "a"
        return f"a^{x}"

    @staticmethod
    def parse(text: str) -> int:
        t = text.strip()
        if t == "0":
            return ZERO
        if t == "1":
            return 0
        if t == "a":
            return 1
        if t.startswith("a^"):
            return int(t[2:])
        raise ValueError(f"bad field element {text!r}")


def build_field(spec: FieldSpec) -> FieldTower:
    """Build the arithmetic context, validating all spec invariants."""
    return FieldTower(spec)


def primitive_pair(tower: FieldTower, e1: int | None = None,
                   e2: int | None = None) -> RootPair:
    """Return alpha = (a^e1, a^e2) with component orders exactly (r1, r2).

    Defaults to e_i = (q^s - 1) / r_i.
    """
    r1, r2 = tower.spec.r1, tower.spec.r2
    n = tower.n_units
    if e1 is None:
        e1 = n // r1
    if e2 is None:
        e2 = n // r2
    for e, r in ((e1, r1), (e2, r2)):
        if element_order(tower, e % n) != r:
            raise PeriodNotDividingGroupOrder(
                f"a^{e} does not have order {r}")
    return RootPair(e1 % n, e2 % n, (r1, r2))


def element_order(tower: FieldTower, x: int) -> int:
    """Multiplicative order of a nonzero element, by exponent arithmetic."""
    if x == ZERO:
        raise ZeroDivisionError("zero has no multiplicative order")
    return tower.n_units // _gcd(x, tower.n_units)


# Default tower used by the worked examples: GF(16) over GF(2) with
# modulus x^4 + x + 1 and periods 15 x 15.
GF16_SPEC = FieldSpec(p=2, m=1, s=4, modulus=(1, 1, 0, 0, 1), r1=15, r2=15)
