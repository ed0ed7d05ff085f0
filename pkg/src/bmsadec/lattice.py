"""Combinatorics of index pairs in Z x Z.

Points are plain (n1, n2) tuples.  The partial order is componentwise;
the two total orders in play are the lexicographic order with X1 > X2
and the graded order with X2 > X1 (degree first, then X2 exponent).
Footprints ("staircases") are downward-closed finite sets, and defining
points are the minimal points of their complement.
"""

from __future__ import annotations

from .errors import CapabilityOutOfRange, MalformedDefiningSequence


class MonomialOrder:
    """A total order on exponent pairs, with its iteration successor."""

    def __init__(self, name: str):
        if name not in ("lex", "graded"):
            raise ValueError(f"unknown order {name!r}")
        self.name = name

    def key(self, n):
        if self.name == "lex":
            return n
        return (n[0] + n[1], n[1])

    def lt(self, m, n) -> bool:
        return self.key(m) < self.key(n)

    def le(self, m, n) -> bool:
        return self.key(m) <= self.key(n)

    def max(self, points):
        return max(points, key=self.key)

    def min(self, points):
        return min(points, key=self.key)

    def successor(self, l, periods):
        l1, l2 = l
        if self.name == "graded":
            if l1 > 0:
                return (l1 - 1, l2 + 1)
            return (l2 + 1, 0)
        r2 = periods[1]
        if l2 < r2 - 1:
            return (l1, l2 + 1)
        return (l1 + 1, 0)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


LEX = MonomialOrder("lex")
GRADED = MonomialOrder("graded")

ORDERS = {"lex": LEX, "graded": GRADED}


def cmp_T(m, n, order: MonomialOrder) -> int:
    """-1, 0 or 1 as m <, =, > n in the given order."""
    km, kn = order.key(m), order.key(n)
    return (km > kn) - (km < kn)


def preceq(m, n) -> bool:
    """Componentwise partial order m <= n."""
    return m[0] <= n[0] and m[1] <= n[1]


def sub(m, n):
    return (m[0] - n[0], m[1] - n[1])


def add(m, n):
    return (m[0] + n[0], m[1] + n[1])


def nonneg(m) -> bool:
    return m[0] >= 0 and m[1] >= 0


def s_t_set(t: int, order: MonomialOrder, periods) -> list:
    """The iteration index set: two axis segments of length 2t plus the
    triangle {i, j >= 1, i + j <= t}, sorted by the active order."""
    r1, r2 = periods
    if not (1 <= t <= min(r1 // 2, r2 // 2)):
        raise CapabilityOutOfRange(f"t={t} outside 1..min(r_i/2)")
    pts = set()
    for j in range(2 * t):
        pts.add((0, j))
    for i in range(2 * t):
        pts.add((i, 0))
    for i in range(1, t):
        for j in range(1, t - i + 1):
            pts.add((i, j))
    return sorted(pts, key=order.key)


def delta_rect(s) -> frozenset:
    """The full rectangle {n : n <= s componentwise}."""
    if s[0] < 0 or s[1] < 0:
        return frozenset()
    return frozenset((i, j) for i in range(s[0] + 1) for j in range(s[1] + 1))


def check_defining_points(s_list) -> None:
    """Validate the staircase shape: first coords strictly decreasing to 0,
    second coords strictly increasing from 0."""
    if not s_list:
        raise MalformedDefiningSequence("empty defining sequence")
    if s_list[0][1] != 0 or s_list[-1][0] != 0:
        raise MalformedDefiningSequence(f"bad endpoints in {s_list}")
    for a, b in zip(s_list, s_list[1:]):
        if not (a[0] > b[0] and a[1] < b[1]):
            raise MalformedDefiningSequence(f"not monotone: {s_list}")


def corners(s_list) -> list:
    """The d-1 outer corner points (s^(i)_1 - 1, s^(i+1)_2 - 1)."""
    check_defining_points(s_list)
    return [(s_list[i][0] - 1, s_list[i + 1][1] - 1)
            for i in range(len(s_list) - 1)]


def footprint_from_defining_points(s_list) -> frozenset:
    """Union of the corner rectangles; downward closed by construction."""
    check_defining_points(s_list)
    fp = set()
    for c in corners(s_list):
        fp |= delta_rect(c)
    return frozenset(fp)


def defining_points_of_footprint(fp) -> list:
    """Minimal points outside a downward-closed set, ordered by
    decreasing first coordinate."""
    if not fp:
        return [(0, 0)]
    width = max(n[0] for n in fp) + 1
    heights = [0] * (width + 1)
    for (i, j) in fp:
        if j + 1 > heights[i]:
            heights[i] = j + 1
    pts = []
    prev = None
    for i in range(width + 1):
        h = heights[i]
        if prev is None or h < prev:
            pts.append((i, h))
            prev = h
        elif h > prev:
            raise MalformedDefiningSequence("set is not downward closed")
    return sorted(pts, key=lambda s: -s[0])


def is_downward_closed(fp) -> bool:
    s = set(fp)
    for (i, j) in s:
        if i > 0 and (i - 1, j) not in s:
            return False
        if j > 0 and (i, j - 1) not in s:
            return False
    return True
