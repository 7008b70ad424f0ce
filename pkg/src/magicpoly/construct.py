"""Explicit labeling constructors for the families with known recipes.

``p2`` and ``d2`` are closed formulas.  ``p4`` fills the outer ring by a
bounded backtracking search and forces the inner ring through the
complementary pairing, so it can fail (returns None) when the node budget
runs out.
"""

from __future__ import annotations

from .errors import OddSideCount, SideCountTooSmall
from .verify import Labeling

#: Default node budget for the order-4 outer-ring search.
DEFAULT_BUDGET = 10**8


def p2(n: int) -> Labeling:
    """Magic labeling of the single-ring structure P(n, 2); n even, n >= 4.

    Vertices are placed first; each edge midpoint is then forced by the
    edge sum, and the two vertices the closed formula leaves open are
    forced by their central segments.  No labeling exists for odd n, hence
    the error.
    """
    if n % 2 == 1:
        raise OddSideCount(f"no single-ring magic labeling exists for odd n={n}")
    if n < 4:
        raise SideCountTooSmall(f"need n >= 4, got n={n}")

    center = n + 1
    if n == 4:
        vertices = [2, 4, 8, 6]
        midpoints = [9, 3, 1, 7]
        center = 5
    else:
        half = n // 2
        x = [0] * (n + 1)
        for i in range(1, half - 1):
            x[i] = i + 1 if i % 2 == 1 else n + i + 2
            x[i + half] = 2 * (n + 1) - i - 1 if i % 2 == 1 else n - i
        x[half - 1] = n + 3
        x[half] = 1
        # Antipodal pairs sum to twice the center value.
        x[n - 1] = 2 * (n + 1) - x[half - 1]
        x[n] = 2 * (n + 1) - x[half]
        vertices = x[1:]
        magic_sum = 3 * (n + 1)
        midpoints = [magic_sum - x[i] - (x[i + 1] if i < n else x[1]) for i in range(1, n + 1)]

    values = {0: center}
    for i in range(n):
        values[2 * i + 1] = vertices[i]
        values[2 * i + 2] = midpoints[i]
    return Labeling(values)


def d2(n: int) -> Labeling:
    """Magic labeling of the two-ring root-sharing structure D(n, 2); n >= 3.

    Outer and inner rings take complementary value patterns: odd values
    alternate on outer vertices, even values fill the midpoints, and each
    inner point pairs with its outer counterpart to sum 4(n-1).
    """
    if n < 3:
        raise SideCountTooSmall(f"need n >= 3, got n={n}")

    root = 2 * (n - 1)
    values = {0: root}
    path_len = 2 * n - 3
    for j in range(1, n):
        outer = j if j % 2 == 1 else 2 * n + j - 3
        inner = 4 * (n - 1) - j if j % 2 == 1 else 2 * n - j - 1
        values[2 * j - 1] = outer
        values[path_len + 2 * j - 1] = inner
    for j in range(1, n - 1):
        values[2 * j] = 4 * (n - 1) - 2 * j
        values[path_len + 2 * j] = 2 * j
    return Labeling(values)


class _BudgetHit(Exception):
    """Internal signal: the outer-ring search used up its node budget."""


def p4(n: int, budget: int = DEFAULT_BUDGET) -> Labeling | None:
    """Magic labeling of the two-ring structure P(n, 4), or None.

    The center takes the forced value 4n+1 and each inner-ring point takes
    the complement of its outer partner (the pair sums to 2(4n+1)), which
    settles every central segment and every inner edge.  What remains is a
    search: fill outer positions 1..4n with distinct values, never using a
    value together with its complement, so that all n outer edges sum to
    5(4n+1).  Positions are filled in perimeter order with ascending value
    choice; every fifth position is forced by its edge.  Returns None once
    ``budget`` assignments have been applied without a solution; that is a
    search failure, not a non-existence proof.
    """
    if n < 3:
        raise SideCountTooSmall(f"need n >= 3, got n={n}")
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")

    center = 4 * n + 1
    target = 5 * center
    n_points = 8 * n + 1
    perimeter = 4 * n
    x = [0] * (perimeter + 1)
    chosen = [False] * (n_points + 1)
    nodes = 0

    def usable(v: int) -> bool:
        return 1 <= v <= n_points and v != center and not chosen[v] and not chosen[2 * center - v]

    def apply(p: int, v: int) -> None:
        nonlocal nodes
        if nodes >= budget:
            raise _BudgetHit
        nodes += 1
        x[p] = v
        chosen[v] = True

    def retract(p: int, v: int) -> None:
        x[p] = 0
        chosen[v] = False

    def block_feasible(p: int) -> bool:
        # Partial sum of the current edge must stay reachable with one value
        # per open slot.
        first = 4 * ((p - 1) // 4) + 1
        partial = sum(x[first : p + 1])
        open_slots = first + 4 - p
        return open_slots <= target - partial <= open_slots * n_points

    def extend(p: int) -> bool:
        if p > perimeter:
            return x[perimeter - 3] + x[perimeter - 2] + x[perimeter - 1] + x[perimeter] + x[1] == target
        if p % 4 == 1 and p > 1:
            w = target - x[p - 4] - x[p - 3] - x[p - 2] - x[p - 1]
            if not usable(w):
                return False
            apply(p, w)
            if extend(p + 1):
                return True
            retract(p, w)
            return False
        for v in range(1, n_points + 1):
            if not usable(v):
                continue
            apply(p, v)
            if block_feasible(p) and extend(p + 1):
                return True
            retract(p, v)
        return False

    try:
        found = extend(1)
    except _BudgetHit:
        return None
    if not found:
        return None

    values = {0: center}
    for q in range(1, perimeter + 1):
        values[q] = x[q]
        values[perimeter + q] = 2 * center - x[q]
    return Labeling(values)
