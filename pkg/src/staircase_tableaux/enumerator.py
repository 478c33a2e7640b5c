"""Column-growth enumeration of staircase tableaux.

A size-n tableau is built from the size-0 root by prepending a full-height
column n times.  When the current tableau has r rows indexed by alpha/gamma
(AG rows), the new column admits exactly 4 * 3**r legal fills:

* bottom box alpha or gamma, all upper boxes empty (raises r by one);
* bottom box beta or delta, and each AG row's box in the new column either
  empty or beta/delta, except that at most one box may hold alpha/gamma and
  that box must be the topmost occupied one in the column.

Boxes of the new column at non-AG rows stay empty (anything there would sit
left of that row's beta/delta).  Upper boxes are addressed by slot index
1..r counting AG rows from the bottom.  Every tableau arises from exactly
one fill sequence, which is what makes the DFS below an exact enumeration
and gives the sampler its uniformity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

from .core import (
    Cell,
    GreekSymbol,
    InvalidTableauError,
    Tableau,
    ag_row_indices,
    check_valid,
)

_AG = (GreekSymbol.ALPHA, GreekSymbol.GAMMA)
_BD = (GreekSymbol.BETA, GreekSymbol.DELTA)


@dataclass(frozen=True)
class ColumnFill:
    """One legal filling of a prepended column.

    `bottom` is the symbol of the new diagonal box.  `upper` lists
    (slot, symbol) pairs for occupied boxes at the old AG rows, slot 1 being
    the lowest AG row; it is sorted by slot.
    """

    bottom: GreekSymbol
    upper: tuple[tuple[int, GreekSymbol], ...] = ()

    def __post_init__(self) -> None:
        slots = [k for k, _ in self.upper]
        if slots != sorted(set(slots)) or (slots and slots[0] < 1):
            raise ValueError(f"bad upper slots {slots}")
        if self.bottom.is_ag and self.upper:
            raise ValueError("alpha/gamma bottom requires an empty column above")
        ag_slots = [k for k, s in self.upper if s.is_ag]
        if len(ag_slots) > 1:
            raise ValueError("at most one alpha/gamma upper entry allowed")
        if ag_slots and ag_slots[0] != max(slots):
            raise ValueError("alpha/gamma upper entry must be the topmost occupied slot")

    @property
    def bd_upper_count(self) -> int:
        return sum(1 for _, s in self.upper if s.is_bd)

    @property
    def has_ag_upper(self) -> bool:
        return any(s.is_ag for _, s in self.upper)

    @property
    def r_change(self) -> int:
        """Change in the AG-row count when this fill is applied."""
        if self.bottom.is_ag:
            return 1
        return -self.bd_upper_count


@lru_cache(maxsize=None)
def legal_fills(r: int) -> tuple[ColumnFill, ...]:
    """All 4 * 3**r fills available above a tableau with r AG rows.

    Deterministic order: bottom symbol (A, B, G, D), then occupied-slot subset
    by ascending bitmask, then symbol assignments.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    fills: list[ColumnFill] = []
    for bottom in GreekSymbol:
        if bottom.is_ag:
            fills.append(ColumnFill(bottom))
            continue
        for mask in range(1 << r):
            slots = [k + 1 for k in range(r) if mask >> k & 1]
            for syms in product(_BD, repeat=len(slots)):
                fills.append(ColumnFill(bottom, tuple(zip(slots, syms))))
            if slots:
                top = slots[-1]
                for ag in _AG:
                    for syms in product(_BD, repeat=len(slots) - 1):
                        upper = tuple(zip(slots[:-1], syms)) + ((top, ag),)
                        fills.append(ColumnFill(bottom, upper))
    assert len(fills) == 4 * 3**r
    return tuple(fills)


def extend(t: Tableau, fill: ColumnFill) -> Tableau:
    """Prepend a column filled per `fill`; returns the size n+1 tableau."""
    ag_rows = ag_row_indices(t)
    r = len(ag_rows)
    if any(k > r for k, _ in fill.upper):
        raise ValueError(f"fill references slot beyond the {r} AG rows")
    n = t.n + 1
    cells: dict[Cell, GreekSymbol] = {
        (i, j + 1): s for (i, j), s in t.cells.items()
    }
    cells[(n, 1)] = fill.bottom
    for k, s in fill.upper:
        cells[(ag_rows[r - k], 1)] = s
    return Tableau(n, cells)


def split_first_column(t: Tableau) -> tuple[Tableau, ColumnFill]:
    """Inverse of `extend`: strip column 1 of a valid tableau of size >= 1.

    The unique parent/fill decomposition underlies the sampler's probability
    audit; an undecomposable tableau (invalid input) raises
    InvalidTableauError.
    """
    check_valid(t)
    if t.n < 1:
        raise InvalidTableauError("size-0 tableau has no first column")
    bottom = t.cells[(t.n, 1)]
    parent = Tableau(
        t.n - 1,
        {(i, j - 1): s for (i, j), s in t.cells.items() if j > 1},
    )
    ag_rows = ag_row_indices(parent)
    r = len(ag_rows)
    slot_of = {row: r - pos for pos, row in enumerate(ag_rows)}
    upper = []
    for (i, j), s in t.cells.items():
        if j == 1 and i < t.n:
            if i not in slot_of:
                raise InvalidTableauError(
                    f"column-1 entry at row {i} does not sit on a parent AG row"
                )
            upper.append((slot_of[i], s))
    return parent, ColumnFill(bottom, tuple(sorted(upper)))


def enumerate_all(n: int, visitor: Callable[[Tableau], None] | None = None) -> int:
    """Depth-first walk of the growth tree; every size-n tableau exactly once.

    Returns the leaf count.  With `visitor=None` the tree is still walked leaf
    by leaf but no Tableau objects are materialized, which keeps the n=6 walk
    (2,949,120 tableaux) to a few seconds.  Single-threaded; the first-column
    fills partition the tree if a caller wants to shard the walk.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if visitor is None:
        return _count_leaves(n)

    count = 0
    cells: list[tuple[int, int, GreekSymbol]] = []

    def rec(m: int, ag_rows: list[int]) -> None:
        nonlocal count
        if m == n:
            count += 1
            visitor(Tableau(n, {(i, j): s for i, j, s in cells}))
            return
        col = n - m
        r = len(ag_rows)
        for fill in legal_fills(r):
            depth = len(cells)
            cells.append((m + 1, col, fill.bottom))
            if fill.bottom.is_ag:
                child = ag_rows + [m + 1]
            else:
                dropped = set()
                for k, s in fill.upper:
                    cells.append((ag_rows[r - k], col, s))
                    if s.is_bd:
                        dropped.add(r - k)
                child = [
                    row for pos, row in enumerate(ag_rows) if pos not in dropped
                ]
            rec(m + 1, child)
            del cells[depth:]

    rec(0, [])
    return count


def _count_leaves(n: int) -> int:
    # Walks the same tree as the visitor path, tracking only the AG-row count
    # (the branching at each node depends on nothing else).
    deltas: list[list[int]] = [
        [f.r_change for f in legal_fills(r)] for r in range(n)
    ]

    def rec(m: int, r: int) -> int:
        if m == n:
            return 1
        total = 0
        nxt = m + 1
        for d in deltas[r]:
            total += rec(nxt, r + d)
        return total

    return rec(0, 0)
