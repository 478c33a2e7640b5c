"""Staircase tableau data model: filling rules, type words, u/q labels, statistics.

A staircase tableau of size n fills the Young diagram of shape (n, n-1, ..., 1)
with symbols from {alpha, beta, gamma, delta}; boxes not holding a symbol are
empty.  A filling is legal when

* every diagonal box is filled,
* every box left of a beta or delta in the same row is empty,
* every box above an alpha or gamma in the same column is empty.

Coordinates are (row, column) pairs with rows 1..n numbered top to bottom and
row i spanning columns 1..n+1-i, so the diagonal box of row i is (i, n+1-i)
and the diagonal is read NE to SW by increasing row index.  Empty boxes are
absent from the cell mapping.  A size-0 tableau (no boxes) is admitted as the
growth root used by the enumerator and the sampler.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

Cell = tuple[int, int]


class GreekSymbol(Enum):
    ALPHA = "A"
    BETA = "B"
    GAMMA = "G"
    DELTA = "D"

    @property
    def is_ag(self) -> bool:
        """Alpha/gamma class: the column-restricted symbols."""
        return self in (GreekSymbol.ALPHA, GreekSymbol.GAMMA)

    @property
    def is_bd(self) -> bool:
        """Beta/delta class: the row-restricted symbols."""
        return self in (GreekSymbol.BETA, GreekSymbol.DELTA)

    @property
    def fills_site(self) -> bool:
        """True if the symbol reads as an occupied site in the type word."""
        return self in (GreekSymbol.ALPHA, GreekSymbol.DELTA)


class Label(Enum):
    U = "u"
    Q = "q"


class InvalidTableauError(ValueError):
    """An operation that requires a valid tableau received one with violations."""


@dataclass(frozen=True)
class Violation:
    """A single broken filling rule, pointing at the offending box."""

    rule: str
    cell: Cell | None


@dataclass(frozen=True)
class Tableau:
    """An immutable staircase filling.  `cells` maps occupied boxes to symbols."""

    n: int
    cells: Mapping[Cell, GreekSymbol]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"size must be non-negative, got {self.n}")
        object.__setattr__(self, "cells", dict(self.cells))

    def row_length(self, i: int) -> int:
        return self.n + 1 - i

    def diagonal_cell(self, i: int) -> Cell:
        return (i, self.n + 1 - i)

    def in_shape(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= self.n and 1 <= j <= self.n + 1 - i

    def boxes(self) -> Iterator[Cell]:
        """All boxes of the staircase shape, occupied or not, in row-major order."""
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 2 - i):
                yield (i, j)

    def canonical(self) -> tuple:
        return (
            self.n,
            tuple(sorted((i, j, s.value) for (i, j), s in self.cells.items())),
        )

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.canonical() == other.canonical()


@dataclass(frozen=True)
class TypeWord:
    """Diagonal read NE to SW; True marks an occupied site (alpha or delta)."""

    filled: tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.filled)

    def as_bits(self) -> str:
        return "".join("1" if f else "0" for f in self.filled)

    def __str__(self) -> str:
        return "".join("●" if f else "○" for f in self.filled)


@dataclass(frozen=True)
class LabeledTableau:
    """A valid tableau together with a u/q label on every empty box."""

    base: Tableau
    labels: Mapping[Cell, Label]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", dict(self.labels))


@dataclass(frozen=True)
class WeightMonomial:
    """Exponent vector of a tableau weight; total degree is n(n+1)/2."""

    e_alpha: int
    e_beta: int
    e_gamma: int
    e_delta: int
    e_u: int
    e_q: int

    def degree(self) -> int:
        return (
            self.e_alpha + self.e_beta + self.e_gamma + self.e_delta
            + self.e_u + self.e_q
        )

    def evaluate(
        self,
        alpha: Fraction,
        beta: Fraction,
        gamma: Fraction,
        delta: Fraction,
        u: Fraction,
        q: Fraction,
    ) -> Fraction:
        return (
            alpha ** self.e_alpha
            * beta ** self.e_beta
            * gamma ** self.e_gamma
            * delta ** self.e_delta
            * u ** self.e_u
            * q ** self.e_q
        )


@dataclass(frozen=True)
class StatVector:
    """Per-tableau statistics.

    r:      rows whose leftmost entry is alpha/gamma
    delta:  total count of beta/delta entries
    gamma:  total count of alpha/gamma entries
    a_diag: alpha/gamma entries on the diagonal
    b_diag: beta/delta entries on the diagonal
    """

    r: int
    delta: int
    gamma: int
    a_diag: int
    b_diag: int


def _rows(t: Tableau) -> dict[int, list[tuple[int, GreekSymbol]]]:
    rows: dict[int, list[tuple[int, GreekSymbol]]] = {}
    for (i, j), s in t.cells.items():
        rows.setdefault(i, []).append((j, s))
    for entries in rows.values():
        entries.sort()
    return rows


def _columns(t: Tableau) -> dict[int, list[tuple[int, GreekSymbol]]]:
    cols: dict[int, list[tuple[int, GreekSymbol]]] = {}
    for (i, j), s in t.cells.items():
        cols.setdefault(j, []).append((i, s))
    for entries in cols.values():
        entries.sort()
    return cols


def validate(t: Tableau) -> list[Violation]:
    """Check the three filling rules plus shape membership.

    Returns an empty list for a valid tableau.  Violations are reported per
    offending box; a tableau may accumulate several.
    """
    out: list[Violation] = []
    for cell in t.cells:
        if not t.in_shape(cell):
            out.append(Violation("cell-outside-shape", cell))
    for i in range(1, t.n + 1):
        if t.diagonal_cell(i) not in t.cells:
            out.append(Violation("empty-diagonal", t.diagonal_cell(i)))
    for i, entries in _rows(t).items():
        for pos, (j, s) in enumerate(entries):
            if s.is_bd and pos > 0 and t.in_shape((i, j)):
                out.append(Violation("entry-left-of-bd", (i, j)))
    for j, entries in _columns(t).items():
        for pos, (i, s) in enumerate(entries):
            if s.is_ag and pos > 0 and t.in_shape((i, j)):
                out.append(Violation("entry-above-ag", (i, j)))
    return out


def is_valid(t: Tableau) -> bool:
    return not validate(t)


def check_valid(t: Tableau) -> None:
    violations = validate(t)
    if violations:
        raise InvalidTableauError(f"invalid tableau: {violations[:3]}")


def type_word(t: Tableau) -> TypeWord:
    """Read the diagonal NE to SW: alpha/delta mark occupied sites."""
    check_valid(t)
    return TypeWord(
        tuple(t.cells[t.diagonal_cell(i)].fills_site for i in range(1, t.n + 1))
    )


def label_uq(t: Tableau) -> LabeledTableau:
    """Assign a u/q label to every empty box.

    Row pass first: each empty box left of the row's beta gets U, left of the
    row's delta gets Q.  (A valid row has at most one beta/delta and it is the
    leftmost entry, so the pass is unambiguous.)  Column pass second, on boxes
    the row pass did not touch: the nearest occupied box below in the same
    column decides, U under an alpha/delta and Q under a beta/gamma.  The
    nearest-below convention also settles columns containing several symbols.
    Every column ends at an occupied diagonal box, so coverage of all empty
    boxes is structural; it is asserted anyway.
    """
    check_valid(t)
    labels: dict[Cell, Label] = {}
    for i, entries in _rows(t).items():
        j0, s0 = entries[0]
        if s0.is_bd:
            lab = Label.U if s0 is GreekSymbol.BETA else Label.Q
            for j in range(1, j0):
                labels[(i, j)] = lab
    for j in range(1, t.n + 1):
        nearest_below: GreekSymbol | None = None
        for i in range(t.n + 1 - j, 0, -1):
            s = t.cells.get((i, j))
            if s is not None:
                nearest_below = s
            elif (i, j) not in labels:
                assert nearest_below is not None, "column bottom must be occupied"
                labels[(i, j)] = (
                    Label.U if nearest_below.fills_site else Label.Q
                )
    n_empty = t.n * (t.n + 1) // 2 - len(t.cells)
    assert len(labels) == n_empty, "labeling must cover every empty box"
    return LabeledTableau(t, labels)


def weight(t: Tableau) -> WeightMonomial:
    """Weight monomial: one factor per box, symbol or u/q label."""
    labeled = label_uq(t)
    counts = {s: 0 for s in GreekSymbol}
    for s in t.cells.values():
        counts[s] += 1
    n_u = sum(1 for lab in labeled.labels.values() if lab is Label.U)
    n_q = len(labeled.labels) - n_u
    w = WeightMonomial(
        e_alpha=counts[GreekSymbol.ALPHA],
        e_beta=counts[GreekSymbol.BETA],
        e_gamma=counts[GreekSymbol.GAMMA],
        e_delta=counts[GreekSymbol.DELTA],
        e_u=n_u,
        e_q=n_q,
    )
    assert w.degree() == t.n * (t.n + 1) // 2
    return w


def ag_row_indices(t: Tableau) -> list[int]:
    """Rows whose leftmost entry is alpha/gamma, in increasing row order."""
    out = []
    for i, entries in sorted(_rows(t).items()):
        if entries[0][1].is_ag:
            out.append(i)
    return out


def statistics(t: Tableau) -> StatVector:
    check_valid(t)
    n_ag = sum(1 for s in t.cells.values() if s.is_ag)
    n_bd = len(t.cells) - n_ag
    a_diag = sum(
        1 for i in range(1, t.n + 1) if t.cells[t.diagonal_cell(i)].is_ag
    )
    sv = StatVector(
        r=len(ag_row_indices(t)),
        delta=n_bd,
        gamma=n_ag,
        a_diag=a_diag,
        b_diag=t.n - a_diag,
    )
    assert sv.r + sv.delta == t.n and sv.a_diag + sv.b_diag == t.n
    return sv


_LETTER = {s.value: s for s in GreekSymbol}


def to_text(t: Tableau) -> str:
    """Canonical text form: size header, then one 'i j S' line per entry.

    Entries are sorted by (row, column); S is the letter A, B, G or D.
    """
    lines = [str(t.n)]
    for (i, j), s in sorted(t.cells.items()):
        lines.append(f"{i} {j} {s.value}")
    return "\n".join(lines)


def to_line(t: Tableau) -> str:
    """Single-line variant of the canonical form, fields joined by ';'."""
    return ";".join(to_text(t).split("\n"))


def from_text(text: str) -> Tableau:
    """Parse either the multi-line canonical form or the ';'-joined line form."""
    parts = [p.strip() for p in text.replace(";", "\n").split("\n")]
    parts = [p for p in parts if p]
    if not parts:
        raise ValueError("empty tableau text")
    try:
        n = int(parts[0])
    except ValueError as exc:
        raise ValueError(f"bad size header {parts[0]!r}") from exc
    cells: dict[Cell, GreekSymbol] = {}
    for p in parts[1:]:
        fields = p.split()
        if len(fields) != 3 or fields[2] not in _LETTER:
            raise ValueError(f"bad cell line {p!r}")
        cell = (int(fields[0]), int(fields[1]))
        if cell in cells:
            raise ValueError(f"duplicate cell {cell}")
        cells[cell] = _LETTER[fields[2]]
    return Tableau(n, cells)
