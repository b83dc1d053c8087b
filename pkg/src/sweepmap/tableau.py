"""Column tableaux built from SW-words.

Filling a word places its letter positions 1..n+|k| into n columns, one per
S letter; column i wants exactly k_i+1 entries where k_i is the exponent of
the i-th S letter.  Each S opens the next column, each W lands directly
below the smallest *active* entry -- the bottom of a column that has not
reached full height yet.  The resulting tableaux are exactly characterized
by their top rows, and drive the sweep-inversion walks in walking.py.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .paths import VALID, Diagnostic, PathError, SWWord


class TableauError(ValueError):
    """Raised for malformed tableaux or words that cannot be filled."""


@dataclass(frozen=True)
class Tableau:
    """Columns of strictly increasing indices; column i holds k_i+1 entries."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(v) for v in col) for col in self.columns)
        if not cols:
            raise TableauError("tableau needs at least one column")
        for i, col in enumerate(cols, start=1):
            if len(col) < 2:
                raise TableauError(f"column {i} needs at least two entries")
        object.__setattr__(self, "columns", cols)

    @property
    def k(self) -> tuple[int, ...]:
        return tuple(len(col) - 1 for col in self.columns)

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    @property
    def top_row(self) -> tuple[int, ...]:
        return tuple(col[0] for col in self.columns)

    @property
    def bottom_row(self) -> tuple[int, ...]:
        return tuple(col[-1] for col in self.columns)

    def to_json(self) -> dict:
        return {"k": list(self.k), "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, obj: dict) -> "Tableau":
        if not isinstance(obj, dict) or "columns" not in obj:
            raise TableauError("tableau object needs a 'columns' key")
        t = cls(tuple(tuple(c) for c in obj["columns"]))
        if "k" in obj and tuple(obj["k"]) != t.k:
            raise TableauError(
                f"k {tuple(obj['k'])} does not match column heights (expected {t.k})"
            )
        return t

    def to_text(self) -> str:
        return "|".join(",".join(str(v) for v in col) for col in self.columns)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        try:
            cols = tuple(
                tuple(int(v) for v in part.split(",")) for part in text.split("|")
            )
        except ValueError as exc:
            raise TableauError(f"malformed tableau text: {exc}") from None
        return cls(cols)


@dataclass(frozen=True)
class TableauPlus:
    """A tableau with one extra index appended below its largest entry.

    The designated bottom of column i stays the (k_i+1)-st entry, including
    in the extended column, so ``k`` is carried explicitly.
    """

    columns: tuple[tuple[int, ...], ...]
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(v) for v in col) for col in self.columns)
        k = tuple(int(v) for v in self.k)
        if len(cols) != len(k):
            raise TableauError("one k entry per column required")
        extended = [i for i, (col, ki) in enumerate(zip(cols, k)) if len(col) == ki + 2]
        plain = [i for i, (col, ki) in enumerate(zip(cols, k)) if len(col) == ki + 1]
        if len(extended) != 1 or len(plain) != len(cols) - 1:
            raise TableauError("exactly one column must carry one extra entry")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "k", k)

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    @property
    def extended_column(self) -> int:
        """1-based index of the column holding the extra entry."""
        for i, (col, ki) in enumerate(zip(self.columns, self.k), start=1):
            if len(col) == ki + 2:
                return i
        raise TableauError("no extended column")  # pragma: no cover

    @property
    def top_row(self) -> tuple[int, ...]:
        return tuple(col[0] for col in self.columns)

    @property
    def bottom_row(self) -> tuple[int, ...]:
        """The designated bottoms: entry k_i+1 of each column."""
        return tuple(col[ki] for col, ki in zip(self.columns, self.k))

    def base(self) -> Tableau:
        """The tableau with the extra entry removed."""
        cols = tuple(
            col[: ki + 1] for col, ki in zip(self.columns, self.k)
        )
        return Tableau(cols)


def fill(word: SWWord) -> Tableau:
    """Build the tableau of a word.

    Entries arrive in increasing order, so the set of active bottoms stays
    sorted by construction and the smallest active entry is always the one
    waiting longest; a deque gives the whole fill a single linear pass.
    """
    heights: list[int] = []  # wanted height per opened column
    columns: list[list[int]] = []
    active: deque[int] = deque()  # column numbers, fronted by smallest bottom
    for j, (kind, size) in enumerate(word.letters, start=1):
        if kind == "S":
            columns.append([j])
            heights.append(size + 1)
            active.append(len(columns) - 1)
        else:
            if not active:
                raise TableauError(
                    f"no active entry for the W letter at position {j}"
                )
            c = active.popleft()
            columns[c].append(j)
            if len(columns[c]) < heights[c]:
                active.append(c)
    if active:
        unfilled = active.popleft() + 1
        raise TableauError(f"word ended while column {unfilled} is unfilled")
    return Tableau(tuple(tuple(col) for col in columns))


def validate_tableau(t: Tableau) -> Diagnostic:
    """Check the partition, column, top-row, bound, and strip conditions.

    The strip condition: whenever d sits directly below a in some column,
    no two of the values strictly between a and d may share a column.
    """
    n = len(t.columns)
    size = t.size
    entries = [v for col in t.columns for v in col]
    if sorted(entries) != list(range(1, size + 1)):
        return Diagnostic(False, f"entries do not form 1..{size}")
    for i, col in enumerate(t.columns, start=1):
        for a, b in zip(col, col[1:]):
            if a >= b:
                return Diagnostic(False, f"column {i} is not strictly increasing", i)
    top = t.top_row
    for i in range(1, n):
        if top[i - 1] >= top[i]:
            return Diagnostic(False, "top row is not strictly increasing", i + 1)
    prefix = 0
    for i, (ti, ki) in enumerate(zip(top, t.k), start=1):
        if ti > prefix + i:
            return Diagnostic(
                False, f"top entry {ti} exceeds its bound {prefix + i}", i
            )
        prefix += ki
    col_of = {}
    for c, col in enumerate(t.columns, start=1):
        for v in col:
            col_of[v] = c
    # quadratic scan; tableaux are desk-sized wherever this runs
    for col in t.columns:
        for a, d in zip(col, col[1:]):
            seen: dict[int, int] = {}
            for v in range(a + 1, d):
                c = col_of[v]
                if c in seen:
                    return Diagnostic(
                        False,
                        f"strip violation {a} < {seen[c]} < {v} < {d}: "
                        f"{seen[c]} and {v} share column {c}",
                    )
                seen[c] = v
    return VALID


def from_top_row(top, k) -> Tableau:
    """The unique valid tableau with the given top row.

    Built by filling the word that has S^{k_i} at position top_i and W
    everywhere else; top_i may not exceed k_1+...+k_{i-1}+i.
    """
    top = tuple(int(v) for v in top)
    k = tuple(int(v) for v in k)
    if len(top) != len(k):
        raise TableauError("top row and rise vector must have equal length")
    if any(v <= 0 for v in k):
        raise TableauError("rise vector entries must be positive")
    if top[0] != 1:
        raise TableauError("top row must start at 1")
    for a, b in zip(top, top[1:]):
        if a >= b:
            raise TableauError("top row must be strictly increasing")
    prefix = 0
    for i, (ti, ki) in enumerate(zip(top, k), start=1):
        if ti > prefix + i:
            raise TableauError(
                f"top entry {ti} at position {i} exceeds its bound {prefix + i}"
            )
        prefix += ki
    size = len(k) + sum(k)
    tops = dict(zip(top, k))
    letters = tuple(
        ("S", tops[j]) if j in tops else ("W", 1) for j in range(1, size + 1)
    )
    return fill(SWWord(letters))


def tableau_to_word(t: Tableau) -> SWWord:
    """The word with S^{k_i} at the top-row positions and W elsewhere."""
    tops = dict(zip(t.top_row, t.k))
    size = t.size
    if any(j < 1 or j > size for j in tops):
        raise TableauError("top-row entries out of range")
    letters = tuple(
        ("S", tops[j]) if j in tops else ("W", 1) for j in range(1, size + 1)
    )
    return SWWord(letters)


def extend_plus(t: Tableau) -> TableauPlus:
    """Append index size+1 directly below the largest entry."""
    size = t.size
    cols = [list(col) for col in t.columns]
    for col in cols:
        if col[-1] == size:
            col.append(size + 1)
            break
    else:
        raise TableauError(f"no column ends with the largest entry {size}")
    return TableauPlus(tuple(tuple(c) for c in cols), t.k)


def is_minus_admissible(t: Tableau) -> bool:
    """Whether every later top entry sits strictly below its bound.

    Column 1 is unconstrained; for i >= 2 the top entry must satisfy
    t_i < k_1+...+k_{i-1}+i.
    """
    prefix = 0
    for i, (ti, ki) in enumerate(zip(t.top_row, t.k), start=1):
        if i >= 2 and ti >= prefix + i:
            return False
        prefix += ki
    return True
