"""Fillings of skew diagrams, reading words and the lattice condition."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import DisconnectedShape
from .shapes import Cell, Partition, SkewShape

Word = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Tableau:
    """A skew diagram with a positive integer in every box.

    Keys of ``entries`` are the normalized cells of ``shape``.
    """

    shape: SkewShape
    entries: Mapping[Cell, int] = field(repr=False)

    def __post_init__(self) -> None:
        entries = dict(self.entries)
        if set(entries) != set(self.shape.cells):
            raise ValueError(f"entries do not cover exactly the boxes of {self.shape}")
        if any(v <= 0 for v in entries.values()):
            raise ValueError("tableau entries must be positive integers")
        object.__setattr__(self, "entries", MappingProxyType(entries))

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Fill ``shape`` row by row, each row listed left to right."""
        if len(rows) != len(shape.rows):
            raise ValueError(f"{shape} has {len(shape.rows)} rows, got {len(rows)}")
        entries = {}
        for r, ((lo, hi), values) in enumerate(zip(shape.rows, rows), start=1):
            if len(values) != hi - lo + 1:
                raise ValueError(f"row {r} of {shape} has {hi - lo + 1} boxes, got {len(values)}")
            entries.update(((r, lo + k), v) for k, v in enumerate(values))
        return cls(shape, entries)

    @classmethod
    def from_columns(cls, shape: SkewShape, columns: Sequence[Sequence[int]]) -> "Tableau":
        """Fill ``shape`` column by column, each column listed top to bottom."""
        by_col: dict[int, list[int]] = {}
        for r, c in sorted(shape.cells):
            by_col.setdefault(c, []).append(r)
        if len(columns) != len(by_col):
            raise ValueError(f"{shape} has {len(by_col)} columns, got {len(columns)}")
        entries = {}
        for c, values in enumerate(columns, start=1):
            if len(values) != len(by_col[c]):
                raise ValueError(f"column {c} of {shape} has {len(by_col[c])} boxes, got {len(values)}")
            entries.update(((r, c), v) for r, v in zip(by_col[c], values))
        return cls(shape, entries)

    def rows(self) -> list[list[int]]:
        return [[self.entries[(r, c)] for c in range(lo, hi + 1)] for r, (lo, hi) in enumerate(self.shape.rows, start=1)]

    def columns(self) -> list[list[int]]:
        cols: dict[int, list[int]] = {}
        for r, c in sorted(self.entries, key=lambda rc: (rc[1], rc[0])):
            cols.setdefault(c, []).append(self.entries[(r, c)])
        return [cols[c] for c in sorted(cols)]

    def render(self) -> str:
        """Rows top to bottom; boxes left of a row's first box are shown as ``.``."""
        lines = []
        for r, (lo, hi) in enumerate(self.shape.rows, start=1):
            cells = ["."] * (lo - 1) + [str(self.entries[(r, c)]) for c in range(lo, hi + 1)]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self.entries.items())))

    def __str__(self) -> str:
        return self.render()


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downwards."""
    for (r, c), value in t.entries.items():
        right = t.entries.get((r, c + 1))
        if right is not None and right < value:
            return False
        below = t.entries.get((r + 1, c))
        if below is not None and below <= value:
            return False
    return True


def reading_word(t: Tableau) -> Word:
    """Entries read row by row from the top, each row right to left."""
    return tuple(t.entries[cell] for cell in reading_order(t.shape))


def reading_order(shape: SkewShape) -> list[Cell]:
    return sorted(shape.cells, key=lambda rc: (rc[0], -rc[1]))


def is_lattice_word(word: Iterable[int]) -> bool:
    """True when every prefix holds at least as many ``i`` as ``i + 1``, for all ``i``."""
    counts: Counter[int] = Counter()
    for letter in word:
        if letter > 1 and counts[letter - 1] <= counts[letter]:
            return False
        counts[letter] += 1
    return True


def content(t: Tableau) -> Tuple[int, ...]:
    """Multiplicities of 1, 2, ... up to the largest entry."""
    counts = Counter(t.entries.values())
    return tuple(counts[i] for i in range(1, max(counts) + 1))


def content_partition(t: Tableau) -> Partition:
    """Content as a partition; valid only when the content is weakly decreasing."""
    return Partition(content(t))


def superstandard_filling(s: SkewShape) -> Tableau:
    """Fill every column with 1, 2, ..., its length from top to bottom."""
    if not s.is_connected:
        raise DisconnectedShape(f"{s} is not connected")
    top: dict[int, int] = {}
    for r, c in s.cells:
        top[c] = min(r, top.get(c, r))
    return Tableau(s, {(r, c): r - top[c] + 1 for r, c in s.cells})
