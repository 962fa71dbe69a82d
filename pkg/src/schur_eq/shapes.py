"""Partitions, skew diagrams and their box-level geometry.

A skew diagram is stored as an ``(outer, inner)`` pair of partitions, but its
identity is its set of boxes: two :class:`SkewShape` objects compare equal when
their boxes coincide after translating them to the top-left corner.  Boxes are
1-based ``(row, column)`` pairs with rows counted downwards (English notation).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Tuple

from .errors import ContainmentViolation, EmptyShape, ParseError

Cell = Tuple[int, int]
CellSet = frozenset  # frozenset[Cell], normalized so min row == min column == 1


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves exactly like the underlying tuple (so ``Partition((3, 1)) == (3, 1)``)
    but validates on construction.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for idx, part in enumerate(parts):
            if part <= 0:
                raise ValueError(f"partition parts must be positive, got {part} at index {idx}")
            if idx and part > parts[idx - 1]:
                raise ValueError(f"partition must be weakly decreasing; index {idx} breaks it: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_trailing_zeros(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from a sequence that may end in zeros."""
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose a partition: part ``i`` of the result counts parts of ``p`` that are >= i."""
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2,2"`` into a partition.  The empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    for idx, chunk in enumerate(text.split(",")):
        try:
            value = int(chunk.strip())
        except ValueError:
            raise ParseError(f"part at index {idx} is not an integer: {chunk.strip()!r}") from None
        if value <= 0:
            raise ParseError(f"part at index {idx} must be positive, got {value}")
        if parts and value > parts[-1]:
            raise ParseError(
                f"parts must be weakly decreasing; index {idx} ({value}) exceeds index {idx - 1} ({parts[-1]})"
            )
        parts.append(value)
    return Partition(parts)


class Orientation(enum.Enum):
    STRAIGHT = "straight"
    ROTATED = "rotated"


@dataclass(frozen=True, eq=False)
class SkewShape:
    """The skew diagram ``outer/inner``.

    Equality and hashing go through :attr:`cells`, so every representative of
    the same box array is interchangeable.  Disconnected diagrams are
    allowed here; operations that need connectivity check it themselves.
    """

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        outer, inner = Partition(self.outer), Partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer):
            raise ContainmentViolation(f"inner {inner} has more rows than outer {outer}")
        for row, (mu, lam) in enumerate(zip(inner, outer), start=1):
            if mu > lam:
                raise ContainmentViolation(f"inner part {mu} exceeds outer part {lam} in row {row}")
        if outer.size == inner.size:
            raise EmptyShape(f"{outer}/{inner} has no boxes")

    @classmethod
    def from_cells(cls, boxes: Iterable[Cell]) -> "SkewShape":
        """Rebuild the canonical ``(outer, inner)`` representative of a box set.

        The canonical form has no empty leading rows or columns and no empty
        trailing rows.  Raises ``ValueError`` if the boxes do not form a skew
        diagram.
        """
        norm = normalize(boxes)
        if not norm:
            raise EmptyShape("no boxes")
        by_row: dict[int, list[int]] = {}
        for r, c in norm:
            by_row.setdefault(r, []).append(c)
        last = max(by_row)
        outer: list[int] = []
        inner: list[int] = []
        for r in range(1, last + 1):
            if r in by_row:
                cols = by_row[r]
                lo, hi = min(cols), max(cols)
                if hi - lo + 1 != len(cols):
                    raise ValueError(f"row {r} is not a contiguous interval")
                outer.append(hi)
                inner.append(lo - 1)
            else:
                # an empty interior row is encoded by a fully covered row
                outer.append(inner[-1])
                inner.append(inner[-1])
        try:
            shape = cls(Partition(outer), Partition.from_trailing_zeros(inner))
        except ValueError as exc:
            raise ValueError(f"boxes do not form a skew diagram: {exc}") from None
        if shape.cells != norm:
            raise ValueError("boxes do not form a skew diagram")
        return shape

    @cached_property
    def cells(self) -> CellSet:
        return normalize(
            (i, j)
            for i, lam in enumerate(self.outer, start=1)
            for j in range((self.inner[i - 1] if i <= len(self.inner) else 0) + 1, lam + 1)
        )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @cached_property
    def rows(self) -> Tuple[Tuple[int, int], ...]:
        """Column interval ``(first, last)`` of every row of the normalized box set.

        Empty interior rows (possible only for disconnected diagrams) appear
        as ``(0, -1)``.
        """
        height = max(r for r, _ in self.cells)
        spans = []
        for r in range(1, height + 1):
            cols = [c for rr, c in self.cells if rr == r]
            spans.append((min(cols), max(cols)) if cols else (0, -1))
        return tuple(spans)

    @cached_property
    def column_lengths(self) -> Tuple[int, ...]:
        counts = Counter(c for _, c in self.cells)
        return tuple(counts[c] for c in range(1, max(counts) + 1))

    @property
    def max_column_length(self) -> int:
        return max(self.column_lengths)

    @cached_property
    def is_connected(self) -> bool:
        spans = self.rows
        if any(hi < lo for lo, hi in spans):
            return False
        return all(lo <= hi_below and lo_below <= hi for (lo, hi), (lo_below, hi_below) in zip(spans, spans[1:]))

    def canonical(self) -> "SkewShape":
        return SkewShape.from_cells(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)

    def __repr__(self) -> str:
        return f"SkewShape({self})"


def normalize(boxes: Iterable[Cell]) -> CellSet:
    boxes = list(boxes)
    if not boxes:
        return frozenset()
    r0 = min(r for r, _ in boxes) - 1
    c0 = min(c for _, c in boxes) - 1
    return frozenset((r - r0, c - c0) for r, c in boxes)


def skew_shape(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def parse_shape(text: str) -> SkewShape:
    """Parse ``"4,3,2,2/2,1"`` (or ``"3,2"`` for a straight shape)."""
    outer_text, sep, inner_text = text.strip().partition("/")
    if not outer_text.strip():
        raise ParseError(f"missing outer partition in {text!r}")
    outer = parse_partition(outer_text)
    inner = parse_partition(inner_text) if sep else Partition()
    return SkewShape(outer, inner)


def cells(s: SkewShape) -> CellSet:
    return s.cells


def column_lengths(s: SkewShape) -> Tuple[int, ...]:
    return s.column_lengths


def is_connected(s: SkewShape) -> bool:
    return s.is_connected


def rotate180(s: SkewShape) -> SkewShape:
    height = max(r for r, _ in s.cells)
    width = max(c for _, c in s.cells)
    return SkewShape.from_cells((height + 1 - r, width + 1 - c) for r, c in s.cells)


def as_straight_or_rotated(s: SkewShape) -> Optional[Tuple[Partition, Orientation]]:
    """Return ``(nu, orientation)`` if ``s`` is the diagram of ``nu`` or of ``nu`` rotated.

    Shapes that are both (rectangles) report :attr:`Orientation.STRAIGHT`.
    """
    canon = s.canonical()
    if not canon.inner:
        return canon.outer, Orientation.STRAIGHT
    turned = rotate180(canon)
    if not turned.inner:
        return turned.outer, Orientation.ROTATED
    return None


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(remaining: int, cap: int) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, max_part):
        yield Partition(parts)


def connected_skew_shapes(max_boxes: int, min_boxes: int = 1) -> list[SkewShape]:
    """Every connected skew diagram with ``min_boxes..max_boxes`` boxes, once each.

    Ordered by box count, then outer partition descending-lex, then inner
    partition descending-lex.
    """
    found: list[SkewShape] = []

    # rows are built bottom-up as column intervals; the bottom row starts in column 1
    def grow(rows: list[Tuple[int, int]], used: int) -> None:
        if used >= min_boxes:
            top_down = rows[::-1]
            found.append(SkewShape(Partition(hi for _, hi in top_down), Partition.from_trailing_zeros(lo - 1 for lo, _ in top_down)))
        lo_below, hi_below = rows[-1]
        for lo in range(lo_below, hi_below + 1):
            for hi in range(max(lo, hi_below), lo + max_boxes - used):
                grow(rows + [(lo, hi)], used + hi - lo + 1)

    for width in range(1, max_boxes + 1):
        grow([(1, width)], width)
    found.sort(key=lambda s: (s.outer, s.inner), reverse=True)
    found.sort(key=lambda s: s.size)
    return found
