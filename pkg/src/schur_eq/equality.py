"""Deciding when a skew Schur function is a single Schur function.

Two settings are handled:

* infinitely many variables, where ``s_{lambda/mu} = s_nu`` exactly when the
  diagram is ``nu`` or ``nu`` turned by 180 degrees;
* ``n`` variables, where the answer depends on the longest column ``m``: zero
  when ``m > n``, the infinite answer when ``m < n``, and for ``m = n`` the
  shape must have a unique lattice filling with entries at most ``n``.  The
  ``m = n`` shapes with that property are also described structurally, as the
  diagrams reachable from a straight or rotated diagram by shearings and
  fattenings; :func:`structural_closure_contains` searches that closure so the
  two descriptions can be checked against each other.

Every negative answer comes with two distinct lattice fillings as evidence.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .errors import DisconnectedShape, InvalidFattening, PreconditionViolation, SchurEqError
from .littlewood_richardson import enumerate_lattice_fillings
from .shapes import (
    CellSet,
    Orientation,
    Partition,
    SkewShape,
    as_straight_or_rotated,
    conjugate,
    partitions,
    rotate180,
)
from .tableaux import Tableau, reading_order, superstandard_filling

EQUALS = "equals"
ZERO = "zero"
NOT_EQUAL = "not_equal"


def _require_connected(s: SkewShape) -> None:
    if not s.is_connected:
        raise DisconnectedShape(f"{s} is not connected")


def eta_partition(s: SkewShape) -> Partition:
    """Part ``i`` counts the columns of ``s`` holding at least ``i`` boxes."""
    return conjugate(sorted(s.column_lengths, reverse=True))


def schur_equal_infinite(s: SkewShape) -> Optional[Partition]:
    """``nu`` if ``s_{lambda/mu} = s_nu`` in infinitely many variables, else ``None``."""
    _require_connected(s)
    found = as_straight_or_rotated(s)
    return found[0] if found else None


@dataclass(frozen=True)
class EqualityVerdict:
    status: str
    partition: Optional[Partition] = None
    witnesses: Optional[Tuple[Tableau, Tableau]] = None

    def __post_init__(self) -> None:
        if self.status not in (EQUALS, ZERO, NOT_EQUAL):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == EQUALS) != (self.partition is not None):
            raise ValueError("a partition is carried exactly by 'equals' verdicts")
        if self.status == NOT_EQUAL:
            if self.witnesses is None or self.witnesses[0] == self.witnesses[1]:
                raise ValueError("'not_equal' needs two distinct witnesses")
        elif self.witnesses is not None:
            raise ValueError("witnesses are carried only by 'not_equal' verdicts")

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.partition is not None:
            out["partition"] = list(self.partition)
        if self.witnesses is not None:
            out["witnesses"] = [w.render() for w in self.witnesses]
        return out


def schur_equal_finite(s: SkewShape, n: int) -> EqualityVerdict:
    """Compare ``s_{lambda/mu}(x_1..x_n)`` with ``s_eta(x_1..x_n)``."""
    _require_connected(s)
    if n < 1:
        raise SchurEqError(f"number of variables must be positive, got {n}")
    m = s.max_column_length
    if m > n:
        return EqualityVerdict(ZERO)
    if m < n:
        nu = schur_equal_infinite(s)
        if nu is not None:
            return EqualityVerdict(EQUALS, nu)
        return EqualityVerdict(NOT_EQUAL, witnesses=(superstandard_filling(s), _lemma_witness(s, n)))
    first_two = _take(enumerate_lattice_fillings(s, max_entry=n), 2)
    if len(first_two) == 1:
        return EqualityVerdict(EQUALS, eta_partition(s))
    return EqualityVerdict(NOT_EQUAL, witnesses=(first_two[0], first_two[1]))


def _take(it: Iterator, count: int) -> list:
    out = []
    for item in it:
        out.append(item)
        if len(out) == count:
            break
    return out


# -- shearing and fattening -------------------------------------------------


def _column_profile(s: SkewShape) -> Tuple[list[int], list[int]]:
    """Conjugates of the canonical outer and inner partitions, padded to equal length."""
    canon = s.canonical()
    outer_t = list(conjugate(canon.outer))
    inner_t = list(conjugate(canon.inner))
    inner_t += [0] * (len(outer_t) - len(inner_t))
    return outer_t, inner_t


def _from_column_profile(outer_t: list[int], inner_t: list[int]) -> SkewShape:
    return SkewShape(
        conjugate(Partition.from_trailing_zeros(outer_t)),
        conjugate(Partition.from_trailing_zeros(inner_t)),
    )


def shearings(s: SkewShape) -> set[SkewShape]:
    """Every shape obtained by sliding a longest column, and all columns left of it, down.

    Both forms are produced: the chosen longest column ``c`` moves with the
    columns to its left, or stays put while everything left of it moves.
    All slide distances ``r >= 1`` that keep the diagram connected are
    used.  The shape itself is not included.
    """
    _require_connected(s)
    outer_t, inner_t = _column_profile(s)
    lengths = [o - i for o, i in zip(outer_t, inner_t)]
    longest = max(lengths)
    width = len(lengths)
    found: set[SkewShape] = set()
    for c in range(1, width + 1):
        if lengths[c - 1] != longest:
            continue
        for moved in {c, c - 1}:
            # moving nothing or everything is a translation
            if moved in (0, width):
                continue
            r = 1
            while True:
                new_outer = [o + r if idx < moved else o for idx, o in enumerate(outer_t)]
                new_inner = [i + r if idx < moved else i for idx, i in enumerate(inner_t)]
                sheared = _from_column_profile(new_outer, new_inner)
                if not sheared.is_connected:
                    break
                found.add(sheared)
                r += 1
    found.discard(s)
    return found


@dataclass(frozen=True)
class FatteningParams:
    """Parameters of a fattening of the diagram with ``i`` columns of length ``a``
    followed by ``j`` columns of length ``c``.

    ``nu`` (with ``k`` parts) is required when ``a == c`` and forbidden otherwise.
    """

    a: int
    c: int
    i: int
    j: int
    b: int
    k: int = 0
    nu: Optional[Partition] = None

    def __post_init__(self) -> None:
        if self.nu is not None:
            object.__setattr__(self, "nu", Partition(self.nu))


def fattening(p: FatteningParams) -> SkewShape:
    """Shear the length-``a`` columns down by ``b`` and insert ``k`` new columns.

    For a fat hook (``a > c``) the inserted columns form a block of height
    ``c - b``; for a rectangle (``a == c``) they have lengths ``nu_1..nu_k``.
    The inner partition has ``i + k`` columns of height ``b``.
    """
    for name in ("a", "c", "i", "j", "b"):
        if getattr(p, name) < 1:
            raise InvalidFattening(f"{name} must be a positive integer, got {getattr(p, name)}")
    if p.k < 0:
        raise InvalidFattening(f"k must be non-negative, got {p.k}")
    if p.a != p.c:
        if p.nu is not None:
            raise InvalidFattening("nu is only used when a == c")
        if p.a < p.c:
            raise InvalidFattening(f"column lengths a={p.a}, c={p.c} do not form a fat hook (need a > c)")
        outer_t = [p.a + p.b] * p.i + [p.c] * (p.j + p.k)
    else:
        nu = p.nu if p.nu is not None else Partition()
        if len(nu) != p.k:
            raise InvalidFattening(f"nu must have k={p.k} parts, got {tuple(nu)}")
        outer_t = [p.a + p.b] * p.i + [part + p.b for part in nu] + [p.c] * p.j
    inner_t = [p.b] * (p.i + p.k)
    if any(x < y for x, y in zip(outer_t, outer_t[1:])):
        raise InvalidFattening(f"outer column lengths {outer_t} are not weakly decreasing")
    if any(lo > hi for lo, hi in zip(inner_t, outer_t)):
        raise InvalidFattening(f"inner columns {inner_t} do not fit in outer columns {outer_t}")
    try:
        shape = _from_column_profile(outer_t, inner_t)
    except SchurEqError as exc:
        raise InvalidFattening(str(exc)) from None
    if not shape.is_connected:
        raise InvalidFattening(f"fattening {shape} is disconnected")
    return shape


def fattening_params(base: Partition, max_boxes: int) -> Iterator[FatteningParams]:
    """Candidate parameter tuples for fattening ``base`` without exceeding ``max_boxes``.

    Yields nothing unless ``base`` is a fat hook or a rectangle.  Tuples may
    still be rejected by :func:`fattening`.
    """
    cols = list(conjugate(base))
    kinds = sorted(set(cols), reverse=True)
    if len(kinds) == 2:
        a, c = kinds
        i, j = cols.count(a), cols.count(c)
        for b in range(1, c):
            k = 0
            while base.size + k * (c - b) <= max_boxes:
                yield FatteningParams(a, c, i, j, b, k)
                k += 1
    elif len(kinds) == 1:
        a = kinds[0]
        for i in range(1, len(cols)):
            j = len(cols) - i
            for b in range(1, a):
                lowest = max(1, a - b)
                for extra in range(0, max_boxes - base.size + 1):
                    for nu in partitions(extra, max_part=a):
                        if nu and nu[-1] < lowest:
                            continue
                        yield FatteningParams(a, a, i, j, b, len(nu), nu if nu else None)


def _fattenings(state: SkewShape, max_boxes: int) -> Iterator[SkewShape]:
    found = as_straight_or_rotated(state)
    if found is None:
        return
    nu, orientation = found
    rectangle = len(set(nu)) == 1
    for p in fattening_params(nu, max_boxes):
        try:
            fat = fattening(p)
        except InvalidFattening:
            continue
        if orientation is Orientation.STRAIGHT:
            yield fat
        if orientation is Orientation.ROTATED or rectangle:
            yield rotate180(fat)


@lru_cache(maxsize=None)
def closure(n: int, max_boxes: int) -> frozenset:
    """Box sets of all shapes with at most ``max_boxes`` boxes that shearings and
    fattenings reach from a straight diagram whose longest column is ``n``.

    Neither operation removes boxes or changes the longest column, so the
    search is finite and seeds with fewer or more than ``n`` rows never
    contribute.
    """
    seen: set[CellSet] = set()
    queue: deque[SkewShape] = deque()
    for size in range(n, max_boxes + 1):
        for nu in partitions(size):
            if len(nu) == n:
                shape = SkewShape(nu)
                seen.add(shape.cells)
                queue.append(shape)
    while queue:
        state = queue.popleft()
        for nxt in (*shearings(state), *_fattenings(state, max_boxes)):
            if nxt.size <= max_boxes and nxt.cells not in seen:
                seen.add(nxt.cells)
                queue.append(nxt)
    return frozenset(seen)


def structural_closure_contains(s: SkewShape, n: int) -> bool:
    """Whether ``s`` is derived from some ``nu`` or ``nu`` rotated by shearings and fattenings."""
    _require_connected(s)
    if s.max_column_length != n:
        raise PreconditionViolation(f"longest column of {s} is {s.max_column_length}, not n={n}")
    reachable = closure(n, s.size)
    return s.cells in reachable or rotate180(s).cells in reachable


# -- witnesses ---------------------------------------------------------------


def _first_failing_row(s: SkewShape) -> int:
    for i in range(1, len(s.rows) + 1):
        top = SkewShape.from_cells(cell for cell in s.cells if cell[0] <= i)
        if as_straight_or_rotated(top) is None:
            return i
    raise SchurEqError(f"{s} is a straight or rotated diagram")


def _proof_setup(s: SkewShape):
    """Shared first half of both witness constructions.

    Returns the superstandard entries, the chosen box, its entry ``j``, the
    replacement value ``k`` and the reading word read before that box.
    """
    entries = dict(superstandard_filling(s).entries)
    i = _first_failing_row(s)
    lo, hi = s.rows[i - 1]
    col = next(c for c in range(hi, lo - 1, -1) if entries[(i, c)] < i)
    j = entries[(i, col)]
    prefix = [entries[cell] for cell in reading_order(s) if cell[0] < i or (cell[0] == i and cell[1] > col)]
    counts = Counter(prefix)
    k = next((k for k in range(j + 1, i + 1) if counts[k] < counts[k - 1]), None)
    if k is None:
        raise SchurEqError(f"no admissible replacement value for {s}")
    return entries, (i, col), j, k, prefix


def _raise_column(entries: dict, box: Tuple[int, int], shift: int) -> None:
    r, c = box
    while (r, c) in entries:
        entries[(r, c)] += shift
        r += 1


def second_witness_infinite(s: SkewShape) -> Optional[Tableau]:
    """A lattice filling other than the superstandard one, or ``None`` if none exists."""
    _require_connected(s)
    if as_straight_or_rotated(s) is not None:
        return None
    entries, box, j, k, _ = _proof_setup(s)
    _raise_column(entries, box, k - j)
    return Tableau(s, entries)


def _lemma_witness(s: SkewShape, n: int) -> Tableau:
    entries, (i, col), j, k, prefix = _proof_setup(s)
    length = sum(1 for _, c in s.cells if c == col)
    if length + k - j <= n:
        _raise_column(entries, (i, col), k - j)
    else:
        largest = max(prefix)
        column = sorted(r for r, c in s.cells if c == col)
        for value, r in enumerate(column[len(column) - (n - largest):], start=largest + 1):
            entries[(r, col)] = value
    return Tableau(s, entries)


def second_witness_bounded(s: SkewShape, n: int) -> Optional[Tableau]:
    """A second lattice filling with entries at most ``n``, or ``None`` if the filling is unique."""
    _require_connected(s)
    m = s.max_column_length
    if m > n:
        raise PreconditionViolation(f"longest column of {s} is {m} > n={n}")
    if m == n:
        first_two = _take(enumerate_lattice_fillings(s, max_entry=n), 2)
        return first_two[1] if len(first_two) == 2 else None
    if as_straight_or_rotated(s) is not None:
        return None
    return _lemma_witness(s, n)
