"""Littlewood-Richardson fillings and Schur expansions of skew Schur functions.

The coefficient of ``s_nu`` in ``s_{lambda/mu}`` counts semistandard fillings of
``lambda/mu`` with content ``nu`` whose reading word is a lattice word.  The
search below fills boxes in reading order (rows top to bottom, each row right
to left), which is exactly the order in which the lattice condition is
checked, so every partial filling that breaks it is cut off immediately.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DisconnectedShape, SchurEqError
from .shapes import Partition, SkewShape
from .tableaux import Tableau, content_partition, reading_order


class SchurExpansion(Mapping):
    """Immutable ``Partition -> coefficient`` mapping; zero terms are never stored."""

    def __init__(self, terms: Optional[Mapping[Iterable[int], int]] = None) -> None:
        self._terms: dict[Partition, int] = {}
        for nu, coeff in (terms or {}).items():
            if coeff < 0:
                raise ValueError(f"negative coefficient {coeff} for {tuple(nu)}")
            if coeff:
                self._terms[Partition(nu)] = int(coeff)

    def __getitem__(self, nu: Iterable[int]) -> int:
        return self._terms[Partition(nu)]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(nu)}: {c}" for nu, c in self.sorted_terms())
        return f"SchurExpansion({{{inner}}})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"s[{nu}]" if c == 1 else f"{c}*s[{nu}]" for nu, c in self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms by partition in descending lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def restrict(self, n: int) -> "SchurExpansion":
        return restrict_expansion(self, n)

    def to_records(self) -> list[dict]:
        return [{"partition": list(nu), "coefficient": c} for nu, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "SchurExpansion":
        terms: dict[Partition, int] = {}
        for rec in records:
            nu = Partition(rec["partition"])
            if nu in terms:
                raise ValueError(f"duplicate partition {tuple(nu)} in records")
            terms[nu] = int(rec["coefficient"])
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_json(cls, text: str) -> "SchurExpansion":
        return cls.from_records(json.loads(text))


def _lattice_fillings(
    s: SkewShape,
    max_entry: Optional[int] = None,
    target: Optional[Sequence[int]] = None,
) -> Iterator[Tableau]:
    order = reading_order(s)
    index = {cell: k for k, cell in enumerate(order)}
    right = [index.get((r, c + 1)) for r, c in order]
    above = [index.get((r - 1, c)) for r, c in order]
    # boxes strictly below in the same column (each needs a strictly larger entry)
    below = [sum(1 for rr, cc in order if cc == c and rr > r) for r, c in order]
    cap = list(target) if target is not None else None
    size = len(order)
    vals = [0] * size
    counts = [0] * (size + 2)

    def place(k: int, largest: int) -> Iterator[Tableau]:
        if k == size:
            yield Tableau(s, dict(zip(order, vals)))
            return
        lo = vals[above[k]] + 1 if above[k] is not None else 1
        hi = vals[right[k]] if right[k] is not None else largest + 1
        hi = min(hi, largest + 1)
        if max_entry is not None:
            hi = min(hi, max_entry - below[k])
        if cap is not None:
            hi = min(hi, len(cap))
        for v in range(lo, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if cap is not None and counts[v] >= cap[v - 1]:
                continue
            vals[k] = v
            counts[v] += 1
            yield from place(k + 1, max(largest, v))
            counts[v] -= 1

    yield from place(0, 0)


def enumerate_lattice_fillings(s: SkewShape, max_entry: Optional[int] = None) -> Iterator[Tableau]:
    """Yield every semistandard filling of ``s`` with a lattice reading word.

    Entries are capped at ``max_entry`` when given.  Candidates are tried in
    increasing order box by box, so the output order is deterministic and the
    first filling is the column-superstandard one.
    """
    if not s.is_connected:
        raise DisconnectedShape(f"{s} is not connected")
    if max_entry is not None and max_entry < 1:
        raise SchurEqError(f"max_entry must be positive, got {max_entry}")
    return _lattice_fillings(s, max_entry)


def expand_skew_schur(s: SkewShape) -> SchurExpansion:
    """Expand ``s_{lambda/mu}`` in the Schur basis."""
    terms: dict[Partition, int] = {}
    for t in enumerate_lattice_fillings(s):
        nu = content_partition(t)
        terms[nu] = terms.get(nu, 0) + 1
    return SchurExpansion(terms)


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Littlewood-Richardson coefficient ``c^lam_{mu nu}``; 0 for incompatible input."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    if lam.size == mu.size:
        return 1
    return sum(1 for _ in _lattice_fillings(SkewShape(lam, mu), target=nu))


def restrict_expansion(e: Mapping, n: int) -> SchurExpansion:
    """Set all variables past ``x_n`` to zero: drop every ``s_nu`` with more than ``n`` parts."""
    if n < 1:
        raise SchurEqError(f"number of variables must be positive, got {n}")
    return SchurExpansion({nu: c for nu, c in e.items() if len(nu) <= n})
