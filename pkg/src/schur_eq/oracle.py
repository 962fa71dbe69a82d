"""Brute-force monomial expansions straight from the tableau definition.

Nothing here reuses the Littlewood-Richardson search or the semistandard check
from :mod:`schur_eq.tableaux`; the point is to have an independent ground truth.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Tuple

from .errors import VariableCountMismatch
from .shapes import Partition, SkewShape
from .tableaux import Tableau

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialPolynomial:
    """Integer polynomial in ``x_1..x_nvars`` stored as ``exponent vector -> coefficient``."""

    nvars: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Exponent, int] = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != self.nvars:
                raise ValueError(f"exponent {exp} does not have length {self.nvars}")
            if coeff:
                clean[exp] = coeff
        object.__setattr__(self, "terms", clean)

    def __add__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        _check_nvars(self, other)
        total = Counter(self.terms)
        total.update(other.terms)
        return MonomialPolynomial(self.nvars, dict(total))

    def scale(self, factor: int) -> "MonomialPolynomial":
        return MonomialPolynomial(self.nvars, {e: factor * c for e, c in self.terms.items()})

    def permute(self, perm: Iterable[int]) -> "MonomialPolynomial":
        """Rename variable ``perm[i]`` to ``x_{i+1}`` (0-based ``perm``)."""
        perm = tuple(perm)
        return MonomialPolynomial(self.nvars, {tuple(e[p] for p in perm): c for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def render(self) -> str:
        lines = []
        for exp in sorted(self.terms):
            factors = " ".join(f"x{i}^{e}" for i, e in enumerate(exp, start=1) if e)
            lines.append(f"{self.terms[exp]} * {factors}".rstrip(" *") if factors else str(self.terms[exp]))
        return "\n".join(lines) if lines else "0"

    @classmethod
    def zero(cls, nvars: int) -> "MonomialPolynomial":
        return cls(nvars, {})


def _check_nvars(p: MonomialPolynomial, q: MonomialPolynomial) -> None:
    if p.nvars != q.nvars:
        raise VariableCountMismatch(f"{p.nvars} variables vs {q.nvars} variables")


def enumerate_ssyt(s: SkewShape, max_entry: int) -> Iterator[Tableau]:
    """Every semistandard filling of ``s`` with entries in ``1..max_entry``.

    Boxes are filled row by row, left to right, trying entries in increasing
    order.  Disconnected shapes are fine here.
    """
    boxes = sorted(s.cells)
    filled: dict[Tuple[int, int], int] = {}

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(boxes):
            yield Tableau(s, dict(filled))
            return
        r, c = boxes[k]
        lowest = 1
        if (r, c - 1) in filled:
            lowest = max(lowest, filled[(r, c - 1)])
        if (r - 1, c) in filled:
            lowest = max(lowest, filled[(r - 1, c)] + 1)
        for value in range(lowest, max_entry + 1):
            filled[(r, c)] = value
            yield from fill(k + 1)
        filled.pop((r, c), None)

    yield from fill(0)


def monomial_expansion(s: SkewShape, nvars: int) -> MonomialPolynomial:
    """``sum of x^T`` over semistandard ``T`` of shape ``s`` with ``x_m = 0`` for ``m > nvars``."""
    terms: Counter[Exponent] = Counter()
    for t in enumerate_ssyt(s, nvars):
        tally = Counter(t.entries.values())
        terms[tuple(tally[i] for i in range(1, nvars + 1))] += 1
    return MonomialPolynomial(nvars, dict(terms))


@lru_cache(maxsize=None)
def _schur_polynomial(nu: Partition, nvars: int) -> MonomialPolynomial:
    return monomial_expansion(SkewShape(nu), nvars)


def schur_polynomial(nu: Iterable[int], nvars: int) -> MonomialPolynomial:
    nu = Partition(nu)
    if not nu:
        return MonomialPolynomial(nvars, {(0,) * nvars: 1})
    return _schur_polynomial(nu, nvars)


def poly_equal(p: MonomialPolynomial, q: MonomialPolynomial) -> bool:
    _check_nvars(p, q)
    return p.terms == q.terms


def combine(expansion: Mapping[Iterable[int], int], nvars: int) -> MonomialPolynomial:
    """Evaluate ``sum c_nu s_nu`` in ``nvars`` variables."""
    total = MonomialPolynomial.zero(nvars)
    for nu, coeff in expansion.items():
        total = total + schur_polynomial(nu, nvars).scale(coeff)
    return total
