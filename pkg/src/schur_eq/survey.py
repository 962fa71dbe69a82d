"""Exhaustive cross-checking of the equality predicates over all small shapes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .equality import (
    EQUALS,
    NOT_EQUAL,
    ZERO,
    eta_partition,
    schur_equal_finite,
    schur_equal_infinite,
    structural_closure_contains,
)
from .littlewood_richardson import SchurExpansion, expand_skew_schur, restrict_expansion
from .shapes import Partition, SkewShape, connected_skew_shapes


def _single_term(e: SchurExpansion) -> Optional[Partition]:
    if len(e) == 1:
        (nu, coeff), = e.items()
        if coeff == 1:
            return nu
    return None


def _verdict_dict(status: str, partition: Optional[Partition]) -> dict:
    out: dict = {"status": status}
    if partition is not None:
        out["partition"] = list(partition)
    return out


def survey_record(s: SkewShape, nvars: Sequence[int]) -> dict:
    """Run every check on one shape; ``agreement`` is false if any two routes differ."""
    expansion = expand_skew_schur(s)
    single = _single_term(expansion)
    nu = schur_equal_infinite(s)
    agreement = nu == single
    m = s.max_column_length
    finite = {}
    for n in nvars:
        verdict = schur_equal_finite(s, n)
        restricted = _single_term(restrict_expansion(expansion, n))
        if m > n:
            ok = verdict.status == ZERO and not restrict_expansion(expansion, n)
        elif m < n:
            ok = verdict.partition == restricted == nu
        else:
            eta = eta_partition(s)
            structural = structural_closure_contains(s, n)
            semantic = verdict.status == EQUALS
            ok = semantic == structural == (restricted == eta) and (not semantic or verdict.partition == eta)
        if verdict.status == NOT_EQUAL and verdict.witnesses is None:
            ok = False
        agreement = agreement and ok
        finite[str(n)] = _verdict_dict(verdict.status, verdict.partition)
    return {
        "shape": str(s),
        "boxes": s.size,
        "max_column_length": m,
        "infinite": _verdict_dict(EQUALS if nu is not None else NOT_EQUAL, nu),
        "finite": finite,
        "agreement": agreement,
    }


def _record_from_text(args: tuple) -> dict:
    outer, inner, nvars = args
    return survey_record(SkewShape(Partition(outer), Partition(inner)), nvars)


@dataclass
class SurveyReport:
    max_boxes: int
    nvars: list[int]
    records: list[dict] = field(default_factory=list)

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if not r["agreement"]]

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def summary(self) -> dict:
        per_n = {
            str(n): sum(1 for r in self.records if r["finite"][str(n)]["status"] == EQUALS) for n in self.nvars
        }
        return {
            "shapes": len(self.records),
            "disagreements": len(self.disagreements),
            "equal_infinite": sum(1 for r in self.records if r["infinite"]["status"] == EQUALS),
            "equal_finite": per_n,
        }

    def to_dict(self) -> dict:
        return {
            "max_boxes": self.max_boxes,
            "nvars": list(self.nvars),
            "records": self.records,
            "summary": self.summary(),
        }

    def render(self) -> str:
        lines = []
        for r in self.records:
            fin = " ".join(
                f"n={n}:{v['status']}" + (f"({','.join(map(str, v['partition']))})" if "partition" in v else "")
                for n, v in r["finite"].items()
            )
            inf = r["infinite"]
            inf_text = inf["status"] + (f"({','.join(map(str, inf['partition']))})" if "partition" in inf else "")
            flag = "ok" if r["agreement"] else "DISAGREE"
            lines.append(f"{r['shape']:<24} boxes={r['boxes']} m={r['max_column_length']} inf={inf_text} {fin} {flag}".rstrip())
        s = self.summary()
        lines.append(
            f"shapes={s['shapes']} disagreements={s['disagreements']} equal_infinite={s['equal_infinite']} "
            + " ".join(f"equal_n{n}={c}" for n, c in s["equal_finite"].items())
        )
        return "\n".join(lines)


def run_survey(max_boxes: int, nvars: Iterable[int], jobs: int = 1) -> SurveyReport:
    """Check every connected shape with at most ``max_boxes`` boxes.

    Records follow the shape enumeration order whatever ``jobs`` is.
    """
    nvars = sorted(set(nvars))
    shapes = connected_skew_shapes(max_boxes) if max_boxes >= 1 else []
    report = SurveyReport(max_boxes, nvars)
    if jobs > 1 and len(shapes) > 1:
        tasks = [(tuple(s.outer), tuple(s.inner), nvars) for s in shapes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.records = list(pool.map(_record_from_text, tasks, chunksize=32))
    else:
        report.records = [survey_record(s, nvars) for s in shapes]
    return report
