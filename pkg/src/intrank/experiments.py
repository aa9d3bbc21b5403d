"""Batch rank-iteration statistics and least-squares fits."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import log

import numpy as np

from .errors import DegenerateInput, DomainError, EmptyInput
from .rank import average_rank_width, iterate_to_chain

CSV_COLUMNS = ("poset_id", "size", "height", "width", "iterations",
               "final_chain_size", "final_height", "avg_rank_width")


@dataclass(frozen=True)
class IterationRecord:
    """One poset's rank-iteration outcome."""

    poset_id: str
    size: int
    height: int
    width: int
    iterations: int
    final_chain_size: int
    final_height: int
    avg_rank_width: Fraction


def run_iteration_experiment(posets, ids=None) -> list[IterationRecord]:
    """Iterate every poset to a chain and record the measurements."""
    posets = list(posets)
    if ids is None:
        ids = [f"P{i:05d}" for i in range(len(posets))]
    records = []
    for pid, p in zip(ids, posets, strict=True):
        trace = iterate_to_chain(p)
        final = trace.stages[-1].order if trace.stages else p
        records.append(IterationRecord(
            poset_id=str(pid),
            size=p.n,
            height=p.height(),
            width=p.width(),
            iterations=trace.iterations_to_chain,
            final_chain_size=final.n,
            final_height=final.height(),
            avg_rank_width=average_rank_width(p),
        ))
    return records


@dataclass(frozen=True)
class GroupMeans:
    """Exact per-group means of the record measurements."""

    key: int
    count: int
    iterations: Fraction
    final_chain_size: Fraction
    final_height: Fraction
    avg_rank_width: Fraction


def aggregate_by(records, key: str) -> dict[int, GroupMeans]:
    """Group records by size or height; means stay exact rationals."""
    if key not in ("size", "height"):
        raise ValueError("key must be 'size' or 'height'")
    records = list(records)
    if not records:
        raise EmptyInput("no records to aggregate")
    groups: dict[int, list[IterationRecord]] = {}
    for r in records:
        groups.setdefault(getattr(r, key), []).append(r)
    out = {}
    for g in sorted(groups):
        rs = groups[g]
        c = len(rs)
        out[g] = GroupMeans(
            key=g,
            count=c,
            iterations=Fraction(sum(r.iterations for r in rs), c),
            final_chain_size=Fraction(sum(r.final_chain_size for r in rs), c),
            final_height=Fraction(sum(r.final_height for r in rs), c),
            avg_rank_width=sum((r.avg_rank_width for r in rs), Fraction(0)) / c,
        )
    return out


@dataclass(frozen=True)
class FitResult:
    kind: str
    a: float
    b: float
    r_squared: float


def _ols(xs, ys, kind: str) -> FitResult:
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError("x and y lengths differ")
    if xs.size < 2 or np.all(xs == xs[0]):
        raise DegenerateInput("fit needs at least two distinct x values")
    a, b = np.polyfit(xs, ys, 1)
    residuals = ys - (a * xs + b)
    ss_res = float(residuals @ residuals)
    centered = ys - ys.mean()
    ss_tot = float(centered @ centered)
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res < 1e-12 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return FitResult(kind, float(a), float(b), r2)


def linear_fit(xs, ys) -> FitResult:
    """Least squares y = a*x + b with coefficient of determination."""
    return _ols(xs, ys, "linear")


def log_fit(xs, ys) -> FitResult:
    """Least squares y = a*ln(x) + b; requires strictly positive x."""
    if any(x <= 0 for x in xs):
        raise DomainError("log fit needs strictly positive x values")
    fit = _ols([log(x) for x in xs], ys, "logarithmic")
    return fit


def write_records_csv(records, path) -> None:
    """Write records with the fixed column schema."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([r.poset_id, r.size, r.height, r.width,
                             r.iterations, r.final_chain_size, r.final_height,
                             str(float(r.avg_rank_width))])
