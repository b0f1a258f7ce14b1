"""Enumeration of signatures and the extremal figure-eight searches.

The closed-form traces are strictly increasing in every entry on the strata
that carry figure eights, so minima over each puncture stratum occur at the
smallest admissible entries and a small finite cutoff is exhaustive; the
tests re-run searches at larger cutoffs to confirm insensitivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import figure_eight_records
from .halfplane import INF, axis_of, distance_to_geodesic, translation_length
from .triangle import InvalidSignature, TriangleSignature, build_group, orbifold_area
from .words import GroupWord, enumerate_reduced_words

TRACE_TIE_TOL = 1e-12   # traces closer than this count as the same minimum


@dataclass(frozen=True)
class ExtremalResult:
    signature: TriangleSignature
    word: str
    trace_abs: float
    length: float
    puncture_count: int
    unique: bool             # exactly one minimizing unoriented geodesic
    n_minimizers: int
    runner_up: tuple | None  # (signature, word, trace_abs) of the next value
    cutoff: int


def iter_signatures(puncture_count, cutoff):
    """All valid ordered signatures with the given number of inf entries and
    finite entries <= cutoff."""
    def emit(p, q, r):
        try:
            return TriangleSignature.of(p, q, r)
        except InvalidSignature:
            return None

    out = []
    if puncture_count == 0:
        for p in range(2, cutoff + 1):
            for q in range(p, cutoff + 1):
                for r in range(q, cutoff + 1):
                    sig = emit(p, q, r)
                    if sig:
                        out.append(sig)
    elif puncture_count == 1:
        for p in range(2, cutoff + 1):
            for q in range(p, cutoff + 1):
                sig = emit(p, q, INF)
                if sig:
                    out.append(sig)
    elif puncture_count == 2:
        for p in range(2, cutoff + 1):
            sig = emit(p, INF, INF)
            if sig:
                out.append(sig)
    elif puncture_count == 3:
        out.append(TriangleSignature.of(INF, INF, INF))
    else:
        raise ValueError(f"puncture_count must be 0..3, got {puncture_count}")
    return out


def _candidates(puncture_count, cutoff, signature_filter):
    for sig in iter_signatures(puncture_count, cutoff):
        if signature_filter is not None and not signature_filter(sig):
            continue
        for rec in figure_eight_records(sig):
            yield rec


def min_figure8(puncture_count, cutoff=8, signature_filter=None):
    """Shortest figure-eight geodesic over one puncture stratum.

    Candidate records are already deduplicated to one per unoriented
    geodesic, so the uniqueness flag counts geodesics, not words.  Returns
    None when no candidate exists (possible only under a filter).
    """
    records = sorted(
        _candidates(puncture_count, cutoff, signature_filter),
        key=lambda rec: rec.trace_abs,
    )
    if not records:
        return None
    best = records[0]
    minimizers = [
        rec for rec in records if rec.trace_abs <= best.trace_abs + TRACE_TIE_TOL
    ]
    runner = next(
        (
            (rec.signature, rec.word, rec.trace_abs)
            for rec in records
            if rec.trace_abs > best.trace_abs + TRACE_TIE_TOL
        ),
        None,
    )
    return ExtremalResult(
        signature=best.signature,
        word=best.word,
        trace_abs=best.trace_abs,
        length=translation_length(best.trace_abs),
        puncture_count=puncture_count,
        unique=len(minimizers) == 1,
        n_minimizers=len(minimizers),
        runner_up=runner,
        cutoff=cutoff,
    )


def global_min_figure8(cutoff=8, signature_filter=None):
    """Shortest figure-eight geodesic over all puncture strata."""
    results = [
        res
        for n in range(4)
        if (res := min_figure8(n, cutoff, signature_filter)) is not None
    ]
    if not results:
        return None
    best = min(results, key=lambda res: res.trace_abs)
    others = [
        res for res in results if res.trace_abs > best.trace_abs + TRACE_TIE_TOL
    ]
    runner = best.runner_up
    for res in others:
        cand = (res.signature, res.word, res.trace_abs)
        if runner is None or cand[2] < runner[2]:
            runner = cand
    ties = sum(
        res.n_minimizers
        for res in results
        if res.trace_abs <= best.trace_abs + TRACE_TIE_TOL
    )
    return ExtremalResult(
        signature=best.signature,
        word=best.word,
        trace_abs=best.trace_abs,
        length=best.length,
        puncture_count=best.puncture_count,
        unique=ties == 1,
        n_minimizers=ties,
        runner_up=runner,
        cutoff=cutoff,
    )


GAMMA_STAR_TRACE = 2.0 * math.cos(2.0 * math.pi / 7.0) + 1.0


@dataclass(frozen=True)
class GammaStarResult:
    word: GroupWord
    trace_abs: float
    length: float
    axis_endpoints: tuple
    point_distance: float    # distance from the axis to an order-2 fixed point


def gamma_star_search(budget=8, trace_tol=1e-8, point_tol=1e-8):
    """Hunt, in the (2, 3, 7) group, for the shortest non-simple geodesic.

    Looks for a reduced word whose |trace| matches 2 cos(2 pi / 7) + 1 and
    whose axis passes through a fixed point of an order-two element (the
    projection runs through the order-2 cone point).  Best effort: returns
    None when no witness exists within the budget.
    """
    group = build_group(TriangleSignature.of(2, 3, 7))
    codes, lengths, mats = enumerate_reduced_words(group, budget)
    traces = np.abs(mats[:, 0] + mats[:, 3])
    hits = np.flatnonzero((np.abs(traces - GAMMA_STAR_TRACE) < trace_tol))
    if hits.size == 0:
        return None

    # orbit of i = lifts of the order-2 cone point (A fixes i)
    denom = mats[:, 2] * 1j + mats[:, 3]
    orbit = (mats[:, 0] * 1j + mats[:, 1]) / denom
    orbit = np.concatenate(([1j], orbit))

    for i in hits[np.argsort(lengths[hits], kind="stable")]:
        word = GroupWord.from_code(codes[i], lengths[i])
        g = word.evaluate(group)
        axis = axis_of(g)
        dists = _axis_point_distances(axis, orbit)
        best = float(dists.min())
        if best < point_tol:
            return GammaStarResult(
                word=word,
                trace_abs=float(traces[i]),
                length=translation_length(float(traces[i])),
                axis_endpoints=axis.endpoints(),
                point_distance=best,
            )
    return None


def _axis_point_distances(axis, points):
    if axis.is_vertical:
        w = points - axis.e1
    else:
        w = (points - axis.e2) / (points - axis.e1)
    return np.arcsinh(np.abs(w.real) / w.imag)


@dataclass(frozen=True)
class SummaryRow:
    classification: str
    geodesic: str
    trace_abs: float
    length: float
    orbifold: str
    area: float


def minimal_nonsimple_summary(cutoff=8):
    """The three-row summary of minimal-length non-simple closed geodesics.

    Row 1 is the known shortest non-simple geodesic (through the order-2
    cone point of the (2,3,7) orbifold), evaluated from its closed form.
    Row 2 is the shortest figure eight over all triangle-group orbifolds,
    row 3 the shortest over the three-puncture orbifold; both are searched.
    """
    sig237 = TriangleSignature.of(2, 3, 7)
    row1 = SummaryRow(
        classification="shortest non-simple closed geodesic on a 2-orbifold",
        geodesic="passes through the order-2 cone point",
        trace_abs=GAMMA_STAR_TRACE,
        length=translation_length(GAMMA_STAR_TRACE),
        orbifold=str(sig237),
        area=orbifold_area(sig237),
    )
    best = global_min_figure8(cutoff)
    row2 = SummaryRow(
        classification=(
            "shortest figure-eight geodesic on a 2-orbifold "
            "without order-2 cone points"
        ),
        geodesic="figure eight around the two order-3 cone points",
        trace_abs=best.trace_abs,
        length=best.length,
        orbifold=str(best.signature),
        area=orbifold_area(best.signature),
    )
    punct = min_figure8(3, cutoff)
    row3 = SummaryRow(
        classification="shortest non-simple closed geodesic on a 2-manifold",
        geodesic="all three figure-eight geodesics",
        trace_abs=punct.trace_abs,
        length=punct.length,
        orbifold=str(punct.signature),
        area=orbifold_area(punct.signature),
    )
    return (row1, row2, row3)
