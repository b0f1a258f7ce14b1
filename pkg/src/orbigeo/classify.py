"""Type and projection of the three distinguished elements.

For each signature the products B*A^-1, B*C^-1, A*C^-1 are classified by an
exact integer case analysis on (p, q, r); the closed-form trace provides an
independent numeric check.  The case analysis is authoritative: floating
point only cross-checks it, so large r never flips a verdict near |tr| = 2.

Case table, for ordered signatures (entries of inf read as the parabolic /
puncture limit):

  p = 2:  ba bounds the order-r point; ac bounds the order-q point;
          bc bounds the order-r point when q = 3, runs from the order-2
          point to the order-4 point and back when q = 4, and is the figure
          eight around the order-q and order-r points when q >= 5.
  p = 3:  ba and ac are conjugate and hyperbolic; their common projection
          passes through the order-3 point when q = r, and is the figure
          eight around the order-3 and order-q points when q != r.  bc is
          that same geodesic traversed backwards when q = 3, and the figure
          eight around the order-q and order-r points when q >= 4.
  p >= 4: all three are figure eights, around the order pairs (p, q),
          (q, r), (p, r) respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .halfplane import (
    CLASSIFY_TOL,
    INF,
    IsometryClass,
    classify_trace,
    imaginary_axis_crossing,
    translation_length,
)
from .triangle import PAIR_WORDS, TriangleSignature, build_group, pair_trace
from .words import GroupWord, enumerate_reduced_words

import numpy as np


class InconsistentClassification(RuntimeError):
    """The numeric isometry type contradicts the integer case table (a bug)."""


@dataclass(frozen=True)
class ProjectionDescriptor:
    """What the free-homotopy class projects to on the orbifold.

    kind: "cone_point" (a loop around one cone point or puncture),
    "figure_eight" (one transverse self-crossing, avoiding all cone points),
    "through_order3" (closed geodesic through the order-3 point, q = r),
    "order2_order4_path" (runs between the order-2 and order-4 points).
    bounds gives the orders of the bounded points (INF marks a puncture).
    """

    kind: str
    order: float | None = None
    bounds: tuple | None = None
    reversed_orientation: bool = False

    @property
    def is_figure_eight(self):
        return self.kind == "figure_eight"


@dataclass(frozen=True)
class ClassificationRecord:
    signature: TriangleSignature
    word: str
    isometry: IsometryClass
    descriptor: ProjectionDescriptor
    trace_abs: float
    length: float | None
    geodesic_key: str          # words sharing a key project to one geodesic
    shared_with: tuple         # the words carrying that same geodesic


def _case_table(sig, word):
    """(expected kind, descriptor, geodesic key, sharing words)."""
    p, q, r = sig.entries()
    if p == 2:
        if word == "ba":
            return _cone(r), ("ba", ("ba",))
        if word == "ac":
            return _cone(q), ("ac", ("ac",))
        if q == 3:
            return _cone(r), ("bc", ("bc",))
        if q == 4:
            kind = "hyperbolic"
            return (kind, ProjectionDescriptor("order2_order4_path", bounds=(2, 4))), (
                "bc",
                ("bc",),
            )
        return (
            "hyperbolic",
            ProjectionDescriptor("figure_eight", bounds=(q, r)),
        ), ("bc", ("bc",))
    if p == 3:
        if word in ("ba", "ac"):
            if q == r:
                desc = ProjectionDescriptor("through_order3", bounds=(q, r))
            else:
                desc = ProjectionDescriptor("figure_eight", bounds=(3, q))
            shared = ("ba", "bc", "ac") if q == 3 else ("ba", "ac")
            return ("hyperbolic", desc), ("ba", shared)
        # word == "bc"
        if q == 3:
            # conjugate to the inverse of ba: the same unoriented geodesic
            desc = ProjectionDescriptor(
                "figure_eight", bounds=(3, q), reversed_orientation=True
            )
            return ("hyperbolic", desc), ("ba", ("ba", "bc", "ac"))
        return (
            "hyperbolic",
            ProjectionDescriptor("figure_eight", bounds=(q, r)),
        ), ("bc", ("bc",))
    # p >= 4
    bounds = {"ba": (p, q), "bc": (q, r), "ac": (p, r)}[word]
    return ("hyperbolic", ProjectionDescriptor("figure_eight", bounds=bounds)), (
        word,
        (word,),
    )


def _cone(order):
    kind = "parabolic" if order == INF else "elliptic"
    return kind, ProjectionDescriptor("cone_point", order=order)


def classify_pair_element(sig, word, tol=CLASSIFY_TOL):
    """ClassificationRecord for one of ba, bc, ac in the given signature.

    Raises InconsistentClassification when the trace-based type disagrees
    with the case table; that signals a bug, not a domain error.
    """
    if word not in PAIR_WORDS:
        raise ValueError(f"word must be one of {PAIR_WORDS}, got {word!r}")
    (expected_kind, descriptor), (key, shared) = _case_table(sig, word)
    trace_abs = pair_trace(sig, word)
    numeric_kind = classify_trace(trace_abs, tol)
    if numeric_kind != expected_kind:
        raise InconsistentClassification(
            f"{sig} {word}: case table says {expected_kind}, "
            f"|trace| = {trace_abs} says {numeric_kind}"
        )
    if expected_kind == "hyperbolic":
        length = translation_length(trace_abs)
        isometry = IsometryClass("hyperbolic", trace_abs, translation_length=length)
    elif expected_kind == "parabolic":
        length = None
        isometry = IsometryClass("parabolic", trace_abs)
    else:
        length = None
        order = descriptor.order
        isometry = IsometryClass(
            "elliptic", trace_abs, order=int(order) if order != INF else None
        )
    return ClassificationRecord(
        signature=sig,
        word=word,
        isometry=isometry,
        descriptor=descriptor,
        trace_abs=trace_abs,
        length=length,
        geodesic_key=key,
        shared_with=shared,
    )


def classify_all(sig, tol=CLASSIFY_TOL):
    return tuple(classify_pair_element(sig, w, tol) for w in PAIR_WORDS)


def figure_eight_records(sig, tol=CLASSIFY_TOL):
    """The figure-eight records of a signature, one per distinct geodesic."""
    seen = {}
    for rec in classify_all(sig, tol):
        if rec.descriptor.is_figure_eight and rec.geodesic_key not in seen:
            seen[rec.geodesic_key] = rec
    return tuple(seen.values())


@dataclass(frozen=True)
class AxisCrossingReport:
    """Where the axis of B*A^-1 meets the imaginary axis, for p = 3."""

    signature: TriangleSignature
    is_hyperbolic: bool
    crossing_height: float
    at_i: bool


def check_axis_crossing_ba(sig, tol=1e-9):
    """For (3, q, r): the axis of B*A^-1 meets the imaginary axis at height
    t <= 1, with t = 1 exactly when q = r."""
    if sig.p != 3:
        raise ValueError(f"expected a signature with p = 3, got {sig}")
    group = build_group(sig)
    g = group.pair_element("ba")
    height = imaginary_axis_crossing(g)
    if height > 1.0 + tol:
        raise InconsistentClassification(
            f"{sig}: crossing height {height} exceeds 1"
        )
    at_i = abs(height - 1.0) < tol
    if at_i != (sig.q == sig.r):
        raise InconsistentClassification(
            f"{sig}: crossing at i is {at_i} but q == r is {sig.q == sig.r}"
        )
    return AxisCrossingReport(sig, True, height, at_i)


def conjugacy_witness(group, g, h, max_len=4, tol=1e-8):
    """A reduced word w with w g w^-1 == +-h, or None within the bound.

    None is only a failure to find a witness, never a proof of
    non-conjugacy.
    """
    if g.projectively_equal(h, tol):
        return GroupWord()
    codes, lengths, mats = enumerate_reduced_words(group, max_len, conjugate=g)
    target = np.array(h.entries())
    plus = np.abs(mats - target).max(axis=1)
    minus = np.abs(mats + target).max(axis=1)
    hit = np.minimum(plus, minus) < tol
    if not hit.any():
        return None
    idx = np.flatnonzero(hit)
    best = idx[np.argmin(lengths[idx])]
    return GroupWord.from_code(codes[best], lengths[best])
