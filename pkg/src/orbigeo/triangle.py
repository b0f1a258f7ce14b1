"""Normalized triangle groups of the upper half-plane.

A signature (p, q, r) with 2 <= p <= q <= r <= inf and 1/p + 1/q + 1/r < 1
determines a group generated by two elliptic maps fixing i and i/lambda.
This module builds the generator matrices, the fundamental quadrilateral
and its side reflections, and evaluates the closed-form traces of the three
distinguished products B*A^-1, B*C^-1, A*C^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .halfplane import (
    INF,
    Geodesic,
    MoebiusMap,
    ReflectionMap,
    crossing_angle,
    mirror_geodesic,
    reflection_in,
)

PAIR_WORDS = ("ba", "bc", "ac")


class InvalidSignature(ValueError):
    """The triple is not a hyperbolic triangle-group signature."""


class LambdaUndefined(ValueError):
    """lambda(p, q, r) needs finite p and q."""


class MatricesUnavailable(ValueError):
    """No explicit generator matrices exist for this signature."""


def cos_pi_over(n):
    """cos(pi/n) with the convention cos(pi/inf) = 1."""
    return 1.0 if n == INF else math.cos(math.pi / n)


def sin_pi_over(n):
    """sin(pi/n) with the convention sin(pi/inf) = 0."""
    return 0.0 if n == INF else math.sin(math.pi / n)


@dataclass(frozen=True)
class TriangleSignature:
    """Ordered triple (p, q, r), entries integers >= 2 or INF."""

    p: float
    q: float
    r: float
    input_order: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for n in (self.p, self.q, self.r):
            if n != INF and (not float(n).is_integer() or n < 2):
                raise InvalidSignature(f"entries must be integers >= 2 or inf, got {n}")
        if not (self.p <= self.q <= self.r):
            raise InvalidSignature(f"entries must be sorted ascending: {self.entries()}")
        if 1.0 / self.p + 1.0 / self.q + 1.0 / self.r >= 1.0:
            raise InvalidSignature(
                f"signature {self.entries()} is not hyperbolic (angle sum >= pi)"
            )

    @classmethod
    def of(cls, p, q, r):
        """Sort the entries ascending, remembering the order they came in."""
        given = tuple(INF if n == INF else int(n) for n in (p, q, r))
        s = tuple(sorted(given))
        return cls(*s, input_order=given)

    @classmethod
    def parse(cls, text):
        """Parse "p,q,r" with "inf" for infinite entries."""
        parts = [t.strip().lower() for t in str(text).split(",")]
        if len(parts) != 3:
            raise InvalidSignature(f"expected three comma-separated entries, got {text!r}")
        entries = []
        for t in parts:
            if t in ("inf", "infinity", "oo"):
                entries.append(INF)
            else:
                try:
                    entries.append(int(t))
                except ValueError:
                    raise InvalidSignature(f"bad signature entry {t!r}") from None
        return cls.of(*entries)

    def entries(self):
        return (self.p, self.q, self.r)

    @property
    def puncture_count(self):
        return sum(1 for n in self.entries() if n == INF)

    @property
    def all_finite(self):
        return self.puncture_count == 0

    @property
    def is_exceptional(self):
        """Signatures (2,3,r) and (2,4,r): the orbifolds with no figure eight."""
        return self.p == 2 and self.q in (3, 4)

    def matrices_available(self):
        """Generator matrices exist when p, q are finite, or for (inf,inf,inf)."""
        return (self.p != INF and self.q != INF) or self.puncture_count == 3

    def __str__(self):
        return ",".join("inf" if n == INF else str(int(n)) for n in self.entries())


def lambda_and_E(sig):
    """The scale lambda > 1 fixing the second vertex at i/lambda, and the
    law-of-cosines numerator E = cos(pi/r) + cos(pi/p)cos(pi/q).

    lambda satisfies lambda + 1/lambda = 2E / (sin(pi/p) sin(pi/q)); the "+"
    root keeps lambda > 1.
    """
    if sig.p == INF or sig.q == INF:
        raise LambdaUndefined(f"lambda undefined for {sig} (p, q must be finite)")
    E = cos_pi_over(sig.r) + cos_pi_over(sig.p) * cos_pi_over(sig.q)
    s = sin_pi_over(sig.p) * sin_pi_over(sig.q)
    lam = (E + math.sqrt(E * E - s * s)) / s
    return lam, E


def lambda_of(sig):
    return lambda_and_E(sig)[0]


@dataclass(frozen=True)
class TriangleGroup:
    """Generators of a normalized triangle group.

    A is elliptic of order p fixing i, B is elliptic of order q fixing
    i/lambda, and C = B^-1 A^-1 is elliptic of order r (parabolic when
    r = inf) fixing the vertex left of the imaginary axis.
    """

    signature: TriangleSignature
    lam: float | None
    A: MoebiusMap
    B: MoebiusMap
    C: MoebiusMap
    vertices: tuple | None    # (i, i/lambda, C-fixed vertex)
    sides: tuple | None       # geodesics carrying s1, s2, s3

    @property
    def base_point(self):
        """Interior reference point of the fundamental quadrilateral."""
        if self.lam is None:
            return 1j
        return 1j * self.lam**-0.5

    def generators(self):
        """The four letters A, A^-1, B, B^-1 in kernel order."""
        return (self.A, self.A.inverse(), self.B, self.B.inverse())

    def pair_element(self, word):
        """Matrix of one of the distinguished products ba, bc, ac."""
        if word == "ba":
            return self.B @ self.A.inverse()
        if word == "bc":
            return self.B @ self.C.inverse()
        if word == "ac":
            return self.A @ self.C.inverse()
        raise ValueError(f"word must be one of {PAIR_WORDS}, got {word!r}")


def _elliptic_fixed_point(g):
    """Interior fixed point of an elliptic map, or its boundary fixed point
    when the map is parabolic."""
    a, b, c, d = g.entries()
    disc = (a + d) ** 2 - 4.0
    if disc >= -1e-12:  # parabolic within tolerance
        return complex((a - d) / (2.0 * c), 0.0)
    return complex((a - d) / (2.0 * c), math.sqrt(-disc) / (2.0 * abs(c)))


def build_group(sig):
    """Construct the generator matrices and the triangle data for a signature.

    Raises MatricesUnavailable for (p, inf, inf) with finite p: no explicit
    matrices exist there, but all trace and length queries still work through
    pair_trace.
    """
    if not sig.matrices_available():
        raise MatricesUnavailable(
            f"no generator matrices for {sig}; use pair_trace for lengths"
        )
    if sig.puncture_count == 3:
        A = MoebiusMap(1.0, 2.0, 0.0, 1.0)
        B = MoebiusMap(1.0, 0.0, -2.0, 1.0)
        C = B.inverse() @ A.inverse()
        return TriangleGroup(sig, None, A, B, C, None, None)

    lam, _ = lambda_and_E(sig)
    cp, sp = cos_pi_over(sig.p), sin_pi_over(sig.p)
    cq, sq = cos_pi_over(sig.q), sin_pi_over(sig.q)
    A = MoebiusMap(cp, -sp, sp, cp)
    B = MoebiusMap(cq, -sq / lam, lam * sq, cq)
    C = B.inverse() @ A.inverse()

    top = 1j
    bottom = 1j / lam
    corner = _elliptic_fixed_point(C)
    s1 = Geodesic.vertical(0.0)
    if corner.imag > 1e-12:
        s2 = Geodesic.through(top, corner)
        s3 = Geodesic.through(bottom, corner)
    else:  # r = inf: the corner is an ideal vertex on the real axis
        s2 = Geodesic.through_point_and_endpoint(top, corner.real)
        s3 = Geodesic.through_point_and_endpoint(bottom, corner.real)
    return TriangleGroup(sig, lam, A, B, C, (top, bottom, corner), (s1, s2, s3))


@dataclass(frozen=True)
class FundamentalDomain:
    """The quadrilateral obtained by mirroring the triangle across s1.

    quad_vertices runs counterclockwise: corner, bottom, mirrored corner,
    top.  quad_edges holds (start, end, geodesic) for the four sides, and
    reflections are the maps in the geodesics carrying s1, s2, s3.
    """

    group: TriangleGroup
    quad_vertices: tuple
    quad_edges: tuple
    reflections: tuple       # (sigma1, sigma2, sigma3)
    angles: tuple            # triangle angles at i, i/lambda, corner

    @property
    def sigma1(self):
        return self.reflections[0]

    @property
    def sigma2(self):
        return self.reflections[1]

    @property
    def sigma3(self):
        return self.reflections[2]


def _angle_at(l1, l2, z):
    if z.imag <= 1e-12:
        return 0.0  # ideal vertex
    return crossing_angle(l1, l2, z)


def fundamental_domain(group):
    """Quadrilateral fundamental domain: triangle plus its s1-mirror image."""
    if group.sides is None:
        raise MatricesUnavailable(
            f"no normalized fundamental domain for {group.signature}"
        )
    top, bottom, corner = group.vertices
    s1, s2, s3 = group.sides
    mirrored = complex(-corner.real, corner.imag)
    edges = (
        (corner, top, s2),
        (top, mirrored, mirror_geodesic(s2)),
        (mirrored, bottom, mirror_geodesic(s3)),
        (bottom, corner, s3),
    )
    angles = (
        _angle_at(s1, s2, top),
        _angle_at(s1, s3, bottom),
        _angle_at(s2, s3, corner),
    )
    return FundamentalDomain(
        group=group,
        quad_vertices=(corner, top, mirrored, bottom),
        quad_edges=edges,
        reflections=(reflection_in(s1), reflection_in(s2), reflection_in(s3)),
        angles=angles,
    )


def pair_trace(sig, word):
    """Closed-form |trace| of one of the three distinguished products.

    |tr(BA^-1)| = 2[2 cos(pi/p) cos(pi/q) + cos(pi/r)] and the two analogues
    obtained by moving the lone cosine to p or q.  Total for every valid
    signature, including those without matrices.
    """
    cp, cq, cr = (cos_pi_over(n) for n in sig.entries())
    if word == "ba":
        return 2.0 * (2.0 * cp * cq + cr)
    if word == "bc":
        return 2.0 * (2.0 * cq * cr + cp)
    if word == "ac":
        return 2.0 * (2.0 * cp * cr + cq)
    raise ValueError(f"word must be one of {PAIR_WORDS}, got {word!r}")


def orbifold_area(sig):
    """Area 2*pi*(1 - 1/p - 1/q - 1/r) of the quotient orbifold."""
    return 2.0 * (math.pi - math.pi / sig.p - math.pi / sig.q - math.pi / sig.r)


def validate_signature(genus, orders, punctures=0, boundaries=0):
    """Admissibility of a general signature: 2g - 2 + n + b + sum(1 - 1/m) > 0."""
    total = 2.0 * genus - 2.0 + punctures + boundaries
    for m in orders:
        if m != INF and m < 2:
            return False
        total += 1.0 - (0.0 if m == INF else 1.0 / m)
    return total > 0.0
