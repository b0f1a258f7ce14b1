"""Exact-formula floating-point geometry of the upper half-plane.

Orientation-preserving isometries are unit-determinant 2x2 real matrices
acting by z -> (az+b)/(cz+d); geodesics are vertical lines or half-circles
orthogonal to the real axis.  Everything here is an immutable value and
every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INF = math.inf

DET_TOL = 1e-10        # |ad - bc - 1| allowed on construction checks
CLASSIFY_TOL = 1e-9    # separation from |tr| = 2 used by the classifier
PROJ_TOL = 1e-8        # entrywise tolerance for M == +-N
TANGENCY_TOL = 1e-6    # radians; a crossing at a smaller angle is not transverse
ENDPOINT_TOL = 1e-9    # tolerance for coincident ideal endpoints


class NotHyperbolic(ValueError):
    """An axis or translation length was requested for a map with |tr| <= 2."""


class NoCrossing(ValueError):
    """The axis does not meet the open positive imaginary axis (bc <= 0)."""


class NotDisjoint(ValueError):
    """The two geodesics meet in H or share an ideal endpoint."""


class MoebiusMap:
    """z -> (az+b)/(cz+d) with ad - bc = 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = float(a)
        self.b = float(b)
        self.c = float(c)
        self.d = float(d)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def rotation_about_i(cls, phi):
        """Elliptic map fixing i; rotates the tangent space at i by -2*phi."""
        return cls(math.cos(phi), -math.sin(phi), math.sin(phi), math.cos(phi))

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other):
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = MoebiusMap.identity()
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def __call__(self, z):
        """Apply to an interior point (complex with positive imaginary part)."""
        z = complex(z)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def on_boundary(self, x):
        """Apply to a boundary point: a real number or INF."""
        if x == INF or x == -INF:
            return self.a / self.c if self.c != 0.0 else INF
        den = self.c * x + self.d
        if den == 0.0:
            return INF
        return (self.a * x + self.b) / den

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def projectively_equal(self, other, tol=PROJ_TOL):
        """True when self == other or self == -other entrywise."""
        plus = max(
            abs(self.a - other.a), abs(self.b - other.b),
            abs(self.c - other.c), abs(self.d - other.d),
        )
        minus = max(
            abs(self.a + other.a), abs(self.b + other.b),
            abs(self.c + other.c), abs(self.d + other.d),
        )
        return min(plus, minus) <= tol

    def is_identity(self, tol=PROJ_TOL):
        return self.projectively_equal(MoebiusMap.identity(), tol)

    def __repr__(self):
        return f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


class Geodesic:
    """Complete geodesic, stored by its two ideal endpoints.

    A vertical line Re z = x has endpoints (x, INF); a half-circle
    |z - center| = radius has finite endpoints (center - radius,
    center + radius).  Endpoints are kept sorted.
    """

    __slots__ = ("e1", "e2")

    def __init__(self, e1, e2):
        e1, e2 = float(e1), float(e2)
        if e1 == INF or e1 == -INF:
            e1, e2 = e2, INF
        elif e2 == -INF:
            e2 = INF
        if e2 != INF and e1 > e2:
            e1, e2 = e2, e1
        if e1 == INF or e1 == e2:
            raise ValueError(f"need two distinct boundary points, got {e1}, {e2}")
        self.e1 = e1
        self.e2 = e2

    @classmethod
    def vertical(cls, x):
        return cls(x, INF)

    @classmethod
    def half_circle(cls, center, radius):
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        return cls(center - radius, center + radius)

    @classmethod
    def through(cls, z1, z2):
        """Geodesic through two interior points."""
        z1, z2 = complex(z1), complex(z2)
        if abs(z1.real - z2.real) < 1e-13 * max(1.0, abs(z1), abs(z2)):
            return cls.vertical(0.5 * (z1.real + z2.real))
        c = (abs(z1) ** 2 - abs(z2) ** 2) / (2.0 * (z1.real - z2.real))
        return cls.half_circle(c, abs(z1 - c))

    @classmethod
    def through_point_and_endpoint(cls, z, x):
        """Geodesic through interior point z with ideal endpoint x (real or INF)."""
        z = complex(z)
        if x == INF:
            return cls.vertical(z.real)
        if abs(z.real - x) < 1e-13 * max(1.0, abs(z), abs(x)):
            return cls.vertical(x)
        c = (abs(z) ** 2 - x * x) / (2.0 * (z.real - x))
        return cls.half_circle(c, abs(z - c))

    @property
    def is_vertical(self):
        return self.e2 == INF

    @property
    def x(self):
        if not self.is_vertical:
            raise ValueError("not a vertical geodesic")
        return self.e1

    @property
    def center(self):
        if self.is_vertical:
            raise ValueError("a vertical geodesic has no finite center")
        return 0.5 * (self.e1 + self.e2)

    @property
    def radius(self):
        if self.is_vertical:
            raise ValueError("a vertical geodesic has no finite radius")
        return 0.5 * (self.e2 - self.e1)

    def endpoints(self):
        return (self.e1, self.e2)

    def same_as(self, other, tol=ENDPOINT_TOL):
        if self.is_vertical != other.is_vertical:
            return False
        if self.is_vertical:
            return abs(self.e1 - other.e1) <= tol
        return abs(self.e1 - other.e1) <= tol and abs(self.e2 - other.e2) <= tol

    def contains(self, z, tol=1e-9):
        z = complex(z)
        if self.is_vertical:
            return abs(z.real - self.e1) <= tol
        return abs(abs(z - self.center) - self.radius) <= tol

    def point_at_height(self, y):
        """The point(s) of the geodesic at height y: used for sampling."""
        if self.is_vertical:
            return complex(self.e1, y)
        if y >= self.radius:
            return complex(self.center, self.radius)
        off = math.sqrt(self.radius**2 - y * y)
        return complex(self.center - off, y)

    def tangent_at(self, z):
        """Unit tangent direction at a point of the geodesic (up to sign)."""
        z = complex(z)
        if self.is_vertical:
            return 1j
        radial = (z - self.center) / self.radius
        return 1j * radial

    def __repr__(self):
        if self.is_vertical:
            return f"Geodesic.vertical({self.e1!r})"
        return f"Geodesic.half_circle({self.center!r}, {self.radius!r})"


@dataclass(frozen=True)
class IsometryClass:
    """Result of trace classification.

    kind is one of "identity", "elliptic", "parabolic", "hyperbolic".
    order is the projective rotation order for elliptic maps, or None when
    no order <= the search cap was found (irrational rotation angle).
    """

    kind: str
    trace_abs: float
    translation_length: float | None = None
    order: int | None = None

    @property
    def is_hyperbolic(self):
        return self.kind == "hyperbolic"

    @property
    def is_elliptic(self):
        return self.kind == "elliptic"

    @property
    def is_parabolic(self):
        return self.kind == "parabolic"


class ReflectionMap:
    """Anti-holomorphic map z -> (a*conj(z)+b)/(c*conj(z)+d) with ad - bc = -1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = float(a)
        self.b = float(b)
        self.c = float(c)
        self.d = float(d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        w = complex(z).conjugate()
        return (self.a * w + self.b) / (self.c * w + self.d)

    def __repr__(self):
        return f"ReflectionMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def classify_trace(trace_abs, tol=CLASSIFY_TOL):
    """Coarse kind from |trace| alone: "elliptic" | "parabolic" | "hyperbolic"."""
    if trace_abs < 2.0 - tol:
        return "elliptic"
    if trace_abs <= 2.0 + tol:
        return "parabolic"
    return "hyperbolic"


def translation_length(trace_abs):
    return 2.0 * math.acosh(trace_abs / 2.0)


def elliptic_order(g, max_order=512, tol=PROJ_TOL):
    """Smallest n >= 2 with g^n == +-I, or None if none up to max_order."""
    power = g
    for n in range(2, max_order + 1):
        power = power @ g
        if power.is_identity(tol):
            return n
    return None


def classify_isometry(g, tol=CLASSIFY_TOL, max_order=512):
    """Classify a unit-determinant map by its trace.

    |tr| < 2 - tol gives an elliptic map (order searched up to max_order);
    | |tr| - 2 | <= tol gives parabolic, or identity when g == +-I;
    |tr| > 2 + tol gives hyperbolic with length 2*arccosh(|tr|/2).
    """
    tr = abs(g.trace())
    if g.is_identity():
        return IsometryClass("identity", tr)
    kind = classify_trace(tr, tol)
    if kind == "elliptic":
        return IsometryClass("elliptic", tr, order=elliptic_order(g, max_order))
    if kind == "parabolic":
        return IsometryClass("parabolic", tr)
    return IsometryClass("hyperbolic", tr, translation_length=translation_length(tr))


def fixed_points(g, tol=CLASSIFY_TOL):
    """Boundary fixed points (attracting last not guaranteed) of a hyperbolic map."""
    tr = g.trace()
    disc = tr * tr - 4.0
    if disc <= tol:
        raise NotHyperbolic(f"|tr| = {abs(tr)} is not > 2")
    s = math.sqrt(disc)
    if abs(g.c) <= 1e-12:
        # fixed points are INF and the finite solution of (a-d) x + b = 0
        return (g.b / (g.d - g.a), INF)
    return (((g.a - g.d) - s) / (2.0 * g.c), ((g.a - g.d) + s) / (2.0 * g.c))


def axis_of(g, tol=CLASSIFY_TOL):
    """Invariant geodesic of a hyperbolic map, joining its two fixed points."""
    p1, p2 = fixed_points(g, tol)
    return Geodesic(p1, p2)


def imaginary_axis_crossing(g, tol=CLASSIFY_TOL):
    """Height y of the crossing of the axis of g with the imaginary axis.

    The axis meets the imaginary axis exactly when bc > 0, at the point
    i*sqrt(b/c).
    """
    if abs(g.trace()) <= 2.0 + tol:
        raise NotHyperbolic(f"|tr| = {abs(g.trace())} is not > 2")
    if g.b * g.c <= 0:
        raise NoCrossing("axis misses the open imaginary axis (bc <= 0)")
    return math.sqrt(g.b / g.c)


def reflection_in(line):
    """Reflection fixing the given geodesic pointwise (det -1 normalization)."""
    if line.is_vertical:
        return ReflectionMap(-1.0, 2.0 * line.e1, 0.0, 1.0)
    c, r = line.center, line.radius
    return ReflectionMap(c / r, (r * r - c * c) / r, 1.0 / r, -c / r)


def compose_reflections(r1, r2):
    """The orientation-preserving map r1 o r2 (matrix product, det +1)."""
    return MoebiusMap(
        r1.a * r2.a + r1.b * r2.c,
        r1.a * r2.b + r1.b * r2.d,
        r1.c * r2.a + r1.d * r2.c,
        r1.c * r2.b + r1.d * r2.d,
    )


def apply_to_geodesic(g, line):
    """Image geodesic under a MoebiusMap, via the boundary action."""
    return Geodesic(g.on_boundary(line.e1), g.on_boundary(line.e2))


def mirror_geodesic(line):
    """Image under reflection in the imaginary axis (x -> -x)."""
    if line.is_vertical:
        return Geodesic.vertical(-line.e1)
    return Geodesic(-line.e2, -line.e1)


def _share_endpoint(l1, l2, tol):
    if l1.is_vertical and l2.is_vertical:
        return True  # both end at INF
    ends1 = [l1.e1] if l1.is_vertical else [l1.e1, l1.e2]
    ends2 = [l2.e1] if l2.is_vertical else [l2.e1, l2.e2]
    return any(abs(x - y) <= tol for x in ends1 for y in ends2)


def geodesics_disjoint(l1, l2, tol=ENDPOINT_TOL):
    """Disjoint in the closed half-plane: no interior point, no shared endpoint."""
    if _share_endpoint(l1, l2, tol):
        return False
    return intersect_geodesics(l1, l2) is None


def intersect_geodesics(l1, l2, tangency_tol=TANGENCY_TOL):
    """Unique interior intersection point, or None.

    Returns (point, transverse) where transverse is False when the crossing
    angle is below tangency_tol.
    """
    if l1.is_vertical and l2.is_vertical:
        return None
    if l1.is_vertical or l2.is_vertical:
        vert, circ = (l1, l2) if l1.is_vertical else (l2, l1)
        h2 = circ.radius**2 - (vert.e1 - circ.center) ** 2
        if h2 <= 0:
            return None
        z = complex(vert.e1, math.sqrt(h2))
    else:
        dist = l2.center - l1.center
        if dist == 0.0:
            return None  # concentric half-circles never meet in H
        x = l1.center + (dist * dist + l1.radius**2 - l2.radius**2) / (2.0 * dist)
        h2 = l1.radius**2 - (x - l1.center) ** 2
        if h2 <= 0:
            return None
        z = complex(x, math.sqrt(h2))
    angle = crossing_angle(l1, l2, z)
    return (z, angle >= tangency_tol)


def crossing_angle(l1, l2, z):
    """Angle in [0, pi/2] between the two geodesics at a common point."""
    t1 = l1.tangent_at(z)
    t2 = l2.tangent_at(z)
    cross = abs((t1.conjugate() * t2).imag)
    return math.asin(min(1.0, cross))


def common_orthogonal(l1, l2, tol=ENDPOINT_TOL):
    """The unique geodesic meeting two disjoint geodesics at right angles.

    Raises NotDisjoint when the inputs meet in H or share an ideal endpoint
    (two verticals always share INF, so they never have a common orthogonal:
    the composition of their reflections is parabolic, not hyperbolic).
    """
    if not geodesics_disjoint(l1, l2, tol):
        raise NotDisjoint(f"{l1} and {l2} are not disjoint in the closed half-plane")
    if l1.is_vertical and l2.is_vertical:  # unreachable: they share INF
        raise NotDisjoint("two vertical geodesics share the endpoint at infinity")
    if l1.is_vertical or l2.is_vertical:
        vert, circ = (l1, l2) if l1.is_vertical else (l2, l1)
        # orthogonal to the vertical: centered at its foot; orthogonal to the
        # circle: |x - center|^2 = radius^2 + rho^2
        rho2 = (vert.e1 - circ.center) ** 2 - circ.radius**2
        return Geodesic.half_circle(vert.e1, math.sqrt(rho2))
    c1, r1 = l1.center, l1.radius
    c2, r2 = l2.center, l2.radius
    if abs(c1 - c2) <= tol:
        # concentric (nested) half-circles: the vertical through the center
        return Geodesic.vertical(0.5 * (c1 + c2))
    x = (c2 * c2 - c1 * c1 + r1 * r1 - r2 * r2) / (2.0 * (c2 - c1))
    rho2 = (x - c1) ** 2 - r1 * r1
    if rho2 <= 0:
        raise NotDisjoint("no real orthogonal circle; inputs are not disjoint")
    return Geodesic.half_circle(x, math.sqrt(rho2))


def axis_chart(line):
    """A det-1 map sending the geodesic onto the imaginary axis.

    For points z on the geodesic, log(Im chart(z)) is a signed arclength
    coordinate; for boundary points the chart acts by on_boundary.
    """
    if line.is_vertical:
        return MoebiusMap(1.0, -line.e1, 0.0, 1.0)
    u, v = line.e1, line.e2
    s = math.sqrt(v - u)
    return MoebiusMap(1.0 / s, -v / s, 1.0 / s, -u / s)


def nearest_point_on(line, w):
    """Foot of the perpendicular from interior point w onto the geodesic."""
    w = complex(w)
    if line.is_vertical:
        return complex(line.e1, abs(w - line.e1))
    chart = axis_chart(line)
    return chart.inverse()(1j * abs(chart(w)))


def hyperbolic_distance(z, w):
    z, w = complex(z), complex(w)
    return math.acosh(1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag))


def distance_to_geodesic(line, z):
    """Hyperbolic distance from an interior point to a geodesic."""
    chart = axis_chart(line)
    w = chart(complex(z))
    return math.asinh(abs(w.real) / w.imag)


def segment_contains(line, z1, z2, p, tol=1e-9):
    """Whether p (on the geodesic) lies on the arc between z1 and z2."""
    z1, z2, p = complex(z1), complex(z2), complex(p)
    if line.is_vertical:
        lo, hi = sorted((z1.imag, z2.imag))
        return lo - tol <= p.imag <= hi + tol
    c = line.center
    angles = sorted((math.atan2(z1.imag, z1.real - c), math.atan2(z2.imag, z2.real - c)))
    ang = math.atan2(p.imag, p.real - c)
    return angles[0] - tol <= ang <= angles[1] + tol
