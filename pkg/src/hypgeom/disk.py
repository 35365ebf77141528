"""Numerical model of the hyperbolic plane on the open unit disk (k = 1).

Geodesics are diameters or circular arcs orthogonal to the unit circle;
distance is the logarithm of the cross-ratio of the four Euclidean
chords cut off by a segment's endpoints and the ideal endpoints of its
geodesic.  The module is deliberately independent of the closed forms
in hypgeom.trig: it serves as the oracle they are checked against, and
as the substrate the construction engine draws on.

All point coordinates are Euclidean coordinates inside the unit disk.
Points with |z| > 1 - 1e-10 are treated as effectively ideal and
rejected as interior points.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BOUNDARY_MARGIN",
    "COINCIDENCE_TOL",
    "DiskPoint",
    "IdealPoint",
    "Geodesic",
    "Ray",
    "HyperbolicCircle",
    "Horocycle",
    "Equidistant",
    "EuclideanCircle",
    "EuclideanLine",
    "Isometry",
    "dist",
    "geodesic_through",
    "intersect",
    "perpendicular",
    "foot_of_perpendicular",
    "realize",
    "measure_angle",
    "reflect",
    "rotate",
    "translate_along",
    "corresponding_point",
    "angle_of_parallelism_numeric",
    "midpoint",
    "point_on",
]

BOUNDARY_MARGIN = 1e-10  # |z| above 1 - margin counts as ideal
COINCIDENCE_TOL = 1e-12  # closer inputs count as the same point
_DIAMETER_RADIUS_CUTOFF = 1e6  # larger arc radii fall back to the diameter branch


@dataclass(frozen=True)
class DiskPoint:
    """Interior point of the unit disk."""

    x: float
    y: float

    def __post_init__(self):
        r2 = self.x * self.x + self.y * self.y
        if not math.isfinite(r2):
            raise DomainError(f"non-finite coordinates ({self.x!r}, {self.y!r})")
        if r2 >= (1.0 - BOUNDARY_MARGIN) ** 2:
            raise DomainError(
                f"point ({self.x!r}, {self.y!r}) is not strictly inside the unit disk"
            )

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "DiskPoint":
        return DiskPoint(z.real, z.imag)


@dataclass(frozen=True)
class IdealPoint:
    """Boundary point of the disk, parameterized by its angle."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise DomainError(f"non-finite boundary angle {self.theta!r}")
        object.__setattr__(self, "theta", self.theta % (2.0 * math.pi))

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)

    @staticmethod
    def from_complex(z: complex) -> "IdealPoint":
        return IdealPoint(cmath.phase(z))


PointLike = DiskPoint | IdealPoint


def _as_complex(p: PointLike) -> complex:
    return p.z


def _cross(a: complex, b: complex) -> float:
    return a.real * b.imag - a.imag * b.real


@dataclass(frozen=True)
class EuclideanLine:
    """Full Euclidean line through the origin with unit direction u
    (diameter realization)."""

    ux: float
    uy: float

    @property
    def u(self) -> complex:
        return complex(self.ux, self.uy)


@dataclass(frozen=True)
class EuclideanCircle:
    cx: float
    cy: float
    r: float

    @property
    def center(self) -> complex:
        return complex(self.cx, self.cy)


Realization = EuclideanLine | EuclideanCircle


@dataclass(frozen=True)
class Geodesic:
    """Geodesic in canonical form: the ordered pair of its ideal endpoints.

    The Euclidean realization (diameter, or arc orthogonal to the unit
    circle) is derived from the endpoints and cached.
    """

    theta0: float
    theta1: float

    def __post_init__(self):
        t0 = self.theta0 % (2.0 * math.pi)
        t1 = self.theta1 % (2.0 * math.pi)
        d = (t1 - t0) % (2.0 * math.pi)
        if min(d, 2.0 * math.pi - d) < 1e-14:
            raise DomainError("geodesic endpoints coincide on the boundary")
        object.__setattr__(self, "theta0", t0)
        object.__setattr__(self, "theta1", t1)

    @property
    def ends(self) -> tuple[IdealPoint, IdealPoint]:
        return IdealPoint(self.theta0), IdealPoint(self.theta1)

    def end_points(self) -> tuple[complex, complex]:
        return cmath.exp(1j * self.theta0), cmath.exp(1j * self.theta1)

    def realization(self) -> Realization:
        e0, e1 = self.end_points()
        s = e0 + e1
        if abs(s) < 2.0 / _DIAMETER_RADIUS_CUTOFF:
            # antipodal (or numerically so): diameter through e0
            return EuclideanLine(e0.real, e0.imag)
        # center o solves o.e0 = 1, o.e1 = 1: o = 2(e0+e1)/|e0+e1|^2
        o = 2.0 * s / (abs(s) ** 2)
        r = math.sqrt(max(abs(o) ** 2 - 1.0, 0.0))
        return EuclideanCircle(o.real, o.imag, r)

    def reversed(self) -> "Geodesic":
        return Geodesic(self.theta1, self.theta0)

    def param_of(self, p: PointLike) -> float:
        """Monotone parameter of p along the geodesic, increasing from
        the theta0 end toward the theta1 end."""
        z = _as_complex(p)
        real = self.realization()
        if isinstance(real, EuclideanLine):
            # orient the axis from e0 to e1
            e0, e1 = self.end_points()
            d = e1 - e0
            return (z * d.conjugate()).real
        # angle around the arc center, unwrapped from the theta0 end
        o = real.center
        a0 = cmath.phase(self.end_points()[0] - o)
        a1 = cmath.phase(self.end_points()[1] - o)
        ap = cmath.phase(z - o)
        span = (a1 - a0) % (2.0 * math.pi)
        t = (ap - a0) % (2.0 * math.pi)
        if span <= math.pi:
            return t
        # the interior arc is the other way around
        return -((a0 - ap) % (2.0 * math.pi))

    def contains(self, p: PointLike, tol: float = 1e-9) -> bool:
        z = _as_complex(p)
        real = self.realization()
        if isinstance(real, EuclideanLine):
            return abs(_cross(real.u, z)) <= tol
        return abs(abs(z - real.center) - real.r) <= tol

    def side_of(self, p: PointLike) -> float:
        """Signed side indicator of p: positive on the left of the
        oriented geodesic (theta0 -> theta1), negative on the right."""
        z = _as_complex(p)
        real = self.realization()
        if isinstance(real, EuclideanLine):
            e0, e1 = self.end_points()
            return _cross(e1 - e0, z - e0)
        # for an arc the disk-interior side of the circle boundary flips
        # depending on the travel orientation around the center
        o = real.center
        val = real.r ** 2 - abs(z - o) ** 2  # positive strictly inside the circle
        e0, e1 = self.end_points()
        orient = _cross(e0 - o, e1 - o)
        span = (cmath.phase(e1 - o) - cmath.phase(e0 - o)) % (2.0 * math.pi)
        sgn = 1.0 if span <= math.pi else -1.0
        return val * sgn


@dataclass(frozen=True)
class Ray:
    """Half-geodesic from an interior origin toward one ideal endpoint."""

    origin: DiskPoint
    geodesic: Geodesic
    forward: IdealPoint

    def forward_param(self) -> tuple[float, float]:
        """(origin parameter, sign of increasing-forward direction)."""
        g = self.geodesic
        p0 = g.param_of(self.origin)
        pf = g.param_of(self.forward)
        return p0, 1.0 if pf > p0 else -1.0

    def contains_param(self, t: float, slack: float = 1e-12) -> bool:
        p0, s = self.forward_param()
        return (t - p0) * s >= -slack


@dataclass(frozen=True)
class HyperbolicCircle:
    center: DiskPoint
    rho: float

    def __post_init__(self):
        if not math.isfinite(self.rho) or self.rho < 0.0:
            raise DomainError(f"circle radius must be non-negative, got {self.rho!r}")


@dataclass(frozen=True)
class Horocycle:
    omega: IdealPoint
    through: DiskPoint


@dataclass(frozen=True)
class Equidistant:
    """Locus at constant distance |d| from the base geodesic; d > 0 lies
    on the left of the oriented base."""

    base: Geodesic
    d: float

    def __post_init__(self):
        if not math.isfinite(self.d):
            raise DomainError(f"offset must be finite, got {self.d!r}")


CurveObject = HyperbolicCircle | Horocycle | Equidistant
Drawable = Geodesic | Ray | CurveObject


# --------------------------------------------------------------------------
# geodesics and the metric
# --------------------------------------------------------------------------


def geodesic_through(p: PointLike, q: PointLike) -> Geodesic:
    """The unique geodesic through two distinct points (interior or ideal),
    with its first canonical endpoint on p's side."""
    zp, zq = _as_complex(p), _as_complex(q)
    if abs(zp - zq) < COINCIDENCE_TOL:
        raise DomainError("cannot draw a geodesic through coincident points")
    # both interior/boundary points satisfy 2 z.o = |z|^2 + 1 for the
    # orthogonal-circle center o; a vanishing determinant means a diameter
    det = 2.0 * _cross(zp, zq)
    rhs_p = abs(zp) ** 2 + 1.0
    rhs_q = abs(zq) ** 2 + 1.0
    if abs(det) > max(rhs_p, rhs_q) / _DIAMETER_RADIUS_CUTOFF:
        ox = (rhs_p * zq.imag - rhs_q * zp.imag) / det
        oy = (rhs_q * zp.real - rhs_p * zq.real) / det
        o = complex(ox, oy)
        r2 = abs(o) ** 2 - 1.0
        if r2 > 0.0 and math.sqrt(r2) < _DIAMETER_RADIUS_CUTOFF:
            r = math.sqrt(r2)
            # boundary points z with z.o = 1: base point o/|o|^2 +- perp
            base = o / abs(o) ** 2
            perp = complex(-o.imag, o.real) * (r / abs(o) ** 2)
            t0 = cmath.phase(base + perp)
            t1 = cmath.phase(base - perp)
            g = Geodesic(t0, t1)
            return g if g.param_of(p) <= g.param_of(q) else g.reversed()
    # diameter branch: direction from the farther-from-origin datum
    u = zq - zp
    if abs(u) < 1e-15:
        raise DomainError("cannot draw a geodesic through coincident points")
    u /= abs(u)
    g = Geodesic(cmath.phase(-u), cmath.phase(u))
    return g if g.param_of(p) <= g.param_of(q) else g.reversed()


def dist(a: DiskPoint, m: DiskPoint) -> float:
    """Distance log((AP * XM) / (XA * MP)) from the chords to the ideal
    endpoints X (on a's side) and P of the geodesic through a and m."""
    za, zm = a.z, m.z
    if abs(za - zm) < 1e-13:
        return 0.0
    g = geodesic_through(a, m)
    x, p = g.end_points()  # x on a's side by construction
    ap = abs(za - p)
    xm = abs(x - zm)
    xa = abs(x - za)
    mp = abs(zm - p)
    return math.log((ap * xm) / (xa * mp))


def midpoint(a: DiskPoint, b: DiskPoint) -> DiskPoint:
    """Hyperbolic midpoint of segment ab."""
    d = dist(a, b)
    g = geodesic_through(a, b)
    return translate_along(g, d / 2.0)(a)


def point_on(g: Geodesic, t: float, anchor: DiskPoint | None = None) -> DiskPoint:
    """Point of g at signed distance t from the anchor (default: the point
    of g nearest the origin), in the theta0 -> theta1 direction."""
    if anchor is None:
        real = g.realization()
        if isinstance(real, EuclideanLine):
            anchor = DiskPoint(0.0, 0.0)
        else:
            o = real.center
            z = o * (1.0 - real.r / abs(o))
            anchor = DiskPoint.from_complex(z)
    return translate_along(g, t)(anchor)


# --------------------------------------------------------------------------
# realization and intersections
# --------------------------------------------------------------------------


def realize(obj: Drawable) -> Realization:
    """Euclidean realization of a geodesic, ray, or curve object."""
    if isinstance(obj, Geodesic):
        return obj.realization()
    if isinstance(obj, Ray):
        return obj.geodesic.realization()
    if isinstance(obj, HyperbolicCircle):
        c, t = obj.center.z, math.tanh(obj.rho / 2.0)
        d2 = abs(c) ** 2
        den = 1.0 - t * t * d2
        ec = c * (1.0 - t * t) / den
        er = t * (1.0 - d2) / den
        return EuclideanCircle(ec.real, ec.imag, er)
    if isinstance(obj, Horocycle):
        w = obj.omega.z
        p = obj.through.z
        s = abs(p - w) ** 2 / (2.0 * (1.0 - (p * w.conjugate()).real))
        c = (1.0 - s) * w
        return EuclideanCircle(c.real, c.imag, s)
    if isinstance(obj, Equidistant):
        if obj.d == 0.0:
            return obj.base.realization()
        x, p = obj.base.end_points()
        q = _equidistant_probe(obj)
        return _circle_through(x, p, q.z)
    raise DomainError(f"cannot realize object of type {type(obj).__name__}")


def _equidistant_probe(e: Equidistant) -> DiskPoint:
    """One interior point of the equidistant curve: offset the base's
    nearest-to-origin point by d along the perpendicular, to the left."""
    g = e.base
    m0 = point_on(g, 0.0)
    perp = perpendicular(m0, g)
    # orient the perpendicular so +translation moves to the left of g
    probe = translate_along(perp, 1e-3)(m0)
    sign = 1.0 if g.side_of(probe) > 0.0 else -1.0
    return translate_along(perp, sign * e.d)(m0)


def _circle_through(z1: complex, z2: complex, z3: complex) -> EuclideanCircle:
    """Circumcircle of three non-collinear points."""
    ax, ay = z1.real, z1.imag
    bx, by = z2.real, z2.imag
    cx, cy = z3.real, z3.imag
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-14:
        raise DomainError("collinear points have no circumcircle")
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    r = math.hypot(ax - ux, ay - uy)
    return EuclideanCircle(ux, uy, r)


def _line_line(a: EuclideanLine, b: EuclideanLine) -> list[complex]:
    if abs(_cross(a.u, b.u)) < 1e-14:
        return []
    return [0j]  # distinct diameters only meet at the origin


def _line_circle(line: EuclideanLine, circ: EuclideanCircle) -> list[complex]:
    u = line.u
    c = circ.center
    # foot of the perpendicular from the center onto the line
    s = (c * u.conjugate()).real
    foot = s * u
    h2 = circ.r ** 2 - abs(c - foot) ** 2
    if h2 < -1e-14:
        return []
    if h2 <= 1e-14:
        return [foot]
    h = math.sqrt(h2)
    return [foot + h * u, foot - h * u]


def _circle_circle(a: EuclideanCircle, b: EuclideanCircle) -> list[complex]:
    d = abs(b.center - a.center)
    if d < 1e-14:
        return []
    # distance from a.center to the radical line
    t = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d)
    h2 = a.r * a.r - t * t
    if h2 < -1e-12:
        return []
    axis = (b.center - a.center) / d
    base = a.center + t * axis
    if h2 <= 1e-14:
        return [base]
    h = math.sqrt(h2)
    perp = complex(-axis.imag, axis.real)
    return [base + h * perp, base - h * perp]


def _ordering_centers(ra: Realization, rb: Realization) -> tuple[complex, complex] | None:
    if isinstance(ra, EuclideanCircle) and isinstance(rb, EuclideanCircle):
        return ra.center, rb.center
    if isinstance(ra, EuclideanLine) and isinstance(rb, EuclideanCircle):
        u = ra.u
        foot = (rb.center * u.conjugate()).real * u
        return foot, rb.center
    if isinstance(ra, EuclideanCircle) and isinstance(rb, EuclideanLine):
        u = rb.u
        foot = (ra.center * u.conjugate()).real * u
        return ra.center, foot
    return None


def intersect(a: Drawable, b: Drawable) -> list[DiskPoint]:
    """Interior intersection points of two objects (0, 1 or 2 points).

    Two-point results are ordered deterministically: the point on the
    left of the axis from a's ordering center to b's comes first.  Ray
    arguments restrict the result to the forward half of the geodesic.
    """
    if a is b or a == b:
        raise DomainError("cannot intersect an object with itself")
    ra, rb = realize(a), realize(b)
    if isinstance(ra, EuclideanLine) and isinstance(rb, EuclideanLine):
        pts = _line_line(ra, rb)
    elif isinstance(ra, EuclideanLine):
        pts = _line_circle(ra, rb)
    elif isinstance(rb, EuclideanLine):
        pts = _line_circle(rb, ra)
    else:
        pts = _circle_circle(ra, rb)

    interior = [z for z in pts if abs(z) < 1.0 - BOUNDARY_MARGIN]
    # merge numerically-coincident (tangency) results
    if len(interior) == 2 and abs(interior[0] - interior[1]) < 1e-12:
        interior = [0.5 * (interior[0] + interior[1])]

    if len(interior) == 2:
        centers = _ordering_centers(ra, rb)
        if centers is not None:
            ca, cb = centers
            axis = cb - ca
            interior.sort(key=lambda z: -_cross(axis, z - ca))

    result = [DiskPoint.from_complex(z) for z in interior]
    for obj in (a, b):
        if isinstance(obj, Ray):
            g = obj.geodesic
            result = [p for p in result if obj.contains_param(g.param_of(p))]
    return result


def perpendicular(p: PointLike, g: Geodesic) -> Geodesic:
    """The geodesic through p orthogonal to g.

    Valid whether or not p lies on g; with an ideal p it is the
    perpendicular dropped from that boundary point.
    """
    z = _as_complex(p)
    real = g.realization()
    if isinstance(real, EuclideanLine):
        u = real.u
        s = (z * u.conjugate()).real  # signed position of p along g's line
        h = _cross(u, z)
        if abs(s) < 1e-14:
            # p sits on the perpendicular diameter
            v = complex(-u.imag, u.real)
            return geodesic_through(IdealPoint(cmath.phase(-v)), IdealPoint(cmath.phase(v)))
        t = (abs(z) ** 2 + 1.0) / (2.0 * s)
        o = t * u
        return _geodesic_from_center(o)
    o = real.center
    denom = 2.0 * _cross(o, z)
    if abs(denom) < 1e-13:
        # p lies on the diameter through the arc's center: that diameter
        # is the perpendicular
        u = o / abs(o)
        return geodesic_through(IdealPoint(cmath.phase(-u)), IdealPoint(cmath.phase(u)))
    # solve m.o = 1 and 2 m.z = |z|^2 + 1
    rhs = abs(z) ** 2 + 1.0
    mx = (2.0 * z.imag - rhs * o.imag) / denom
    my = (rhs * o.real - 2.0 * z.real) / denom
    return _geodesic_from_center(complex(mx, my))


def _geodesic_from_center(o: complex) -> Geodesic:
    d2 = abs(o) ** 2
    if d2 <= 1.0:
        raise DomainError("orthogonal-circle center must lie outside the unit circle")
    r = math.sqrt(d2 - 1.0)
    base = o / d2
    perp = complex(-o.imag, o.real) * (r / d2)
    return Geodesic(cmath.phase(base + perp), cmath.phase(base - perp))


def foot_of_perpendicular(p: PointLike, g: Geodesic) -> DiskPoint:
    if isinstance(p, DiskPoint) and g.contains(p, tol=1e-12):
        return p
    pts = intersect(perpendicular(p, g), g)
    if len(pts) != 1:
        raise DomainError("perpendicular does not meet the base geodesic once")
    return pts[0]


# --------------------------------------------------------------------------
# conformal angles
# --------------------------------------------------------------------------


def _tangent_toward(p: PointLike, q: PointLike) -> complex:
    """Unit Euclidean tangent at p of the geodesic from p toward q."""
    zp, zq = _as_complex(p), _as_complex(q)
    g = geodesic_through(p, q)
    real = g.realization()
    if isinstance(real, EuclideanLine):
        w = zq - zp
        return w / abs(w)
    o = real.center
    w = complex(-(zp - o).imag, (zp - o).real)  # counterclockwise tangent
    if _cross(zp - o, zq - o) < 0.0:
        w = -w
    return w / abs(w)


def measure_angle(p: DiskPoint, q: PointLike, r: PointLike) -> float:
    """Angle at p between the geodesic rays p->q and p->r, in [0, pi].

    The model is conformal, so this is the Euclidean angle between the
    tangent directions of the realizations.
    """
    for other in (q, r):
        if abs(_as_complex(other) - p.z) < COINCIDENCE_TOL:
            raise DomainError("degenerate ray: endpoint coincides with the vertex")
    w1 = _tangent_toward(p, q)
    w2 = _tangent_toward(p, r)
    return math.atan2(abs(_cross(w1, w2)), (w1 * w2.conjugate()).real)


def signed_angle(p: DiskPoint, q: PointLike, r: PointLike) -> float:
    """Counterclockwise angle from ray p->q to ray p->r, in (-pi, pi]."""
    w1 = _tangent_toward(p, q)
    w2 = _tangent_toward(p, r)
    return math.atan2(_cross(w1, w2), (w1 * w2.conjugate()).real)


# --------------------------------------------------------------------------
# isometries
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """Disk isometry z -> M(z) or z -> M(conj z), with M a Mobius
    transform (a z + b) / (conj(b) z + conj(a)) preserving the unit disk.

    This is the normal form of any composition of reflections in
    geodesics; `conjugates` is the orientation flag (True for an odd
    number of reflections).
    """

    a: complex
    b: complex
    conjugates: bool = False

    def __post_init__(self):
        n = math.sqrt(abs(abs(self.a) ** 2 - abs(self.b) ** 2))
        if n < 1e-14:
            raise DomainError("degenerate isometry coefficients")
        object.__setattr__(self, "a", self.a / n)
        object.__setattr__(self, "b", self.b / n)

    @staticmethod
    def identity() -> "Isometry":
        return Isometry(1.0 + 0j, 0j, False)

    def _mobius(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.b.conjugate() * z + self.a.conjugate())

    def apply_complex(self, z: complex) -> complex:
        if self.conjugates:
            z = z.conjugate()
        return self._mobius(z)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        """Composition self after other."""
        oa, ob = other.a, other.b
        if self.conjugates:
            oa, ob = oa.conjugate(), ob.conjugate()
        # matrix product [[a, b], [conj b, conj a]] . [[oa, ob], [conj ob, conj oa]]
        na = self.a * oa + self.b * ob.conjugate()
        nb = self.a * ob + self.b * oa.conjugate()
        return Isometry(na, nb, self.conjugates ^ other.conjugates)

    def inverse(self) -> "Isometry":
        ia, ib = self.a.conjugate(), -self.b
        if self.conjugates:
            ia, ib = ia.conjugate(), ib.conjugate()
        return Isometry(ia, ib, self.conjugates)

    # -- application to model objects ------------------------------------

    def __call__(self, obj):
        if isinstance(obj, DiskPoint):
            return DiskPoint.from_complex(self.apply_complex(obj.z))
        if isinstance(obj, IdealPoint):
            w = self.apply_complex(obj.z)
            return IdealPoint(cmath.phase(w))
        if isinstance(obj, Geodesic):
            e0, e1 = obj.ends
            return geodesic_through(self(e0), self(e1))
        if isinstance(obj, Ray):
            return Ray(self(obj.origin), self(obj.geodesic), self(obj.forward))
        if isinstance(obj, HyperbolicCircle):
            return HyperbolicCircle(self(obj.center), obj.rho)
        if isinstance(obj, Horocycle):
            return Horocycle(self(obj.omega), self(obj.through))
        if isinstance(obj, Equidistant):
            d = -obj.d if self.conjugates else obj.d
            return Equidistant(self(obj.base), d)
        raise DomainError(f"cannot transform object of type {type(obj).__name__}")


def _translate_to_origin(p: DiskPoint) -> Isometry:
    """Isometry sending p to the origin: z -> (z - p)/(1 - conj(p) z)."""
    return Isometry(1.0 + 0j, -p.z, False)


def reflect(g: Geodesic) -> Isometry:
    """Reflection in the geodesic g (an involution)."""
    real = g.realization()
    if isinstance(real, EuclideanLine):
        phi = cmath.phase(real.u)
        # z -> e^{2 i phi} conj(z)
        return Isometry(cmath.exp(1j * phi), 0j, True)
    o = real.center
    # inversion in the orthogonal circle: z -> (o conj(z) - 1)/(conj(z) - conj(o))
    return Isometry(o, -(1.0 + 0j), True)


def rotate(p: DiskPoint, phi: float) -> Isometry:
    """Rotation by phi about the interior point p."""
    t = _translate_to_origin(p)
    spin = Isometry(cmath.exp(0.5j * phi), 0j, False)
    return t.inverse() @ spin @ t


def translate_along(g: Geodesic, d: float) -> Isometry:
    """Translation by signed distance d along g, positive toward the
    theta1 endpoint."""
    m0 = point_on_geodesic_nearest_origin(g)
    t = _translate_to_origin(m0)
    e1 = t(IdealPoint(g.theta1))
    spin = Isometry(cmath.exp(-0.5j * e1.theta), 0j, False)
    u = spin @ t  # maps g to the real diameter, theta1 end at +1
    th = math.tanh(d / 2.0)
    shift = Isometry(1.0 + 0j, complex(th, 0.0), False)
    return u.inverse() @ shift @ u


def point_on_geodesic_nearest_origin(g: Geodesic) -> DiskPoint:
    real = g.realization()
    if isinstance(real, EuclideanLine):
        return DiskPoint(0.0, 0.0)
    o = real.center
    z = o * (1.0 - real.r / abs(o))
    return DiskPoint.from_complex(z)


# --------------------------------------------------------------------------
# parallels, corresponding points
# --------------------------------------------------------------------------


def corresponding_point(b: DiskPoint, a: Geodesic, omega: IdealPoint) -> DiskPoint:
    """Point f on geodesic a such that the transversal bf makes equal
    angles with the rays toward the shared ideal point omega.

    omega must be an ideal endpoint of a.  Equivalently, f is where a
    meets the horocycle centered at omega through b.
    """
    d0 = abs((omega.theta - a.theta0) % (2.0 * math.pi))
    d1 = abs((omega.theta - a.theta1) % (2.0 * math.pi))
    if min(d0, 2.0 * math.pi - d0, d1, 2.0 * math.pi - d1) > 1e-9:
        raise DomainError("omega is not an ideal endpoint of the geodesic")
    if a.contains(b, tol=1e-12):
        return b
    pts = intersect(a, Horocycle(omega, b))
    if len(pts) != 1:
        raise DomainError("horocycle does not meet the geodesic in a single interior point")
    return pts[0]


def angle_of_parallelism_numeric(p: DiskPoint, g: Geodesic) -> float:
    """Angle at p between the perpendicular dropped to g and the
    asymptotic ray toward one of g's ideal endpoints."""
    if g.contains(p, tol=1e-12):
        raise DomainError("point lies on the geodesic; the angle is the right angle limit")
    foot = foot_of_perpendicular(p, g)
    return measure_angle(p, foot, IdealPoint(g.theta0))
