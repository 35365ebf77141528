"""Closed-form hyperbolic trigonometry parameterized by the linear constant k.

Every measurable quantity of the hyperbolic plane (and the neutral
spherical results) is computed here in closed form.  All lengths carry
the same unit as k, angles are radians, and k is an explicit argument
everywhere -- never module state -- so that the k -> infinity family of
Euclidean limits can be exercised directly.

Conventions for right triangles: legs a, b, hypotenuse c, acute angles
alpha (opposite a) and beta (opposite b), right angle at the vertex
joining the legs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, OutOfRangeError

__all__ = [
    "EXP_ARG_LIMIT",
    "arc_ratio",
    "angle_of_parallelism",
    "parallelism_segment",
    "circle_circumference",
    "circle_area",
    "equidistant_arc_length",
    "horocycle_arc_length",
    "chord_to_semichord",
    "lcurve_point",
    "lcurve_arc_length",
    "horocycle_sector_area",
    "axial_volume",
    "EquidistantRegionMeasures",
    "equidistant_region_measures",
    "SphereMeasures",
    "sphere_measures",
    "spherical_cap_area",
    "spherical_triangle_area",
    "spherical_right_sine",
    "RightTriangle",
    "solve_right_triangle",
    "GeneralTriangle",
    "solve_general_triangle",
    "polygon_area_from_angles",
]

# exp(x) overflows double precision near x = 709.78; stop well short
EXP_ARG_LIMIT = 700.0


def _check_curvature(k: float) -> float:
    if not math.isfinite(k) or k <= 0.0:
        raise DomainError(f"curvature constant k must be positive and finite, got {k!r}")
    return float(k)


def _check_length(x: float, name: str = "length") -> float:
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    if x < 0.0:
        raise DomainError(f"{name} must be non-negative, got {x!r}")
    return float(x)


def _check_exp_arg(x: float, k: float) -> float:
    """Reduced argument x/k, guarded against exp overflow."""
    t = x / k
    if abs(t) > EXP_ARG_LIMIT:
        raise OutOfRangeError(
            f"argument {x!r} exceeds {EXP_ARG_LIMIT}*k; exp(x/k) would overflow"
        )
    return t


def arc_ratio(x: float, k: float) -> float:
    """Ratio exp(x/k) of two concentric horocyclic arcs a radial distance x apart.

    The ratio is multiplicative over radial distance:
    arc_ratio(x) * arc_ratio(y) == arc_ratio(x + y).
    """
    k = _check_curvature(k)
    x = _check_length(x, "radial distance x")
    return math.exp(_check_exp_arg(x, k))


def angle_of_parallelism(y: float, k: float) -> float:
    """Acute angle u with cot(u/2) = exp(y/k), i.e. u = 2*atan(exp(-y/k)).

    Strictly decreasing in y, equal to pi/2 at y = 0.
    """
    k = _check_curvature(k)
    y = _check_length(y, "perpendicular length y")
    _check_exp_arg(y, k)
    return 2.0 * math.atan(math.exp(-y / k))


def parallelism_segment(u: float, k: float) -> float:
    """Exact inverse of angle_of_parallelism: y = k*log(cot(u/2)).

    Only acute (or right) angles of parallelism exist, so u must lie in
    (0, pi/2].
    """
    k = _check_curvature(k)
    if not math.isfinite(u):
        raise DomainError(f"angle must be finite, got {u!r}")
    if u <= 0.0 or u > math.pi / 2.0 + 1e-15:
        raise DomainError(
            f"no segment has angle of parallelism {u!r}; need 0 < u <= pi/2"
        )
    u = min(u, math.pi / 2.0)
    return k * math.log(1.0 / math.tan(u / 2.0))


def circle_circumference(r: float, k: float) -> float:
    """Circumference 2*pi*k*sinh(r/k) of the circle of radius r."""
    k = _check_curvature(k)
    r = _check_length(r, "radius r")
    return 2.0 * math.pi * k * math.sinh(_check_exp_arg(r, k))


def circle_area(r: float, k: float) -> float:
    """Area 4*pi*k^2*sinh(r/2k)^2 of the circle of radius r.

    Its derivative in r is circle_circumference(r, k).
    """
    k = _check_curvature(k)
    r = _check_length(r, "radius r")
    _check_exp_arg(r, k)
    s = math.sinh(r / (2.0 * k))
    return 4.0 * math.pi * k * k * s * s


def equidistant_arc_length(a: float, b: float, k: float) -> float:
    """Length a*cosh(b/k) of the equidistant arc at distance b over a base
    segment of length a.

    Equivalently a / sin(angle_of_parallelism(b, k)).
    """
    k = _check_curvature(k)
    a = _check_length(a, "base length a")
    b = _check_length(b, "offset b")
    return a * math.cosh(_check_exp_arg(b, k))


def horocycle_arc_length(y: float, k: float) -> float:
    """Length r = k*sinh(y/k) of the horocyclic arc with semichord y."""
    k = _check_curvature(k)
    y = _check_length(y, "semichord y")
    return k * math.sinh(_check_exp_arg(y, k))


def chord_to_semichord(s: float, k: float) -> float:
    """Semichord y of the horocyclic arc whose full chord has length s.

    Inverts sinh(s/2k) = sinh(y/k)/2.
    """
    k = _check_curvature(k)
    s = _check_length(s, "chord s")
    _check_exp_arg(s, k)
    return k * math.asinh(2.0 * math.sinh(s / (2.0 * k)))


def lcurve_point(x: float, k: float) -> float:
    """Ordinate y of the horocycle through the origin in rectangular
    coordinates: exp(y/k) = X + sqrt(X^2 - 1) with X = exp(x/k)."""
    k = _check_curvature(k)
    x = _check_length(x, "abscissa x")
    t = _check_exp_arg(x, k)
    # log(X + sqrt(X^2-1)) = acosh(X), stable for X = exp(t) >= 1
    return k * math.acosh(math.exp(t))


def lcurve_arc_length(x: float, k: float) -> float:
    """Arc length k*sqrt(X^2 - 1) of the horocycle from its vertex to
    abscissa x, with X = exp(x/k)."""
    k = _check_curvature(k)
    x = _check_length(x, "abscissa x")
    t = _check_exp_arg(x, k)
    if 2.0 * t > EXP_ARG_LIMIT:
        raise OutOfRangeError(f"argument {x!r} exceeds {EXP_ARG_LIMIT / 2}*k")
    return k * math.sqrt(math.exp(2.0 * t) - 1.0)


def horocycle_sector_area(r: float, x: float | None, k: float) -> float:
    """Area r*k*(1 - exp(-x/k)) between concentric horocyclic arcs of
    outer length r separated by radial depth x.

    x=None selects the unbounded strip out to the ideal point, whose
    area is the finite limit r*k.  A floating-point infinity is not
    accepted; the unbounded case is an explicit sentinel.
    """
    k = _check_curvature(k)
    r = _check_length(r, "arc length r")
    if x is None:
        return r * k
    x = _check_length(x, "depth x")
    _check_exp_arg(x, k)
    return r * k * -math.expm1(-x / k)


def axial_volume(p: float, k: float) -> float:
    """Volume p*k/2 enclosed by a figure of area p on the limit surface
    and all its axes out to the ideal point."""
    k = _check_curvature(k)
    p = _check_length(p, "area p")
    return 0.5 * p * k


@dataclass(frozen=True)
class EquidistantRegionMeasures:
    """Measures attached to the equidistant region over a base segment p
    at offset q: planar area, the prism over it, and the solid/surface of
    revolution about the base line."""

    area: float
    prism_volume: float
    revolution_surface: float
    revolution_volume: float


def equidistant_region_measures(p: float, q: float, k: float) -> EquidistantRegionMeasures:
    """area = p*k*sinh(q/k); prism = p*k*sinh(2q/k)/4 + p*q/2;
    revolution surface = pi*k*p*sinh(2q/k); revolution volume =
    pi*k^2*p*sinh(q/k)^2."""
    k = _check_curvature(k)
    p = _check_length(p, "base length p")
    q = _check_length(q, "offset q")
    t = _check_exp_arg(q, k)
    if 2.0 * t > EXP_ARG_LIMIT:
        raise OutOfRangeError(f"offset {q!r} exceeds {EXP_ARG_LIMIT / 2}*k")
    sh = math.sinh(t)
    sh2 = math.sinh(2.0 * t)
    return EquidistantRegionMeasures(
        area=p * k * sh,
        prism_volume=0.25 * p * k * sh2 + 0.5 * p * q,
        revolution_surface=math.pi * k * p * sh2,
        revolution_volume=math.pi * k * k * p * sh * sh,
    )


@dataclass(frozen=True)
class SphereMeasures:
    great_circle: float
    surface: float
    volume: float


def sphere_measures(x: float, k: float) -> SphereMeasures:
    """Great circle 2*pi*k*sinh(x/k), surface 4*pi*k^2*sinh(x/k)^2
    (= great_circle^2 / pi), volume pi*k^3*sinh(2x/k) - 2*pi*k^2*x."""
    k = _check_curvature(k)
    x = _check_length(x, "radius x")
    t = _check_exp_arg(x, k)
    if 2.0 * t > EXP_ARG_LIMIT:
        raise OutOfRangeError(f"radius {x!r} exceeds {EXP_ARG_LIMIT / 2}*k")
    sh = math.sinh(t)
    return SphereMeasures(
        great_circle=2.0 * math.pi * k * sh,
        surface=4.0 * math.pi * k * k * sh * sh,
        volume=math.pi * k ** 3 * math.sinh(2.0 * t) - 2.0 * math.pi * k * k * x,
    )


def spherical_cap_area(p: float, u: float) -> float:
    """Area p^2*(1 - cos u)/(2*pi) of the spherical cap with central
    half-angle u on the sphere of great-circle circumference p.

    Neutral: contains no k.  u = pi gives the whole sphere, p^2/pi.
    """
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f"great-circle circumference p must be positive, got {p!r}")
    if not math.isfinite(u) or u < 0.0 or u > math.pi:
        raise DomainError(f"central angle u must lie in [0, pi], got {u!r}")
    return p * p * (1.0 - math.cos(u)) / (2.0 * math.pi)


def spherical_triangle_area(excess: float, p: float) -> float:
    """Area excess*p^2/(4*pi^2) of a spherical triangle with angular
    excess over pi, on the sphere of great-circle circumference p."""
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f"great-circle circumference p must be positive, got {p!r}")
    if not math.isfinite(excess) or excess <= 0.0 or excess >= 2.0 * math.pi:
        raise DomainError(f"spherical excess must lie in (0, 2*pi), got {excess!r}")
    return excess * p * p / (4.0 * math.pi * math.pi)


def spherical_right_sine(a: float, b: float) -> float:
    """Angle A = asin(sin a / sin b) opposite leg arc a in the spherical
    right triangle with hypotenuse arc b.

    Neutral: no k appears; identical to the Euclidean-sphere value.
    """
    for name, v in (("a", a), ("b", b)):
        if not math.isfinite(v) or v <= 0.0 or v >= math.pi:
            raise DomainError(f"arc {name} must lie in (0, pi), got {v!r}")
    ratio = math.sin(a) / math.sin(b)
    if ratio > 1.0 + 1e-15:
        raise DomainError(f"sin a = {math.sin(a)!r} exceeds sin b = {math.sin(b)!r}")
    return math.asin(min(ratio, 1.0))


# --------------------------------------------------------------------------
# triangle records and solvers
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RightTriangle:
    """Right triangle with legs a, b, hypotenuse c, angles alpha, beta
    opposite the legs, in a plane with linear constant k."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    k: float

    def defect(self) -> float:
        return math.pi / 2.0 - self.alpha - self.beta

    def area(self) -> float:
        return self.k * self.k * self.defect()

    def equation_residuals(self) -> dict[str, float]:
        """Relative residuals of the five defining equations; all should
        vanish for a consistent triangle."""
        k = self.k
        sa, sb, sc = (math.sinh(v / k) for v in (self.a, self.b, self.c))
        ca, cb, cc = (math.cosh(v / k) for v in (self.a, self.b, self.c))
        return {
            "sine": abs(math.sin(self.alpha) * sc - sa) / max(sa, 1e-300),
            "leg_angle": abs(math.cos(self.alpha) - math.sin(self.beta) * ca),
            "pythagoras_cosh": abs(cc - ca * cb) / cc,
            "pythagoras_sinh": abs(sc * sc - (ca * sb) ** 2 - sa * sa) / max(sc * sc, 1e-300),
            "cotangent": abs(1.0 / (math.tan(self.alpha) * math.tan(self.beta)) - cc) / cc,
        }


def _right_from_legs(a: float, b: float, k: float) -> RightTriangle:
    ca, cb = math.cosh(a / k), math.cosh(b / k)
    c = k * math.acosh(ca * cb)
    sc = math.sinh(c / k)
    alpha = math.asin(min(1.0, math.sinh(a / k) / sc))
    beta = math.asin(min(1.0, math.sinh(b / k) / sc))
    return RightTriangle(a, b, c, alpha, beta, k)


def solve_right_triangle(
    *,
    a: float | None = None,
    b: float | None = None,
    c: float | None = None,
    alpha: float | None = None,
    beta: float | None = None,
    k: float,
    tol: float = 1e-9,
) -> RightTriangle:
    """Solve a right triangle from any sufficient subset of its parts.

    Any two of {a, b, c, alpha, beta} determine the triangle (angles
    alone included: similar triangles do not exist here).  The triple
    {c, alpha, beta} is accepted and checked for consistency against
    cot(alpha)*cot(beta) = cosh(c/k) at relative tolerance `tol`.

    Each given pair is resolved by the single equation that isolates one
    unknown, after which the remaining parts follow from the cosh
    product rule and the sine relation; the five equations then hold
    simultaneously and can be audited via RightTriangle.equation_residuals().
    """
    k = _check_curvature(k)
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v is not None and (not math.isfinite(v) or v <= 0.0):
            raise DomainError(f"side {name} must be positive and finite, got {v!r}")
    for name, v in (("alpha", alpha), ("beta", beta)):
        if v is not None and (not math.isfinite(v) or v <= 0.0 or v >= math.pi / 2.0):
            raise DomainError(f"angle {name} must lie in (0, pi/2), got {v!r}")

    given = {n for n, v in (("a", a), ("b", b), ("c", c), ("al", alpha), ("be", beta)) if v is not None}

    if given == {"c", "al", "be"}:
        want = math.cosh(c / k)
        got = 1.0 / (math.tan(alpha) * math.tan(beta))
        if abs(got - want) > tol * max(abs(want), 1.0):
            raise DomainError(
                "inconsistent givens: cot(alpha)*cot(beta) = "
                f"{got!r} but cosh(c/k) = {want!r}"
            )
        return solve_right_triangle(alpha=alpha, beta=beta, k=k)

    if len(given) != 2:
        raise DomainError(
            f"need exactly two independent parts (or the c/alpha/beta triple); got {sorted(given)}"
        )

    # mirror symmetry a<->b, alpha<->beta reduces the ten pairs to six
    def mirrored() -> RightTriangle:
        t = solve_right_triangle(a=b, b=a, c=c, alpha=beta, beta=alpha, k=k, tol=tol)
        return RightTriangle(t.b, t.a, t.c, t.beta, t.alpha, t.k)

    for x in (a, b, c):
        if x is not None:
            _check_exp_arg(x, k)

    if given == {"a", "b"}:
        return _right_from_legs(a, b, k)

    if given == {"a", "c"}:
        if c <= a:
            raise DomainError(f"hypotenuse c = {c!r} must exceed leg a = {a!r}")
        bb = k * math.acosh(math.cosh(c / k) / math.cosh(a / k))
        return _right_from_legs(a, bb, k)

    if given == {"b", "c"}:
        return mirrored()

    if given == {"c", "al"}:
        aa = k * math.asinh(math.sin(alpha) * math.sinh(c / k))
        return solve_right_triangle(a=aa, c=c, k=k, tol=tol)

    if given == {"c", "be"}:
        return mirrored()

    if given == {"a", "al"}:
        # cos(alpha) = sin(beta)*cosh(a/k) isolates beta in one step
        beta_ = math.asin(math.cos(alpha) / math.cosh(a / k))
        bb = k * math.asinh(math.tanh(a / k) / math.tan(alpha))
        cc = k * math.acosh(math.cosh(a / k) * math.cosh(bb / k))
        return RightTriangle(a, bb, cc, alpha, beta_, k)

    if given == {"b", "be"}:
        return mirrored()

    if given == {"a", "be"}:
        s = math.sin(beta) * math.cosh(a / k)
        if s >= 1.0:
            raise DomainError(
                f"no triangle: angle beta = {beta!r} is not smaller than the "
                f"angle of parallelism of leg a = {a!r}"
            )
        alpha_ = math.acos(s)
        return solve_right_triangle(a=a, alpha=alpha_, k=k, tol=tol)

    if given == {"b", "al"}:
        return mirrored()

    if given == {"al", "be"}:
        if alpha + beta >= math.pi / 2.0:
            raise DomainError(
                f"no triangle: alpha + beta = {alpha + beta!r} must be below pi/2"
            )
        cc = k * math.acosh(1.0 / (math.tan(alpha) * math.tan(beta)))
        aa = k * math.acosh(math.cos(alpha) / math.sin(beta))
        bb = k * math.acosh(math.cos(beta) / math.sin(alpha))
        return RightTriangle(aa, bb, cc, alpha, beta, k)

    raise DomainError(f"insufficient or unsupported givens: {sorted(given)}")


@dataclass(frozen=True)
class GeneralTriangle:
    """Triangle with sides a, b, c and opposite angles A, B, C."""

    a: float
    b: float
    c: float
    A: float
    B: float
    C: float
    k: float

    def defect(self) -> float:
        return math.pi - self.A - self.B - self.C

    def area(self) -> float:
        return self.k * self.k * self.defect()

    def law_of_cosines_residuals(self) -> tuple[float, float, float]:
        """Relative residual of cosh(a/k) = cosh b cosh c - sinh b sinh c cos A
        at each vertex."""
        k = self.k
        out = []
        parts = [
            (self.a, self.b, self.c, self.A),
            (self.b, self.c, self.a, self.B),
            (self.c, self.a, self.b, self.C),
        ]
        for s, t, u, ang in parts:
            lhs = math.cosh(s / k)
            rhs = math.cosh(t / k) * math.cosh(u / k) - math.sinh(t / k) * math.sinh(u / k) * math.cos(ang)
            out.append(abs(lhs - rhs) / lhs)
        return tuple(out)

    def sine_law_spread(self) -> float:
        """Max deviation among the three ratios sin(angle)/sinh(side/k)."""
        k = self.k
        r = [
            math.sin(self.A) / math.sinh(self.a / k),
            math.sin(self.B) / math.sinh(self.b / k),
            math.sin(self.C) / math.sinh(self.c / k),
        ]
        return (max(r) - min(r)) / max(r)


def _sss_angles(a: float, b: float, c: float, k: float) -> tuple[float, float, float]:
    def angle(s, t, u):
        num = math.cosh(t / k) * math.cosh(u / k) - math.cosh(s / k)
        den = math.sinh(t / k) * math.sinh(u / k)
        x = num / den
        if abs(x) > 1.0 + 1e-12:
            raise DomainError("sides violate the triangle inequality")
        return math.acos(max(-1.0, min(1.0, x)))

    return angle(a, b, c), angle(b, c, a), angle(c, a, b)


def _aaa_sides(A: float, B: float, C: float, k: float) -> tuple[float, float, float]:
    def side(x, y, z):
        num = math.cos(x) + math.cos(y) * math.cos(z)
        den = math.sin(y) * math.sin(z)
        v = num / den
        if v <= 1.0:
            raise DomainError("angles admit no triangle: angle sum not below pi")
        return k * math.acosh(v)

    return side(A, B, C), side(B, C, A), side(C, A, B)


def solve_general_triangle(
    *,
    a: float | None = None,
    b: float | None = None,
    c: float | None = None,
    A: float | None = None,
    B: float | None = None,
    C: float | None = None,
    k: float,
) -> GeneralTriangle:
    """Solve a triangle from SSS, SAS, ASA or AAA givens.

    SAS requires the angle opposite the missing side (the included one);
    ASA requires the side opposite the missing angle.  AAA determines
    the triangle via the angle form of the law of cosines,
    cos A = -cos B cos C + sin B sin C cosh(a/k).
    """
    k = _check_curvature(k)
    sides = {"a": a, "b": b, "c": c}
    angles = {"A": A, "B": B, "C": C}
    for n, v in sides.items():
        if v is not None:
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"side {n} must be positive and finite, got {v!r}")
            _check_exp_arg(v, k)
    for n, v in angles.items():
        if v is not None and (not math.isfinite(v) or v <= 0.0 or v >= math.pi):
            raise DomainError(f"angle {n} must lie in (0, pi), got {v!r}")
    ns = {n for n, v in sides.items() if v is not None}
    na = {n for n, v in angles.items() if v is not None}

    if ns == {"a", "b", "c"} and not na:
        if a >= b + c or b >= c + a or c >= a + b:
            raise DomainError("sides violate the triangle inequality")
        A_, B_, C_ = _sss_angles(a, b, c, k)
        return GeneralTriangle(a, b, c, A_, B_, C_, k)

    if len(ns) == 2 and len(na) == 1:
        missing = ({"a", "b", "c"} - ns).pop()
        if na != {missing.upper()}:
            raise DomainError(
                "SAS requires the included angle (the one opposite the missing side); "
                f"got sides {sorted(ns)} with angle {sorted(na)}"
            )
        known = {**sides, **angles}
        # rotate labels so the computation reads (t, u, included angle)
        t, u, inc = {
            "a": (known["b"], known["c"], known["A"]),
            "b": (known["c"], known["a"], known["B"]),
            "c": (known["a"], known["b"], known["C"]),
        }[missing]
        ch = math.cosh(t / k) * math.cosh(u / k) - math.sinh(t / k) * math.sinh(u / k) * math.cos(inc)
        s = k * math.acosh(ch)
        full = dict(sides)
        full[missing] = s
        A_, B_, C_ = _sss_angles(full["a"], full["b"], full["c"], k)
        return GeneralTriangle(full["a"], full["b"], full["c"], A_, B_, C_, k)

    if len(na) == 2 and len(ns) == 1:
        missing = ({"A", "B", "C"} - na).pop()
        if ns != {missing.lower()}:
            raise DomainError(
                "ASA requires the included side (the one opposite the missing angle); "
                f"got angles {sorted(na)} with side {sorted(ns)}"
            )
        known = {**sides, **angles}
        x, y, inc_side = {
            "A": (known["B"], known["C"], known["a"]),
            "B": (known["C"], known["A"], known["b"]),
            "C": (known["A"], known["B"], known["c"]),
        }[missing]
        cos_m = -math.cos(x) * math.cos(y) + math.sin(x) * math.sin(y) * math.cosh(inc_side / k)
        if abs(cos_m) >= 1.0:
            raise DomainError("no triangle with these two angles on the given side")
        m = math.acos(cos_m)
        full = dict(angles)
        full[missing] = m
        return solve_general_triangle(A=full["A"], B=full["B"], C=full["C"], k=k)

    if na == {"A", "B", "C"} and not ns:
        if A + B + C >= math.pi:
            raise DomainError(f"angle sum {A + B + C!r} must be below pi")
        a_, b_, c_ = _aaa_sides(A, B, C, k)
        return GeneralTriangle(a_, b_, c_, A, B, C, k)

    raise DomainError(
        f"unsupported givens (need SSS, SAS, ASA or AAA): sides {sorted(ns)}, angles {sorted(na)}"
    )


def polygon_area_from_angles(angles: list[float], k: float) -> float:
    """Area k^2 * ((n-2)*pi - sum(angles)) of the polygon with the given
    interior angles.

    A zero angle marks an ideal vertex, so the ideal triangle (0, 0, 0)
    has the maximal triangle area pi*k^2.
    """
    k = _check_curvature(k)
    n = len(angles)
    if n < 3:
        raise DomainError(f"a polygon needs at least 3 angles, got {n}")
    for v in angles:
        if not math.isfinite(v) or v < 0.0 or v >= math.pi:
            raise DomainError(f"interior angles must lie in [0, pi), got {v!r}")
    defect = (n - 2) * math.pi - math.fsum(angles)
    if defect <= 0.0:
        raise DomainError(
            f"angle sum {math.fsum(angles)!r} leaves no positive defect for n = {n}"
        )
    return k * k * defect
