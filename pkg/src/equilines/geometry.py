"""Exact projective points, lines, and line enumeration over Q(sqrt(d)).

Points and lines are homogeneous triples canonicalized so that the first
nonzero coordinate is 1; equality is then componentwise.  Collinearity is
an exact 3x3 determinant test, so every incidence decision is certain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    DegeneratePairError,
    DuplicatePointError,
    FieldMismatchError,
    InsufficientPointsError,
)
from .quadfield import Discriminant, QuadElement, quad

GREEN = "green"
RED = "red"
COLORS = (GREEN, RED)


def _canonical_triple(
    c0: QuadElement, c1: QuadElement, c2: QuadElement
) -> tuple[QuadElement, QuadElement, QuadElement]:
    if c0.d != c1.d or c0.d != c2.d:
        raise FieldMismatchError("coordinates of one triple must share a discriminant")
    for pivot in (c0, c1, c2):
        if not pivot.is_zero:
            inv = pivot.invert()
            return (c0 * inv, c1 * inv, c2 * inv)
    raise ValueError("homogeneous triple must not be identically zero")


@dataclass(frozen=True)
class ProjPoint:
    """Projective point (x : y : z), canonical on construction."""

    x: QuadElement
    y: QuadElement
    z: QuadElement

    def __post_init__(self):
        x, y, z = _canonical_triple(self.x, self.y, self.z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def d(self) -> int:
        return self.x.d

    @property
    def coords(self) -> tuple[QuadElement, QuadElement, QuadElement]:
        return (self.x, self.y, self.z)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coords)

    def __str__(self) -> str:
        return f"({self.x} : {self.y} : {self.z})"


@dataclass(frozen=True)
class ProjLine:
    """Projective line with dual triple (u : v : w); ux + vy + wz = 0."""

    u: QuadElement
    v: QuadElement
    w: QuadElement

    def __post_init__(self):
        u, v, w = _canonical_triple(self.u, self.v, self.w)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def contains(self, p: ProjPoint) -> bool:
        return (self.u * p.x + self.v * p.y + self.w * p.z).is_zero

    def __str__(self) -> str:
        return f"[{self.u} : {self.v} : {self.w}]"


def affine_point(x, y, *, d: int) -> ProjPoint:
    """Lift an affine point (x, y) to (x : y : 1)."""
    return ProjPoint(quad(x, d=d), quad(y, d=d), quad(1, d=d))


def point(x: QuadElement, y: QuadElement, z: QuadElement) -> ProjPoint:
    return ProjPoint(x, y, z)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Exact determinant test for three points on one line."""
    if not (p.d == q.d == r.d):
        raise FieldMismatchError("collinearity test needs one common field")
    det = (
        p.x * (q.y * r.z - q.z * r.y)
        - p.y * (q.x * r.z - q.z * r.x)
        + p.z * (q.x * r.y - q.y * r.x)
    )
    return det.is_zero


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (cross product of triples)."""
    if p.d != q.d:
        raise FieldMismatchError("points must share a discriminant")
    if p == q:
        raise DegeneratePairError(f"no unique line through the equal points {p}")
    return ProjLine(
        p.y * q.z - p.z * q.y,
        p.z * q.x - p.x * q.z,
        p.x * q.y - p.y * q.x,
    )


@dataclass(frozen=True)
class ColoredConfiguration:
    """Distinct projective points, each green or red, over one field.

    Green is the majority color by convention: inputs with more red than
    green points are ingested with the colors swapped (``colors_swapped``
    records that) so that k = green - red is always >= 0.
    """

    discriminant: Discriminant
    points: tuple[ProjPoint, ...]
    colors: tuple[str, ...]
    colors_swapped: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.points) != len(self.colors):
            raise ValueError("points and colors must have equal length")
        if not self.points:
            raise ValueError("a configuration needs at least one point")
        for c in self.colors:
            if c not in COLORS:
                raise ValueError(f"unknown color {c!r}")
        for p in self.points:
            if p.d != self.discriminant.d:
                raise FieldMismatchError(
                    f"point {p} does not live in Q(sqrt({self.discriminant.d}))"
                )
        seen: dict[ProjPoint, int] = {}
        for i, p in enumerate(self.points):
            if p in seen:
                raise DuplicatePointError(
                    f"points {seen[p]} and {i} coincide at {p}", (seen[p], i)
                )
            seen[p] = i
        greens = self.colors.count(GREEN)
        if greens < len(self.points) - greens:
            object.__setattr__(
                self,
                "colors",
                tuple(GREEN if c == RED else RED for c in self.colors),
            )
            object.__setattr__(self, "colors_swapped", True)

    @property
    def total(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        """Number of green points (the majority color)."""
        return self.colors.count(GREEN)

    @property
    def k(self) -> int:
        """Green count minus red count; nonnegative by convention."""
        return 2 * self.n - self.total

    @property
    def is_real(self) -> bool:
        return all(p.is_real for p in self.points)

    def with_colors(self, colors: tuple[str, ...]) -> ColoredConfiguration:
        return ColoredConfiguration(self.discriminant, self.points, colors)


def configuration(
    points: tuple[ProjPoint, ...] | list[ProjPoint],
    colors: tuple[str, ...] | list[str],
    d: int,
) -> ColoredConfiguration:
    return ColoredConfiguration(Discriminant(d), tuple(points), tuple(colors))


@dataclass(frozen=True)
class DeterminedLine:
    """A line through >= 2 configuration points, with their indices."""

    line: ProjLine
    point_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.point_indices)


def _integer_coords(p: ProjPoint) -> tuple[int, int, int, int, int, int]:
    """Denominator-cleared coordinates (xa, xb, ya, yb, za, zb) with each
    component xa + xb*sqrt(d) etc.; proportional to the point over Q."""
    fracs = (p.x.a, p.x.b, p.y.a, p.y.b, p.z.a, p.z.b)
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    return tuple(f.numerator * (den // f.denominator) for f in fracs)


def _line_key(p: tuple, q: tuple, d: int) -> tuple:
    """Canonical integer 6-tuple identifying the line through two points.

    The cross product is taken in Z[sqrt(d)] on denominator-cleared
    coordinates.  Multiplying through by the conjugate of the first
    nonzero component makes that component a plain (rational) integer,
    after which two field-proportional triples are integer-proportional;
    dividing by the signed gcd then yields a unique representative.
    """
    xa1, xb1, ya1, yb1, za1, zb1 = p
    xa2, xb2, ya2, yb2, za2, zb2 = q
    # (a + b sqrt(d)) * (c + e sqrt(d)) = (ac + be d) + (ae + bc) sqrt(d)
    ua = ya1 * za2 + yb1 * zb2 * d - (za1 * ya2 + zb1 * yb2 * d)
    ub = ya1 * zb2 + yb1 * za2 - (za1 * yb2 + zb1 * ya2)
    va = za1 * xa2 + zb1 * xb2 * d - (xa1 * za2 + xb1 * zb2 * d)
    vb = za1 * xb2 + zb1 * xa2 - (xa1 * zb2 + xb1 * za2)
    wa = xa1 * ya2 + xb1 * yb2 * d - (ya1 * xa2 + yb1 * xb2 * d)
    wb = xa1 * yb2 + xb1 * ya2 - (ya1 * xb2 + yb1 * xa2)
    if ua or ub:
        lead_a, lead_b = ua, ub
    elif va or vb:
        lead_a, lead_b = va, vb
    else:
        lead_a, lead_b = wa, wb
    out = []
    for c, e in ((ua, ub), (va, vb), (wa, wb)):
        out.append(c * lead_a - e * lead_b * d)
        out.append(e * lead_a - c * lead_b)
    g = 0
    for v in out:
        g = gcd(g, v)
    for v in out:
        if v:
            if v < 0:
                g = -g
            break
    return tuple(v // g for v in out)


def _line_from_key(key: tuple, d: int) -> ProjLine:
    lead = next(v for v in key if v)
    return ProjLine(
        QuadElement(Fraction(key[0], lead), Fraction(key[1], lead), d),
        QuadElement(Fraction(key[2], lead), Fraction(key[3], lead), d),
        QuadElement(Fraction(key[4], lead), Fraction(key[5], lead), d),
    )


def enumerate_lines(points: tuple[ProjPoint, ...]) -> tuple[DeterminedLine, ...]:
    """All determined lines with their exact incident point index sets.

    Every unordered point pair contributes its canonical line once, so the
    result satisfies sum over lines of C(m, 2) = C(N, 2) by construction.
    Pair processing runs on denominator-cleared integer coordinates (still
    exact); canonical field triples are materialized once per line.
    Output is sorted by incident index tuple, hence independent of any
    internal ordering.
    """
    d = points[0].d if points else 0
    ints = [_integer_coords(p) for p in points]
    incident: dict[tuple, set[int]] = {}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            key = _line_key(ints[i], ints[j], d)
            group = incident.get(key)
            if group is None:
                incident[key] = {i, j}
            else:
                group.update((i, j))
    records = [
        DeterminedLine(_line_from_key(key, d), tuple(sorted(idx)))
        for key, idx in incident.items()
    ]
    records.sort(key=lambda rec: rec.point_indices)
    return tuple(records)


def lines_of(config: ColoredConfiguration) -> tuple[DeterminedLine, ...]:
    if config.total < 2:
        raise InsufficientPointsError("line enumeration needs at least 2 points")
    return enumerate_lines(config.points)


def max_collinear(config: ColoredConfiguration) -> int:
    """Size of the largest collinear subset of the configuration."""
    return max(rec.size for rec in lines_of(config))
