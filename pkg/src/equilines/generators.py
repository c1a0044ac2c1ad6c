"""Deterministic and seeded generators for base point sets.

All generators return canonical projective points over one quadratic
field.  The rational families use d = 5 (any positive squarefree d
works; rational coordinates are real regardless).  The Hesse
configuration needs a primitive cube root of unity and therefore fixes
d = -3.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction

from .errors import ConfigError
from .geometry import ProjPoint, affine_point
from .quadfield import quad

DEFAULT_RATIONAL_D = 5
HESSE_D = -3


def grid(m: int, d: int = DEFAULT_RATIONAL_D) -> tuple[ProjPoint, ...]:
    """The m x m affine integer grid."""
    if m < 1:
        raise ValueError("grid size must be >= 1")
    return tuple(
        affine_point(x, y, d=d) for x in range(m) for y in range(m)
    )


def near_pencil(total: int, d: int = DEFAULT_RATIONAL_D) -> tuple[ProjPoint, ...]:
    """total - 1 collinear points on y = 0 plus the single point (0, 1)."""
    if total < 3:
        raise ValueError("a near-pencil needs at least 3 points")
    pts = [affine_point(x, 0, d=d) for x in range(total - 1)]
    pts.append(affine_point(0, 1, d=d))
    return tuple(pts)


def hesse() -> tuple[ProjPoint, ...]:
    """The nine-point configuration with twelve 3-point lines over Q(sqrt(-3)).

    Realizable over C but not over R; the standard complex-only test case.
    """
    d = HESSE_D
    omega = quad(Fraction(-1, 2), Fraction(1, 2), d=d)  # primitive cube root of 1
    eta_values = (quad(1, d=d), omega, omega * omega)
    z, o = quad(0, d=d), quad(1, d=d)
    pts: list[ProjPoint] = []
    for eta in eta_values:
        pts.append(ProjPoint(z, o, -eta))
    for eta in eta_values:
        pts.append(ProjPoint(o, z, -eta))
    for eta in eta_values:
        pts.append(ProjPoint(o, -eta, z))
    return tuple(pts)


def random_rational(
    total: int, seed: int, bound: int, d: int = DEFAULT_RATIONAL_D
) -> tuple[ProjPoint, ...]:
    """total distinct affine points with rational coordinates whose
    numerators and denominators are bounded by the given bound; seeded."""
    if total < 1:
        raise ValueError("need at least 1 point")
    if bound < 1:
        raise ValueError("coordinate bound must be >= 1")
    rng = random.Random(seed)

    def coord() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    pts: list[ProjPoint] = []
    seen: set[ProjPoint] = set()
    while len(pts) < total:
        p = affine_point(coord(), coord(), d=d)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return tuple(pts)


_SPEC_RE = re.compile(r"^(?P<name>[a-z_]+)(?:\((?P<args>[^)]*)\))?$")


def generate(spec: str) -> tuple[ProjPoint, ...]:
    """Build a point set from a spec string.

    Accepted forms: "grid(m)", "near_pencil(N)", "hesse",
    "random_rational(N,seed,B)".
    """
    m = _SPEC_RE.match(spec.strip().replace(" ", ""))
    if not m:
        raise ConfigError(f"cannot parse generator spec {spec!r}")
    name = m.group("name")
    raw_args = m.group("args")
    try:
        args = [int(a) for a in raw_args.split(",")] if raw_args else []
    except ValueError:
        raise ConfigError(f"generator arguments must be integers: {spec!r}") from None
    try:
        if name == "grid":
            (size,) = args
            return grid(size)
        if name == "near_pencil":
            (total,) = args
            return near_pencil(total)
        if name == "hesse":
            if args:
                raise ConfigError("hesse takes no arguments")
            return hesse()
        if name == "random_rational":
            total, seed, bound = args
            return random_rational(total, seed, bound)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad arguments in generator spec {spec!r}: {exc}") from None
    raise ConfigError(f"unknown generator {name!r}")


def discriminant_of(points: tuple[ProjPoint, ...]) -> int:
    return points[0].d
