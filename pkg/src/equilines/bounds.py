"""Lower bounds on equichromatic line counts, checked against actual profiles.

Six named theorems are evaluated.  Each selects lines by an equichromatic
query (balance tolerance r, maximum points per line), carries an exact
bound in n, k (and sometimes the total line count t), a collinearity
precondition, and a realness requirement:

  PS1       r=1, unbounded   (t + 2n + 3 - k(k+1))/4    real, not all collinear
  PS2       r=1, <= 4 pts    (2n + 6 - k(k+1))/4        real, not all collinear
  PS3       r=1, <= 5 pts    (6n - k(k+3))/4            C ok, max_collinear <= 2n-k-3
  PS4       r=1, <= 6 pts    (t + 6n + 15 - 3k(k+1))/12 real, not all collinear
  EQUI_SIX  r=1, <= 6 pts    (6n - k(k+3))/4            C ok, max_collinear <= 2n-k-2
  EQUI_FOUR r=2, <= 4 pts    (10n - k(k+5))/6           C ok, max_collinear <= (2/3)(2n-k)

PS1-PS4 are the Purdy-Smith bounds; EQUI_SIX and EQUI_FOUR are the two
bounds whose coefficient certificates live in the proofcheck module.
The PS3 / EQUI_SIX preconditions differ by one ("no 2n-k-2 collinear"
vs "at most 2n-k-2 collinear"); both are kept literally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .geometry import ColoredConfiguration
from .profiles import EquichromaticQuery, LineProfile, compute_profile, count_equichromatic


class BoundTheorem(Enum):
    PS1 = "ps1"
    PS2 = "ps2"
    PS3 = "ps3"
    PS4 = "ps4"
    EQUI_SIX = "equisix"
    EQUI_FOUR = "equifour"


# Cells carrying positive weight in the EQUI_FOUR certificate; the query
# additionally selects the zero-weight cells (1,3) and (3,1).
EQUI_FOUR_SUPPORT_CELLS = frozenset({(0, 2), (2, 0), (1, 1), (1, 2), (2, 1), (2, 2)})


@dataclass(frozen=True)
class TheoremInfo:
    query: EquichromaticQuery
    requires_real: bool
    needs_total_lines: bool


_INFO: dict[BoundTheorem, TheoremInfo] = {
    BoundTheorem.PS1: TheoremInfo(EquichromaticQuery(1, None), True, True),
    BoundTheorem.PS2: TheoremInfo(EquichromaticQuery(1, 4), True, False),
    BoundTheorem.PS3: TheoremInfo(EquichromaticQuery(1, 5), False, False),
    BoundTheorem.PS4: TheoremInfo(EquichromaticQuery(1, 6), True, True),
    BoundTheorem.EQUI_SIX: TheoremInfo(EquichromaticQuery(1, 6), False, False),
    BoundTheorem.EQUI_FOUR: TheoremInfo(EquichromaticQuery(2, 4), False, False),
}


def theorem_info(theorem: BoundTheorem) -> TheoremInfo:
    return _INFO[theorem]


@dataclass(frozen=True)
class BoundReport:
    theorem: BoundTheorem
    applicable: bool
    precondition_detail: str
    bound: Fraction
    actual: int
    satisfied: bool | None
    # Count over EQUI_FOUR_SUPPORT_CELLS only; None for other theorems.
    support_actual: int | None = None

    @property
    def slack(self) -> Fraction:
        return self.actual - self.bound

    @property
    def bound_ceiling(self) -> int:
        """Smallest integer >= bound; integer counts satisfying the bound
        also satisfy this, so it is reported but never the primary check."""
        return math.ceil(self.bound)


def bound_value(
    theorem: BoundTheorem, n: int, k: int, t: int | None = None
) -> Fraction:
    """Exact rational bound for given n, k (and t where the formula uses it)."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    if theorem_info(theorem).needs_total_lines and t is None:
        raise ValueError(f"{theorem.value} needs the total number of determined lines")
    if theorem is BoundTheorem.PS1:
        return Fraction(t + 2 * n + 3 - k * (k + 1), 4)
    if theorem is BoundTheorem.PS2:
        return Fraction(2 * n + 6 - k * (k + 1), 4)
    if theorem in (BoundTheorem.PS3, BoundTheorem.EQUI_SIX):
        return Fraction(6 * n - k * (k + 3), 4)
    if theorem is BoundTheorem.PS4:
        return Fraction(t + 6 * n + 15 - 3 * k * (k + 1), 12)
    if theorem is BoundTheorem.EQUI_FOUR:
        return Fraction(10 * n - k * (k + 5), 6)
    raise ValueError(f"unknown theorem {theorem!r}")


def collinearity_limit(theorem: BoundTheorem, n: int, k: int) -> Fraction | None:
    """Largest allowed collinear subset; None means only "not all collinear"."""
    if theorem is BoundTheorem.PS3:
        return Fraction(2 * n - k - 3)
    if theorem is BoundTheorem.EQUI_SIX:
        return Fraction(2 * n - k - 2)
    if theorem is BoundTheorem.EQUI_FOUR:
        return Fraction(2 * (2 * n - k), 3)
    return None


def precondition(
    theorem: BoundTheorem,
    n: int,
    k: int,
    total_points: int,
    biggest_line: int,
    all_real: bool,
) -> tuple[bool, str]:
    """Applicability of a theorem from colorless statistics alone.

    Realness, the largest collinear subset, n, and k are all independent
    of which points carry which color, so one verdict covers every
    coloring of a base set with the same (n, k).
    """
    info = theorem_info(theorem)
    if info.requires_real and not all_real:
        return False, "coordinates are not all real"
    limit = collinearity_limit(theorem, n, k)
    if limit is None:
        if biggest_line == total_points:
            return False, "all points are collinear"
        return True, "coordinates real and not all points collinear"
    ok = biggest_line <= limit
    rel = "<=" if ok else ">"
    return ok, f"max_collinear={biggest_line} {rel} limit={limit}"


def evaluate_bound(
    theorem: BoundTheorem,
    config: ColoredConfiguration,
    profile: LineProfile | None = None,
) -> BoundReport:
    """Compare the actual equichromatic count against the theorem's bound."""
    if profile is None:
        profile = compute_profile(config)
    info = theorem_info(theorem)
    biggest_line = max((i + j for (i, j), _ in profile.counts), default=0)
    applicable, detail = precondition(
        theorem, config.n, config.k, config.total, biggest_line, config.is_real
    )
    t = profile.total_lines if info.needs_total_lines else None
    bound = bound_value(theorem, config.n, config.k, t)
    actual = count_equichromatic(profile, info.query)
    support = None
    if theorem is BoundTheorem.EQUI_FOUR:
        support = sum(
            c for (i, j), c in profile.counts if (i, j) in EQUI_FOUR_SUPPORT_CELLS
        )
    return BoundReport(
        theorem=theorem,
        applicable=applicable,
        precondition_detail=detail,
        bound=bound,
        actual=actual,
        satisfied=(actual >= bound) if applicable else None,
        support_actual=support,
    )


def evaluate_all_bounds(config: ColoredConfiguration) -> tuple[BoundReport, ...]:
    profile = compute_profile(config)
    return tuple(evaluate_bound(th, config, profile) for th in BoundTheorem)
