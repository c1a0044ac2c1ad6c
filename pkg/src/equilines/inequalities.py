"""Incidence inequalities on the line-size marginals t_m.

All five are evaluated on the colorless marginals of a configuration
(t_m = lines through exactly m of the N points), each with its own
applicability precondition:

  Melchior             sum (3-m) t_m >= 3          real plane, not all collinear
  Langer               sum m t_m >= N(N+3)/3       at most 2N/3 collinear
  Hirzebruch (linear)  t_2 + t_3 >= N + sum_{m>=5} (m-4) t_m     at most N-2 collinear
  Hirzebruch (quadr.)  t_2 + (3/4) t_3 >= N + sum_{m>=5} (2m-9) t_m   at most N-3 collinear
  Bojanowski-Pokora    sum (4m - m^2) t_m >= 4N    at most 2N/3 collinear

Melchior needs real coordinates; the other four hold over C.  Sides are
always reported exactly, even when the precondition fails, because
inapplicable-but-violated cases are instructive diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .geometry import ColoredConfiguration, lines_of


class InequalityKind(Enum):
    MELCHIOR = "melchior"
    LANGER = "langer"
    HIRZEBRUCH_LINEAR = "hirzebruch-linear"
    HIRZEBRUCH_QUADRATIC = "hirzebruch-quadratic"
    BOJANOWSKI_POKORA = "bojanowski-pokora"


@dataclass(frozen=True)
class InequalityReport:
    kind: InequalityKind
    applicable: bool
    precondition_detail: str
    lhs: Fraction
    rhs: Fraction
    satisfied: bool | None

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class LineStats:
    """Colorless incidence statistics shared by all five inequalities."""

    total_points: int
    size_counts: dict[int, int]
    max_collinear: int
    all_real: bool

    @classmethod
    def of(cls, config: ColoredConfiguration) -> LineStats:
        sizes: dict[int, int] = {}
        for rec in lines_of(config):
            sizes[rec.size] = sizes.get(rec.size, 0) + 1
        return cls(
            total_points=config.total,
            size_counts=dict(sorted(sizes.items())),
            max_collinear=max(sizes),
            all_real=config.is_real,
        )

    def t(self, m: int) -> int:
        return self.size_counts.get(m, 0)


def _collinearity_gate(stats: LineStats, limit: Fraction, label: str) -> tuple[bool, str]:
    ok = Fraction(stats.max_collinear) <= limit
    rel = "<=" if ok else ">"
    return ok, f"max_collinear={stats.max_collinear} {rel} {label}={limit}"


def _sides(kind: InequalityKind, stats: LineStats) -> tuple[Fraction, Fraction]:
    n = stats.total_points
    tk = stats.size_counts
    if kind is InequalityKind.MELCHIOR:
        return Fraction(sum((3 - m) * c for m, c in tk.items())), Fraction(3)
    if kind is InequalityKind.LANGER:
        return Fraction(sum(m * c for m, c in tk.items())), Fraction(n * (n + 3), 3)
    if kind is InequalityKind.HIRZEBRUCH_LINEAR:
        rhs = n + sum((m - 4) * c for m, c in tk.items() if m >= 5)
        return Fraction(stats.t(2) + stats.t(3)), Fraction(rhs)
    if kind is InequalityKind.HIRZEBRUCH_QUADRATIC:
        rhs = n + sum((2 * m - 9) * c for m, c in tk.items() if m >= 5)
        return stats.t(2) + Fraction(3, 4) * stats.t(3), Fraction(rhs)
    if kind is InequalityKind.BOJANOWSKI_POKORA:
        return (
            Fraction(sum((4 * m - m * m) * c for m, c in tk.items())),
            Fraction(4 * n),
        )
    raise ValueError(f"unknown inequality kind {kind!r}")


def _precondition(kind: InequalityKind, stats: LineStats) -> tuple[bool, str]:
    n = stats.total_points
    if kind is InequalityKind.MELCHIOR:
        if not stats.all_real:
            return False, "coordinates are not all real"
        if stats.max_collinear == n:
            return False, "all points are collinear"
        return True, "coordinates real and not all points collinear"
    if kind in (InequalityKind.LANGER, InequalityKind.BOJANOWSKI_POKORA):
        return _collinearity_gate(stats, Fraction(2 * n, 3), "2N/3")
    if kind is InequalityKind.HIRZEBRUCH_LINEAR:
        return _collinearity_gate(stats, Fraction(n - 2), "N-2")
    if kind is InequalityKind.HIRZEBRUCH_QUADRATIC:
        return _collinearity_gate(stats, Fraction(n - 3), "N-3")
    raise ValueError(f"unknown inequality kind {kind!r}")


def evaluate(kind: InequalityKind, config: ColoredConfiguration) -> InequalityReport:
    """Evaluate one inequality with exact sides and precondition status.

    A failed precondition yields applicable=False with satisfied=None;
    the sides are still reported for diagnostics.
    """
    return _evaluate_with_stats(kind, LineStats.of(config))


def _evaluate_with_stats(kind: InequalityKind, stats: LineStats) -> InequalityReport:
    applicable, detail = _precondition(kind, stats)
    lhs, rhs = _sides(kind, stats)
    return InequalityReport(
        kind=kind,
        applicable=applicable,
        precondition_detail=detail,
        lhs=lhs,
        rhs=rhs,
        satisfied=(lhs >= rhs) if applicable else None,
    )


def evaluate_all(config: ColoredConfiguration) -> tuple[InequalityReport, ...]:
    stats = LineStats.of(config)
    return tuple(_evaluate_with_stats(kind, stats) for kind in InequalityKind)


def bojanowski_pokora_fractional_slack(config: ColoredConfiguration) -> Fraction:
    """Slack of the equivalent form t_2 + (3/4)t_3 - N - sum_{m>=5} (m^2/4 - m) t_m.

    Exactly one quarter of the integer-form slack; kept as a cross-check
    of the algebraic equivalence between the two presentations.
    """
    stats = LineStats.of(config)
    n = stats.total_points
    lhs = stats.t(2) + Fraction(3, 4) * stats.t(3)
    rhs = n + sum(
        (Fraction(m * m, 4) - m) * c for m, c in stats.size_counts.items() if m >= 5
    )
    return lhs - rhs
