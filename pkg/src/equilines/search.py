"""Coloring search over a fixed base point set.

Exhaustive mode evaluates every coloring with the requested (n, k);
local mode runs a seeded hill-descent with green/red swap moves.  Both
minimize the bound slack, which for a fixed base set and fixed (n, k) is
equivalent to minimizing the selected-line count, so the hot loop runs
in the array kernels.  The winning coloring is re-evaluated through the
exact profile path and the two counts must agree; a mismatch raises, so
the fast kernels never stand unchecked.

Applicability of a bound theorem depends only on the base set and
(n, k), never on the coloring: if the precondition fails, every coloring
is inapplicable and the result says so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import (
    BoundReport,
    BoundTheorem,
    bound_value,
    evaluate_bound,
    precondition,
    theorem_info,
)
from .errors import InternalInconsistencyError, SearchCapError
from .geometry import (
    GREEN,
    RED,
    ColoredConfiguration,
    ProjPoint,
    enumerate_lines,
)
from .kernels import (
    IncidenceArrays,
    build_incidence,
    descent_replay,
    exhaustive_scan,
    resolve_backend,
    selection_table,
)
from .quadfield import Discriminant

EXHAUSTIVE = "exhaustive"
LOCAL = "local"
DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class SearchSpec:
    """A base point set, a color balance k, a theorem, and a search mode."""

    points: tuple[ProjPoint, ...]
    k: int
    theorem: BoundTheorem
    mode: str = EXHAUSTIVE
    seed: int = 0
    budget: int = 10_000
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("search needs a base set of at least 2 points")
        if self.mode not in (EXHAUSTIVE, LOCAL):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.k < 0:
            raise ValueError("k must be >= 0 (green is the majority color)")
        if (self.total + self.k) % 2 != 0:
            raise ValueError(
                f"no coloring of {self.total} points has green-minus-red = {self.k}: "
                "N + k must be even"
            )
        if self.k > self.total:
            raise ValueError("k cannot exceed the number of points")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")

    @property
    def total(self) -> int:
        return len(self.points)

    @property
    def n_green(self) -> int:
        return (self.total + self.k) // 2

    def coloring_count(self) -> int:
        return math.comb(self.total, self.n_green)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search; deterministic given the spec (and seed)."""

    spec: SearchSpec
    best_colors: tuple[str, ...] | None
    best_report: BoundReport | None
    colorings_examined: int
    violations: int
    all_inapplicable: bool
    precondition_detail: str
    backend: str

    @property
    def bound_violated(self) -> bool:
        """Whether any examined applicable coloring beat the bound
        (expected never; a True here is a discovery worth flagging)."""
        return self.violations > 0

    @property
    def best_bits(self) -> str | None:
        """Best coloring as a bit-string over the base point order, 1=green."""
        if self.best_colors is None:
            return None
        return "".join("1" if c == GREEN else "0" for c in self.best_colors)


def colors_from_green_indices(total: int, green: np.ndarray) -> tuple[str, ...]:
    green_set = set(int(g) for g in green)
    return tuple(GREEN if i in green_set else RED for i in range(total))


@dataclass(frozen=True)
class _Prepared:
    incidence: IncidenceArrays
    sel: np.ndarray
    bound: Fraction
    applicable: bool
    detail: str


def _prepare(spec: SearchSpec) -> _Prepared:
    lines = enumerate_lines(spec.points)
    incidence = build_incidence(lines, spec.total)
    biggest = int(incidence.line_sizes.max())
    all_real = all(p.is_real for p in spec.points)
    applicable, detail = precondition(
        spec.theorem, spec.n_green, spec.k, spec.total, biggest, all_real
    )
    info = theorem_info(spec.theorem)
    t = incidence.n_lines if info.needs_total_lines else None
    bound = bound_value(spec.theorem, spec.n_green, spec.k, t)
    sel = selection_table(incidence.line_sizes, info.query.r, info.query.max_points)
    return _Prepared(incidence, sel, bound, applicable, detail)


def _finish(
    spec: SearchSpec,
    prep: _Prepared,
    best_green: np.ndarray,
    best_actual: int,
    violations: int,
    examined: int,
    backend: str,
) -> SearchResult:
    colors = colors_from_green_indices(spec.total, best_green)
    config = ColoredConfiguration(
        Discriminant(spec.points[0].d), spec.points, colors
    )
    report = evaluate_bound(spec.theorem, config)
    if report.actual != best_actual:
        raise InternalInconsistencyError(
            f"kernel count {best_actual} != exact recount {report.actual} "
            "for the best coloring"
        )
    return SearchResult(
        spec=spec,
        best_colors=colors,
        best_report=report,
        colorings_examined=examined,
        violations=violations,
        all_inapplicable=False,
        precondition_detail=prep.detail,
        backend=backend,
    )


def _inapplicable(spec: SearchSpec, prep: _Prepared, backend: str) -> SearchResult:
    return SearchResult(
        spec=spec,
        best_colors=None,
        best_report=None,
        colorings_examined=0,
        violations=0,
        all_inapplicable=True,
        precondition_detail=prep.detail,
        backend=backend,
    )


def exhaustive_search(spec: SearchSpec, backend: str | None = None) -> SearchResult:
    """Evaluate every coloring with the spec's (n, k); minimal slack wins,
    ties going to the lexicographically smallest green index tuple."""
    if spec.mode != EXHAUSTIVE:
        raise ValueError("spec.mode must be 'exhaustive'")
    count = spec.coloring_count()
    if count > spec.cap:
        raise SearchCapError(
            f"exhaustive search over {count} colorings exceeds the cap {spec.cap}",
            count,
        )
    which = resolve_backend(backend)
    prep = _prepare(spec)
    if not prep.applicable:
        return _inapplicable(spec, prep, which)
    best_actual, best_green, violations, examined = exhaustive_scan(
        prep.incidence,
        prep.sel,
        spec.n_green,
        prep.bound.numerator,
        prep.bound.denominator,
        backend=which,
    )
    return _finish(spec, prep, best_green, best_actual, violations, examined, which)


def local_search(spec: SearchSpec, backend: str | None = None) -> SearchResult:
    """Seeded stochastic hill-descent on slack with green/red swap moves.

    The move sequence is pregenerated from the seed, so a fixed spec
    yields an identical result on every backend.  Swaps preserve n and k
    by construction.  Budget counts proposed moves beyond the initial
    coloring; rejected proposals still count as examined colorings.
    """
    if spec.mode != LOCAL:
        raise ValueError("spec.mode must be 'local'")
    which = resolve_backend(backend)
    prep = _prepare(spec)
    if not prep.applicable:
        return _inapplicable(spec, prep, which)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n, n_red = spec.n_green, spec.total - spec.n_green
    initial_green = np.sort(rng.permutation(spec.total)[:n]).astype(np.int64)
    if n_red == 0 or spec.budget == 0:
        moves_g = np.empty(0, dtype=np.int64)
        moves_r = np.empty(0, dtype=np.int64)
    else:
        moves_g = rng.integers(0, n, size=spec.budget, dtype=np.int64)
        moves_r = rng.integers(0, n_red, size=spec.budget, dtype=np.int64)
    best_actual, best_green, violations, examined = descent_replay(
        prep.incidence,
        prep.sel,
        initial_green,
        moves_g,
        moves_r,
        prep.bound.numerator,
        prep.bound.denominator,
        backend=which,
    )
    return _finish(spec, prep, best_green, best_actual, violations, examined, which)


def run_search(spec: SearchSpec, backend: str | None = None) -> SearchResult:
    if spec.mode == EXHAUSTIVE:
        return exhaustive_search(spec, backend)
    return local_search(spec, backend)
