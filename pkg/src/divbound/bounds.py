"""Two-class Bayes problems over finite outcome spaces.

Exact Bayes error, posterior-averaged divergences, and the full suite of
certified lower and upper error bounds:

  * family lower bounds: the prior-weighted family divergence dominates the
    same family evaluated at the error probability, and that function of
    P_e is strictly decreasing on (0, 1/2], so bisecting it at the averaged
    value certifies a lower bound on P_e;
  * the exponential lower bound 1/4 exp(-J/2) (equal priors);
  * the square-root lower bound 1/2 - 1/2 sqrt(1 - 4 exp(-2H - J)) and the
    sharper J-inversion variant;
  * upper bounds from every generator with finite f_inf:
    P_e <= (f_inf - avg)/(2 f_inf - f(1)), including the closed forms for
    both families and the six difference measures, with the documented
    sharpness comparisons between them.

Outcomes with zero marginal mass are excluded from every expectation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .distributions import (
    PERMISSIVE,
    DiscreteDistribution,
    ValidationFailure,
    validate,
)
from .generators import (
    LN2,
    GeneratingFunction,
    generator,
    star_extended,
    xi_f_inf,
)
from .kernel import (
    ArgumentError,
    DivboundError,
    DomainError,
    OrderParameter,
    Regime,
    invert_decreasing,
)
from .measures import DIFF_TAGS, zeta as zeta_measure

INF = math.inf
PRIOR_TOL = 1e-12
SANDWICH_TOL = 1e-10

# Bracket for inverting the decreasing P_e-functions; targets above the
# value at the lower endpoint clamp there and are flagged near-vacuous.
LOWER_BRACKET_LO = 1e-12

_SQRT2 = math.sqrt(2.0)
# 1/f_inf coefficients of the six difference upper bounds.
DIFF_BOUND_COEF = {
    "D_dDelta": 4.0 / (7.0 - 4.0 * _SQRT2),
    "D_dh": 2.0 / (3.0 - 2.0 * _SQRT2),
    "D_dI": 2.0 / (4.0 - 2.0 * _SQRT2 - LN2),
    "D_hI": 2.0 / (1.0 - LN2),
    "D_hDelta": 4.0,
    "D_IDelta": 4.0 / (2.0 * LN2 - 1.0),
}


class InvalidPriors(ValidationFailure):
    kind = "invalid_priors"


class BoundUnavailable(DivboundError):
    """The requested upper bound does not exist (f_inf infinite)."""


@dataclass(frozen=True)
class TwoClassProblem:
    """Priors plus two class-conditional distributions on a shared alphabet."""

    p1: float
    p2: float
    cond1: DiscreteDistribution
    cond2: DiscreteDistribution
    label: Optional[str] = None

    @property
    def k(self) -> int:
        return self.cond1.n

    @classmethod
    def from_arrays(cls, priors, cond1, cond2, label: Optional[str] = None):
        p = np.asarray(priors, dtype=float).reshape(-1)
        if p.shape[0] != 2:
            raise InvalidPriors(f"expected 2 priors, got {p.shape[0]}")
        p1, p2 = float(p[0]), float(p[1])
        if not (math.isfinite(p1) and math.isfinite(p2)):
            raise InvalidPriors("priors must be finite")
        if p1 <= 0.0 or p2 <= 0.0:
            raise InvalidPriors(f"priors must be strictly positive, got {p1!r}, {p2!r}")
        if abs(p1 + p2 - 1.0) > PRIOR_TOL:
            raise InvalidPriors(f"priors sum to {p1 + p2!r}, not 1")
        c1 = validate(cond1, PERMISSIVE, min_size=1)
        c2 = validate(cond2, PERMISSIVE, min_size=1)
        if c1.n != c2.n:
            raise ValidationFailure(
                f"conditionals have different alphabet sizes: {c1.n} vs {c2.n}"
            )
        return cls(p1=p1, p2=p2, cond1=c1, cond2=c2, label=label)


@dataclass(frozen=True)
class PosteriorPoint:
    """Marginal mass and the two posteriors at one outcome."""

    px: float
    post1: float
    post2: float

    @property
    def live(self) -> bool:
        return self.px > 0.0


def posteriors(problem: TwoClassProblem) -> List[PosteriorPoint]:
    """Bayes posteriors per outcome; zero-marginal outcomes carry nan posteriors."""
    w1 = problem.p1 * problem.cond1.probs
    w2 = problem.p2 * problem.cond2.probs
    px = w1 + w2
    out = []
    for i in range(px.shape[0]):
        if px[i] > 0.0:
            out.append(
                PosteriorPoint(float(px[i]), float(w1[i] / px[i]), float(w2[i] / px[i]))
            )
        else:
            out.append(PosteriorPoint(0.0, math.nan, math.nan))
    return out


def _live_posterior_arrays(problem: TwoClassProblem) -> Tuple[np.ndarray, np.ndarray]:
    w1 = problem.p1 * problem.cond1.probs
    w2 = problem.p2 * problem.cond2.probs
    px = w1 + w2
    live = px > 0.0
    return px[live], w2[live] / px[live]


def bayes_error(problem: TwoClassProblem) -> float:
    """Expected minimum posterior: sum_x min(p1 c1(x), p2 c2(x))."""
    return float(
        np.sum(np.minimum(problem.p1 * problem.cond1.probs, problem.p2 * problem.cond2.probs))
    )


# ---------------------------------------------------------------------------
# pointwise family forms on the posterior (closed-form route)
# ---------------------------------------------------------------------------


def zeta_point(s, a: float) -> float:
    """First-family pointwise value at posterior a in [0, 1]; decreasing on (0, 1/2]."""
    op = OrderParameter.of(s)
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"posterior must lie in [0, 1], got {a!r}")
    b = 1.0 - a
    if op.regime is not Regime.REGULAR:
        if a == 0.0 or a == 1.0:
            return INF
        return (2.0 * a - 1.0) * math.log(a / b)
    s = op.s
    if a == 0.0 or a == 1.0:
        if 0.0 < s < 1.0:
            return -1.0 / (s * (s - 1.0))
        return INF
    return (a**s * b ** (1.0 - s) + b**s * a ** (1.0 - s) - 1.0) / (s * (s - 1.0))


def xi_point(s, a: float) -> float:
    """Second-family pointwise value at posterior a in [0, 1]."""
    op = OrderParameter.of(s)
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"posterior must lie in [0, 1], got {a!r}")
    b = 1.0 - a
    if op.regime is Regime.AT_ZERO:
        if a == 0.0 or a == 1.0:
            return 0.5 * LN2
        return 0.5 * (LN2 + a * math.log(a) + b * math.log(b))
    if op.regime is Regime.AT_ONE:
        if a == 0.0 or a == 1.0:
            return INF
        return -0.5 * math.log(2.0 * math.sqrt(a * b))
    s = op.s
    if a == 0.0 or a == 1.0:
        if s < 1.0:
            return (2.0 ** (-s) - 1.0) / (2.0 * s * (s - 1.0))
        return INF
    return (0.5 * (a ** (1.0 - s) + b ** (1.0 - s)) * 2.0 ** (-s) - 0.5) / (
        s * (s - 1.0)
    )


def averaged_zeta(problem: TwoClassProblem, s) -> float:
    """Posterior expectation of the first-family pointwise form (may be +inf)."""
    px, a2 = _live_posterior_arrays(problem)
    return float(sum(w * zeta_point(s, a) for w, a in zip(px, a2)))


def averaged_xi(problem: TwoClassProblem, s) -> float:
    """Posterior expectation of the second-family pointwise form (may be +inf)."""
    px, a2 = _live_posterior_arrays(problem)
    return float(sum(w * xi_point(s, a) for w, a in zip(px, a2)))


def average_f_divergence(problem: TwoClassProblem, g: GeneratingFunction) -> float:
    """E_x[f*(P(C2|x))], the posterior-averaged f-divergence (may be +inf)."""
    px, a2 = _live_posterior_arrays(problem)
    return float(sum(w * star_extended(g, a) for w, a in zip(px, a2)))


# ---------------------------------------------------------------------------
# lower bounds
# ---------------------------------------------------------------------------


def lower_bound_family(problem: TwoClassProblem, family: str, s) -> Tuple[float, str]:
    """Certified lower bound on the Bayes error from one family member.

    Returns (value, note); the note flags vacuous or near-vacuous results.
    """
    if family == "zeta":
        v = averaged_zeta(problem, s)
        point = zeta_point
    elif family == "xi":
        v = averaged_xi(problem, s)
        point = xi_point
    else:
        raise ArgumentError(f"unknown family {family!r} (expected 'zeta' or 'xi')")
    if math.isinf(v):
        return 0.0, "vacuous: averaged divergence is infinite"
    val = invert_decreasing(lambda a: point(s, a), v, LOWER_BRACKET_LO, 0.5)
    if val <= LOWER_BRACKET_LO:
        return val, "near-vacuous: target above inversion bracket"
    return val, ""


def kailath_bound(problem: TwoClassProblem) -> Tuple[Optional[float], str]:
    """1/4 exp(-J/2) with J between the conditionals; equal priors only."""
    if abs(problem.p1 - problem.p2) > PRIOR_TOL:
        return None, "requires equal priors"
    j = zeta_measure(0.0, problem.cond1, problem.cond2)
    if math.isinf(j):
        return 0.0, "J infinite (bound saturates at 0)"
    return 0.25 * math.exp(-0.5 * j), ""


def toussaint_bounds(problem: TwoClassProblem) -> Tuple[Optional[float], float]:
    """(general square-root bound or None, sharper bound via J-inversion)."""
    jbar = averaged_zeta(problem, 0.0)
    h = -(problem.p1 * math.log(problem.p1) + problem.p2 * math.log(problem.p2))
    radicand = 1.0 - 4.0 * math.exp(-2.0 * h - jbar)
    if -1e-12 < radicand < 0.0:
        radicand = 0.0  # exact zero at the equality case, up to rounding
    if radicand < 0.0:
        general = None
    else:
        general = 0.5 - 0.5 * math.sqrt(radicand)
    via_inversion, _ = lower_bound_family(problem, "zeta", 0.0)
    return general, via_inversion


# ---------------------------------------------------------------------------
# upper bounds
# ---------------------------------------------------------------------------


def upper_bound_zeta(problem: TwoClassProblem, s) -> float:
    """P_e <= (1/2)[1 + s(s-1) * averaged zeta_s]; exists only for 0 < s < 1."""
    op = OrderParameter.of(s)
    if op.regime is not Regime.REGULAR or not 0.0 < op.s < 1.0:
        raise BoundUnavailable("zeta upper bound requires 0 < s < 1 strictly")
    v = averaged_zeta(problem, op)
    # 1/2 is always a valid upper bound (P_e <= min prior); cap roundoff
    return min(0.5 * (1.0 + op.s * (op.s - 1.0) * v), 0.5)


def upper_bound_xi(problem: TwoClassProblem, s) -> float:
    """P_e <= (1/2)[1 - averaged xi_s / f_inf(s)]; exists only for s < 1."""
    op = OrderParameter.of(s)
    f_inf = xi_f_inf(op)
    if math.isinf(f_inf):
        raise BoundUnavailable("xi upper bound requires s < 1")
    v = averaged_xi(problem, op)
    return min(0.5 * (1.0 - v / f_inf), 0.5)


def upper_bound_difference(problem: TwoClassProblem, tag: str) -> float:
    """P_e <= (1/2)[1 - averaged difference / f_inf] for the six differences."""
    if tag not in DIFF_TAGS:
        raise ArgumentError(f"unknown difference tag {tag!r}")
    g = generator(tag)
    v = average_f_divergence(problem, g)
    return min(0.5 * (1.0 - v / g.f_infinity), 0.5)


def generic_upper_bound(problem: TwoClassProblem, g: GeneratingFunction) -> float:
    """Upper bound from any catalog generator with the required finite constants.

    Uses the symmetric-star simplification when it applies, otherwise the
    general constants route; raises BoundUnavailable when both need an
    infinite constant.  The result is clamped to [0, 1/2].
    """
    c = average_f_divergence(problem, g)
    if g.star_symmetric and math.isfinite(g.f_infinity):
        val = (g.f_infinity - c) / (2.0 * g.f_infinity - g.f_at_one)
    elif math.isfinite(g.f_at_zero) and math.isfinite(g.f_infinity):
        f2 = g.f_at_zero + g.f_infinity
        val = (g.f_at_zero * problem.p2 + g.f_infinity * problem.p1 - c) / (
            f2 - g.f_at_one
        )
    else:
        raise BoundUnavailable(f"{g.key}: required limit constants are infinite")
    return min(max(val, 0.0), 0.5)


# ---------------------------------------------------------------------------
# aggregated report and comparisons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "lower" | "upper"
    value: float
    applicable: bool
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    exact_pe: float
    entries: Tuple[BoundEntry, ...]

    def sandwich_violations(self, tol: float = SANDWICH_TOL) -> List[Tuple[str, float]]:
        """Applicable entries whose slack against the exact error is < -tol."""
        out = []
        for e in self.entries:
            if not e.applicable:
                continue
            slack = (self.exact_pe - e.value) if e.kind == "lower" else (e.value - self.exact_pe)
            if slack < -tol:
                out.append((e.name, slack))
        return out

    @property
    def sandwich_ok(self) -> bool:
        return not self.sandwich_violations()


DEFAULT_S_GRID = (-1.0, 0.0, 0.5, 2.0)


def bound_report(
    problem: TwoClassProblem, s_grid: Sequence[float] = DEFAULT_S_GRID
) -> BoundReport:
    """Exact error plus every bound, in a fixed canonical order.

    Inapplicable bounds appear with applicable=False, a reason note, and
    the trivial value of their kind (0 for lower, 1/2 for upper).
    """
    pe = bayes_error(problem)
    entries: List[BoundEntry] = []

    val, note = kailath_bound(problem)
    if val is None:
        entries.append(BoundEntry("kailath", "lower", 0.0, False, note))
    else:
        entries.append(BoundEntry("kailath", "lower", val, True, note))

    general, via_inv = toussaint_bounds(problem)
    if general is None:
        entries.append(
            BoundEntry("toussaint_general", "lower", 0.0, False, "radicand negative")
        )
    else:
        entries.append(BoundEntry("toussaint_general", "lower", general, True, ""))
    entries.append(BoundEntry("toussaint_inversion", "lower", via_inv, True, ""))

    for family in ("zeta", "xi"):
        for s in s_grid:
            val, note = lower_bound_family(problem, family, s)
            entries.append(
                BoundEntry(f"{family}_lower(s={float(s)!r})", "lower", val, True, note)
            )

    for family, fn in (("zeta", upper_bound_zeta), ("xi", upper_bound_xi)):
        for s in s_grid:
            name = f"{family}_upper(s={float(s)!r})"
            try:
                entries.append(BoundEntry(name, "upper", fn(problem, s), True, ""))
            except BoundUnavailable as exc:
                entries.append(BoundEntry(name, "upper", 0.5, False, str(exc)))

    for tag in DIFF_TAGS:
        entries.append(
            BoundEntry(
                f"diff_upper({tag})", "upper", upper_bound_difference(problem, tag), True, ""
            )
        )

    return BoundReport(exact_pe=pe, entries=tuple(entries))


@dataclass(frozen=True)
class ComparisonResult:
    relation: str
    satisfied: bool
    slack: float


def comparison_check(problem: TwoClassProblem) -> List[ComparisonResult]:
    """Verify the printed sharpness orderings between difference upper bounds.

    Each relation asserts lhs <= rhs between two upper-bound expressions;
    slack = rhs - lhs.
    """
    dbar = {
        tag: average_f_divergence(problem, generator(tag))
        for tag in ("D_IDelta", "D_hDelta", "D_dh", "D_dDelta")
    }

    def bound(coef: float, v: float) -> float:
        return 0.5 * (1.0 - coef * v)

    relations = [
        (
            "sharper_vs_chained(D_hDelta->D_IDelta)",
            bound(8.0 / 3.0, dbar["D_hDelta"]),
            bound(4.0, dbar["D_IDelta"]),
        ),
        (
            "direct_vs_loose(D_IDelta)",
            bound(DIFF_BOUND_COEF["D_IDelta"], dbar["D_IDelta"]),
            bound(4.0, dbar["D_IDelta"]),
        ),
        (
            "direct_vs_chained(D_dh->D_dDelta)",
            bound(DIFF_BOUND_COEF["D_dh"], dbar["D_dh"]),
            bound(8.0 / (15.0 * (1.0 - LN2)), dbar["D_dDelta"]),
        ),
        (
            "direct_vs_loose(D_hDelta)",
            bound(4.0, dbar["D_hDelta"]),
            bound(DIFF_BOUND_COEF["D_dDelta"], dbar["D_hDelta"]),
        ),
    ]
    out = []
    for relation, lhs, rhs in relations:
        slack = rhs - lhs
        out.append(
            ComparisonResult(relation, slack >= -1e-12 * (1.0 + abs(rhs)), slack)
        )
    return out
