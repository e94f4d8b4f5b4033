"""Symmetric divergence measures between finite discrete distributions.

Seven base measures (triangular discrimination, Jensen-Shannon, Hellinger,
d-divergence, J-divergence, arithmetic-geometric divergence, symmetric
chi-square), two one-parameter families interpolating them, the six
nonnegative differences among the upper-boundable four, and checkers for
the two inequality chains the measures satisfy.

Family conventions.  zeta_s uses the 1/(s(s-1)) normalisation and reduces
to the J-divergence at s in {0, 1}; it is invariant under s <-> 1-s.  xi_s
is implemented in the parametrization

    xi_s = [s(s-1)]^(-1) [ sum ((p^(1-s)+q^(1-s))/2) ((p+q)/2)^s  -  1 ],

which places the Jensen-Shannon divergence at s = 0 and the
arithmetic-geometric divergence at s = 1, so that

    xi_{-1} = Delta/4,   xi_0 = I,   xi_{1/2} = 4 d,   xi_1 = T,
    xi_2 = Psi/16.

(The mirrored s <-> 1-s indexing also appears in the literature; convert
with s_mirror = 1 - s.)

Zero entries (permissive mode): J, Psi and T blow up on cells where exactly
one mass vanishes and the value is reported as +inf; Delta, h, d and I stay
finite under the 0*ln(0) = 0 convention.  Cells where both masses vanish
contribute nothing to any measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import xlogy

from .distributions import DiscreteDistribution, require_same_alphabet
from .kernel import ArgumentError, OrderParameter, Regime

# Relative slack tolerance for the inequality chains, scaled by the larger
# side: absolute slacks shrink quadratically as P -> Q.
CHAIN_TOL = 1e-9

BASE_TAGS = ("Delta", "I", "h", "d", "J", "T", "Psi")
DIFF_TAGS = ("D_dDelta", "D_dh", "D_dI", "D_hI", "D_hDelta", "D_IDelta")
FAMILY_TAGS = ("zeta", "xi")

_ALIASES = {
    "delta": "Delta",
    "triangular": "Delta",
    "i": "I",
    "jensen-shannon": "I",
    "js": "I",
    "h": "h",
    "hellinger": "h",
    "d": "d",
    "ddivergence": "d",
    "j": "J",
    "jdivergence": "J",
    "t": "T",
    "arithgeo": "T",
    "psi": "Psi",
    "symchisq": "Psi",
}
_ALIASES.update({t.lower(): t for t in DIFF_TAGS})


@dataclass(frozen=True)
class MeasureId:
    """Tag naming one measure: a base symbol, a family member, or a difference."""

    tag: str
    s: Optional[float] = None

    def __post_init__(self):
        if self.tag in FAMILY_TAGS:
            if self.s is None:
                raise ArgumentError(f"family tag {self.tag!r} requires an s value")
        elif self.tag in BASE_TAGS or self.tag in DIFF_TAGS:
            if self.s is not None:
                raise ArgumentError(f"tag {self.tag!r} carries no s value")
        else:
            raise ArgumentError(f"unknown measure tag {self.tag!r}")

    @classmethod
    def parse(cls, spec: str) -> "MeasureId":
        """Parse a measure spec string: a documented name or 'zeta:S' / 'xi:S'."""
        text = spec.strip()
        if ":" in text:
            head, _, tail = text.partition(":")
            head = head.strip().lower()
            if head not in FAMILY_TAGS:
                raise ArgumentError(f"unknown family {head!r} in measure spec {spec!r}")
            try:
                s = float(tail)
            except ValueError:
                raise ArgumentError(f"bad s value {tail!r} in measure spec {spec!r}")
            if not math.isfinite(s):
                raise ArgumentError(f"s must be finite in measure spec {spec!r}")
            return cls(head, s)
        key = _ALIASES.get(text.lower())
        if key is None:
            raise ArgumentError(f"unknown measure {spec!r}")
        return cls(key)

    def label(self) -> str:
        if self.tag in FAMILY_TAGS:
            return f"{self.tag}:{self.s!r}"
        return self.tag


# ---------------------------------------------------------------------------
# raw-array measure kernels (inputs are validated nonnegative vectors)
# ---------------------------------------------------------------------------


def _delta(p: np.ndarray, q: np.ndarray) -> float:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (p - q) ** 2 / (p + q)
    return float(np.sum(np.where(p + q > 0.0, t, 0.0)))


def _hellinger(p: np.ndarray, q: np.ndarray) -> float:
    return float(0.5 * np.sum((np.sqrt(p) - np.sqrt(q)) ** 2))


def _jensen_shannon(p: np.ndarray, q: np.ndarray) -> float:
    m = p + q
    return float(0.5 * np.sum(xlogy(p, p) + xlogy(q, q) - xlogy(m, 0.5 * m)))


def _ddiv(p: np.ndarray, q: np.ndarray) -> float:
    s = np.sum(0.5 * (np.sqrt(p) + np.sqrt(q)) * np.sqrt(0.5 * (p + q)))
    return float(1.0 - s)


def _jdiv(p: np.ndarray, q: np.ndarray) -> float:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (p - q) * (np.log(p) - np.log(q))
        t = np.where((p == 0.0) & (q == 0.0), 0.0, t)
    return float(np.sum(t))


def _tdiv(p: np.ndarray, q: np.ndarray) -> float:
    m = 0.5 * (p + q)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = xlogy(m, m) - 0.5 * m * (np.log(p) + np.log(q))
        t = np.where(m == 0.0, 0.0, t)
    return float(np.sum(t))


def _psi(p: np.ndarray, q: np.ndarray) -> float:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (p - q) ** 2 * (p + q) / (p * q)
        t = np.where((p == 0.0) & (q == 0.0), 0.0, t)
    return float(np.sum(t))


def _zeta_regular(s: float, p: np.ndarray, q: np.ndarray) -> float:
    live = (p + q) > 0.0
    pl, ql = p[live], q[live]
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = pl**s * ql ** (1.0 - s) + pl ** (1.0 - s) * ql**s
    return float((np.sum(terms) - 2.0) / (s * (s - 1.0)))


def _xi_regular(s: float, p: np.ndarray, q: np.ndarray) -> float:
    live = (p + q) > 0.0
    pl, ql = p[live], q[live]
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = 0.5 * (pl ** (1.0 - s) + ql ** (1.0 - s)) * (0.5 * (pl + ql)) ** s
    return float((np.sum(terms) - 1.0) / (s * (s - 1.0)))


_BASE_FUNCS = {
    "Delta": _delta,
    "I": _jensen_shannon,
    "h": _hellinger,
    "d": _ddiv,
    "J": _jdiv,
    "T": _tdiv,
    "Psi": _psi,
}

# difference = combination of (coefficient, base tag) pairs
_DIFF_COMBOS = {
    "D_dDelta": ((4.0, "d"), (-0.25, "Delta")),
    "D_dh": ((4.0, "d"), (-1.0, "h")),
    "D_dI": ((4.0, "d"), (-1.0, "I")),
    "D_hI": ((1.0, "h"), (-1.0, "I")),
    "D_hDelta": ((1.0, "h"), (-0.25, "Delta")),
    "D_IDelta": ((1.0, "I"), (-0.25, "Delta")),
}


def _arrays(P: DiscreteDistribution, Q: DiscreteDistribution):
    require_same_alphabet(P, Q)
    return P.probs, Q.probs


def base_measure(
    measure: Union[MeasureId, str], P: DiscreteDistribution, Q: DiscreteDistribution
) -> float:
    """Evaluate one of the seven base measures; +inf is a legal flagged value."""
    mid = measure if isinstance(measure, MeasureId) else MeasureId.parse(measure)
    if mid.tag not in BASE_TAGS:
        raise ArgumentError(f"{mid.tag!r} is not a base measure tag")
    p, q = _arrays(P, Q)
    return _BASE_FUNCS[mid.tag](p, q)


def zeta(s, P: DiscreteDistribution, Q: DiscreteDistribution) -> float:
    """First family: interpolates Psi/2 (s = -1, 2), J (s = 0, 1), 8h (s = 1/2)."""
    op = OrderParameter.of(s)
    p, q = _arrays(P, Q)
    if op.regime is Regime.REGULAR:
        return _zeta_regular(op.s, p, q)
    return _jdiv(p, q)


def xi(s, P: DiscreteDistribution, Q: DiscreteDistribution) -> float:
    """Second family: Delta/4 (s = -1), I (s = 0), 4d (s = 1/2), T (s = 1), Psi/16 (s = 2)."""
    op = OrderParameter.of(s)
    p, q = _arrays(P, Q)
    if op.regime is Regime.AT_ZERO:
        return _jensen_shannon(p, q)
    if op.regime is Regime.AT_ONE:
        return _tdiv(p, q)
    return _xi_regular(op.s, p, q)


def difference_measure(
    measure: Union[MeasureId, str], P: DiscreteDistribution, Q: DiscreteDistribution
) -> float:
    """One of the six nonnegative differences among Delta/4 <= I <= h <= 4d."""
    mid = measure if isinstance(measure, MeasureId) else MeasureId.parse(measure)
    if mid.tag not in DIFF_TAGS:
        raise ArgumentError(f"{mid.tag!r} is not a difference tag")
    p, q = _arrays(P, Q)
    return float(
        sum(c * _BASE_FUNCS[tag](p, q) for c, tag in _DIFF_COMBOS[mid.tag])
    )


def measure_value(
    measure: Union[MeasureId, str], P: DiscreteDistribution, Q: DiscreteDistribution
) -> float:
    """Dispatch any measure id (base, family, or difference)."""
    mid = measure if isinstance(measure, MeasureId) else MeasureId.parse(measure)
    if mid.tag == "zeta":
        return zeta(mid.s, P, Q)
    if mid.tag == "xi":
        return xi(mid.s, P, Q)
    if mid.tag in DIFF_TAGS:
        return difference_measure(mid, P, Q)
    return base_measure(mid, P, Q)


# ---------------------------------------------------------------------------
# inequality chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainReport:
    """Ordered chain values and any adjacent-pair violations (with raw slack)."""

    values: Tuple[Tuple[str, float], ...]
    violations: Tuple[Tuple[str, float], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def worst_slack(self) -> float:
        """Most negative normalised slack over adjacent pairs (inf if none finite)."""
        worst = math.inf
        for i in range(len(self.values) - 1):
            left, right = self.values[i][1], self.values[i + 1][1]
            if math.isinf(right):
                continue
            worst = min(worst, (right - left) / (1.0 + right))
        return worst


def _chain_report(entries: Sequence[Tuple[str, float]]) -> ChainReport:
    violations = []
    for i in range(len(entries) - 1):
        (ll, lv), (rl, rv) = entries[i], entries[i + 1]
        if math.isinf(rv):
            continue  # +inf on the larger side satisfies the inequality
        slack = rv - lv
        if slack < -CHAIN_TOL * (1.0 + rv):
            violations.append((f"{ll} <= {rl}", slack))
    return ChainReport(values=tuple(entries), violations=tuple(violations))


def chain_check(
    P: DiscreteDistribution, Q: DiscreteDistribution, which: str = "eq7"
) -> ChainReport:
    """Check one of the two inequality chains.

    "eq7":  Delta/4 <= I <= h <= 4d <= J/8 <= T <= Psi/16
    "eq39": D_IDelta <= (2/3) D_hDelta <= (8/15) D_dDelta
                     <= (8/3) D_dh <= (8/7) D_dI <= 2 D_hI
    """
    p, q = _arrays(P, Q)
    if which == "eq7":
        entries = [
            ("Delta/4", 0.25 * _delta(p, q)),
            ("I", _jensen_shannon(p, q)),
            ("h", _hellinger(p, q)),
            ("4d", 4.0 * _ddiv(p, q)),
            ("J/8", 0.125 * _jdiv(p, q)),
            ("T", _tdiv(p, q)),
            ("Psi/16", _psi(p, q) / 16.0),
        ]
    elif which == "eq39":
        d4 = 4.0 * _ddiv(p, q)
        dq = 0.25 * _delta(p, q)
        h = _hellinger(p, q)
        i = _jensen_shannon(p, q)
        entries = [
            ("D_IDelta", i - dq),
            ("2/3*D_hDelta", (2.0 / 3.0) * (h - dq)),
            ("8/15*D_dDelta", (8.0 / 15.0) * (d4 - dq)),
            ("8/3*D_dh", (8.0 / 3.0) * (d4 - h)),
            ("8/7*D_dI", (8.0 / 7.0) * (d4 - i)),
            ("2*D_hI", 2.0 * (h - i)),
        ]
    else:
        raise ArgumentError(f"unknown chain {which!r} (expected 'eq7' or 'eq39')")
    return _chain_report(entries)
