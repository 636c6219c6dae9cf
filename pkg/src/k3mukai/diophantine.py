"""Exhaustive checks of the slope-interval arguments, and a Pell equation solver.

The stability arguments for a sheaf of slope ``(k+1)/(2k+1)`` reduce to three
statements about integer points in rational intervals:

``quotient``
    for ranks ``1 <= r <= 2k+1`` no integer ``c`` satisfies
    ``r/2 < c < r/2 + r/(4k+2)``;
``destabilizer``
    for ranks ``1 <= h <= 2k`` the integers ``a`` with
    ``h k/(2k+1) <= a <= h/2`` are exactly ``a = h/2`` (``h`` even) or none;
``extension``
    for ranks ``1 <= p <= 2k+2`` no integer ``c`` satisfies
    ``(k+2)/(2k+3) <= c/p < (k+1)/(2k+1)``.

All comparisons are done on exact integers (cross-multiplied rationals).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import List, Tuple

from .errors import NoNontrivialSolution


@dataclass(frozen=True)
class CheckedRange:
    kind: str
    rank: int
    lower: Fraction
    upper: Fraction
    closed_lower: bool
    closed_upper: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "closed_lower": self.closed_lower,
            "closed_upper": self.closed_upper,
        }


@dataclass
class IntervalReport:
    k: int
    checked_ranges: List[CheckedRange] = field(default_factory=list)
    violations: List[Tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "ok": self.ok,
            "n_checked": len(self.checked_ranges),
            "violations": [{"kind": kd, "rank": r, "c": c} for kd, r, c in self.violations],
        }


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def check_stability_intervals(k: int, record_ranges: bool = True) -> IntervalReport:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    report = IntervalReport(k)
    q = 2 * k + 1

    # r/2 < c < r(k+1)/(2k+1)
    for r in range(1, q + 1):
        for c in range(r // 2 + 1, _ceil_div(r * (k + 1), q)):
            report.violations.append(("quotient", r, c))
        if record_ranges:
            report.checked_ranges.append(
                CheckedRange("quotient", r, Fraction(r, 2), Fraction(r * (k + 1), q), False, False)
            )

    # h k/(2k+1) <= a <= h/2; only a = h/2 may occur
    for h in range(1, q):
        for a in range(_ceil_div(h * k, q), h // 2 + 1):
            if 2 * a != h:
                report.violations.append(("destabilizer", h, a))
        if record_ranges:
            report.checked_ranges.append(
                CheckedRange("destabilizer", h, Fraction(h * k, q), Fraction(h, 2), True, True)
            )

    # (k+2)/(2k+3) <= c/p < (k+1)/(2k+1)
    for p in range(1, q + 2):
        for c in range(_ceil_div(p * (k + 2), q + 2), _ceil_div(p * (k + 1), q)):
            report.violations.append(("extension", p, c))
        if record_ranges:
            report.checked_ranges.append(
                CheckedRange(
                    "extension", p, Fraction(p * (k + 2), q + 2), Fraction(p * (k + 1), q), True, False
                )
            )
    return report


def check_slope_monotonicity(k_max: int) -> bool:
    """Slope inequalities used alongside the interval arguments, for ``0 <= k <= k_max``.

    Checks ``(k+1)/(2k+1) > (k+2)/(2k+3)`` (so ``mu(F) < mu(E)``, and the
    sequence ``(n+1)/(2n+1)`` decreases) and ``(k+1)/(2k+2) < (k+2)/(2k+3)``.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    for k in range(k_max + 1):
        if not (k + 1) * (2 * k + 3) > (k + 2) * (2 * k + 1):
            return False
        if not (k + 1) * (2 * k + 3) < (k + 2) * (2 * k + 2):
            return False
    return True


@dataclass(frozen=True)
class PellSolution:
    D: int
    z: int
    y: int

    def to_dict(self) -> dict:
        return {"D": self.D, "z": self.z, "y": self.y}


def pell_minimal(D: int) -> PellSolution:
    """Fundamental solution of ``z^2 - D y^2 = 1`` from the continued fraction of ``sqrt(D)``."""
    if D < 2:
        raise NoNontrivialSolution(f"D = {D} < 2")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise NoNontrivialSolution(f"D = {D} is a perfect square")
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - D * k * k != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(D, h, k)


def pell_for_moduli(g: int, n: int) -> PellSolution:
    """Minimal solution of ``z^2 - (g-1)(n-1) y^2 = 1``."""
    return pell_minimal((g - 1) * (n - 1))
