"""Counting bound on the number of lines and the analysis around it.

For a connected graph in the class with ``p`` vertices in rich blobs and
``k`` rich blobs touching a trivial blob, the line count is at least::

    C(p, 2) + C(ceil((n - p) / k), 2) + 2k

:func:`triple_sweep` checks that this is at least ``n`` over every legal
triple, :func:`case_classify` picks the case used for large ``n`` and
:func:`inequality_margins` evaluates the real inequalities those cases rely on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb, sqrt

import numpy as np

from .errors import BelowN0, IllegalTriple

EPSILON = 1.531
N0 = 40
MARGIN_ATOL = 1e-9

# reference values quoted for the auxiliary expressions of the inequalities
PRINTED_AUX = {"a2": 0.005, "a3": 0.68, "a4_upper": 6.321, "sqrt_n_lower": 6.324}


def ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def check_triple(n: int, p: int, k: int) -> None:
    if not 2 <= p:
        raise IllegalTriple(f"p={p} violates 2 <= p")
    if not p <= n - 1:
        raise IllegalTriple(f"p={p} violates p <= n-1 (n={n})")
    if not 1 <= k:
        raise IllegalTriple(f"k={k} violates 1 <= k")
    if not 2 * k <= p:
        raise IllegalTriple(f"k={k} violates k <= p/2 (p={p})")


def nb_lines_lower_bound(n: int, p: int, k: int, slack: bool = True) -> int:
    """Exact integer lower bound on the number of lines; ``slack=False`` drops 2k."""
    check_triple(n, p, k)
    bound = comb(p, 2) + comb(ceil_div(n - p, k), 2)
    return bound + 2 * k if slack else bound


@dataclass
class SweepReport:
    n_min: int
    n_max: int
    include_slack: bool
    checked: int = 0
    failures: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return "Checked."
        return f"We have a problem. {len(self.failures)} triple(s) below n."


def _sweep_n(n: int, include_slack: bool):
    """All legal (p, k) for one n, evaluated in int64; returns (count, failures)."""
    p = np.arange(2, n, dtype=np.int64)[:, None]
    k = np.arange(1, n // 2 + 1, dtype=np.int64)[None, :]
    legal = 2 * k <= p
    kk = np.broadcast_to(k, legal.shape)
    pp = np.broadcast_to(p, legal.shape)
    c = (n - pp + kk - 1) // kk
    bound = pp * (pp - 1) // 2 + c * (c - 1) // 2
    if include_slack:
        bound = bound + 2 * kk
    bad = legal & (bound < n)
    fails = [
        (n, int(pp[i, j]), int(kk[i, j]), int(bound[i, j]))
        for i, j in zip(*np.nonzero(bad))
    ]
    return int(legal.sum()), fails


def triple_sweep(n_min: int = 3, n_max: int = 39, include_slack: bool = True) -> SweepReport:
    """Check ``nb_lines_lower_bound(n, p, k) >= n`` for every legal triple.

    Failing triples are collected in the report (sorted by n, p, k) rather
    than raised. Arithmetic is exact int64 throughout; values stay far below
    overflow for any n a sweep can enumerate.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    report = SweepReport(n_min, n_max, include_slack)
    for n in range(n_min, n_max + 1):
        count, fails = _sweep_n(n, include_slack)
        report.checked += count
        report.failures.extend(fails)
    return report


class Case(enum.Enum):
    CASE1 = 1  # p large: C(p, 2) alone reaches n
    CASE2 = 2  # p small: the trivial-pair term alone reaches n
    CASE3 = 3  # in between: each of the two terms gives n/2


def case_thresholds(n: int, epsilon: float = EPSILON) -> tuple[float, float]:
    """(small-p upper threshold, large-p lower threshold)."""
    rn = sqrt(n)
    return 2 * rn / (epsilon + 2 / rn), epsilon * rn


def case_classify(n: int, p: int, epsilon: float = EPSILON) -> Case:
    if n < N0:
        raise BelowN0(f"case analysis needs n >= {N0}, got {n}")
    if not 2 <= p <= n - 1:
        raise IllegalTriple(f"p={p} outside [2, {n - 1}]")
    small, large = case_thresholds(n, epsilon)
    if p >= large:
        return Case.CASE1
    if p <= small:
        return Case.CASE2
    return Case.CASE3


@dataclass(frozen=True)
class InequalityReport:
    """Margins of the four real implications at their binding points.

    ``margins[i]`` is the slack of implication i+1 (non-negative means it
    holds at that n). ``aux`` holds the auxiliary expressions of the hand
    proof; ``printed`` the values quoted for them.
    """

    epsilon: float
    n: int
    margins: tuple[float, float, float, float]
    aux: dict
    printed: dict

    @property
    def flags(self) -> tuple[bool, ...]:
        return tuple(m >= -MARGIN_ATOL for m in self.margins)

    @property
    def m3_discrepancy(self) -> bool:
        """Implication (3) fails at its binding point while the printed
        auxiliary value claims positivity."""
        return self.margins[2] < -MARGIN_ATOL and self.aux["a3"] > 0


def _margins(epsilon: float, n: float) -> tuple[float, float, float, float]:
    rn = sqrt(n)
    x1 = epsilon * rn
    x2 = epsilon * sqrt(n / 2)
    m1 = (x1 * x1 - x1) / 2 - n
    m2 = (x2 * x2 - x2) / 2 - n / 2
    # (3) is tightest at x = epsilon*sqrt(n), where 2n/x = 2*sqrt(n)/epsilon
    m3 = (2 * rn / epsilon - 2) - x2
    m4 = 2 * rn / (epsilon + 2 / rn) - x2
    return m1, m2, m3, m4


def inequality_margins(epsilon: float = EPSILON, n: int = N0) -> InequalityReport:
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if n < 2:
        raise ValueError("n must be at least 2")
    rn = sqrt(n)
    aux = {
        "a2": (epsilon**2 - 2) * rn / 2 - epsilon / sqrt(2),
        # the expression that reproduces the printed 0.68
        "a3": (2 * sqrt(2) / epsilon - 1) * rn / 2 - 2,
        "a4": epsilon * sqrt(2) / (2 - epsilon**2 / sqrt(2)),
        "sqrt_n": rn,
    }
    return InequalityReport(epsilon, n, _margins(epsilon, n), aux, dict(PRINTED_AUX))


def first_nonnegative_n(which: int, epsilon: float = EPSILON, start: int = N0, stop: int = 10**6) -> int | None:
    """Smallest n in [start, stop) where margin ``which`` (1..4) is >= 0."""
    for n in range(start, stop):
        if _margins(epsilon, n)[which - 1] >= -MARGIN_ATOL:
            return n
    return None
