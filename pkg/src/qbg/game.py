"""Classical 2x2 inflation game between a policy maker and the public.

The policy maker (row player) chooses actual inflation, the public (column
player) chooses expected inflation.  Utilities follow the standard
time-inconsistency setup: surprise inflation benefits an opportunistic
("weak") policy maker, any forecast error hurts the public, and inflation
itself carries a quadratic cost.

Payoffs are kept exact (``fractions.Fraction``) whenever the inputs are
exact, so the canonical normalized tables reproduce with zero tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]


def _exact(x: Scalar) -> Scalar:
    """Promote ints to Fraction so division stays exact; floats pass through."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return float(x)


def _is_finite(x: Scalar) -> bool:
    return not (isinstance(x, float) and not math.isfinite(x))


@dataclass(frozen=True)
class PolicyParams:
    """Policy-maker type and utility coefficients.

    theta: 1 for the opportunistic ("weak") type that gains from surprise
    inflation, 0 for the committed ("strong") type.  a scales the quadratic
    inflation cost, b the surprise-inflation benefit; both must be positive.
    """

    theta: int
    a: Scalar
    b: Scalar

    def __post_init__(self):
        if self.theta not in (0, 1):
            raise ValueError(f"theta must be 0 or 1, got {self.theta!r}")
        if not (_is_finite(self.a) and self.a > 0):
            raise ValueError(f"a must be positive and finite, got {self.a!r}")
        if not (_is_finite(self.b) and self.b > 0):
            raise ValueError(f"b must be positive and finite, got {self.b!r}")


@dataclass(frozen=True)
class InflationProfile:
    """A pair (actual inflation, expected inflation)."""

    actual: Scalar
    expected: Scalar

    def __post_init__(self):
        if not (_is_finite(self.actual) and _is_finite(self.expected)):
            raise ValueError("inflation rates must be finite")


@dataclass(frozen=True)
class PureProfile:
    """Pure strategy pair by table index (0 = first label, 1 = second)."""

    row_index: int
    col_index: int

    def __post_init__(self):
        if self.row_index not in (0, 1) or self.col_index not in (0, 1):
            raise ValueError("indices must be 0 or 1")


@dataclass(frozen=True)
class DominatedRow:
    index: int
    strict: bool


@dataclass(frozen=True)
class BimatrixGame:
    """A 2x2 bimatrix game; ``payoffs[r][c]`` is ``(row payoff, col payoff)``."""

    row_labels: tuple[str, str]
    col_labels: tuple[str, str]
    payoffs: tuple[tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]],
                   tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]]

    def __post_init__(self):
        if len(self.row_labels) != 2 or len(self.col_labels) != 2:
            raise ValueError("need exactly two strategy labels per player")
        if len(self.payoffs) != 2 or any(len(row) != 2 for row in self.payoffs):
            raise ValueError("payoff table must be 2x2")
        for row in self.payoffs:
            for cell in row:
                if len(cell) != 2 or not all(_is_finite(v) for v in cell):
                    raise ValueError("each cell needs two finite payoffs")

    def row_payoff(self, r: int, c: int) -> Scalar:
        return self.payoffs[r][c][0]

    def col_payoff(self, r: int, c: int) -> Scalar:
        return self.payoffs[r][c][1]


def policy_utility(profile: InflationProfile, params: PolicyParams) -> Scalar:
    """theta * b * (actual - expected) - a * actual**2 / 2."""
    actual = _exact(profile.actual)
    expected = _exact(profile.expected)
    a = _exact(params.a)
    b = _exact(params.b)
    return params.theta * b * (actual - expected) - a * actual * actual / 2


def public_utility(profile: InflationProfile) -> Scalar:
    """-(actual - expected)**2; zero exactly when the forecast is correct."""
    diff = _exact(profile.actual) - _exact(profile.expected)
    return -(diff * diff)


def optimal_discretionary_inflation(params: PolicyParams) -> Scalar:
    """Unconstrained maximizer of the policy utility: theta * b / a."""
    if params.theta == 0:
        return _exact(params.a) * 0
    return _exact(params.b) / _exact(params.a)


def build_bg_game(params: PolicyParams) -> BimatrixGame:
    """Payoff table over the two-point strategy grid {0, b/a} for both players.

    Label L is inflation 0 and H is inflation b/a, for actual (rows) and
    expected (columns) alike.  Every cell is evaluated from the utility
    functions; nothing is tabulated by hand.
    """
    low = _exact(params.a) * 0
    high = _exact(params.b) / _exact(params.a)
    levels = (low, high)
    rows = []
    for actual in levels:
        row = []
        for expected in levels:
            profile = InflationProfile(actual, expected)
            row.append((policy_utility(profile, params), public_utility(profile)))
        rows.append(tuple(row))
    return BimatrixGame(row_labels=("L", "H"), col_labels=("L", "H"),
                        payoffs=tuple(rows))


def find_pure_nash(game: BimatrixGame) -> frozenset[PureProfile]:
    """All cells where neither player gains by a unilateral switch (weak)."""
    found = set()
    for r in (0, 1):
        for c in (0, 1):
            row_ok = game.row_payoff(r, c) >= game.row_payoff(1 - r, c)
            col_ok = game.col_payoff(r, c) >= game.col_payoff(r, 1 - c)
            if row_ok and col_ok:
                found.add(PureProfile(r, c))
    return frozenset(found)


def find_dominated_rows(game: BimatrixGame) -> frozenset[DominatedRow]:
    """Rows dominated by the other row: strict if better against both
    columns, weak if never worse and better against at least one."""
    found = set()
    for r in (0, 1):
        other = 1 - r
        diffs = [game.row_payoff(other, c) - game.row_payoff(r, c) for c in (0, 1)]
        if all(d > 0 for d in diffs):
            found.add(DominatedRow(r, strict=True))
        elif all(d >= 0 for d in diffs) and any(d > 0 for d in diffs):
            found.add(DominatedRow(r, strict=False))
    return frozenset(found)
