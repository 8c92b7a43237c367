"""End-to-end consistency checks of the whole analysis pipeline.

Every closed-form payoff, equilibrium-condition, and scenario value that the
library reports is re-derived here from reference formulas written directly
in terms of the state's squared magnitudes, then compared against the engine
and scenario outputs.  The classical payoff tables are checked against their
normalized reference values, and the trace payoffs are cross-checked against
the bilinear closed form on random inputs.

``run_verification`` returns the full check list; the CLI ``reproduce``
subcommand prints it and exits 0 only if every check passes at 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import (
    MixingProfile,
    QuantumInitialState,
    PayoffVector,
    closed_form_payoff,
    expected_payoff_trace,
    final_density,
    nash_condition_gap,
)
from .game import PolicyParams, PureProfile, DominatedRow, build_bg_game, \
    find_dominated_rows, find_pure_nash
from .scenarios import bg_payoff_vectors, run_case_a, run_case_b, run_case_c, \
    run_strategy_i, run_strategy_ii

TOLERANCE = 1e-10

# Reference state: squared magnitudes on (LL, LH, HL, HH).  Chosen so every
# component is nonzero and no condition sits on a boundary.
REFERENCE_PROBS = (0.5, 0.2, 0.2, 0.1)

# Generic interior profiles for the deviation-gap identities.
GENERIC_CANDIDATE = (0.75, 0.4)
GENERIC_DEVIATION = (0.25, 0.9)

GRID = tuple(k / 100 for k in range(101))

_WEAK_TABLE = (((0, 0), (-2, -1)), ((1, -1), (-1, 0)))
_STRONG_TABLE = (((0, 0), (0, -1)), ((-1, -1), (-1, 0)))
_CELL_NAMES = {(0, 0): "ll", (0, 1): "lh", (1, 0): "hl", (1, 1): "hh"}


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    expected: float
    computed: float
    tolerance: float = TOLERANCE
    detail: str = ""

    @property
    def passed(self) -> bool:
        if math.isnan(self.expected) or math.isnan(self.computed):
            return False
        return abs(self.expected - self.computed) <= self.tolerance


class _ReferenceForms:
    """Analytic reference formulas in the squared magnitudes (pll..phh).

    keep_slope is the policy payoff's total derivative in p (constant in q),
    mismatch is the combined weight on the LH and HL outcomes.
    """

    def __init__(self, probs):
        self.pll, self.plh, self.phl, self.phh = (float(p) for p in probs)
        self.keep_slope = 2.0 * (self.pll - self.phh + self.phl - self.plh)
        self.mismatch = self.plh + self.phl

    def policy_payoff(self, p: float, q: float) -> float:
        return (self.keep_slope * p
                + (self.phl - self.pll - self.plh + self.phh) * q
                - self.pll + self.plh - 2.0 * self.phl)

    def public_payoff(self, p: float, q: float) -> float:
        return (1.0 - 2.0 * self.mismatch) * (q * (2.0 * p - 1.0) - p) - self.mismatch

    def policy_gap(self, p_star: float, p_dev: float) -> float:
        return (p_star - p_dev) * self.keep_slope

    def public_gap(self, p_star: float, q_star: float, q_dev: float) -> float:
        return (1.0 - 2.0 * self.mismatch) * (q_star - q_dev) * (2.0 * p_star - 1.0)


def _reference_state() -> QuantumInitialState:
    return QuantumInitialState.from_probabilities(*REFERENCE_PROBS)


def _classical_checks() -> list[CheckResult]:
    checks = []
    for label, theta, table, nash_cell, dominated_row in (
            ("weak", 1, _WEAK_TABLE, (1, 1), 0),
            ("strong", 0, _STRONG_TABLE, (0, 0), 1)):
        game = build_bg_game(PolicyParams(theta=theta, a=2, b=2))
        for r in (0, 1):
            for c in (0, 1):
                cell = _CELL_NAMES[(r, c)]
                checks.append(CheckResult(
                    f"classical.{label}-table.{cell}.policy",
                    f"{label} table, cell {cell.upper()}, policy payoff",
                    float(table[r][c][0]), float(game.row_payoff(r, c))))
                checks.append(CheckResult(
                    f"classical.{label}-table.{cell}.public",
                    f"{label} table, cell {cell.upper()}, public payoff",
                    float(table[r][c][1]), float(game.col_payoff(r, c))))
        nash_ok = find_pure_nash(game) == frozenset({PureProfile(*nash_cell)})
        checks.append(CheckResult(
            f"classical.{label}-nash",
            f"{label} game has exactly the expected pure equilibrium",
            1.0, 1.0 if nash_ok else 0.0))
        dom_ok = find_dominated_rows(game) == frozenset(
            {DominatedRow(dominated_row, strict=True)})
        checks.append(CheckResult(
            f"classical.{label}-dominated",
            f"{label} game strictly dominates the expected row",
            1.0, 1.0 if dom_ok else 0.0))
    return checks


def _closed_form_checks() -> list[CheckResult]:
    state = _reference_state()
    ref = _ReferenceForms(REFERENCE_PROBS)
    policy_vec, public_vec = bg_payoff_vectors()
    f_policy = closed_form_payoff(state, policy_vec)
    f_public = closed_form_payoff(state, public_vec)
    s = ref.mismatch
    expected_policy = {
        "constant": -ref.pll + ref.plh - 2.0 * ref.phl,
        "coeff-p": ref.keep_slope,
        "coeff-q": ref.phl - ref.pll - ref.plh + ref.phh,
        "coeff-pq": 0.0,
    }
    expected_public = {
        "constant": -s,
        "coeff-p": -(1.0 - 2.0 * s),
        "coeff-q": -(1.0 - 2.0 * s),
        "coeff-pq": 2.0 * (1.0 - 2.0 * s),
    }
    checks = []
    for player, form, expected in (("policy", f_policy, expected_policy),
                                   ("public", f_public, expected_public)):
        computed = {"constant": form.constant, "coeff-p": form.coeff_p,
                    "coeff-q": form.coeff_q, "coeff-pq": form.coeff_pq}
        for part, value in expected.items():
            checks.append(CheckResult(
                f"closed-form.{player}.{part}",
                f"bilinear {part} of the {player} payoff on the reference state",
                value, computed[part]))
    return checks


def _gap_checks() -> list[CheckResult]:
    state = _reference_state()
    ref = _ReferenceForms(REFERENCE_PROBS)
    policy_vec, public_vec = bg_payoff_vectors()
    candidate = MixingProfile(*GENERIC_CANDIDATE)
    deviation = MixingProfile(*GENERIC_DEVIATION)
    row_gap, col_gap = nash_condition_gap(state, policy_vec, public_vec,
                                          candidate, deviation)
    defn_row = (ref.policy_payoff(candidate.p, candidate.q)
                - ref.policy_payoff(deviation.p, candidate.q))
    defn_col = (ref.public_payoff(candidate.p, candidate.q)
                - ref.public_payoff(candidate.p, deviation.q))
    return [
        CheckResult("nash-gap.policy.definition",
                    "policy deviation gap equals the payoff difference",
                    defn_row, row_gap),
        CheckResult("nash-gap.public.definition",
                    "public deviation gap equals the payoff difference",
                    defn_col, col_gap),
        CheckResult("nash-gap.policy.closed-form",
                    "policy deviation gap collapses to (p*-p) times the keep-slope",
                    ref.policy_gap(candidate.p, deviation.p), row_gap),
        CheckResult("nash-gap.public.closed-form",
                    "public deviation gap collapses to its product form",
                    ref.public_gap(candidate.p, candidate.q, deviation.q),
                    col_gap),
    ]


def _case_checks() -> list[CheckResult]:
    state = _reference_state()
    ref = _ReferenceForms(REFERENCE_PROBS)
    policy_vec, public_vec = bg_payoff_vectors()
    checks = []

    def gaps(candidate, p_dev, q_dev):
        return nash_condition_gap(state, policy_vec, public_vec, candidate,
                                  MixingProfile(p_dev, q_dev))

    report_a = run_case_a(state)
    row_gap_a, col_gap_a = gaps(report_a.candidate, 0.0, 0.0)
    checks += [
        CheckResult("case-a.policy-payoff",
                    "policy payoff when both players keep",
                    -ref.phh - 2.0 * ref.plh + ref.phl, report_a.policy_payoff),
        CheckResult("case-a.public-payoff",
                    "public payoff when both players keep",
                    -ref.plh - ref.phl, report_a.public_payoff),
        CheckResult("case-a.policy-condition",
                    "policy stability margin of the both-keep profile",
                    ref.keep_slope, row_gap_a),
        CheckResult("case-a.public-condition",
                    "public stability margin of the both-keep profile",
                    1.0 - 2.0 * ref.mismatch, col_gap_a),
    ]

    report_b = run_case_b(state)
    row_gap_b, col_gap_b = gaps(report_b.candidate, 1.0, 1.0)
    checks += [
        CheckResult("case-b.policy-payoff",
                    "policy payoff when both players flip",
                    -ref.pll + ref.plh - 2.0 * ref.phl, report_b.policy_payoff),
        CheckResult("case-b.public-payoff",
                    "public payoff when both players flip",
                    -ref.plh - ref.phl, report_b.public_payoff),
        CheckResult("case-b.policy-condition",
                    "policy stability margin of the both-flip profile",
                    -ref.keep_slope, row_gap_b),
        CheckResult("case-b.public-condition",
                    "public stability margin of the both-flip profile",
                    1.0 - 2.0 * ref.mismatch, col_gap_b),
    ]

    report_c = run_case_c(state)
    row_gap_c, col_gap_c = gaps(report_c.candidate, 0.0, 0.0)
    checks += [
        CheckResult("case-c.policy-payoff",
                    "policy payoff under even mixing is -1/2 on any state",
                    -0.5, report_c.policy_payoff),
        CheckResult("case-c.public-payoff",
                    "public payoff under even mixing is -1/2 on any state",
                    -0.5, report_c.public_payoff),
        CheckResult("case-c.policy-condition",
                    "policy stability margin under even mixing",
                    0.5 * ref.keep_slope, row_gap_c),
        CheckResult("case-c.public-condition",
                    "public deviation effect vanishes under even mixing",
                    0.0, col_gap_c),
    ]
    return checks


def _worst(entries):
    """Pick the (expected, computed, detail) with the largest deviation."""
    return max(entries, key=lambda e: abs(e[0] - e[1]))


def _strategy_i_checks() -> list[CheckResult]:
    policy_vec, public_vec = bg_payoff_vectors()
    payoff_entries, public_entries, cond_entries, col_entries = [], [], [], []
    state_error = 0.0
    nash_count = 0
    for w in GRID:
        report = run_strategy_i(w)
        probs = report.state.probabilities()
        state_error = max(state_error,
                          float(probs[0] + probs[3] + abs(probs[1] + probs[2] - 1.0)))
        detail = f"grid point lh_prob={w:.2f}"
        payoff_entries.append(((1.0 - w) - 2.0 * w, report.policy_payoff, detail))
        public_entries.append((-1.0, report.public_payoff, detail))
        row_gap, col_gap = nash_condition_gap(report.state, policy_vec,
                                              public_vec, report.candidate,
                                              MixingProfile(0.0, 0.0))
        cond_entries.append((2.0 * (1.0 - 2.0 * w), row_gap, detail))
        col_entries.append((-1.0, col_gap, detail))
        nash_count += int(report.is_nash)

    worst_pay = _worst(payoff_entries)
    worst_pub = _worst(public_entries)
    worst_cond = _worst(cond_entries)
    worst_col = _worst(col_entries)
    return [
        CheckResult("strategy-i.state",
                    "mismatch-only states carry no LL or HH weight",
                    0.0, state_error),
        CheckResult("strategy-i.policy-payoff",
                    "policy payoff on mismatch-only states",
                    worst_pay[0], worst_pay[1], detail=worst_pay[2]),
        CheckResult("strategy-i.public-payoff",
                    "public payoff is -1 on every mismatch-only state",
                    worst_pub[0], worst_pub[1], detail=worst_pub[2]),
        CheckResult("strategy-i.policy-condition",
                    "policy stability margin on mismatch-only states",
                    worst_cond[0], worst_cond[1], detail=worst_cond[2]),
        CheckResult("strategy-i.public-condition",
                    "public stability margin is -1: both-keep can never hold",
                    worst_col[0], worst_col[1], detail=worst_col[2]),
        CheckResult("strategy-i.never-nash",
                    "no mismatch-only state admits the both-keep equilibrium",
                    0.0, float(nash_count)),
    ]


def _strategy_ii_checks() -> list[CheckResult]:
    policy_vec, public_vec = bg_payoff_vectors()
    payoff_entries, public_entries, cond_entries, col_entries = [], [], [], []
    state_error = 0.0
    threshold_misses = 0
    for w in GRID:
        report = run_strategy_ii(w)
        probs = report.state.probabilities()
        state_error = max(state_error,
                          float(probs[1] + probs[2] + abs(probs[0] + probs[3] - 1.0)))
        detail = f"grid point hh_prob={w:.2f}"
        payoff_entries.append((-w, report.policy_payoff, detail))
        public_entries.append((0.0, report.public_payoff, detail))
        row_gap, col_gap = nash_condition_gap(report.state, policy_vec,
                                              public_vec, report.candidate,
                                              MixingProfile(0.0, 0.0))
        cond_entries.append((2.0 * (1.0 - 2.0 * w), row_gap, detail))
        col_entries.append((1.0, col_gap, detail))
        threshold_misses += int(report.is_nash != (w <= 0.5))

    worst_pay = _worst(payoff_entries)
    worst_pub = _worst(public_entries)
    worst_cond = _worst(cond_entries)
    worst_col = _worst(col_entries)
    return [
        CheckResult("strategy-ii.state",
                    "matched-outcome states carry no LH or HL weight",
                    0.0, state_error),
        CheckResult("strategy-ii.policy-payoff",
                    "policy payoff equals minus the HH weight",
                    worst_pay[0], worst_pay[1], detail=worst_pay[2]),
        CheckResult("strategy-ii.public-payoff",
                    "public payoff is 0 on every matched-outcome state",
                    worst_pub[0], worst_pub[1], detail=worst_pub[2]),
        CheckResult("strategy-ii.policy-condition",
                    "policy stability margin on matched-outcome states",
                    worst_cond[0], worst_cond[1], detail=worst_cond[2]),
        CheckResult("strategy-ii.public-condition",
                    "public stability margin is +1: the column side always holds",
                    worst_col[0], worst_col[1], detail=worst_col[2]),
        CheckResult("strategy-ii.nash-threshold",
                    "both-keep is an equilibrium exactly up to HH weight 1/2",
                    0.0, float(threshold_misses)),
    ]


def _oracle_checks() -> list[CheckResult]:
    rng = np.random.default_rng(20240809)
    policy_vec, public_vec = bg_payoff_vectors()
    worst = 0.0
    for _ in range(50):
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        state = QuantumInitialState.normalized(*amps)
        mix = MixingProfile(float(rng.uniform()), float(rng.uniform()))
        rho = final_density(state, mix)
        vectors = [policy_vec, public_vec,
                   PayoffVector(*rng.uniform(-2.0, 2.0, size=4))]
        for vec in vectors:
            traced = expected_payoff_trace(vec, rho)
            closed = closed_form_payoff(state, vec).evaluate(mix.p, mix.q)
            worst = max(worst, abs(traced - closed))
    return [CheckResult("oracle.trace-vs-closed-form",
                        "trace payoffs agree with the bilinear closed form",
                        0.0, worst)]


def run_verification(fault_id: str | None = None) -> list[CheckResult]:
    """Run the full check list; optionally corrupt one check for testing.

    ``fault_id`` perturbs the named check's computed value so that failure
    reporting can be exercised; unknown ids raise ValueError.
    """
    checks = (_classical_checks() + _closed_form_checks() + _gap_checks()
              + _case_checks() + _strategy_i_checks() + _strategy_ii_checks()
              + _oracle_checks())
    if fault_id is not None:
        ids = [c.check_id for c in checks]
        if fault_id not in ids:
            raise ValueError(f"unknown check id {fault_id!r}")
        checks = [
            CheckResult(c.check_id, c.description, c.expected,
                        c.computed + 1e-3, c.tolerance, c.detail)
            if c.check_id == fault_id else c
            for c in checks
        ]
    return checks
