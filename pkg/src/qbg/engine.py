"""Operator-mixing quantization of 2x2 games on a shared entangled state.

The joint strategy space is the 4-dimensional Hilbert space with ordered
basis (LL, LH, HL, HH); the first letter is the row player's strategy, the
second the column player's.  Starting from a fixed normalized initial state,
the row player keeps the identity with probability p and the column player
with probability q, the alternative being the strategy-flip operator C with
C|L> = |H> and C|H> = |L>.

Mixing produces a convex combination of four conjugated densities.  The
canonical branch order is

    (keep, keep), (flip row qubit, keep), (keep, flip column qubit), (flip, flip)

with weights (p*q, p*(1-q), (1-p)*q, (1-p)*(1-q)).  Under this pairing the
trace payoffs agree exactly with the bilinear closed form
``constant + coeff_p*p + coeff_q*q + coeff_pq*p*q`` expanded from the
branch-outcome matrix, which is what all equilibrium conditions are read
from.

Expected payoffs are traces of diagonal payoff operators against the final
density matrix; because the operators are diagonal, payoffs depend only on
squared amplitude magnitudes, so all results are invariant under rephasing
any amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ALGEBRA_TOL = 1e-12    # tolerance for algebraic identities (norms, traces, slopes)
PSD_TOL = 1e-10        # eigenvalue floor for positive semidefiniteness

BASIS_LABELS = ("LL", "LH", "HL", "HH")


@dataclass(frozen=True)
class QuantumInitialState:
    """Normalized amplitudes over the ordered basis (LL, LH, HL, HH)."""

    amp_ll: complex
    amp_lh: complex
    amp_hl: complex
    amp_hh: complex

    def __post_init__(self):
        amps = (self.amp_ll, self.amp_lh, self.amp_hl, self.amp_hh)
        for a in amps:
            z = complex(a)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("amplitudes must be finite")
        norm_sq = sum(abs(complex(a)) ** 2 for a in amps)
        if abs(norm_sq - 1.0) > ALGEBRA_TOL:
            raise ValueError(
                f"state not normalized: squared magnitudes sum to {norm_sq!r}")

    @classmethod
    def normalized(cls, amp_ll, amp_lh, amp_hl, amp_hh) -> "QuantumInitialState":
        """Rescale arbitrary amplitudes to unit norm (rejects the zero vector)."""
        amps = np.array([amp_ll, amp_lh, amp_hl, amp_hh], dtype=complex)
        norm = np.linalg.norm(amps)
        if norm < 1e-15:
            raise ValueError("cannot normalize the zero vector")
        amps = amps / norm
        return cls(*(complex(a) for a in amps))

    @classmethod
    def from_probabilities(cls, p_ll, p_lh, p_hl, p_hh,
                           tol: float = 1e-9) -> "QuantumInitialState":
        """State with nonnegative real amplitudes from squared magnitudes.

        The four weights must sum to 1 within ``tol`` (decimal input is
        expected to carry rounding fuzz); they are rescaled exactly before
        taking square roots.
        """
        probs = [float(p) for p in (p_ll, p_lh, p_hl, p_hh)]
        for p in probs:
            if not math.isfinite(p) or p < -ALGEBRA_TOL:
                raise ValueError(f"squared magnitudes must be nonnegative, got {p!r}")
        probs = [max(p, 0.0) for p in probs]
        total = sum(probs)
        if abs(total - 1.0) > tol:
            raise ValueError(f"squared magnitudes sum to {total!r}, expected 1")
        return cls(*(complex(math.sqrt(p / total)) for p in probs))

    def amplitudes(self) -> np.ndarray:
        return np.array([self.amp_ll, self.amp_lh, self.amp_hl, self.amp_hh],
                        dtype=complex)

    def probabilities(self) -> np.ndarray:
        """Squared magnitudes in basis order; these drive every payoff."""
        return np.abs(self.amplitudes()) ** 2


@dataclass(frozen=True)
class MixingProfile:
    """Identity-operator probabilities (p for the row player, q for the column)."""

    p: float
    q: float

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q)):
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")


@dataclass(frozen=True, eq=False)
class DensityMatrix4:
    """4x4 density matrix over the game basis.

    Validated on construction: Hermitian and unit trace within 1e-12,
    eigenvalues above -1e-10.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > ALGEBRA_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > ALGEBRA_TOL or abs(np.trace(m).imag) > ALGEBRA_TOL:
            raise ValueError("density matrix trace is not 1")
        if np.min(np.linalg.eigvalsh(m)) < -PSD_TOL:
            raise ValueError("density matrix is not positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def diagonal(self) -> np.ndarray:
        return np.real(np.diag(self.matrix)).copy()


@dataclass(frozen=True)
class PayoffVector:
    """Diagonal of one player's payoff operator, in basis order."""

    ll: float
    lh: float
    hl: float
    hh: float

    def __post_init__(self):
        for v in (self.ll, self.lh, self.hl, self.hh):
            if not math.isfinite(v):
                raise ValueError("payoffs must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.ll, self.lh, self.hl, self.hh], dtype=float)


@dataclass(frozen=True)
class ClosedFormPayoff:
    """Expected payoff as a bilinear polynomial in the identity probabilities.

    evaluate(p, q) = constant + coeff_p*p + coeff_q*q + coeff_pq*p*q
    """

    constant: float
    coeff_p: float
    coeff_q: float
    coeff_pq: float

    def evaluate(self, p: float, q: float) -> float:
        return self.constant + self.coeff_p * p + self.coeff_q * q + self.coeff_pq * p * q

    def slope_in_p(self, q: float) -> float:
        return self.coeff_p + self.coeff_pq * q

    def slope_in_q(self, p: float) -> float:
        return self.coeff_q + self.coeff_pq * p


@dataclass(frozen=True)
class ConditionCheck:
    description: str
    value: float
    satisfied: bool


@dataclass(frozen=True)
class EquilibriumReport:
    """Outcome of testing one candidate profile for Nash stability."""

    candidate: MixingProfile
    row_payoff: float
    col_payoff: float
    is_nash: bool          # no extreme deviation gains (weak inequalities)
    is_strict_nash: bool   # every actual deviation strictly loses
    conditions: tuple[ConditionCheck, ...]


@dataclass(frozen=True)
class EquilibriumRegion:
    """Axis-aligned set of equilibrium profiles: point, segment, or rectangle."""

    p_min: float
    p_max: float
    q_min: float
    q_max: float

    @property
    def kind(self) -> str:
        p_flat = self.p_min == self.p_max
        q_flat = self.q_min == self.q_max
        if p_flat and q_flat:
            return "point"
        if p_flat or q_flat:
            return "segment"
        return "rectangle"

    def contains(self, p: float, q: float, tol: float = 0.0) -> bool:
        return (self.p_min - tol <= p <= self.p_max + tol
                and self.q_min - tol <= q <= self.q_max + tol)

    def sample_points(self) -> list[tuple[float, float]]:
        """Corners plus center; enough to probe a bilinear payoff on the region."""
        ps = {self.p_min, self.p_max, 0.5 * (self.p_min + self.p_max)}
        qs = {self.q_min, self.q_max, 0.5 * (self.q_min + self.q_max)}
        return [(p, q) for p in sorted(ps) for q in sorted(qs)]


def flip_operator() -> np.ndarray:
    """Single-qubit strategy swap: unitary, Hermitian, its own inverse."""
    return np.array([[0.0, 1.0], [1.0, 0.0]])


def branch_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The four conjugation operators in canonical branch order."""
    ident = np.eye(2)
    flip = flip_operator()
    return (np.kron(ident, ident), np.kron(flip, ident),
            np.kron(ident, flip), np.kron(flip, flip))


def mixing_weights(mix: MixingProfile) -> np.ndarray:
    """Branch weights (pq, p(1-q), (1-p)q, (1-p)(1-q)); a probability vector."""
    p, q = mix.p, mix.q
    return np.array([p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)])


def initial_density(state: QuantumInitialState) -> DensityMatrix4:
    """Rank-1 projector onto the initial state."""
    amps = state.amplitudes()
    return DensityMatrix4(np.outer(amps, amps.conj()))


def final_density(state: QuantumInitialState, mix: MixingProfile) -> DensityMatrix4:
    """Convex combination of the four conjugated initial densities."""
    rho = np.outer(state.amplitudes(), state.amplitudes().conj())
    weights = mixing_weights(mix)
    out = np.zeros((4, 4), dtype=complex)
    for w, op in zip(weights, branch_operators()):
        if w != 0.0:
            out += w * (op @ rho @ op.conj().T)
    return DensityMatrix4(out)


def payoff_operator(vec: PayoffVector) -> np.ndarray:
    """Diagonal payoff operator in basis order."""
    return np.diag(vec.as_array()).astype(complex)


def expected_payoff_trace(vec: PayoffVector, rho: DensityMatrix4) -> float:
    """Tr(P rho) for the diagonal payoff operator P built from ``vec``.

    Raises if the trace carries an imaginary residue above tolerance, which
    would indicate a corrupted density matrix.
    """
    value = complex(np.trace(payoff_operator(vec) @ rho.matrix))
    if abs(value.imag) > ALGEBRA_TOL:
        raise ValueError(f"payoff trace has imaginary residue {value.imag!r}")
    return float(value.real)


def branch_outcome_matrix(state: QuantumInitialState) -> np.ndarray:
    """4x4 matrix whose row k is the basis-outcome distribution of branch k.

    Row k lists |<basis_j| U_k |state>|^2 for the canonical branch operators
    U_k; every row and every column sums to 1 (each row is a permutation of
    the state's squared magnitudes).
    """
    amps = state.amplitudes()
    rows = [np.abs(op @ amps) ** 2 for op in branch_operators()]
    return np.array(rows)


def closed_form_payoff(state: QuantumInitialState, vec: PayoffVector) -> ClosedFormPayoff:
    """Expand the branch-weighted expected payoff into its bilinear form.

    With r = branch_outcome_matrix(state) @ vec and weights
    (pq, p(1-q), (1-p)q, (1-p)(1-q)), the payoff collects to
    r3 + (r1-r3) p + (r2-r3) q + (r0-r1-r2+r3) pq.
    """
    r = branch_outcome_matrix(state) @ vec.as_array()
    return ClosedFormPayoff(
        constant=float(r[3]),
        coeff_p=float(r[1] - r[3]),
        coeff_q=float(r[2] - r[3]),
        coeff_pq=float(r[0] - r[1] - r[2] + r[3]),
    )


def payoff_vectors_from_game(game) -> tuple[PayoffVector, PayoffVector]:
    """Diagonal payoff vectors (row player, column player) from a 2x2 game.

    Basis order maps to table cells as LL=(0,0), LH=(0,1), HL=(1,0), HH=(1,1).
    """
    cells = ((0, 0), (0, 1), (1, 0), (1, 1))
    row = PayoffVector(*(float(game.row_payoff(r, c)) for r, c in cells))
    col = PayoffVector(*(float(game.col_payoff(r, c)) for r, c in cells))
    return row, col


def nash_condition_gap(state: QuantumInitialState, vec_row: PayoffVector,
                       vec_col: PayoffVector, candidate: MixingProfile,
                       deviation: MixingProfile) -> tuple[float, float]:
    """Payoff lost by each player deviating unilaterally from the candidate.

    Returns (row gap, col gap): the row player's payoff at the candidate minus
    its payoff after moving p to the deviation's p at fixed candidate q, and
    the column analog.  Nonnegative gaps mean the deviation does not pay.
    """
    f_row = closed_form_payoff(state, vec_row)
    f_col = closed_form_payoff(state, vec_col)
    row_gap = (f_row.evaluate(candidate.p, candidate.q)
               - f_row.evaluate(deviation.p, candidate.q))
    col_gap = (f_col.evaluate(candidate.p, candidate.q)
               - f_col.evaluate(candidate.p, deviation.q))
    return row_gap, col_gap


def verify_nash(state: QuantumInitialState, vec_row: PayoffVector,
                vec_col: PayoffVector, candidate: MixingProfile,
                tol: float = ALGEBRA_TOL) -> EquilibriumReport:
    """Test a candidate profile against every unilateral deviation.

    Each payoff is affine in the player's own probability at a fixed opponent
    probability, so checking the two extreme deviations (0 and 1) decides the
    condition for the whole interval.  The weak verdict allows ties; the
    strict verdict requires every actual deviation to lose.
    """
    f_row = closed_form_payoff(state, vec_row)
    f_col = closed_form_payoff(state, vec_col)
    p, q = candidate.p, candidate.q
    row_payoff = f_row.evaluate(p, q)
    col_payoff = f_col.evaluate(p, q)

    checks = []
    weak = True
    strict = True
    for edge in (0.0, 1.0):
        gap = row_payoff - f_row.evaluate(edge, q)
        ok = gap >= -tol
        weak = weak and ok
        if abs(edge - p) > tol:
            strict = strict and gap > tol
        checks.append(ConditionCheck(
            f"row deviation to p={edge:g} does not gain", gap, ok))
    for edge in (0.0, 1.0):
        gap = col_payoff - f_col.evaluate(p, edge)
        ok = gap >= -tol
        weak = weak and ok
        if abs(edge - q) > tol:
            strict = strict and gap > tol
        checks.append(ConditionCheck(
            f"column deviation to q={edge:g} does not gain", gap, ok))

    return EquilibriumReport(candidate=candidate, row_payoff=row_payoff,
                             col_payoff=col_payoff, is_nash=weak,
                             is_strict_nash=strict, conditions=tuple(checks))


def _best_response_pieces(lin: float, bil: float,
                          tol: float = ALGEBRA_TOL):
    """Pieces ((own_lo, own_hi), (other_lo, other_hi)) of a best-response set.

    The player's payoff slope in its own probability is ``lin + bil * other``;
    the best response is 1 where the slope is positive, 0 where negative, and
    the whole interval at an exact zero.
    """
    if abs(bil) <= tol:
        if abs(lin) <= tol:
            return [((0.0, 1.0), (0.0, 1.0))]
        own = 1.0 if lin > 0 else 0.0
        return [((own, own), (0.0, 1.0))]
    crossing = -lin / bil
    upper_own = 1.0 if bil > 0 else 0.0   # best response where other > crossing
    lower_own = 1.0 - upper_own
    if crossing < 0.0:
        return [((upper_own, upper_own), (0.0, 1.0))]
    if crossing > 1.0:
        return [((lower_own, lower_own), (0.0, 1.0))]
    return [
        ((lower_own, lower_own), (0.0, crossing)),
        ((0.0, 1.0), (crossing, crossing)),
        ((upper_own, upper_own), (crossing, 1.0)),
    ]


def _intersect(a: tuple[float, float], b: tuple[float, float]):
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    return (lo, hi) if lo <= hi else None


def enumerate_equilibria(state: QuantumInitialState, vec_row: PayoffVector,
                         vec_col: PayoffVector) -> tuple[EquilibriumRegion, ...]:
    """All Nash profiles, described exactly as points, segments, and rectangles.

    Both best-response correspondences are piecewise constant with at most one
    indifference crossing, so each player's graph is a union of at most three
    axis-aligned pieces; the equilibrium set is the pairwise intersection.
    """
    f_row = closed_form_payoff(state, vec_row)
    f_col = closed_form_payoff(state, vec_col)
    row_pieces = _best_response_pieces(f_row.coeff_p, f_row.coeff_pq)   # own = p
    col_pieces = _best_response_pieces(f_col.coeff_q, f_col.coeff_pq)   # own = q
    regions = set()
    for p_own, q_other in row_pieces:
        for q_own, p_other in col_pieces:
            p_int = _intersect(p_own, p_other)
            q_int = _intersect(q_other, q_own)
            if p_int is not None and q_int is not None:
                regions.add(EquilibriumRegion(p_int[0], p_int[1],
                                              q_int[0], q_int[1]))

    def covered(r: EquilibriumRegion) -> bool:
        return any(o != r
                   and o.p_min <= r.p_min and r.p_max <= o.p_max
                   and o.q_min <= r.q_min and r.q_max <= o.q_max
                   for o in regions)

    kept = [r for r in regions if not covered(r)]
    kept.sort(key=lambda r: (r.p_min, r.p_max, r.q_min, r.q_max))
    return tuple(kept)
