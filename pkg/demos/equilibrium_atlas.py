"""Exact equilibrium regions across a range of initial states.

The enumerator exploits bilinearity: each player's best response is a
threshold rule in the opponent's probability, so the equilibrium set is
always a finite union of points, axis-aligned segments, and rectangles.
This script maps those regions for several initial states and cross-checks
a few samples with the verifier.

Run: python3 demos/equilibrium_atlas.py
"""

from qbg import (
    MixingProfile,
    PayoffVector,
    QuantumInitialState,
    bg_payoff_vectors,
    enumerate_equilibria,
    verify_nash,
)


def describe(region):
    if region.kind == "point":
        return f"point ({region.p_min:g}, {region.q_min:g})"
    if region.kind == "segment":
        if region.p_min == region.p_max:
            return f"segment p={region.p_min:g}, q in [{region.q_min:g}, {region.q_max:g}]"
        return f"segment q={region.q_min:g}, p in [{region.p_min:g}, {region.p_max:g}]"
    return (f"rectangle p in [{region.p_min:g}, {region.p_max:g}], "
            f"q in [{region.q_min:g}, {region.q_max:g}]")


def atlas_entry(label, state, vec_row, vec_col):
    regions = enumerate_equilibria(state, vec_row, vec_col)
    print(f"{label}")
    print("  state weights:", state.probabilities().round(3))
    if not regions:
        print("  no equilibria")
    for region in regions:
        sample = region.sample_points()[0]
        report = verify_nash(state, vec_row, vec_col, MixingProfile(*sample))
        confirmed = "confirmed" if report.is_nash else "REJECTED"
        print(f"  {describe(region)}  [{confirmed}, payoffs "
              f"({report.row_payoff:+.3f}, {report.col_payoff:+.3f})]")
    print()


def main():
    policy_vec, public_vec = bg_payoff_vectors()

    atlas_entry("Pure LL state (classical corner):",
                QuantumInitialState(1, 0, 0, 0), policy_vec, public_vec)
    atlas_entry("Matched outcomes, LL-dominant (HH weight 0.2):",
                QuantumInitialState.from_probabilities(0.8, 0, 0, 0.2),
                policy_vec, public_vec)
    atlas_entry("Matched outcomes, balanced (HH weight 0.5):",
                QuantumInitialState.from_probabilities(0.5, 0, 0, 0.5),
                policy_vec, public_vec)
    atlas_entry("Matched outcomes, HH-dominant (HH weight 0.8):",
                QuantumInitialState.from_probabilities(0.2, 0, 0, 0.8),
                policy_vec, public_vec)
    atlas_entry("Mismatch-only state (LH weight 0.5):",
                QuantumInitialState.from_probabilities(0, 0.5, 0.5, 0),
                policy_vec, public_vec)
    atlas_entry("Reference mixed state:",
                QuantumInitialState.from_probabilities(0.5, 0.2, 0.2, 0.1),
                policy_vec, public_vec)

    zero = PayoffVector(0, 0, 0, 0)
    atlas_entry("Degenerate game (all payoffs zero):",
                QuantumInitialState(1, 0, 0, 0), zero, zero)


if __name__ == "__main__":
    main()
