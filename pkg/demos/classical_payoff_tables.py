"""The classical inflation game and why it is time inconsistent.

Builds the normalized payoff tables for both policy-maker types, finds the
pure equilibria and dominated strategies, and walks through the commitment
problem: low inflation is what everyone wants, but for the weak type it is
not an equilibrium.

Run: python3 demos/classical_payoff_tables.py
"""

from qbg import (
    InflationProfile,
    PolicyParams,
    build_bg_game,
    find_dominated_rows,
    find_pure_nash,
    optimal_discretionary_inflation,
    policy_utility,
    public_utility,
)


def show_game(title, game):
    print(title)
    print(f"          {game.col_labels[0]:>10}  {game.col_labels[1]:>10}")
    for r in (0, 1):
        cells = "  ".join(
            f"({game.row_payoff(r, c)}, {game.col_payoff(r, c)})".rjust(10)
            for c in (0, 1))
        print(f"  {game.row_labels[r]:<6}  {cells}")
    nash = sorted((p.row_index, p.col_index) for p in find_pure_nash(game))
    print("  pure Nash:", ", ".join(
        f"({game.row_labels[r]}, {game.col_labels[c]})" for r, c in nash))
    dominated = sorted(d.index for d in find_dominated_rows(game) if d.strict)
    if dominated:
        print("  strictly dominated rows:",
              ", ".join(game.row_labels[i] for i in dominated))
    print()


def main():
    weak = PolicyParams(theta=1, a=2, b=2)
    strong = PolicyParams(theta=0, a=2, b=2)

    print("Utilities: the policy maker gains b*(actual - expected) only when")
    print("weak (theta=1) and always pays a*actual^2/2; the public loses the")
    print("squared forecast error.\n")

    print("A weak policy maker facing expected inflation 0 would pick actual "
          f"inflation {optimal_discretionary_inflation(weak)} "
          "(the discretionary optimum),")
    print("earning", policy_utility(InflationProfile(1, 0), weak),
          "while the public loses", public_utility(InflationProfile(1, 0)))
    print()

    show_game("Weak policy maker (theta = 1, a = b = 2):",
              build_bg_game(weak))
    print("The weak type's temptation: cheating at (H, L) pays 1, so the only")
    print("equilibrium is the bad outcome (H, H) with payoffs (-1, 0); the")
    print("announced low-inflation policy (L, L) is not credible.  That is the")
    print("time inconsistency.\n")

    show_game("Strong policy maker (theta = 0, a = b = 2):",
              build_bg_game(strong))
    print("The strong type has nothing to gain from surprises, so (L, L) is")
    print("the equilibrium and commitment is credible.")


if __name__ == "__main__":
    main()
