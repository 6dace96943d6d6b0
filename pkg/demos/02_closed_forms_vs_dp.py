"""Compare the closed forms with the subset DP on a handful of family members."""

from edgeforest import GS, K4, Complete, Di, GSPlus, Paw, construct_family, exact_subset_dp, p1_family
from edgeforest.formulas import audit_complete_bipartite

specs = [GS(1, 1, 8), GS(2, 3, 4), GSPlus(3, 0, 4), GSPlus(2, 2, 3), Paw(5), Di(3), K4(2), Complete(7)]
print(f"{'family':<16}{'formula P(G,1)':>16}{'dp P(G,1)':>14}  match")
for spec in specs:
    closed = p1_family(spec)
    dp = exact_subset_dp(construct_family(spec))
    print(f"{str(spec):<16}{str(closed[1]):>16}{str(dp[1]):>14}  {closed == dp}")

print("\nprinted complete-bipartite expression against the exact engine:")
for row in audit_complete_bipartite(5):
    mark = "ok" if row["agrees"] else "DIFFERS"
    print(f"  K_{{{row['s']},{row['t']}}} k={row['k']}: printed {row['printed']}, "
          f"exact {row['exact']}  {mark}")
