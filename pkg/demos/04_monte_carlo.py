"""Estimate P(G,k) by simulation and watch the error shrink with more trials."""

from edgeforest import construct_family, estimate_with_stderr, exact_subset_dp, monte_carlo
from edgeforest.families import GS

g = construct_family(GS(1, 1, 8))
exact = exact_subset_dp(g)[2]
print(f"GS(1,1,8): exact P(G,2) = {exact} ~ {float(exact):.6f}")
for trials in (1_000, 10_000, 100_000):
    est = monte_carlo(g, trials, seed=2024, workers=2)
    p, se = estimate_with_stderr(est, 2)
    print(f"  {trials:>7} trials: {p:.6f} +/- {se:.6f}  (off by {abs(p - float(exact)) / se:.2f} stderr)")
