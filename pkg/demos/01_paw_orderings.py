"""Walk through all 24 edge orderings of the paw and tally the forests."""

from collections import defaultdict
from itertools import permutations

from edgeforest import exact_bruteforce, parse_edge_list, run_ordering

paw = parse_edge_list("0 1\n1 2\n1 3\n2 3")
print("paw edges:", {i + 1: e for i, e in enumerate(paw.edges)})

by_forest = defaultdict(list)
for order in permutations(range(paw.m)):
    r = run_ordering(paw, order)
    by_forest[tuple(sorted(r.kept))].append(("".join(str(i + 1) for i in order), r.trees))

for kept, runs in sorted(by_forest.items(), key=lambda kv: -len(kv[1])):
    dropped = sorted(set(range(1, paw.m + 1)) - {i + 1 for i in kept})
    trees = runs[0][1]
    print(f"drop {dropped}: {len(runs)} orderings, {trees} tree(s): {' '.join(o for o, _ in runs)}")

print("\nexact distribution:", dict(exact_bruteforce(paw)))
