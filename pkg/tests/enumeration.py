"""Graph enumerations shared by the exhaustive tests."""

from itertools import combinations

from edgeforest.graph import Graph, edge_subgraph, is_connected


def edge_subsets(n):
    """Every non-empty edge subset of K_n, isolated vertices removed."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        yield edge_subgraph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def connected_edge_subsets(n):
    for g in edge_subsets(n):
        if is_connected(g):
            yield g


def low_matching_graphs(n, max_matching=2):
    """Labelled graphs on vertex set {0..n-1} with matching number <= max_matching.

    Edges are added in index order and a branch is cut as soon as it holds
    max_matching + 1 disjoint edges, which no superset can lose.
    """
    pairs = list(combinations(range(n), 2))
    masks = [(1 << u) | (1 << v) for u, v in pairs]

    def too_big(chosen):
        # only matchings through the newest edge are new
        last = chosen[-1]
        rest = [masks[i] for i in chosen[:-1] if masks[i] & masks[last] == 0]
        if max_matching == 1:
            return bool(rest)
        for x, y in combinations(rest, 2):
            if x & y == 0:
                return True
        return False

    out = []

    def walk(start, chosen):
        out.append(tuple(chosen))
        for i in range(start, len(pairs)):
            chosen.append(i)
            if not too_big(chosen):
                walk(i + 1, chosen)
            chosen.pop()

    walk(0, [])
    for chosen in out:
        yield Graph(n, tuple(pairs[i] for i in chosen))


def is_star_or_triangle(g):
    """Independent recognizer: a triangle, or some vertex touches every edge."""
    if g.m == 3 and g.n == 3:
        return True
    return g.m > 0 and any(all(v in e for e in g.edges) for v in range(g.n)) and g.m == g.n - 1
