"""Simple undirected graphs, text formats and small structural predicates.

A :class:`Graph` is a vertex count plus an ordered edge list.  Edge identity
is the list index, so an edge ordering is a permutation of ``range(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for malformed graph input."""


class DuplicateEdge(GraphError):
    def __init__(self, edge: Edge, line: int | None = None):
        self.edge = edge
        self.line = line
        where = f" on line {line}" if line is not None else ""
        super().__init__(f"duplicate edge {edge[0]}-{edge[1]}{where}")


class SelfLoop(GraphError):
    def __init__(self, vertex: int, line: int | None = None):
        self.vertex = vertex
        self.line = line
        where = f" on line {line}" if line is not None else ""
        super().__init__(f"self-loop at vertex {vertex}{where}")


class MalformedGraph6(GraphError):
    pass


class TooLarge(ValueError):
    """Raised when an input exceeds a size guard of an exhaustive routine."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen: set[frozenset[int]] = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} out of range for n={self.n}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge((u, v))
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_masks(self) -> list[int]:
        """Neighbourhood of each vertex as an int bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def without_edge(self, index: int) -> Graph:
        return Graph(self.n, self.edges[:index] + self.edges[index + 1:])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order kept."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments, blanks and an ``n=<count>`` header allowed."""
    n_header: int | None = None
    edges: list[Edge] = []
    seen: dict[frozenset[int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.replace(" ", "").startswith("n="):
            if n_header is not None or edges:
                raise GraphError(f"line {lineno}: header must come first")
            value = line.replace(" ", "")[2:]
            if not value.isdigit():
                raise GraphError(f"line {lineno}: bad vertex count {value!r}")
            n_header = int(value)
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise GraphError(f"line {lineno}: expected two non-negative integers, got {line!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise SelfLoop(u, lineno)
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge((u, v), lineno)
        seen[key] = lineno
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n_header is None:
        n = top
    else:
        if n_header < top:
            raise GraphError(f"header n={n_header} but vertex {top - 1} used")
        n = n_header
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _graph6_size(data: str) -> tuple[int, int]:
    """Return (n, offset of the bit-vector) from a graph6 body."""
    if not data:
        raise MalformedGraph6("empty graph6 string")
    vals = [ord(ch) - 63 for ch in data]
    if any(not 0 <= x <= 63 for x in vals):
        raise MalformedGraph6("graph6 characters must lie in '?'..'~'")
    if vals[0] < 63:
        return vals[0], 1
    if len(vals) >= 4 and vals[1] < 63:
        return (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    if len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        return n, 8
    raise MalformedGraph6("truncated graph6 size field")


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    n, offset = _graph6_size(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} data characters for n={n}, got {len(body)}"
        )
    if any(not 0 <= ord(ch) - 63 <= 63 for ch in body):
        raise MalformedGraph6("graph6 characters must lie in '?'..'~'")
    bits = "".join(format(ord(ch) - 63, "06b") for ch in body)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    if "1" in bits[nbits:]:
        raise MalformedGraph6("non-zero padding bits")
    return Graph(n, tuple(sorted(edges)))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]
    es = g.edge_set()
    bits = [
        1 if frozenset((i, j)) in es else 0
        for j in range(1, n)
        for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = [
        int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + body)


def max_disjoint_edges_capped(g: Graph, cap: int = 3) -> int:
    """``min(cap, matching number)`` by trying all edge pairs/triples.

    Cost is O(m**cap); the cap keeps it cheap for the two-tree questions.
    """
    if cap not in (1, 2, 3):
        raise ValueError("cap must be 1, 2 or 3")
    if g.m == 0:
        return 0
    if cap == 1:
        return 1
    best = 1
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    for i, j in combinations(range(len(masks)), 2):
        if masks[i] & masks[j] == 0:
            if cap == 2:
                return 2
            best = 2
            used = masks[i] | masks[j]
            for k in range(j + 1, len(masks)):
                if masks[k] & used == 0:
                    return 3
    return best


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adjacency_masks()
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def leaves(g: Graph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if d == 1]


def strip_isolated(g: Graph) -> Graph:
    """Drop degree-0 vertices, renumbering the rest in their original order."""
    deg = g.degrees()
    keep = [v for v in range(g.n) if deg[v] > 0]
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), tuple((index[u], index[v]) for u, v in g.edges))


ISO_LIMIT = 12


def are_isomorphic(g: Graph, h: Graph, *, limit: int | None = ISO_LIMIT) -> bool:
    """Backtracking isomorphism test for small graphs.

    Vertices of ``g`` are mapped in order of decreasing degree onto vertices of
    ``h`` with the same degree and the same neighbour-degree multiset, checking
    adjacency against every vertex already placed.
    """
    if limit is not None and max(g.n, h.n) > limit:
        raise TooLarge(f"isomorphism test limited to {limit} vertices")
    if g.n != h.n or g.m != h.m:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    ag, ah = g.adjacency_masks(), h.adjacency_masks()

    def signature(adj: list[int], deg: list[int], v: int) -> tuple:
        nd = sorted(deg[u] for u in range(len(deg)) if adj[v] >> u & 1)
        return (deg[v], tuple(nd))

    sg = [signature(ag, dg, v) for v in range(g.n)]
    sh = [signature(ah, dh, v) for v in range(h.n)]
    if sorted(sg) != sorted(sh):
        return False

    # Place high-degree vertices first, preferring neighbours of placed ones.
    order: list[int] = []
    remaining = set(range(g.n))
    while remaining:
        placed = 0
        for v in order:
            placed |= 1 << v
        v = max(remaining, key=lambda x: (bin(ag[x] & placed).count("1"), dg[x], -x))
        order.append(v)
        remaining.remove(v)

    candidates = {v: [w for w in range(h.n) if sh[w] == sg[v]] for v in range(g.n)}
    image = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:pos]:
                if (ag[v] >> u & 1) != (ah[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return extend(0)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) if i < n - 1 else (0, n - 1) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def edge_subgraph(n: int, edges: Iterable[Edge]) -> Graph:
    """Graph on the vertices touched by ``edges`` (isolated vertices removed)."""
    return strip_isolated(Graph(n, tuple(edges)))
