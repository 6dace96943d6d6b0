"""The forest building process: single runs, exact distributions, simulation.

Edges are taken in some order; an edge is kept when at least one of its ends
has not been touched by an earlier kept edge.  The kept edges form a forest
whose number of trees is the quantity of interest.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .graph import Graph, TooLarge

BRUTE_FORCE_MAX_EDGES = 10
SUBSET_DP_MAX_VERTICES = 20


class TooManyEdges(TooLarge):
    pass


class TooManyVertices(TooLarge):
    pass


@dataclass(frozen=True)
class ForestResult:
    kept: tuple[int, ...]
    trees: int


class TreeDistribution(Mapping[int, Fraction]):
    """Exact law of the tree count: ``k -> P(G, k)`` over reduced fractions.

    Absent ``k`` have probability zero.  Equality is exact.
    """

    __slots__ = ("_probs",)

    def __init__(self, probs: Mapping[int, Fraction | int]):
        cleaned = {int(k): Fraction(v) for k, v in probs.items() if v != 0}
        for k, v in cleaned.items():
            if k < 1 or not 0 < v <= 1:
                raise ValueError(f"bad probability P({k}) = {v}")
        self._probs = dict(sorted(cleaned.items()))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], total: int) -> TreeDistribution:
        return cls({k: Fraction(c, total) for k, c in counts.items()})

    def __getitem__(self, k: int) -> Fraction:
        return self._probs.get(k, Fraction(0))

    def __iter__(self):
        return iter(self._probs)

    def __len__(self) -> int:
        return len(self._probs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TreeDistribution):
            return self._probs == other._probs
        if isinstance(other, Mapping):
            return self == TreeDistribution(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._probs.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self._probs.items())
        return f"TreeDistribution({{{inner}}})"

    def total(self) -> Fraction:
        return sum(self._probs.values(), Fraction(0))

    def profile(self) -> tuple[Fraction, ...]:
        """``(P(G,1), P(G,2), ..., P(G,k_max))`` including interior zeros."""
        if not self._probs:
            return ()
        return tuple(self[k] for k in range(1, max(self._probs) + 1))

    def to_text(self) -> str:
        return "".join(f"{k}: {v.numerator}/{v.denominator}\n" for k, v in self._probs.items())

    @classmethod
    def from_text(cls, text: str) -> TreeDistribution:
        probs = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            k, _, value = line.partition(":")
            probs[int(k)] = Fraction(value.strip())
        return cls(probs)


def _check_nonempty(g: Graph) -> None:
    if g.m == 0:
        raise ValueError("the process needs at least one edge")


def run_ordering(g: Graph, ordering: Sequence[int]) -> ForestResult:
    _check_nonempty(g)
    if sorted(ordering) != list(range(g.m)):
        raise ValueError(f"ordering is not a permutation of 0..{g.m - 1}")
    seen = 0
    kept = []
    trees = 0
    for i in ordering:
        u, v = g.edges[i]
        bu, bv = seen >> u & 1, seen >> v & 1
        if bu and bv:
            continue
        if not bu and not bv:
            trees += 1
        seen |= (1 << u) | (1 << v)
        kept.append(i)
    return ForestResult(tuple(kept), trees)


def _tally_from_prefix(edges: Sequence[tuple[int, int]], first: int, full: int) -> Counter:
    """Tree counts over every ordering that starts with edge ``first``.

    Orderings are enumerated edge by edge.  Once every vertex has been seen no
    later edge can be kept, so the ``r!`` completions of such a prefix share
    its tree count and are added in one step.
    """
    m = len(edges)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    fact = [math.factorial(i) for i in range(m + 1)]
    tally: Counter = Counter()

    def walk(seen: int, used: int, trees: int, depth: int) -> None:
        remaining = m - depth
        if seen == full or remaining == 0:
            tally[trees] += fact[remaining]
            return
        for i in range(m):
            if used >> i & 1:
                continue
            e = masks[i]
            inter = seen & e
            if inter == e:
                walk(seen, used | 1 << i, trees, depth + 1)
            else:
                walk(seen | e, used | 1 << i, trees + (inter == 0), depth + 1)

    walk(masks[first], 1 << first, 1, 1)
    return tally


def _tally_worker(args) -> Counter:
    edges, firsts, full = args
    total: Counter = Counter()
    for f in firsts:
        total.update(_tally_from_prefix(edges, f, full))
    return total


def exact_bruteforce(g: Graph, *, workers: int = 1, force: bool = False) -> TreeDistribution:
    """Exact distribution by walking every edge ordering.

    The work is split by first edge; with ``workers > 1`` the first edges are
    dealt round-robin to a process pool.  Integer tallies are summed, so the
    answer does not depend on ``workers``.
    """
    _check_nonempty(g)
    if g.m > BRUTE_FORCE_MAX_EDGES and not force:
        raise TooManyEdges(f"brute force limited to {BRUTE_FORCE_MAX_EDGES} edges (got {g.m})")
    full = 0
    for u, v in g.edges:
        full |= (1 << u) | (1 << v)
    edges = list(g.edges)
    workers = max(1, min(workers, g.m))
    chunks = [(edges, list(range(w, g.m, workers)), full) for w in range(workers)]
    if workers == 1:
        tallies = [_tally_worker(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(_tally_worker, chunks))
    total: Counter = Counter()
    for t in tallies:
        total.update(t)
    assert sum(total.values()) == math.factorial(g.m)
    return TreeDistribution.from_counts(total, math.factorial(g.m))


def exact_subset_dp(
    g: Graph, *, force: bool = False, reduce_twins: bool = True
) -> TreeDistribution:
    """Exact distribution by dynamic programming over seen-vertex sets.

    Orderings are grouped by the state ``(S, t, k)``: the set ``S`` of seen
    vertices, the number ``t`` of edges already passed over (both ends in
    ``S``, not kept) and the number ``k`` of trees started so far.  Kept edges
    number ``|S| - k``, so the count of edges still to come is determined.
    Each state maps to the number of ways to order the remaining edges, split
    by final tree count.

    With ``reduce_twins`` the memo key treats vertices with identical
    neighbourhoods as interchangeable, which collapses pendant leaves.
    """
    _check_nonempty(g)
    if g.n > SUBSET_DP_MAX_VERTICES and not force:
        raise TooManyVertices(f"subset DP limited to {SUBSET_DP_MAX_VERTICES} vertices (got {g.n})")
    n, m = g.n, g.m
    adj = g.adjacency_masks()
    edge_masks = [((1 << u) | (1 << v)) for u, v in g.edges]
    width = n // 2 + 1

    classes = _twin_classes(adj) if reduce_twins else []

    def canon(s: int) -> int:
        # Swapping two twins is an automorphism, so only how many members of
        # each twin class are seen matters.  Keep the lowest-numbered ones.
        for cmask, members in classes:
            c = (s & cmask).bit_count()
            s = (s & ~cmask) | members[c]
        return s

    @lru_cache(maxsize=None)
    def inside(s: int) -> int:
        return sum(1 for e in edge_masks if e & s == e)

    def ways(s: int, t: int, k: int) -> tuple[int, ...]:
        return _ways(canon(s), t, k)

    @lru_cache(maxsize=None)
    def _ways(s: int, t: int, k: int) -> tuple[int, ...]:
        kept = s.bit_count() - k
        r = m - kept - t
        u = inside(s) - kept - t
        assert u >= 0 and r >= 0, (s, t, k)
        if r == 0:
            out = [0] * width
            out[k] = 1
            return tuple(out)
        acc = [0] * width
        if u:
            for j, c in enumerate(ways(s, t + 1, k)):
                acc[j] += u * c
        for v in range(n):
            if s >> v & 1:
                continue
            mult = (adj[v] & s).bit_count()
            if mult:
                for j, c in enumerate(ways(s | 1 << v, t, k)):
                    acc[j] += mult * c
        for e in edge_masks:
            if e & s == 0:
                for j, c in enumerate(ways(s | e, t, k + 1)):
                    acc[j] += c
        return tuple(acc)

    counts = ways(0, 0, 0)
    _ways.cache_clear()
    total = math.factorial(m)
    assert sum(counts) == total
    return TreeDistribution.from_counts(dict(enumerate(counts)), total)


def _twin_classes(adj: list[int]) -> list[tuple[int, list[int]]]:
    """Classes of two or more vertices with equal open or equal closed neighbourhoods.

    A vertex cannot have both kinds of twin, so the classes are disjoint.
    Each entry is ``(class mask, prefixes)`` where ``prefixes[j]`` is the mask
    of the ``j`` lowest-numbered members.
    """
    open_groups: dict[int, list[int]] = {}
    for v, a in enumerate(adj):
        open_groups.setdefault(a, []).append(v)
    closed_groups: dict[int, list[int]] = {}
    for v, a in enumerate(adj):
        if len(open_groups[a]) == 1:
            closed_groups.setdefault(a | 1 << v, []).append(v)
    out = []
    for vs in list(open_groups.values()) + list(closed_groups.values()):
        if len(vs) < 2:
            continue
        mask = 0
        prefixes = [0]
        for v in vs:
            mask |= 1 << v
            prefixes.append(mask)
        out.append((mask, prefixes))
    return out


@dataclass(frozen=True)
class McEstimate:
    trials: int
    counts: dict[int, int]
    seed: int
    workers: int = 1

    def __post_init__(self):
        if sum(self.counts.values()) != self.trials:
            raise ValueError("counts must sum to trials")


class _BoundedDraws:
    """Unbiased integers in ``[0, s)`` from a PCG64 raw 64-bit stream.

    Uses Lemire's multiply-and-reject reduction on ``random_raw`` output,
    which numpy keeps stable across releases for a given seed.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed_seq: np.random.SeedSequence, batch: int = 4096):
        self._bits = np.random.PCG64(seed_seq)
        self._batch = batch
        self._buf: list[int] = []
        self._pos = 0

    def _raw(self) -> int:
        if self._pos == len(self._buf):
            self._buf = self._bits.random_raw(self._batch).tolist()
            self._pos = 0
        x = self._buf[self._pos]
        self._pos += 1
        return x

    def below(self, s: int) -> int:
        prod = self._raw() * s
        low = prod & self._MASK
        if low < s:
            threshold = ((1 << 64) - s) % s
            while low < threshold:
                prod = self._raw() * s
                low = prod & self._MASK
        return prod >> 64


def _shuffle(order: list[int], draws: _BoundedDraws) -> None:
    # Fisher-Yates, high index down.
    for i in range(len(order) - 1, 0, -1):
        j = draws.below(i + 1)
        order[i], order[j] = order[j], order[i]


def _mc_worker(args) -> Counter:
    g, trials, seed, index = args
    draws = _BoundedDraws(np.random.SeedSequence(seed, spawn_key=(index,)))
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    order = list(range(g.m))
    counts: Counter = Counter()
    for _ in range(trials):
        _shuffle(order, draws)
        seen = 0
        trees = 0
        for i in order:
            e = masks[i]
            inter = seen & e
            if inter != e:
                trees += inter == 0
                seen |= e
        counts[trees] += 1
    return counts


def monte_carlo(g: Graph, trials: int, seed: int, *, workers: int = 1) -> McEstimate:
    """Simulate ``trials`` uniformly random orderings.

    Worker ``i`` of ``w`` runs ``trials // w`` orderings (one more for the
    first ``trials % w`` workers) on the PCG64 stream seeded by
    ``SeedSequence(seed, spawn_key=(i,))``.  The counts are a function of
    ``(g, trials, seed, workers)`` only.
    """
    _check_nonempty(g)
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    workers = max(1, min(workers, trials))
    jobs = [
        (g, trials // workers + (1 if i < trials % workers else 0), seed, i)
        for i in range(workers)
    ]
    if workers == 1:
        parts = [_mc_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_mc_worker, jobs))
    total: Counter = Counter()
    for p in parts:
        total.update(p)
    return McEstimate(trials, dict(sorted(total.items())), seed, workers)


def estimate_with_stderr(e: McEstimate, k: int) -> tuple[float, float]:
    if e.trials < 2:
        raise ValueError("need at least two trials for a standard error")
    p = e.counts.get(k, 0) / e.trials
    return p, math.sqrt(p * (1 - p) / e.trials)
