"""Search family parameter spaces for equal probability profiles."""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .families import GS, FamilySpec, GSPlus, canonical, construct_family
from .formulas import p1_di, p1_family, p1_gs, p1_gs_plus, p1_k4, p1_paw
from .graph import ISO_LIMIT, are_isomorphic
from .process import SUBSET_DP_MAX_VERTICES, exact_subset_dp

SEARCH_KINDS = ("gs", "gsplus", "paw", "di", "k4")

KNOWN_GS_PLUS_PAIRS = (
    ((17, 3, 9), (10, 9, 10)),
    ((28, 5, 9), (26, 8, 8)),
    ((103, 15, 48), (63, 71, 32)),
    ((95, 23, 53), (53, 66, 52)),
)

Profile = tuple[tuple[int, int], ...]


@dataclass
class CollisionGroup:
    profile: Profile
    members: list[FamilySpec]
    explained_by: list[str]
    certified: bool

    def profile_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, d) for n, d in self.profile)


@dataclass
class CollisionReport:
    family: str
    max_vertices: int
    engine: str
    workers: int
    groups: list[CollisionGroup]
    instances: int
    seconds: float = field(default=0.0, compare=False)


def fam_a_triple(s: int, t: int) -> tuple[FamilySpec, FamilySpec, FamilySpec]:
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    q, rem = divmod(2 * t * (t + 1), s)
    if rem:
        raise ValueError(f"s={s} does not divide 2t(t+1)={2 * t * (t + 1)}")
    r = q
    return GS(r + 3 * t + 1, s, t), GS(t, r + s + 2 * t + 1, t), GS(3 * t + s + 1, r, t)


def fam_b_pair(t: int) -> tuple[FamilySpec, FamilySpec]:
    if t < 1:
        raise ValueError("t must be positive")
    return GS(5 * t + 3, t, 2 * t), GS(5 * t + 1, t + 1, 2 * t + 1)


def _reduced(num: int, den: int) -> tuple[int, int]:
    g = gcd(num, den)
    return num // g, den // g


def _p1_key(kind: str, params: tuple[int, ...]) -> tuple[int, int]:
    """P(G,1) as a reduced ``(num, den)`` pair using integer arithmetic only."""
    if kind == "gs":
        a, b, c = params
        d1 = (b + c + 1) * (b + c)
        d2 = (a + b + 1) * (a + b)
        return _reduced(b * (d1 + d2), d1 * d2)
    if kind == "gsplus":
        a, b, c = params
        d1 = (b + c + 1) * (b + c + 2)
        d2 = (b + a + 1) * (b + a + 2)
        d3 = a + 2 * b + c + 1
        num = (2 * b + c + 2) * d2 * d3 + (2 * b + a + 2) * d1 * d3 - d1 * d2
        return _reduced(num, d1 * d2 * d3)
    f = {"paw": p1_paw, "di": p1_di, "k4": p1_k4}[kind](params[0])
    return f.numerator, f.denominator


def _profile_key(p1: tuple[int, int]) -> Profile:
    num, den = p1
    if num == den:
        return ((1, 1),)
    return ((num, den), _reduced(den - num, den))


def _parameter_tuples(kind: str, max_vertices: int) -> list[tuple[int, ...]]:
    if kind in ("gs", "gsplus"):
        out = []
        for b in range(0 if kind == "gsplus" else 1, max_vertices - 1):
            for a in range(0, max_vertices - 1 - b):
                for c in range(a, max_vertices - 1 - b - a):
                    out.append((a, b, c))
        return out
    return [(a,) for a in range(0, max_vertices - 3)]


def _profiles_formula(job) -> list[tuple[str, tuple[int, ...], Profile]]:
    kind, chunk = job
    return [(kind, p, _profile_key(_p1_key(kind, p))) for p in chunk]


def _profiles_dp(job) -> list[tuple[str, tuple[int, ...], Profile]]:
    kind, chunk = job
    out = []
    for p in chunk:
        dist = exact_subset_dp(construct_family(FamilySpec(kind, p)))
        out.append((kind, p, tuple((f.numerator, f.denominator) for f in dist.profile())))
    return out


def certify_distinct(specs: list[FamilySpec]) -> bool:
    """True when every pair of members is shown non-isomorphic.

    Different vertex or edge counts, or different degree sequences, settle a
    pair; otherwise an exhaustive test is used up to ``ISO_LIMIT`` vertices.
    """
    graphs = [construct_family(s) for s in specs]
    for g, h in combinations(graphs, 2):
        if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
            continue
        if g.n > ISO_LIMIT or are_isomorphic(g, h):
            return False
    return True


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _explanations(members: list[FamilySpec]) -> list[str]:
    """Which members are tied together by a famA triple or famB pair."""
    gs_members = {m for m in members if m.kind == "gs"}
    covered: set[FamilySpec] = set()
    labels: set[str] = set()
    for m in gs_members:
        a, b, c = m.params
        t = a
        if t >= 1:
            for s in _divisors(2 * t * (t + 1)):
                hits = set(fam_a_triple(s, t)) & gs_members
                if len(hits) >= 2:
                    labels.add("famA")
                    covered |= hits
        for t in {a // 2, (a - 1) // 2}:
            if t >= 1:
                hits = set(fam_b_pair(t)) & gs_members
                if len(hits) >= 2:
                    labels.add("famB")
                    covered |= hits
    if len(covered) < len(members):
        labels.add("none")
    return sorted(labels)


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // n))
    return [items[i:i + size] for i in range(0, len(items), size)]


def sweep(
    family: str,
    max_vertices: int,
    engine: str = "formula",
    *,
    workers: int = 1,
) -> CollisionReport:
    """Group every family member with at most ``max_vertices`` vertices by profile.

    ``family`` is one of ``gs``, ``gsplus``, ``paw``, ``di``, ``k4`` or ``all``.
    Members are renamed with :func:`canonical` first, so isomorphic aliases
    across families are merged rather than reported. Tuples that collapse to a
    star are skipped; every star has the same one-tree profile.
    """
    start = time.perf_counter()
    if family == "all":
        kinds = list(SEARCH_KINDS)
    elif family in SEARCH_KINDS:
        kinds = [family]
    else:
        raise ValueError(f"unknown family {family!r}; choose from {SEARCH_KINDS + ('all',)}")
    if max_vertices < 4:
        raise ValueError("max_vertices must be at least 4")
    if engine not in ("formula", "dp"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "dp" and max_vertices > SUBSET_DP_MAX_VERTICES:
        from .process import TooManyVertices
        raise TooManyVertices(f"dp engine limited to {SUBSET_DP_MAX_VERTICES} vertices")

    jobs = []
    for kind in kinds:
        tuples = _parameter_tuples(kind, max_vertices)
        jobs += [(kind, chunk) for chunk in _chunks(tuples, max(1, workers) * 4)]
    fn = _profiles_formula if engine == "formula" else _profiles_dp
    if workers <= 1:
        results = [fn(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, jobs))

    buckets: dict[Profile, set[FamilySpec]] = defaultdict(set)
    count = 0
    for part in results:
        for kind, params, key in part:
            spec = canonical(FamilySpec(kind, params))
            if spec.kind in ("star", "triangle"):
                continue  # degenerate double stars; always one tree
            buckets[key].add(spec)
            count += 1

    groups = []
    for key in sorted(buckets, key=lambda k: (Fraction(*k[0]), k)):
        members = sorted(buckets[key])
        if len(members) < 2:
            continue
        groups.append(CollisionGroup(
            profile=key,
            members=members,
            explained_by=_explanations(members),
            certified=certify_distinct(members),
        ))
    return CollisionReport(
        family=family, max_vertices=max_vertices, engine=engine,
        workers=max(1, workers), groups=groups, instances=count,
        seconds=time.perf_counter() - start,
    )


@dataclass
class VerificationItem:
    label: str
    members: tuple[FamilySpec, ...]
    p1: tuple[Fraction, ...]
    passed: bool


def check_equal_profiles(label: str, specs) -> VerificationItem:
    dists = [p1_family(s) for s in specs]
    return VerificationItem(
        label=label,
        members=tuple(specs),
        p1=tuple(d[1] for d in dists),
        passed=all(d == dists[0] for d in dists),
    )


def verify_known(max_t: int, extra_pairs=()) -> list[VerificationItem]:
    """Check the famA triples, famB pairs and the listed GSPlus pairs."""
    if max_t < 1:
        raise ValueError("max_t must be positive")
    items = []
    for t in range(1, max_t + 1):
        for s in range(1, max_t + 1):
            if (2 * t * (t + 1)) % s == 0:
                items.append(check_equal_profiles(f"famA s={s} t={t}", fam_a_triple(s, t)))
    for t in range(1, max_t + 1):
        items.append(check_equal_profiles(f"famB t={t}", fam_b_pair(t)))
    for left, right in tuple(KNOWN_GS_PLUS_PAIRS) + tuple(extra_pairs):
        items.append(check_equal_profiles(
            f"GS+ {left} ~ {right}", (GSPlus(*left), GSPlus(*right))
        ))
    return items


def report_to_dict(report: CollisionReport) -> dict:
    return {
        "family": report.family,
        "max_vertices": report.max_vertices,
        "engine": report.engine,
        "workers": report.workers,
        "instances": report.instances,
        "groups": [
            {
                "profile": [{"num": str(n), "den": str(d)} for n, d in g.profile],
                "members": [str(m) for m in g.members],
                "explained_by": g.explained_by,
                "certified_non_isomorphic": g.certified,
            }
            for g in report.groups
        ],
    }


def report_to_text(report: CollisionReport) -> str:
    lines = [
        f"# family={report.family} max_vertices={report.max_vertices} "
        f"engine={report.engine} instances={report.instances} groups={len(report.groups)}"
    ]
    for g in report.groups:
        profile = " ".join(f"{n}/{d}" for n, d in g.profile)
        members = " ".join(str(m) for m in g.members)
        flag = "" if g.certified else " uncertified"
        lines.append(f"profile={profile} | members={members} | explained_by={','.join(g.explained_by)}{flag}")
    return "\n".join(lines) + "\n"
