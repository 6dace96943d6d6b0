"""Named graph families, their constructors and a recognizer.

Vertex numbering is fixed so that test vectors stay stable:

* ``GS(a, b, c)`` / ``GSPlus(a, b, c)``: 0 is the top centre, 1 the bottom
  centre, ``2 .. b+1`` the glue vertices, then the ``a`` top leaves, then the
  ``c`` bottom leaves.  Edges are listed top centre to top leaves, top centre
  to glue, glue to bottom centre, bottom centre to bottom leaves, and finally
  the centre-centre edge for ``GSPlus``.  ``GS`` needs ``b >= 1``;
  ``GSPlus(a, 0, c)`` is allowed and is two stars with adjacent centres.
* ``Paw(a)``: 0 is the pendant vertex of the paw, 1 its triangle neighbour,
  2 and 3 the other triangle vertices; leaves ``4 ..`` hang off vertex 0.
* ``Di(a)``: 0 is a degree-2 vertex of the diamond, 1 and 2 the chord ends,
  3 the other degree-2 vertex; leaves ``4 ..`` hang off vertex 0.
* ``K4(a)``: vertices 0..3 form K4, leaves ``4 ..`` hang off vertex 0.
* ``Star(n)``: centre 0, leaves ``1 .. n``.  ``CompleteBipartite(s, t)``:
  parts ``0 .. s-1`` and ``s .. s+t-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, is_connected, max_disjoint_edges_capped

KINDS = ("star", "triangle", "gs", "gsplus", "paw", "di", "k4", "complete", "bipartite")
TWO_TREE_KINDS = ("gs", "gsplus", "paw", "di", "k4")

_ARITY = {
    "star": 1, "triangle": 0, "gs": 3, "gsplus": 3, "paw": 1, "di": 1, "k4": 1,
    "complete": 1, "bipartite": 2,
}

# Short names accepted by FamilySpec.parse, mapped to the canonical kind.
_ALIASES = {
    "star": "star", "k1n": "star",
    "triangle": "triangle", "k3": "triangle",
    "gs": "gs",
    "gsplus": "gsplus", "gs+": "gsplus", "gsp": "gsplus",
    "paw": "paw",
    "di": "di", "diamond": "di",
    "k4": "k4",
    "k": "complete", "complete": "complete", "kn": "complete",
    "kst": "bipartite", "bipartite": "bipartite",
}

_PREFIX = {
    "star": "star", "triangle": "triangle", "gs": "gs", "gsplus": "gsplus",
    "paw": "paw", "di": "di", "k4": "k4", "complete": "k", "bipartite": "kst",
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FamilySpec:
    """A member of a named family.  GS/GSPlus are stored with ``a <= c``."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family kind {self.kind!r}")
        params = tuple(int(p) for p in self.params)
        if len(params) != _ARITY[self.kind]:
            raise FamilyError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(params)}")
        if any(p < 0 for p in params):
            raise FamilyError("family parameters must be non-negative")
        if self.kind in ("gs", "gsplus"):
            a, b, c = params
            # b = 0 leaves GS disconnected; GSPlus(a, 0, c) is the double star.
            if b < 1 and self.kind == "gs":
                raise FamilyError("glued stars need b >= 1")
            if a > c:
                params = (c, b, a)
        elif self.kind == "star" and params[0] < 1:
            raise FamilyError("Star(n) needs n >= 1")
        elif self.kind == "complete" and params[0] < 2:
            raise FamilyError("Complete(n) needs n >= 2")
        elif self.kind == "bipartite" and min(params) < 1:
            raise FamilyError("CompleteBipartite(s, t) needs s, t >= 1")
        object.__setattr__(self, "params", params)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``name:p1,p2,...`` (e.g. ``gs:8,1,1``, ``paw:3``, ``k:5``, ``kst:2,3``)."""
        m = re.fullmatch(r"\s*([A-Za-z0-9+]+)\s*(?::\s*([0-9,\s]*))?\s*", text)
        if not m:
            raise FamilyError(f"cannot parse family spec {text!r}")
        name = m.group(1).lower()
        if name not in _ALIASES:
            raise FamilyError(f"unknown family {name!r}")
        raw = (m.group(2) or "").strip()
        params = tuple(int(p) for p in raw.split(",")) if raw else ()
        return cls(_ALIASES[name], params)

    def __str__(self) -> str:
        if not self.params:
            return _PREFIX[self.kind]
        return f"{_PREFIX[self.kind]}:{','.join(map(str, self.params))}"

    @property
    def num_vertices(self) -> int:
        k, p = self.kind, self.params
        if k == "star":
            return p[0] + 1
        if k == "triangle":
            return 3
        if k in ("gs", "gsplus"):
            return 2 + sum(p)
        if k in ("paw", "di", "k4"):
            return 4 + p[0]
        if k == "complete":
            return p[0]
        return p[0] + p[1]


def Star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def Triangle() -> FamilySpec:
    return FamilySpec("triangle")


def GS(a: int, b: int, c: int) -> FamilySpec:
    return FamilySpec("gs", (a, b, c))


def GSPlus(a: int, b: int, c: int) -> FamilySpec:
    return FamilySpec("gsplus", (a, b, c))


def Paw(a: int) -> FamilySpec:
    return FamilySpec("paw", (a,))


def Di(a: int) -> FamilySpec:
    return FamilySpec("di", (a,))


def K4(a: int) -> FamilySpec:
    return FamilySpec("k4", (a,))


def Complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def CompleteBipartite(s: int, t: int) -> FamilySpec:
    return FamilySpec("bipartite", (s, t))


def construct_family(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "star":
        return Graph(p[0] + 1, tuple((0, i) for i in range(1, p[0] + 1)))
    if k == "triangle":
        return Graph(3, ((0, 1), (0, 2), (1, 2)))
    if k in ("gs", "gsplus"):
        a, b, c = p
        glue = range(2, 2 + b)
        top = range(2 + b, 2 + b + a)
        bottom = range(2 + b + a, 2 + b + a + c)
        edges = [(0, v) for v in top]
        edges += [(0, g) for g in glue]
        edges += [(1, g) for g in glue]
        edges += [(1, v) for v in bottom]
        if k == "gsplus":
            edges.append((0, 1))
        return Graph(2 + a + b + c, tuple(edges))
    if k in ("paw", "di", "k4"):
        base = {
            "paw": [(0, 1), (1, 2), (1, 3), (2, 3)],
            "di": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
            "k4": list(combinations(range(4), 2)),
        }[k]
        a = p[0]
        return Graph(4 + a, tuple(base + [(0, 4 + i) for i in range(a)]))
    if k == "complete":
        return Graph(p[0], tuple(combinations(range(p[0]), 2)))
    s, t = p
    return Graph(s + t, tuple((i, s + j) for i in range(s) for j in range(t)))


def canonical(spec: FamilySpec) -> FamilySpec | None:
    """The name :func:`classify` gives to ``construct_family(spec)``.

    Small members of one family can coincide with another (the paw is also
    ``GSPlus(0,1,1)``, the diamond is ``GSPlus(0,2,0)``).  The preferred name
    is Star/Triangle first, then Paw/Di/K4, then GS, then GSPlus (so the
    double star ``GSPlus(1, 0, c)`` is named ``GS(0, 1, c)``).  Returns ``None``
    for complete and complete bipartite graphs outside the classified range.
    """
    k, p = spec.kind, spec.params
    if k == "gs" and p == (0, 1, 0):
        return Star(2)
    if k == "gsplus":
        a, b, c = p
        alias = {(0, 1, 0): Triangle(), (0, 1, 1): Paw(0), (0, 2, 0): Di(0)}
        if p in alias:
            return alias[p]
        if b == 0 and a == 0:
            return Star(c + 1)
        if b == 0 and a == 1:
            return GS(0, 1, c)
    if k == "complete":
        return {2: Star(1), 3: Triangle(), 4: K4(0)}.get(p[0])
    if k == "bipartite":
        s, t = p
        if min(s, t) == 1:
            return Star(max(s, t))
        if min(s, t) == 2:
            return GS(0, max(s, t), 0)
        return None
    return spec


def _star_or_triangle(g: Graph) -> FamilySpec | None:
    if g.n == 3 and g.m == 3:
        return Triangle()
    deg = g.degrees()
    if g.m == g.n - 1 and max(deg) == g.m:
        return Star(g.m)
    return None


def _glued_star_readings(g: Graph, nbrs: list[set[int]], deg: list[int]) -> list[FamilySpec]:
    """All ways of reading ``g`` as GS/GSPlus around a pair of centres."""
    found = []
    for x, y in combinations(range(g.n), 2):
        joined = y in nbrs[x]
        a = b = c = 0
        ok = True
        for v in range(g.n):
            if v in (x, y):
                continue
            in_x, in_y = v in nbrs[x], v in nbrs[y]
            if in_x and in_y:
                if deg[v] != 2:
                    ok = False
                    break
                b += 1
            elif in_x or in_y:
                if deg[v] != 1:
                    ok = False
                    break
                if in_x:
                    a += 1
                else:
                    c += 1
            else:
                ok = False
                break
        if ok and (b >= 1 or joined):
            found.append(FamilySpec("gsplus" if joined else "gs", (a, b, c)))
    return found


def _pendant_core_reading(g: Graph, nbrs: list[set[int]], deg: list[int]) -> FamilySpec | None:
    """Read ``g`` as Paw(a), Di(a) or K4(a) by removing its leaves."""
    leaf = [v for v in range(g.n) if deg[v] == 1]
    anchors = {next(iter(nbrs[v])) for v in leaf}
    if len(anchors) > 1:
        return None
    core = [v for v in range(g.n) if deg[v] != 1]
    core_set = set(core)
    cdeg = {v: len(nbrs[v] & core_set) for v in core}
    cm = sum(cdeg.values()) // 2
    a = len(leaf)
    anchor = next(iter(anchors)) if anchors else None

    if g.n == 4 and g.m == 4 and sorted(deg) == [1, 2, 2, 3]:
        return Paw(0)
    if len(core) != 4:
        return None
    csorted = sorted(cdeg.values())
    if csorted == [3, 3, 3, 3] and cm == 6:
        return K4(a)
    if csorted == [2, 2, 3, 3] and cm == 5:
        if anchor is None or cdeg[anchor] == 2:
            return Di(a)
        return None
    if csorted == [1, 2, 2, 3] and cm == 4 and anchor is not None and cdeg[anchor] == 1:
        return Paw(a)
    return None


def classify(g: Graph) -> FamilySpec | None:
    """Name the family containing ``g``, or ``None`` if it is in none of them.

    Graphs with no two disjoint edges are stars or the triangle.  Otherwise
    connected graphs with no three disjoint edges are checked against the
    glued stars (with or without the centre edge) and the paw, diamond and
    K4 with pendant leaves.
    """
    deg = g.degrees()
    if any(d == 0 for d in deg):
        raise GraphError("classify needs a graph without isolated vertices; strip them first")
    if g.m == 0:
        return None
    nu = max_disjoint_edges_capped(g, 3)
    if nu == 1:
        return _star_or_triangle(g)
    if nu >= 3 or not is_connected(g):
        return None
    nbrs = g.neighbors()
    special = _pendant_core_reading(g, nbrs, deg)
    if special is not None:
        return canonical(special)
    readings = {canonical(s) for s in _glued_star_readings(g, nbrs, deg)}
    if readings:
        return min(readings)
    return None


def unclassified_reason(g: Graph) -> str:
    nu = max_disjoint_edges_capped(g, 3)
    if nu >= 3:
        return "matching number ≥ 3"
    return "other"
