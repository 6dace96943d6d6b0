"""Closed-form tree-count probabilities, evaluated over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .families import FamilySpec
from .process import TreeDistribution


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def multinomial(n: int, *parts: int) -> int:
    """``n! / (p1! p2! ...)`` as a product of binomials; 0 if any part is negative."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out, left = 1, n
    for p in parts:
        out *= binomial(left, p)
        left -= p
    return out


def vandermonde_sum(l: int, m: int, q: int, n: int) -> int:
    """``sum_j C(l-j, m) C(q+j, n)`` over every ``j`` with a non-zero term.

    Non-zero terms need ``-q + n <= j <= l - m``; equals ``C(l+q+1, m+n+1)``.
    """
    return sum(binomial(l - j, m) * binomial(q + j, n) for j in range(n - q, l - m + 1))


def p_complete(n: int, k: int) -> Fraction:
    """P(K_n, k)."""
    if n - 2 * k < 0 or k - 1 < 0:
        return Fraction(0)
    num = multinomial(n - 1, n - 2 * k, k, k - 1) * 2 ** (n - 2 * k)
    return Fraction(num, binomial(2 * n - 2, n))


def p_complete_bipartite(s: int, t: int, k: int) -> Fraction:
    """The published expression for P(K_{s,t}, k), evaluated literally.

    It does not sum to one in general (``s = t = 2`` gives 5/6); use
    :func:`audit_complete_bipartite` to compare with an exact engine.
    """
    return Fraction((s + t) * binomial(s, k) * binomial(t, k), s * t * binomial(s + t, s))


def _need_glue(b: int) -> None:
    if b < 1:
        raise ValueError("glued stars need b >= 1")


def p1_gs(a: int, b: int, c: int) -> Fraction:
    _need_glue(b)
    return Fraction(b, (b + c + 1) * (b + c)) + Fraction(b, (a + b + 1) * (a + b))


def p1_gs_plus(a: int, b: int, c: int) -> Fraction:
    """P(GS+_{a,b,c}, 1); also valid for the double star ``b = 0``."""
    if b < 0:
        raise ValueError("b must be non-negative")
    return (
        Fraction(2 * b + c + 2, (b + c + 1) * (b + c + 2))
        + Fraction(2 * b + a + 2, (b + a + 1) * (b + a + 2))
        - Fraction(1, a + 2 * b + c + 1)
    )


def p1_paw(a: int) -> Fraction:
    return Fraction(1, 6) - Fraction(1, a + 3) + Fraction(1, a + 1)


def p1_di(a: int) -> Fraction:
    return Fraction(3, 10) - Fraction(2, a + 4) + Fraction(2, a + 2)


def p1_k4(a: int) -> Fraction:
    return Fraction(2, 5) - Fraction(3, a + 5) + Fraction(3, a + 3)


def _half_sum(outer: int, b: int, other: int, total: int, extra: int) -> Fraction:
    # First edges: j of the `outer` private leaves and i of the b glue edges on
    # one star, then one of the (b + other - i) edges disjoint from them.
    acc = 0
    for i in range(b + 1):
        for j in range(outer + 1):
            acc += (
                binomial(outer, j) * binomial(b, i) * factorial(i + j)
                * (b + other - i) * factorial(total - i - j - 1 + extra)
            )
    return Fraction(acc, factorial(total + extra))


def gs_two_tree_double_sum(a: int, b: int, c: int, *, plus: bool = False) -> Fraction:
    """P(GS_{a,b,c}, 2) from the unsimplified two-case double sum.

    ``plus=True`` gives the variant for the graph with the centre edge, whose
    extra edge can never be the one that starts a second tree.
    """
    _need_glue(b)
    m = a + 2 * b + c
    extra = 1 if plus else 0
    top = _half_sum(a, b, c, m, extra) - Fraction(b + c, m + extra)
    bottom = _half_sum(c, b, a, m, extra) - Fraction(a + b, m + extra)
    return top + bottom


def _two_tree(p1: Fraction) -> TreeDistribution:
    return TreeDistribution({1: p1, 2: 1 - p1})


def p1_family(spec: FamilySpec) -> TreeDistribution:
    """Closed-form distribution for any family member.

    For ``bipartite`` this is the published expression as printed, which is
    not a probability distribution in general; the raw values are kept.
    """
    k, p = spec.kind, spec.params
    if k in ("star", "triangle"):
        return TreeDistribution({1: 1})
    if k == "gs":
        return _two_tree(p1_gs(*p))
    if k == "gsplus":
        return _two_tree(p1_gs_plus(*p))
    if k == "paw":
        return _two_tree(p1_paw(p[0]))
    if k == "di":
        return _two_tree(p1_di(p[0]))
    if k == "k4":
        return _two_tree(p1_k4(p[0]))
    if k == "complete":
        n = p[0]
        return TreeDistribution({j: p_complete(n, j) for j in range(1, n // 2 + 1)})
    s, t = p
    return TreeDistribution({j: p_complete_bipartite(s, t, j) for j in range(1, min(s, t) + 1)})


def audit_complete_bipartite(max_total: int, engine=None) -> list[dict]:
    """Compare the printed K_{s,t} expression with an exact engine.

    One record per ``(s, t, k)`` with ``s <= t`` and ``s + t <= max_total``:
    the printed value, the engine's value, and whether they agree, plus the
    printed expression's total over ``k`` for that ``(s, t)``.
    """
    from .families import CompleteBipartite, construct_family
    from .process import exact_subset_dp

    engine = engine or exact_subset_dp
    rows = []
    for total in range(2, max_total + 1):
        for s in range(1, total // 2 + 1):
            t = total - s
            exact = engine(construct_family(CompleteBipartite(s, t)))
            printed_total = sum(
                (p_complete_bipartite(s, t, k) for k in range(1, s + 1)), Fraction(0)
            )
            for k in range(1, s + 1):
                printed = p_complete_bipartite(s, t, k)
                rows.append({
                    "s": s, "t": t, "k": k,
                    "printed": printed, "exact": exact[k],
                    "agrees": printed == exact[k],
                    "printed_total": printed_total,
                })
    return rows
