from collections import defaultdict
from fractions import Fraction

import pytest

from edgeforest.collisions import (
    KNOWN_GS_PLUS_PAIRS,
    check_equal_profiles,
    certify_distinct,
    fam_a_triple,
    fam_b_pair,
    report_to_dict,
    report_to_text,
    sweep,
    verify_known,
)
from edgeforest.families import GS, GSPlus, canonical, construct_family, FamilySpec
from edgeforest.formulas import p1_family
from edgeforest.graph import are_isomorphic
from edgeforest.process import TooManyVertices, exact_subset_dp


def group_sets(report):
    return {frozenset(g.members) for g in report.groups}


def test_fam_a_examples():
    assert set(fam_a_triple(1, 1)) == {GS(8, 1, 1), GS(1, 8, 1), GS(5, 4, 1)}
    assert set(fam_a_triple(4, 1)) == set(fam_a_triple(1, 1))
    assert {p1_family(s)[1] for s in fam_a_triple(1, 1)} == {Fraction(8, 45)}
    with pytest.raises(ValueError):
        fam_a_triple(3, 1)


def test_fam_b_examples():
    assert fam_b_pair(1) == (GS(8, 1, 2), GS(6, 2, 3))
    assert fam_b_pair(2) == (GS(13, 2, 4), GS(11, 3, 5))
    assert {p1_family(s)[1] for s in fam_b_pair(1)} == {Fraction(17, 180)}
    a, b = fam_b_pair(3)
    assert p1_family(a) == p1_family(b)


def test_fam_a_all_small():
    for t in range(1, 11):
        for s in range(1, 11):
            if (2 * t * (t + 1)) % s:
                continue
            triple = fam_a_triple(s, t)
            dists = [p1_family(x) for x in triple]
            assert dists[0] == dists[1] == dists[2]
            distinct = sorted(set(triple))
            r = 2 * t * (t + 1) // s
            # r == s makes the first and last members the same graph
            assert len(distinct) == (2 if r == s else 3)
            degs = {construct_family(x).degree_sequence() for x in distinct}
            assert len(degs) == len(distinct)


def test_fam_b_all_small():
    for t in range(1, 21):
        a, b = fam_b_pair(t)
        assert p1_family(a) == p1_family(b)
        assert a != b


def test_fam_dp_cross_check():
    for spec_group in [fam_a_triple(1, 1), fam_b_pair(1), fam_a_triple(2, 1)]:
        for spec in spec_group:
            if construct_family(spec).n <= 20:
                assert exact_subset_dp(construct_family(spec)) == p1_family(spec)


def test_sweep_gsplus_finds_first_listed_pair():
    report = sweep("gsplus", 60)
    target = frozenset({GSPlus(17, 3, 9), GSPlus(10, 9, 10)})
    hits = [g for g in report.groups if set(g.members) == target]
    assert len(hits) == 1
    assert hits[0].profile_fractions()[0] == Fraction(32, 273)
    assert hits[0].explained_by == ["none"]


def test_sweep_gs_contains_fig_triple():
    report = sweep("gs", 15)
    triple = frozenset(fam_a_triple(1, 1))
    hits = [g for g in report.groups if set(g.members) == triple]
    assert len(hits) == 1 and hits[0].explained_by == ["famA"]
    assert hits[0].certified


@pytest.mark.parametrize("kind, bound", [("paw", 20), ("di", 50), ("k4", 50)])
def test_sweep_pendant_families_empty(kind, bound):
    assert sweep(kind, bound).groups == []


def test_sweep_invariants():
    report = sweep("all", 24)
    assert report.instances > 0
    for g in report.groups:
        assert len(g.members) >= 2
        assert len({p1_family(m) for m in g.members}) == 1
        assert sum(g.profile_fractions()) == 1
        assert g.members == sorted(set(g.members))
        assert all(canonical(m) == m for m in g.members)
        assert g.certified
        for i, x in enumerate(g.members):
            for y in g.members[i + 1:]:
                gx, gy = construct_family(x), construct_family(y)
                if gx.n <= 12 and gx.n == gy.n:
                    assert not are_isomorphic(gx, gy)


def test_sweep_labels_fam_b():
    report = sweep("gs", 22)
    pair = frozenset(fam_b_pair(1))
    hits = [g for g in report.groups if pair <= set(g.members)]
    assert hits and "famB" in hits[0].explained_by


def test_sweep_argument_errors():
    with pytest.raises(ValueError):
        sweep("cycle", 10)
    with pytest.raises(ValueError):
        sweep("gs", 3)
    with pytest.raises(ValueError):
        sweep("gs", 10, engine="mc")
    with pytest.raises(TooManyVertices):
        sweep("gs", 21, engine="dp")


def test_sweep_soundness_gs12():
    for g in sweep("gs", 12).groups:
        dists = {exact_subset_dp(construct_family(m)) for m in g.members}
        assert len(dists) == 1


def test_sweep_completeness_gs12():
    # bucket DP profiles directly, independent of the sweep's grouping code
    buckets = defaultdict(set)
    for total in range(4, 13):
        for b in range(1, total - 1):
            for a in range(0, total - 1 - b):
                c = total - 2 - a - b
                if a > c:
                    continue
                spec = canonical(GS(a, b, c))
                buckets[exact_subset_dp(construct_family(spec))].add(spec)
    expected = {frozenset(v) for v in buckets.values() if len(v) >= 2}
    assert group_sets(sweep("gs", 12)) == expected
    assert group_sets(sweep("gs", 12, engine="dp")) == expected


def test_sweep_worker_independence():
    one = sweep("all", 40, workers=1)
    many = sweep("all", 40, workers=3)
    assert one.groups == many.groups and one.instances == many.instances
    assert report_to_text(one).splitlines()[1:] == report_to_text(many).splitlines()[1:]


def test_extra_gs_plus_collision_dp_confirmed():
    a, b = GSPlus(0, 5, 3), GSPlus(2, 2, 3)
    ga, gb = construct_family(a), construct_family(b)
    assert exact_subset_dp(ga) == exact_subset_dp(gb) == {1: Fraction(8, 21), 2: Fraction(13, 21)}
    assert certify_distinct([a, b])
    assert frozenset({a, b}) in group_sets(sweep("gsplus", 12))
    c, d = construct_family(GSPlus(2, 1, 10)), construct_family(GSPlus(2, 2, 6))
    assert exact_subset_dp(c) == exact_subset_dp(d) == {1: Fraction(21, 65), 2: Fraction(44, 65)}


def test_verify_known_all_pass():
    items = verify_known(10)
    assert items and all(i.passed for i in items)
    labels = [i.label for i in items]
    assert sum(label.startswith("GS+") for label in labels) == len(KNOWN_GS_PLUS_PAIRS)
    first = next(i for i in items if i.label.startswith("GS+"))
    assert set(first.p1) == {Fraction(32, 273)}


def test_verify_known_negative_control():
    items = verify_known(1, extra_pairs=[((17, 3, 9), (10, 9, 9))])
    assert not items[-1].passed
    assert all(i.passed for i in items[:-1])
    assert not check_equal_profiles("x", [GSPlus(28, 5, 9), GSPlus(26, 8, 9)]).passed
    assert check_equal_profiles("x", [GSPlus(28, 5, 9), GSPlus(26, 8, 8)]).passed


def test_report_serialisation():
    report = sweep("gs", 15)
    doc = report_to_dict(report)
    assert doc["family"] == "gs" and doc["max_vertices"] == 15
    g0 = doc["groups"][0]
    assert set(g0) == {"profile", "members", "explained_by", "certified_non_isomorphic"}
    assert all(isinstance(x["num"], str) for x in g0["profile"])
    text = report_to_text(report)
    assert text.count("\n") == len(report.groups) + 1
    assert "members=gs:1,1,8 gs:1,4,5 gs:1,8,1" in text
    assert FamilySpec.parse(g0["members"][0]) in report.groups[0].members


def test_sweep_skips_degenerate_stars():
    groups = sweep("gsplus", 12).groups
    assert all(m.kind not in ("star", "triangle") for g in groups for m in g.members)
    assert frozenset({GS(0, 1, 3), GSPlus(1, 1, 2)}) in {frozenset(g.members) for g in groups}
    a, b = construct_family(GS(0, 1, 3)), construct_family(GSPlus(1, 1, 2))
    assert exact_subset_dp(a) == exact_subset_dp(b) and not are_isomorphic(a, b)
