"""Tag assignments, parsing, corruption, evidence tallies, mining."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tagorient.graph_core import Pdag, dag_from_edges
from tagorient.tags import (
    EvidenceMatrix,
    IdenticalTags,
    MalformedLine,
    NoEvidence,
    TagAssignment,
    UnknownTag,
    UnknownVariable,
    add_tag_noise,
    collect_evidence,
    deduplicate,
    drop_singletons,
    format_tag_lines,
    homogeneity,
    layer_assignment,
    mine_relations,
    p_hat,
    parse_tag_lines,
    render_relation,
    specificity_prior,
)


def small_assignment():
    a = TagAssignment(("u", "v", "w"))
    a.assign("u", "x")
    a.assign("v", "y")
    a.assign("w", "x")
    a.assign("w", "y")
    return a


class TestTagAssignment:
    def test_assign_and_read(self):
        a = small_assignment()
        assert a.tags_of("w") == ["x", "y"]
        assert a.variables_of("x") == ["u", "w"]
        assert a.universe == ["x", "y"]
        assert a.n_assignments() == 4

    def test_unknown_variable(self):
        a = small_assignment()
        with pytest.raises(UnknownVariable):
            a.assign("zz", "x")
        with pytest.raises(UnknownVariable):
            a.tags_of("zz")

    def test_repeat_assign_is_idempotent(self):
        a = small_assignment()
        a.assign("u", "x")
        assert a.tags_of("u") == ["x"]
        assert a.n_assignments() == 4

    def test_universe_prunes_dropped_tags(self):
        a = small_assignment()
        a.drop("v", "y")
        a.drop("w", "y")
        assert a.universe == ["x"]

    def test_copy_is_independent(self):
        a = small_assignment()
        b = a.copy()
        b.assign("u", "y")
        assert a.tags_of("u") == ["x"]
        assert a != b
        assert a == small_assignment()


class TestParseFormat:
    def test_parse_lines(self):
        a = parse_tag_lines("x: u, w\ny: v, w\n", ("u", "v", "w"))
        assert a == small_assignment()

    def test_blank_lines_and_merge(self):
        a = parse_tag_lines("x: u\n\nx: w\ny: v, w\n", ("u", "v", "w"))
        assert a == small_assignment()

    def test_missing_colon(self):
        with pytest.raises(MalformedLine) as err:
            parse_tag_lines("x: u\njunk line\n", ("u",))
        assert err.value.lineno == 2

    def test_empty_tag_name(self):
        with pytest.raises(MalformedLine):
            parse_tag_lines(" : u\n", ("u",))

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_tag_lines("x: nope\n", ("u",))

    def test_round_trip(self):
        a = small_assignment()
        assert parse_tag_lines(format_tag_lines(a), a.variables) == a


class TestDeduplicate:
    def test_collapses_onto_first_tag(self):
        a = TagAssignment(("u", "v"))
        a.assign("u", "first")
        a.assign("v", "first")
        a.assign("u", "second")
        a.assign("v", "second")
        a.assign("u", "extra")
        out = deduplicate(a)
        assert out.universe == ["first", "extra"]
        assert out.tags_of("v") == ["first"]

    def test_distinct_sets_kept(self):
        a = small_assignment()
        out = deduplicate(a)
        assert out == a
        out.assign("u", "y")
        assert a.tags_of("u") == ["x"]


class TestDropSingletons:
    def test_drops_single_variable_tags(self):
        a = small_assignment()
        a.assign("u", "solo")
        out = drop_singletons(a)
        assert out.universe == ["x", "y"]
        assert out.tags_of("u") == ["x"]

    def test_keeps_shared_tags(self):
        assert drop_singletons(small_assignment()) == small_assignment()


class TestAddTagNoise:
    def test_zero_level_is_identity(self):
        a = small_assignment()
        assert add_tag_noise(a, 0, 3) == a

    def test_deterministic(self):
        a = small_assignment()
        assert add_tag_noise(a, 50, 7) == add_tag_noise(a, 50, 7)

    def test_mass_preserved(self):
        a = TagAssignment(tuple(f"v{k}" for k in range(6)))
        for k in range(6):
            a.assign(f"v{k}", f"t{k % 3}")
        for level in (20, 50, 100):
            noisy = add_tag_noise(a, level, 1)
            assert noisy.n_assignments() == a.n_assignments()

    def test_additions_use_existing_universe(self):
        a = small_assignment()
        noisy = add_tag_noise(a, 100, 5)
        assert set(noisy.universe) <= set(a.universe)

    @given(st.integers(0, 1000), st.sampled_from([10, 30, 50]))
    @settings(max_examples=40, deadline=None)
    def test_corruption_count(self, seed, level):
        a = TagAssignment(tuple(f"v{k}" for k in range(8)))
        rng = random.Random(seed)
        for k in range(8):
            a.assign(f"v{k}", f"t{rng.randint(0, 3)}")
        noisy = add_tag_noise(a, level, seed)
        k = int(round(level / 2.0 * a.n_assignments() / 100.0))
        removed = sum(
            1
            for v in a.variables
            for t in a.tags_of(v)
            if t not in noisy.tags_of(v)
        )
        assert removed == k


def test_layer_assignment_tags_by_depth():
    d = dag_from_edges(("a", "b", "c"), [(0, 1), (1, 2)])
    tags = layer_assignment(d)
    assert tags.tags_of("a") == ["layer0"]
    assert tags.tags_of("b") == ["layer1"]
    assert tags.tags_of("c") == ["layer2"]
    assert all(len(tags.tags_of(v)) == 1 for v in tags.variables)


class TestEvidenceMatrix:
    def test_add_and_count(self):
        ev = EvidenceMatrix(["x", "y"])
        ev.add("x", "y")
        ev.add("x", "y", 2)
        assert ev.count("x", "y") == 3
        assert ev.count("y", "x") == 0

    def test_unknown_tag(self):
        ev = EvidenceMatrix(["x"])
        with pytest.raises(UnknownTag):
            ev.count("zz", "x")

    def test_duplicate_universe_rejected(self):
        with pytest.raises(ValueError):
            EvidenceMatrix(["x", "x"])

    def test_copy_is_independent(self):
        ev = EvidenceMatrix(["x", "y"])
        ev.add("x", "y")
        cp = ev.copy()
        cp.add("x", "y")
        assert ev.count("x", "y") == 1


class TestCollectEvidence:
    def test_counts_ordered_tag_pairs(self):
        g = dag_from_edges(("u", "v", "w"), [(0, 1), (1, 2)])
        tags = TagAssignment(("u", "v", "w"))
        tags.assign("u", "a")
        tags.assign("v", "b")
        tags.assign("w", "a")
        tags.assign("w", "b")
        ev = collect_evidence(g, tags)
        assert ev.count("a", "b") == 1
        assert ev.count("b", "a") == 1
        g2 = dag_from_edges(("u", "v"), [(0, 1)])
        t2 = TagAssignment(("u", "v"))
        t2.assign("u", "a")
        t2.assign("v", "b")
        t2.assign("v", "c")
        ev2 = collect_evidence(g2, t2)
        assert ev2.count("a", "b") == 1
        assert ev2.count("a", "c") == 1

    def test_identical_tags_skipped(self):
        g = dag_from_edges(("u", "v"), [(0, 1)])
        tags = TagAssignment(("u", "v"))
        tags.assign("u", "a")
        tags.assign("v", "a")
        ev = collect_evidence(g, tags)
        assert ev.count("a", "a") == 0

    def test_undirected_edges_ignored(self):
        g = Pdag(("u", "v"))
        g.add_undirected(0, 1)
        tags = TagAssignment(("u", "v"))
        tags.assign("u", "a")
        tags.assign("v", "b")
        ev = collect_evidence(g, tags)
        assert ev.count("a", "b") == 0 and ev.count("b", "a") == 0

    def test_anti_v_credits_middle_tags(self):
        g = dag_from_edges(("u", "v", "w"), [(0, 1), (1, 2)])
        tags = TagAssignment(("u", "v", "w"))
        tags.assign("u", "a")
        tags.assign("v", "b")
        tags.assign("w", "a")
        plain = collect_evidence(g, tags)
        boosted = collect_evidence(g, tags, anti_v=True)
        assert plain.count("b", "a") == 1
        assert boosted.count("b", "a") == 2

    def test_anti_v_skips_colliders(self):
        g = dag_from_edges(("u", "v", "w"), [(0, 1), (2, 1)])
        tags = TagAssignment(("u", "v", "w"))
        tags.assign("u", "a")
        tags.assign("v", "b")
        tags.assign("w", "a")
        boosted = collect_evidence(g, tags, anti_v=True)
        assert boosted.count("b", "a") == 0


class TestPairStats:
    def test_p_hat_ratio(self):
        ev = EvidenceMatrix(["x", "y"])
        ev.add("x", "y", 3)
        ev.add("y", "x", 1)
        stat = p_hat(ev, "x", "y")
        assert stat.probability == 0.75
        assert stat.support == 4

    def test_p_hat_no_evidence(self):
        ev = EvidenceMatrix(["x", "y"])
        stat = p_hat(ev, "x", "y")
        assert stat.probability == 0.5 and stat.support == 0

    def test_p_hat_identical_tags(self):
        ev = EvidenceMatrix(["x"])
        with pytest.raises(IdenticalTags):
            p_hat(ev, "x", "x")

    def test_specificity_prior_values(self):
        a = small_assignment()
        a.assign("v", "x")
        assert specificity_prior(a, "x", "y") == 1.0 / 2.0 ** (3 + 2 - 1)

    def test_specificity_prior_unknown(self):
        a = small_assignment()
        with pytest.raises(UnknownTag):
            specificity_prior(a, "x", "nope")


class TestHomogeneity:
    def test_keeps_winning_direction(self):
        ev = EvidenceMatrix(["x", "y"])
        ev.add("x", "y", 3)
        ev.add("y", "x", 1)
        rel = homogeneity(ev, "y", "x")
        assert (rel.tag_a, rel.tag_b) == ("x", "y")
        assert rel.probability == 0.75
        assert rel.support == 4
        assert rel.score == pytest.approx(0.5)

    def test_tie_scores_zero(self):
        ev = EvidenceMatrix(["x", "y"])
        ev.add("x", "y")
        ev.add("y", "x")
        rel = homogeneity(ev, "x", "y")
        assert rel.score == 0.0
        assert (rel.tag_a, rel.tag_b) == ("x", "y")

    def test_no_evidence_raises(self):
        ev = EvidenceMatrix(["x", "y"])
        with pytest.raises(NoEvidence):
            homogeneity(ev, "x", "y")


class TestMineRelations:
    def build(self):
        ev = EvidenceMatrix(["x", "y", "z"])
        ev.add("x", "y", 5)
        ev.add("y", "x", 1)
        ev.add("x", "z", 3)
        ev.add("y", "z", 2)
        ev.add("z", "y", 2)
        return ev

    def test_support_filter_and_order(self):
        rows = mine_relations(self.build(), min_support=3)
        assert [(r.tag_a, r.tag_b) for r in rows] == [("x", "y"), ("x", "z")]
        assert rows[0].support == 6 and rows[1].support == 3

    def test_ties_score_zero_excluded(self):
        rows = mine_relations(self.build(), min_support=1)
        assert all(r.score > 0 for r in rows)
        assert ("y", "z") not in [(r.tag_a, r.tag_b) for r in rows]

    def test_order_breaks_ties_by_score(self):
        ev = EvidenceMatrix(["a", "b", "c", "d"])
        ev.add("a", "b", 3)
        ev.add("c", "d", 2)
        ev.add("d", "c", 1)
        rows = mine_relations(ev, min_support=3)
        assert [(r.tag_a, r.tag_b) for r in rows] == [("a", "b"), ("c", "d")]

    def test_render(self):
        ev = self.build()
        rel = homogeneity(ev, "x", "y")
        assert render_relation(rel) == '"x" -> "y" (83% / 6)'
