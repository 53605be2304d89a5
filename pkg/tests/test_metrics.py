"""Structural distances, edge scores, intervention distances, rank tables."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    bounded_random_dag,
    enumerate_mec,
    random_dag,
    sid_oracle,
)
from tagorient.graph_core import (
    NotADag,
    Pdag,
    collider_pdag_of_dag,
    dag_from_edges,
)
from tagorient.ingest import load_network
from tagorient.metrics import (
    EdgeScores,
    average_ranks,
    mean_variance_law_rows,
    prf1,
    shd,
    shd_double,
    sid_cpdag_bounds,
    sid_dag,
)


def chain():
    return dag_from_edges(("a", "b", "c"), [(0, 1), (1, 2)])


class TestShd:
    def test_identical(self):
        assert shd(chain(), chain()) == 0

    def test_reversal_costs_one(self):
        h = dag_from_edges(("a", "b", "c"), [(1, 0), (1, 2)])
        assert shd(chain(), h) == 1

    def test_missing_edge_costs_one(self):
        h = dag_from_edges(("a", "b", "c"), [(0, 1)])
        assert shd(chain(), h) == 1

    def test_extra_edge_costs_one(self):
        h = dag_from_edges(("a", "b", "c"), [(0, 1), (1, 2), (0, 2)])
        assert shd(chain(), h) == 1

    def test_undirected_vs_directed_costs_one(self):
        h = Pdag(("a", "b", "c"))
        h.add_undirected(0, 1)
        h.add_directed(1, 2)
        assert shd(chain(), h) == 1

    def test_symmetry(self):
        h = Pdag(("a", "b", "c"))
        h.add_undirected(0, 1)
        assert shd(chain(), h) == shd(h, chain()) == 2

    def test_names_must_match(self):
        with pytest.raises(ValueError):
            shd(chain(), Pdag(("a", "b")))

    def test_reference_graph_distance(self):
        dag = load_network("asia").dag()
        assert shd(dag, collider_pdag_of_dag(dag)) == 3


class TestShdDouble:
    def test_reversal_costs_two(self):
        h = dag_from_edges(("a", "b", "c"), [(1, 0), (1, 2)])
        assert shd_double(chain(), h) == 2

    def test_undirected_vs_directed_costs_two(self):
        h = Pdag(("a", "b", "c"))
        h.add_undirected(0, 1)
        h.add_directed(1, 2)
        assert shd_double(chain(), h) == 2

    def test_missing_edge_costs_one(self):
        h = dag_from_edges(("a", "b", "c"), [(0, 1)])
        assert shd_double(chain(), h) == 1

    def test_identical(self):
        assert shd_double(chain(), chain()) == 0


class TestPrf1:
    def test_directed_edges_only(self):
        pred = Pdag(("a", "b", "c"))
        pred.add_directed(0, 1)
        pred.add_undirected(1, 2)
        scores = prf1(pred, chain())
        assert scores == EdgeScores(1, 0, 1, 1.0, 0.5, 2 / 3)

    def test_reversed_edge_is_fp_and_fn(self):
        pred = dag_from_edges(("a", "b"), [(1, 0)])
        truth = dag_from_edges(("a", "b"), [(0, 1)])
        scores = prf1(pred, truth)
        assert (scores.tp, scores.fp, scores.fn) == (0, 1, 1)
        assert scores.precision == 0.0 and scores.recall == 0.0
        assert scores.f1 == 0.0

    def test_empty_sides(self):
        empty = Pdag(("a", "b"))
        truth = dag_from_edges(("a", "b"), [(0, 1)])
        assert prf1(empty, truth) == EdgeScores(0, 0, 1, 1.0, 0.0, 0.0)
        assert prf1(truth, empty) == EdgeScores(0, 1, 0, 0.0, 1.0, 0.0)
        assert prf1(empty, empty) == EdgeScores(0, 0, 0, 1.0, 1.0, 1.0)

    def test_reference_graph_scores(self):
        dag = load_network("asia").dag()
        scores = prf1(collider_pdag_of_dag(dag), dag)
        assert scores.precision == 1.0
        assert scores.recall == 0.625
        assert scores.f1 == pytest.approx(10.0 / 13.0)


class TestSidDag:
    def test_identical_is_zero(self):
        assert sid_dag(chain(), chain()) == 0

    def test_two_node_reversal(self):
        truth = dag_from_edges(("a", "b"), [(0, 1)])
        pred = dag_from_edges(("a", "b"), [(1, 0)])
        # Both ordered pairs fail: (a, b) adjusts for b itself, which truth
        # has as a descendant of a, and (b, a) adjusts for nothing, leaving
        # the direct a -> b edge open although b has no effect on a.
        assert sid_dag(truth, pred) == 2

    def test_chain_predicted_for_collider(self):
        truth = dag_from_edges(("a", "c", "b"), [(0, 1), (2, 1)])
        pred = dag_from_edges(("a", "c", "b"), [(0, 1), (1, 2)])
        # Exactly three of the six ordered pairs fail.  (c, b) adjusts for
        # {a}, which cannot block the direct b -> c edge.  (b, a) adjusts
        # for {c}, opening the collider b -> c <- a.  (b, c) adjusts for c
        # itself, a descendant of b in truth.  The remaining pairs either
        # have correct parents or a harmlessly empty adjustment set.
        assert sid_dag(truth, pred) == 3

    def test_rejects_partial(self):
        g = Pdag(("a", "b"))
        g.add_undirected(0, 1)
        with pytest.raises(NotADag):
            sid_dag(g, dag_from_edges(("a", "b"), [(0, 1)]))

    def test_rejects_cycles(self):
        g = Pdag(("a", "b", "c"))
        g.add_directed(0, 1)
        g.add_directed(1, 2)
        g.add_directed(2, 0)
        with pytest.raises(NotADag):
            sid_dag(g, g)

    @given(st.integers(0, 100_000))
    @settings(max_examples=60, deadline=None)
    def test_self_distance_zero(self, seed):
        d = random_dag(random.Random(seed), max_n=6)
        assert sid_dag(d, d) == 0

    @given(st.integers(0, 100_000))
    @settings(max_examples=60, deadline=None)
    def test_matches_path_enumeration_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 5)
        names = tuple(f"v{k}" for k in range(n))
        truth = random_dag(rng, max_n=n, min_n=n, p=0.4)
        pred = random_dag(rng, max_n=n, min_n=n, p=0.4)
        assert sid_dag(truth, pred) == sid_oracle(truth, pred)


class TestSidCpdagBounds:
    def test_single_undirected_edge(self):
        truth = dag_from_edges(("a", "b"), [(0, 1)])
        g = Pdag(("a", "b"))
        g.add_undirected(0, 1)
        assert sid_cpdag_bounds(truth, g) == (0, 2)

    def test_fully_directed_collapses(self):
        truth = dag_from_edges(("a", "b"), [(0, 1)])
        pred = dag_from_edges(("a", "b"), [(1, 0)])
        assert sid_cpdag_bounds(truth, pred) == (2, 2)

    def test_cyclic_input_rejected(self):
        g = Pdag(("a", "b", "c"))
        g.add_directed(0, 1)
        g.add_directed(1, 2)
        g.add_directed(2, 0)
        with pytest.raises(ValueError):
            sid_cpdag_bounds(chain(), g)

    @given(st.integers(0, 100_000))
    @settings(max_examples=25, deadline=None)
    def test_matches_class_extremes(self, seed):
        rng = random.Random(seed)
        truth = bounded_random_dag(rng, max_n=6, p=0.35, max_edges=9)
        other = bounded_random_dag(rng, max_n=truth.n, p=0.35, max_edges=9)
        other = dag_from_edges(truth.names, other.directed_edges())
        from tagorient.graph_core import cpdag_of_dag

        g = cpdag_of_dag(other)
        vals = [sid_dag(truth, member) for member in enumerate_mec(other)]
        assert sid_cpdag_bounds(truth, g) == (min(vals), max(vals))


class TestAverageRanks:
    def test_plain_ranking(self):
        table = [[1.0, 2.0, 3.0], [1.0, 3.0, 2.0]]
        assert average_ranks(np.array(table)).tolist() == [1.0, 2.5, 2.5]

    def test_ties_share_positions(self):
        table = [[5.0, 5.0, 7.0]]
        assert average_ranks(np.array(table)).tolist() == [1.5, 1.5, 3.0]

    def test_larger_is_better(self):
        table = [[0.9, 0.5, 0.7]]
        ranks = average_ranks(np.array(table), larger_is_better=True)
        assert ranks.tolist() == [1.0, 3.0, 2.0]

    def test_rejects_non_table(self):
        with pytest.raises(ValueError):
            average_ranks(np.array([1.0, 2.0]))


class TestMeanVarianceLaw:
    def test_small_grid(self):
        rows = mean_variance_law_rows((2.0,), (3.0,), (1, 4), draws=50_000, seed=5)
        assert len(rows) == 2
        by_n = {r.n: r for r in rows}
        base = 2.0 * 3.0 / ((2.0 + 3.0) ** 2 * (2.0 + 3.0 + 1.0))
        assert by_n[1].predicted_var == pytest.approx(base)
        assert by_n[4].predicted_var == pytest.approx(base / 4.0)
        for r in rows:
            assert abs(r.z) < 6.0
            assert r.se > 0.0
            assert r.z == pytest.approx((r.sample_var - r.predicted_var) / r.se)

    def test_seed_reproducibility(self):
        a = mean_variance_law_rows((1.0,), (1.0,), (2,), draws=20_000, seed=9)
        b = mean_variance_law_rows((1.0,), (1.0,), (2,), draws=20_000, seed=9)
        assert a == b
