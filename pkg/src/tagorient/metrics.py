"""Distances and scores for comparing partially directed graphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .graph_core import (
    NotADag,
    Pdag,
    TooManyExtensions,
    consistent_extensions,
    cpdag_of_dag,
    d_separated,
)


def _pair_marks(g: Pdag) -> dict[tuple[int, int], str]:
    out = {}
    for u, v in g.directed_edges():
        a, b = (u, v) if u < v else (v, u)
        out[(a, b)] = ">" if (a, b) == (u, v) else "<"
    for u, v in g.undirected_edges():
        out[(u, v)] = "-"
    return out


def shd(g: Pdag, h: Pdag) -> int:
    """Number of variable pairs whose edge mark differs between g and h."""
    if g.names != h.names:
        raise ValueError("graphs must share the same variables")
    mg = _pair_marks(g)
    mh = _pair_marks(h)
    keys = set(mg) | set(mh)
    return sum(1 for k in keys if mg.get(k) != mh.get(k))


def shd_double(g: Pdag, h: Pdag) -> int:
    """SHD variant charging two for pairs linked in both but marked
    differently (one removal plus one insertion)."""
    if g.names != h.names:
        raise ValueError("graphs must share the same variables")
    mg = _pair_marks(g)
    mh = _pair_marks(h)
    total = 0
    for k in set(mg) | set(mh):
        a, b = mg.get(k), mh.get(k)
        if a == b:
            continue
        total += 2 if (a is not None and b is not None) else 1
    return total


@dataclass(frozen=True)
class EdgeScores:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f1: float


def prf1(pred: Pdag, truth: Pdag) -> EdgeScores:
    """Precision, recall and F1 of pred's directed edges against truth's.

    Undirected edges on either side are neither predictions nor targets.
    Empty prediction or target sets score the corresponding rate as 1.
    """
    if pred.names != truth.names:
        raise ValueError("graphs must share the same variables")
    p = set(pred.directed_edges())
    t = set(truth.directed_edges())
    tp = len(p & t)
    fp = len(p - t)
    fn = len(t - p)
    precision = tp / len(p) if p else 1.0
    recall = tp / len(t) if t else 1.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return EdgeScores(tp, fp, fn, precision, recall, f1)


def sid_dag(truth: Pdag, pred: Pdag) -> int:
    """Structural intervention distance between two DAGs.

    Counts ordered pairs (i, j) whose effect of intervening on i would be
    estimated wrongly when adjusting for pred's parents of i.  A predicted
    parent j is wrong exactly when it descends from i in truth.  Any other
    target j is wrong unless the parent set meets the adjustment criterion
    in truth: it avoids descendants of nodes on proper causal paths from
    i to j, and it blocks every non-causal path, checked by d-separation
    after removing the first edge of each proper causal path.
    """
    if truth.names != pred.names:
        raise ValueError("graphs must share the same variables")
    for g in (truth, pred):
        if not g.is_fully_directed():
            raise NotADag("intervention distance is defined on DAGs")
        if not g.is_acyclic():
            raise NotADag("input contains a directed cycle")
    n = truth.n
    de = [truth.descendants(i) for i in range(n)]
    an = [truth.ancestors(i) for i in range(n)]
    mistakes = 0
    for i in range(n):
        z = set(pred.parents(i))
        kids = set(truth.children(i))
        cuts: dict[frozenset, Pdag] = {}
        for j in range(n):
            if j == i:
                continue
            if j in z:
                mistakes += j in de[i]
                continue
            on_path = de[i] & (an[j] | {j})
            forbidden = set(on_path)
            for w in on_path:
                forbidden |= de[w]
            if z & forbidden:
                mistakes += 1
                continue
            first = frozenset(kids & on_path)
            if first not in cuts:
                cut = truth.copy()
                for c in first:
                    cut.remove_edge(i, c)
                cuts[first] = cut
            if not d_separated(cuts[first], i, j, z):
                mistakes += 1
    return mistakes


def sid_cpdag_bounds(
    truth: Pdag, g: Pdag, cap: int = 4096
) -> tuple[int, int]:
    """Min and max intervention distance over g's candidate orientations.

    Candidates are the acyclic orientations of g's undirected edges whose
    completed graph (compelled part directed, the rest undirected) equals
    g itself; when g is not the completed graph of any DAG, every acyclic
    orientation is kept instead.  Raises :class:`TooManyExtensions` past
    ``cap`` candidates and ValueError when g admits no orientation at all.
    """
    exts = consistent_extensions(g, cap=cap, preserve_v_structures=False)
    if not exts:
        raise ValueError("graph admits no consistent extension")
    gd = g.directed_edges()
    gu = g.undirected_edges()
    members = []
    for e in exts:
        c = cpdag_of_dag(e)
        if c.directed_edges() == gd and c.undirected_edges() == gu:
            members.append(e)
    pool = members or exts
    vals = [sid_dag(truth, e) for e in pool]
    return min(vals), max(vals)


def average_ranks(
    table: np.ndarray, larger_is_better: bool = False
) -> np.ndarray:
    """Mean fractional rank of each column across the rows of a score table.

    Rank 1 is best; ties share the average of their positions.
    """
    mat = np.asarray(table, dtype=float)
    if mat.ndim != 2:
        raise ValueError("expected a 2d score table")
    signed = -mat if larger_is_better else mat
    ranks = np.vstack([rankdata(row, method="average") for row in signed])
    return ranks.mean(axis=0)


@dataclass(frozen=True)
class VarianceRow:
    alpha: float
    beta: float
    n: int
    sample_var: float
    predicted_var: float
    se: float
    z: float


def mean_variance_law_rows(
    alphas,
    betas,
    ns,
    draws: int = 10**6,
    seed: int = 0,
    chunk: int = 100_000,
) -> list[VarianceRow]:
    """Sample variance of the mean of n Beta(a, b) draws vs the closed form.

    The mean of n independent Beta(a, b) variables has variance
    a*b / ((a+b)^2 (a+b+1) n).  For each (a, b, n) this draws ``draws``
    such means, reports the sample variance, the predicted value and a
    z-score using the standard error of a sample variance,
    sqrt((m4 - s^4) / draws).
    """
    rng = np.random.default_rng(seed)
    rows = []
    for a in alphas:
        for b in betas:
            for n in ns:
                means = np.empty(draws)
                done = 0
                while done < draws:
                    step = min(chunk, draws - done)
                    block = rng.beta(a, b, size=(step, n))
                    means[done : done + step] = block.mean(axis=1)
                    done += step
                s2 = means.var(ddof=1)
                centered = means - means.mean()
                m4 = np.mean(centered**4)
                se = float(np.sqrt(max(m4 - s2**2, 0.0) / draws))
                pred = a * b / ((a + b) ** 2 * (a + b + 1) * n)
                z = (s2 - pred) / se if se > 0 else float("inf")
                rows.append(VarianceRow(a, b, n, float(s2), pred, se, float(z)))
    return rows
