"""Constraint-based structure recovery from observational data."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import chi2

from .graph_core import Pdag, d_separated, meek_closure
from .ingest import DataTable

IndepTest = Callable[[int, int, tuple[int, ...]], bool]


@dataclass(frozen=True)
class CiTestResult:
    statistic: float
    dof: int
    p_value: float
    independent: bool
    insufficient_data: bool


def g2_test(
    table: DataTable,
    i: int,
    j: int,
    given: Sequence[int] = (),
    alpha: float = 0.05,
) -> CiTestResult:
    """Log-likelihood ratio test of Xi independent of Xj given a set.

    The statistic is 2 * sum n * log(n * N_s / (row * col)) over the
    nonzero cells of each conditioning stratum; empty cells contribute
    nothing.  Degrees of freedom are (|i|-1)(|j|-1) times the product of
    the conditioning cardinalities.  Any stratum with no observations
    marks the result as having insufficient data, which is reported as
    independence.
    """
    if i == j or i in given or j in given:
        raise ValueError("test variables must be distinct")
    vals = table.values
    ci = table.cardinality(i)
    cj = table.cardinality(j)
    strata = 1
    code = np.zeros(vals.shape[0], dtype=np.int64)
    for s in given:
        code = code * table.cardinality(s) + vals[:, s]
        strata *= table.cardinality(s)
    flat = (code * ci + vals[:, i]) * cj + vals[:, j]
    counts = np.bincount(flat, minlength=strata * ci * cj).reshape(
        strata, ci, cj
    )
    totals = counts.sum(axis=(1, 2))
    insufficient = bool((totals == 0).any())
    stat = 0.0
    for s in range(strata):
        n_s = totals[s]
        if n_s == 0:
            continue
        cell = counts[s]
        rows = cell.sum(axis=1, keepdims=True)
        cols = cell.sum(axis=0, keepdims=True)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = cell * n_s / (rows * cols)
            term = np.where(cell > 0, cell * np.log(ratio), 0.0)
        stat += 2.0 * float(np.nansum(term))
    dof = (ci - 1) * (cj - 1) * strata
    p = float(chi2.sf(stat, dof)) if dof > 0 else 1.0
    independent = insufficient or p > alpha
    return CiTestResult(stat, dof, p, independent, insufficient)


class DataCi:
    """Independence callable backed by the G-squared test."""

    def __init__(self, table: DataTable, alpha: float = 0.05):
        self.table = table
        self.alpha = alpha
        self.n_tests = 0

    def __call__(self, i: int, j: int, given: tuple[int, ...]) -> bool:
        self.n_tests += 1
        return g2_test(self.table, i, j, given, self.alpha).independent


class OracleCi:
    """Independence callable answering from a known DAG."""

    def __init__(self, dag: Pdag):
        self.dag = dag
        self.n_tests = 0

    def __call__(self, i: int, j: int, given: tuple[int, ...]) -> bool:
        self.n_tests += 1
        return d_separated(self.dag, i, j, set(given))


@dataclass
class PcResult:
    graph: Pdag
    sepsets: dict[tuple[int, int], tuple[int, ...]] = field(
        default_factory=dict
    )


def pc_stable(
    names: Sequence[str],
    indep: IndepTest,
    max_cond: Optional[int] = None,
) -> PcResult:
    """Order-independent skeleton search plus collider orientation.

    Edge removals at each level use neighbor sets frozen at the start of
    the level, so results do not depend on processing order.  Colliders
    proposed in conflicting directions for the same edge cancel out and
    the edge stays undirected.  The closure of the orientation rules is
    applied before returning.
    """
    n = len(names)
    adj: list[set[int]] = [set(range(n)) - {v} for v in range(n)]
    seps: dict[tuple[int, int], tuple[int, ...]] = {}

    level = 0
    while True:
        if max_cond is not None and level > max_cond:
            break
        frozen = [set(a) for a in adj]
        if all(len(frozen[v]) - 1 < level for v in range(n)):
            break
        for i in range(n):
            for j in sorted(frozen[i]):
                if j not in adj[i]:
                    continue
                pool = sorted(frozen[i] - {j})
                if len(pool) < level:
                    continue
                for s in combinations(pool, level):
                    if indep(i, j, s):
                        adj[i].discard(j)
                        adj[j].discard(i)
                        seps[(i, j)] = s
                        seps[(j, i)] = s
                        break
        level += 1

    proposals: set[tuple[int, int]] = set()
    for c in range(n):
        nbrs = sorted(adj[c])
        for x in range(len(nbrs)):
            for y in range(x + 1, len(nbrs)):
                a, b = nbrs[x], nbrs[y]
                if b in adj[a]:
                    continue
                sep = seps.get((a, b))
                if sep is not None and c not in sep:
                    proposals.add((a, c))
                    proposals.add((b, c))
    arrows = {
        (u, v) for (u, v) in proposals if (v, u) not in proposals
    }

    g = Pdag(names)
    done = set()
    for u in range(n):
        for v in adj[u]:
            if (v, u) in done:
                continue
            done.add((u, v))
            if (u, v) in arrows:
                g.add_directed(u, v)
            elif (v, u) in arrows:
                g.add_directed(v, u)
            else:
                g.add_undirected(u, v)
    return PcResult(meek_closure(g), seps)
