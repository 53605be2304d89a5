"""Batch experiments over the bundled networks, with CSV outputs."""

from __future__ import annotations

import csv
import hashlib
import random
from dataclasses import dataclass, field, replace
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .discovery import DataCi, OracleCi, pc_stable
from .graph_core import (
    Pdag,
    collider_pdag_of_dag,
    meek_closure,
    write_edgelist,
)
from .ingest import (
    BifNetwork,
    bundled_networks,
    forward_sample,
    load_bundled_tags,
    load_network,
)
from .metrics import prf1, shd, sid_cpdag_bounds
from .orient import OrientConfig, edge_preference, orient_all, prepare_tags
from .tags import (
    TagAssignment,
    add_tag_noise,
    collect_evidence,
    layer_assignment,
    mine_relations,
    parse_tag_lines,
)

SAMPLE_CAP = 20_000
DEFAULT_SAMPLES = 10_000
SMALL_SAMPLES = {"lucas": 2_000}
SID_SKIP = {"hailfinder"}


class MissingDataset(FileNotFoundError):
    pass


def default_sample_size(dataset: str) -> int:
    return SMALL_SAMPLES.get(dataset, DEFAULT_SAMPLES)


def instance_seed(master_seed: int, index: int) -> int:
    """Schedule-independent per-instance seed."""
    digest = hashlib.blake2b(
        f"{master_seed}:{index}".encode(), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def load_dataset(name: str) -> BifNetwork:
    try:
        return load_network(name)
    except FileNotFoundError as exc:
        raise MissingDataset(str(exc)) from None


def dataset_tags(
    name: str, net: BifNetwork, tags_dir: Optional[str] = None
) -> TagAssignment:
    """Tags from a directory of ``<name>.tags`` files, or the bundled ones."""
    if tags_dir is not None:
        path = Path(tags_dir) / f"{name}.tags"
        if not path.exists():
            raise MissingDataset(f"no tag file {path}")
        return parse_tag_lines(path.read_text(), net.names)
    return load_bundled_tags(name, net.names)


def write_csv(path: Path, header: Sequence[str], rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)


@dataclass
class ExperimentSpec:
    datasets: list[str] = field(default_factory=bundled_networks)
    seeds: list[int] = field(default_factory=lambda: list(range(10)))
    sample_size: Optional[int] = None
    out_dir: str = "out"
    master_seed: int = 0


# -- reference-graph scores --------------------------------------------------


def run_gt_cpdag(
    datasets: Sequence[str],
    tags_dir: Optional[str] = None,
    use_tags: bool = False,
    with_sid: bool = False,
    cfg: Optional[OrientConfig] = None,
) -> list[dict]:
    """Score each dataset's reference graph (and optionally its tagged
    orientation) against the true DAG."""
    rows = []
    for name in datasets:
        net = load_dataset(name)
        dag = net.dag()
        ref = collider_pdag_of_dag(dag)
        rows.append(_score_row(name, "reference", ref, dag, with_sid))
        if use_tags:
            tags = dataset_tags(name, net, tags_dir)
            res = orient_all(ref, tags, cfg)
            rows.append(_score_row(name, "tagged", res.graph, dag, with_sid))
    return rows


def _score_row(
    name: str, method: str, g: Pdag, dag: Pdag, with_sid: bool
) -> dict:
    scores = prf1(g, dag)
    row = {
        "dataset": name,
        "method": method,
        "shd": shd(g, dag),
        "precision": round(scores.precision, 4),
        "recall": round(scores.recall, 4),
        "f1": round(scores.f1, 4),
        "sid_low": "",
        "sid_high": "",
    }
    if with_sid and name not in SID_SKIP:
        lo, hi = sid_cpdag_bounds(dag, g)
        row["sid_low"] = lo
        row["sid_high"] = hi
    return row


# -- graph-fault robustness --------------------------------------------------


def _apply_instance(
    dag: Pdag,
    removes: Sequence[tuple[int, int]],
    flips: Sequence[tuple[int, int]],
    probes: Sequence[tuple[int, int]],
) -> Optional[Pdag]:
    """Faulted copy of dag, or None when the flips close a cycle."""
    g = dag.copy()
    for u, v in removes:
        g.remove_edge(u, v)
    for u, v in flips:
        g.remove_edge(u, v)
        g.add_directed(v, u)
    if flips and not g.is_acyclic():
        return None
    for u, v in probes:
        g.undirect(u, v)
    return g


def _fault_instances(edges, kind: str, k: int, master_seed: int, key: int):
    """Yield (faults, probe) pairs, enumerated when feasible else sampled."""
    m = len(edges)
    if k > m or m - k == 0:
        return
    total = 1
    for i in range(k):
        total = total * (m - i) // (i + 1)
    total *= m - k
    if total <= SAMPLE_CAP:
        for faults in combinations(edges, k):
            hit = set(faults)
            for probe in edges:
                if probe not in hit:
                    yield faults, probe
    else:
        for idx in range(SAMPLE_CAP):
            rng = random.Random(instance_seed(master_seed, key + idx))
            faults = tuple(rng.sample(edges, k))
            rest = [e for e in edges if e not in set(faults)]
            yield faults, rng.choice(rest)


def run_faults(
    dataset: str,
    tags: TagAssignment,
    kinds: Sequence[str] = ("remove", "flip"),
    ks: Sequence[int] = tuple(range(11)),
    cfg: Optional[OrientConfig] = None,
    master_seed: int = 0,
    dag: Optional[Pdag] = None,
) -> list[dict]:
    """Probe-edge accuracy as ground-truth edges are removed or flipped.

    Each instance corrupts a set of edges, hides the direction of one
    untouched probe edge, tallies evidence from the corrupted graph and
    scores the probe's preference.  Accuracy is over decided probes.
    """
    if cfg is None:
        cfg = OrientConfig()
    if dag is None:
        dag = load_dataset(dataset).dag()
    tags = prepare_tags(tags, cfg)
    edges = dag.directed_edges()
    rows = []
    for kind in kinds:
        if kind not in ("remove", "flip"):
            raise ValueError(f"unknown fault kind {kind!r}")
        for k in ks:
            seen = correct = wrong = 0
            key = (0 if kind == "remove" else 1) * 10_000_000 + k * 100_000
            for faults, probe in _fault_instances(
                edges, kind, k, master_seed, key
            ):
                g = _apply_instance(
                    dag,
                    faults if kind == "remove" else (),
                    faults if kind == "flip" else (),
                    (probe,),
                )
                if g is None:
                    continue
                seen += 1
                ev = collect_evidence(g, tags, anti_v=cfg.anti_v)
                pref = edge_preference(
                    ev, tags, dag.names, probe[0], probe[1], cfg
                )
                if pref.mass < cfg.min_samples or pref.mass <= 0:
                    continue
                if pref.q > 0.5 + cfg.epsilon:
                    correct += 1
                elif pref.q < 0.5 - cfg.epsilon:
                    wrong += 1
            decided = correct + wrong
            rows.append(
                {
                    "dataset": dataset,
                    "kind": kind,
                    "k": k,
                    "instances": seen,
                    "decided": decided,
                    "correct": correct,
                    "accuracy": round(correct / decided, 4)
                    if decided
                    else "",
                    "decision_rate": round(decided / seen, 4) if seen else "",
                }
            )
    return rows


# -- undirecting ground-truth edges ------------------------------------------


def _undirect_instances(edges, k: int, master_seed: int):
    m = len(edges)
    if k > m:
        return
    total = 1
    for i in range(k):
        total = total * (m - i) // (i + 1)
    if total <= SAMPLE_CAP:
        yield from combinations(edges, k)
    else:
        for idx in range(SAMPLE_CAP):
            rng = random.Random(instance_seed(master_seed, idx))
            yield tuple(rng.sample(edges, k))


def run_undirect(
    dataset: str,
    tags: TagAssignment,
    ks: Sequence[int] = (1, 2, 3, 4, 5, 6),
    cfg: Optional[OrientConfig] = None,
    master_seed: int = 0,
    dag: Optional[Pdag] = None,
) -> list[dict]:
    """Re-orient k hidden ground-truth edges and tally the outcomes.

    Instances where constraint propagation alone would restore any hidden
    edge are skipped, so every tally reflects a genuine tag decision.
    """
    if cfg is None:
        cfg = OrientConfig()
    if dag is None:
        dag = load_dataset(dataset).dag()
    edges = dag.directed_edges()
    rows = []
    for k in ks:
        kept = skipped = correct = wrong = abstained = 0
        for probes in _undirect_instances(edges, k, master_seed):
            g = _apply_instance(dag, (), (), probes)
            closed = meek_closure(g)
            if any(
                closed.has_directed(u, v) or closed.has_directed(v, u)
                for u, v in probes
            ):
                skipped += 1
                continue
            kept += 1
            res = orient_all(g, tags, cfg)
            for u, v in probes:
                if res.graph.has_directed(u, v):
                    correct += 1
                elif res.graph.has_directed(v, u):
                    wrong += 1
                else:
                    abstained += 1
        decided = correct + wrong
        rows.append(
            {
                "dataset": dataset,
                "k": k,
                "instances": kept,
                "skipped": skipped,
                "correct": correct,
                "incorrect": wrong,
                "abstained": abstained,
                "accuracy": round(correct / decided, 4) if decided else "",
            }
        )
    return rows


# -- tag-noise robustness -----------------------------------------------------


def run_tag_noise(
    dataset: str,
    tags: TagAssignment,
    levels: Sequence[float] = (0, 10, 20, 30, 40, 50),
    seeds: Sequence[int] = tuple(range(10)),
    cfg: Optional[OrientConfig] = None,
    dag: Optional[Pdag] = None,
) -> list[dict]:
    """Single-hidden-edge accuracy as the tag assignment is corrupted."""
    if cfg is None:
        cfg = OrientConfig()
    if dag is None:
        dag = load_dataset(dataset).dag()
    edges = dag.directed_edges()
    usable = []
    for probe in edges:
        g = _apply_instance(dag, (), (), (probe,))
        closed = meek_closure(g)
        if not (
            closed.has_directed(*probe)
            or closed.has_directed(probe[1], probe[0])
        ):
            usable.append(probe)
    rows = []
    for level in levels:
        for seed in seeds:
            noisy = add_tag_noise(tags, level, seed) if level else tags
            correct = wrong = abstained = 0
            for probe in usable:
                g = _apply_instance(dag, (), (), (probe,))
                res = orient_all(g, noisy, cfg)
                if res.graph.has_directed(*probe):
                    correct += 1
                elif res.graph.has_directed(probe[1], probe[0]):
                    wrong += 1
                else:
                    abstained += 1
            decided = correct + wrong
            rows.append(
                {
                    "dataset": dataset,
                    "level": level,
                    "seed": seed,
                    "instances": len(usable),
                    "correct": correct,
                    "incorrect": wrong,
                    "abstained": abstained,
                    "accuracy": round(correct / decided, 4)
                    if decided
                    else "",
                }
            )
            if level == 0:
                break
    return rows


# -- configuration sweep -------------------------------------------------------


def config_grid() -> list[tuple[dict, OrientConfig]]:
    """The full factorial configuration grid (400 combinations)."""
    out = []
    redirect_modes = [None, (True, True), (True, False), (False, True),
                      (False, False)]
    for ms in (1, 2, 4, 8, 16):
        for fewer in (False, True):
            for prior in (False, True):
                for meek in (True, False):
                    for anti in (False, True):
                        for mode in redirect_modes:
                            cfg = OrientConfig(
                                min_samples=ms,
                                drop_singletons=fewer,
                                specificity_prior=prior,
                                always_meek=meek,
                                anti_v=anti,
                            )
                            label = {
                                "min_samples": ms,
                                "drop_singletons": fewer,
                                "specificity_prior": prior,
                                "always_meek": meek,
                                "anti_v": anti,
                                "redirect": mode is not None,
                                "update_evidence": ""
                                if mode is None
                                else mode[0],
                                "include_current_edge": ""
                                if mode is None
                                else mode[1],
                            }
                            if mode is not None:
                                cfg = replace(
                                    cfg,
                                    redirect=True,
                                    update_evidence=mode[0],
                                    include_current_edge=mode[1],
                                )
                            out.append((label, cfg))
    return out


def run_sweep(
    datasets: Sequence[str],
    tags_dir: Optional[str] = None,
    grid: Optional[list[tuple[dict, OrientConfig]]] = None,
) -> list[dict]:
    """Mean F1 of every configuration across datasets, best first."""
    from .metrics import average_ranks

    if grid is None:
        grid = config_grid()
    prepared = []
    for name in datasets:
        net = load_dataset(name)
        dag = net.dag()
        ref = collider_pdag_of_dag(dag)
        prepared.append((dag, ref, dataset_tags(name, net, tags_dir)))
    scores = np.zeros((len(grid), len(prepared)))
    for g_i, (label, cfg) in enumerate(grid):
        for d_i, (dag, ref, tags) in enumerate(prepared):
            res = orient_all(ref, tags, cfg)
            scores[g_i, d_i] = prf1(res.graph, dag).f1
    ranks = average_ranks(scores.T, larger_is_better=True)
    rows = []
    for g_i, (label, cfg) in enumerate(grid):
        row = dict(label)
        row["mean_f1"] = round(float(scores[g_i].mean()), 4)
        row["avg_rank"] = round(float(ranks[g_i]), 2)
        rows.append(row)
    rows.sort(key=lambda r: -r["mean_f1"])
    return rows


# -- relation mining -----------------------------------------------------------


def run_mine(
    dataset: str,
    tags: TagAssignment,
    min_support: int = 3,
    cfg: Optional[OrientConfig] = None,
    dag: Optional[Pdag] = None,
) -> list[dict]:
    """Mine one-sided tag relations from the true graph's edges."""
    if cfg is None:
        cfg = OrientConfig()
    if dag is None:
        dag = load_dataset(dataset).dag()
    tags = prepare_tags(tags, cfg)
    ev = collect_evidence(dag, tags, anti_v=cfg.anti_v)
    return [
        {
            "tag_a": r.tag_a,
            "tag_b": r.tag_b,
            "probability": round(r.probability, 4),
            "support": r.support,
            "score": round(r.score, 4),
        }
        for r in mine_relations(ev, min_support)
    ]


# -- sampled-data pipeline -------------------------------------------------------


def run_end2end(
    dataset: str,
    tags: TagAssignment,
    n: Optional[int] = None,
    seeds: Sequence[int] = tuple(range(10)),
    alpha: float = 0.05,
    max_cond: Optional[int] = None,
    oracle: bool = False,
    cfg: Optional[OrientConfig] = None,
    out_dir: Optional[str] = None,
) -> list[dict]:
    """Sample, recover a graph, orient it with tags, score both stages."""
    net = load_dataset(dataset)
    dag = net.dag()
    if n is None:
        n = default_sample_size(dataset)
    if oracle:
        # Oracle answers are seed-independent; one run covers them all.
        seeds = tuple(seeds)[:1]
    rows = []
    for seed in seeds:
        if oracle:
            ci = OracleCi(dag)
        else:
            table = forward_sample(net, n, seed)
            ci = DataCi(table, alpha)
        pc = pc_stable(net.names, ci, max_cond)
        res = orient_all(pc.graph, tags, cfg)
        for method, g in (("pc", pc.graph), ("tagged", res.graph)):
            scores = prf1(g, dag)
            rows.append(
                {
                    "dataset": dataset,
                    "seed": seed,
                    "method": method,
                    "shd": shd(g, dag),
                    "precision": round(scores.precision, 4),
                    "recall": round(scores.recall, 4),
                    "f1": round(scores.f1, 4),
                    "n_tests": ci.n_tests,
                }
            )
        if out_dir is not None:
            base = Path(out_dir) / dataset
            base.mkdir(parents=True, exist_ok=True)
            (base / f"seed{seed}-pc.edges").write_text(
                write_edgelist(pc.graph)
            )
            (base / f"seed{seed}-tagged.edges").write_text(
                write_edgelist(res.graph)
            )
    return rows


def synthetic_layer_tags(dataset: str) -> TagAssignment:
    """Topological-layer tags for a bundled network."""
    dag = load_dataset(dataset).dag()
    return layer_assignment(dag)
