"""Orienting undirected edges from tag-level direction evidence."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Optional

from .graph_core import Pdag, meek_closure
from .tags import (
    EvidenceMatrix,
    TagAssignment,
    UnknownVariable,
    collect_evidence,
    deduplicate,
    drop_singletons,
    specificity_prior,
)


@dataclass
class OrientConfig:
    """Knobs for the orientation procedure.

    Defaults are the configuration that performed best across the bundled
    networks; every flag exists so ablations can switch it off in
    isolation.
    """

    min_samples: float = 1.0
    drop_singletons: bool = False
    specificity_prior: bool = False
    always_meek: bool = True
    redirect: bool = False
    include_current_edge: bool = True
    update_evidence: bool = True
    anti_v: bool = False
    epsilon: float = 0.0
    redirect_threshold: float = 0.6
    max_redirect_iters: int = 100


def load_config(path: str) -> OrientConfig:
    """Read ``key = value`` lines into a config; unknown keys are errors."""
    with open(path) as fh:
        pairs = {}
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            pairs[key.strip()] = val.strip()
    return apply_overrides(OrientConfig(), pairs)


def apply_overrides(cfg: OrientConfig, pairs: dict[str, str]) -> OrientConfig:
    fields = {f.name: f for f in dataclasses.fields(OrientConfig)}
    out = dataclasses.replace(cfg)
    for key, val in pairs.items():
        if key not in fields:
            raise ValueError(f"unknown config key {key!r}")
        setattr(out, key, _coerce(val, fields[key].type, key))
    return out


def _coerce(val: str, typ, key: str):
    name = typ if isinstance(typ, str) else getattr(typ, "__name__", str(typ))
    if name == "bool":
        low = val.lower()
        if low in ("true", "1", "yes"):
            return True
        if low in ("false", "0", "no"):
            return False
        raise ValueError(f"config key {key!r}: not a boolean: {val!r}")
    if name == "int":
        return int(val)
    if name == "float":
        return float(val)
    return val


@dataclass(frozen=True)
class Preference:
    """Pooled preference for directing one variable toward another."""

    q: float
    mass: float


def edge_preference(
    ev: EvidenceMatrix,
    tags: TagAssignment,
    names: tuple[str, ...],
    u: int,
    v: int,
    cfg: OrientConfig,
    exclude: Optional[tuple[int, int]] = None,
) -> Preference:
    """Evidence-pooled probability that u causes v.

    Sums forward and backward counts over all ordered tag pairs between
    the two variables (identical tags skipped), optionally weighted by the
    specificity prior, and returns their normalized ratio together with
    the total pooled mass.  ``exclude`` removes the tally contributed by
    the currently directed edge given as (source, target); pairs never go
    below zero.  Pairs with no usable mass report q = 0.5.
    """
    tu = [t for t in tags.tags_of(names[u])]
    tv = [t for t in tags.tags_of(names[v])]
    fwd = 0.0
    bwd = 0.0
    for a in tu:
        for b in tv:
            if a == b:
                continue
            f = ev.count(a, b)
            w = ev.count(b, a)
            if exclude is not None:
                s, t = exclude
                if (s, t) == (u, v):
                    f = max(f - 1, 0)
                elif (s, t) == (v, u):
                    w = max(w - 1, 0)
            if cfg.specificity_prior:
                pw = specificity_prior(tags, a, b)
                f *= pw
                w *= pw
            fwd += f
            bwd += w
    mass = fwd + bwd
    if mass <= 0 or mass < cfg.min_samples:
        return Preference(0.5, mass)
    return Preference(fwd / mass, mass)


@dataclass(frozen=True)
class Decision:
    source: str
    target: str
    q: float
    mass: float
    fallback: bool


@dataclass
class OrientResult:
    graph: Pdag
    decisions: list[Decision] = field(default_factory=list)
    flips: list[Decision] = field(default_factory=list)
    n_tag_directed: int = 0
    n_meek_directed: int = 0
    n_fallback: int = 0
    n_redirected: int = 0
    n_abstained: int = 0


def prepare_tags(tags: TagAssignment, cfg: OrientConfig) -> TagAssignment:
    out = deduplicate(tags)
    if cfg.drop_singletons:
        out = drop_singletons(out)
    return out


def find_most_promising(
    g: Pdag,
    ev: EvidenceMatrix,
    tags: TagAssignment,
    cfg: OrientConfig,
) -> Optional[tuple[int, int, Preference]]:
    """Best half-edge to direct next, or None when nothing qualifies.

    Scans undirected edges in canonical order, for each trying u -> v
    before v -> u, and keeps the half with the strictly largest q above
    0.5 + epsilon.  Earlier candidates win ties.
    """
    best = None
    for u, v in g.undirected_edges():
        pref = edge_preference(ev, tags, g.names, u, v, cfg)
        if pref.mass <= 0 or pref.mass < cfg.min_samples:
            continue
        for q, s, t in ((pref.q, u, v), (1.0 - pref.q, v, u)):
            if q <= 0.5 + cfg.epsilon:
                continue
            if best is None or q > best[2].q:
                best = (s, t, Preference(q, pref.mass))
    return best


def orient_all(
    g: Pdag, tags: TagAssignment, cfg: Optional[OrientConfig] = None
) -> OrientResult:
    """Direct the undirected edges of g that tag evidence supports.

    Evidence is tallied once from the directed part of the working graph,
    then half-edges are committed greedily, most confident first.  A
    choice that would close a directed cycle is directed the opposite way
    instead.  Constraint propagation runs after every commitment when
    ``always_meek`` is set and once more at the end regardless.  The
    optional redirect pass afterwards reconsiders directed edges and
    flips those whose reverse direction clears ``redirect_threshold``.
    """
    if cfg is None:
        cfg = OrientConfig()
    for name in g.names:
        if name not in tags.variables:
            raise UnknownVariable(name)
    tags = prepare_tags(tags, cfg)
    work = meek_closure(g) if cfg.always_meek else g.copy()
    n_undirected_in = len(work.undirected_edges())
    ev = collect_evidence(work, tags, anti_v=cfg.anti_v)
    res = OrientResult(graph=work)

    while True:
        pick = find_most_promising(work, ev, tags, cfg)
        if pick is None:
            break
        s, t, pref = pick
        fallback = False
        if work.has_directed_path(t, s):
            s, t = t, s
            fallback = True
        work.direct(s, t)
        res.decisions.append(
            Decision(g.names[s], g.names[t], pref.q, pref.mass, fallback)
        )
        res.n_tag_directed += 1
        if fallback:
            res.n_fallback += 1
        if cfg.always_meek:
            work = meek_closure(work)
    work = meek_closure(work)

    if cfg.redirect:
        work = _redirect_phase(work, tags, cfg, res)
        work = meek_closure(work)

    res.graph = work
    res.n_abstained = len(work.undirected_edges())
    res.n_meek_directed = (
        n_undirected_in - res.n_abstained - res.n_tag_directed
    )
    return res


def _redirect_phase(
    work: Pdag, tags: TagAssignment, cfg: OrientConfig, res: OrientResult
) -> Pdag:
    """Flip directed edges whose reverse direction is strongly supported.

    Sweeps the directed edges repeatedly, at most ``max_redirect_iters``
    passes.  A flip that would close a cycle marks the edge as settled
    for the rest of the phase.  With ``update_evidence`` the tallies are
    rebuilt after every accepted flip; otherwise flipped edges simply
    leave the candidate pool so stale counts cannot flip them back.
    """
    ev = collect_evidence(work, tags, anti_v=cfg.anti_v)
    settled: set[tuple[int, int]] = set()
    flipped: set[frozenset] = set()
    for _ in range(cfg.max_redirect_iters):
        changed = False
        for u, v in work.directed_edges():
            if (u, v) in settled:
                continue
            if not cfg.update_evidence and frozenset((u, v)) in flipped:
                continue
            exclude = None if cfg.include_current_edge else (u, v)
            pref = edge_preference(
                ev, tags, work.names, v, u, cfg, exclude=exclude
            )
            if pref.mass <= 0 or pref.mass < cfg.min_samples:
                continue
            if pref.q <= cfg.redirect_threshold:
                continue
            work.remove_edge(u, v)
            if work.has_directed_path(u, v):
                work.add_directed(u, v)
                settled.add((u, v))
                continue
            work.add_directed(v, u)
            flipped.add(frozenset((u, v)))
            res.flips.append(
                Decision(work.names[v], work.names[u], pref.q, pref.mass, False)
            )
            res.n_redirected += 1
            changed = True
            if cfg.always_meek:
                work = meek_closure(work)
            if cfg.update_evidence:
                ev = collect_evidence(work, tags, anti_v=cfg.anti_v)
            break
        if not changed:
            break
    return work
