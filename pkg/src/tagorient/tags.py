"""Tag assignments over variables and direction-evidence statistics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph_core import Pdag, topological_layers


class UnknownVariable(KeyError):
    """A tag line references a variable that does not exist."""


class MalformedLine(ValueError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: cannot parse tag line {line!r}")
        self.lineno = lineno


class UnknownTag(KeyError):
    pass


class IdenticalTags(ValueError):
    """Direction statistics are undefined for a tag paired with itself."""


class NoEvidence(ValueError):
    """No observed edges between the two tags."""


class TagAssignment:
    """Maps each variable to an ordered list of tags.

    Tag order follows first appearance in the input; all operations that
    iterate tags do so in that order, keeping downstream scans
    deterministic.
    """

    def __init__(self, variables: Sequence[str]):
        self.variables = tuple(variables)
        self._tags: dict[str, list[str]] = {v: [] for v in self.variables}
        self._order: list[str] = []

    def assign(self, var: str, tag: str) -> None:
        if var not in self._tags:
            raise UnknownVariable(var)
        if tag not in self._order:
            self._order.append(tag)
        if tag not in self._tags[var]:
            self._tags[var].append(tag)

    def tags_of(self, var: str) -> list[str]:
        try:
            return list(self._tags[var])
        except KeyError:
            raise UnknownVariable(var) from None

    @property
    def universe(self) -> list[str]:
        """All tags in first-appearance order (unassigned tags pruned)."""
        live = {t for ts in self._tags.values() for t in ts}
        return [t for t in self._order if t in live]

    def variables_of(self, tag: str) -> list[str]:
        return [v for v in self.variables if tag in self._tags[v]]

    def n_assignments(self) -> int:
        return sum(len(ts) for ts in self._tags.values())

    def copy(self) -> "TagAssignment":
        out = TagAssignment(self.variables)
        out._order = list(self._order)
        out._tags = {v: list(ts) for v, ts in self._tags.items()}
        return out

    def drop(self, var: str, tag: str) -> None:
        self._tags[var].remove(tag)

    def __eq__(self, other):
        if not isinstance(other, TagAssignment):
            return NotImplemented
        return self.variables == other.variables and self._tags == other._tags

    def __repr__(self):
        return (
            f"TagAssignment({len(self.variables)} vars, "
            f"{len(self.universe)} tags)"
        )


def parse_tag_lines(text: str, variables: Sequence[str]) -> TagAssignment:
    """Parse ``Tag: var1, var2, ...`` lines into an assignment.

    Blank lines are ignored.  Repeated tag names merge their variable
    lists.  Raises :class:`MalformedLine` for lines without a colon and
    :class:`UnknownVariable` for variables outside ``variables``.
    """
    out = TagAssignment(variables)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise MalformedLine(lineno, raw)
        tag, _, rest = line.partition(":")
        tag = tag.strip()
        if not tag:
            raise MalformedLine(lineno, raw)
        for name in rest.split(","):
            name = name.strip()
            if not name:
                continue
            out.assign(name, tag)
    return out


def format_tag_lines(a: TagAssignment) -> str:
    lines = [f"{t}: {', '.join(a.variables_of(t))}" for t in a.universe]
    return "\n".join(lines) + "\n"


def deduplicate(a: TagAssignment) -> TagAssignment:
    """Collapse tags covering identical variable sets onto the first one."""
    keep: dict[frozenset, str] = {}
    drop: dict[str, str] = {}
    for tag in a.universe:
        key = frozenset(a.variables_of(tag))
        if key in keep:
            drop[tag] = keep[key]
        else:
            keep[key] = tag
    if not drop:
        return a.copy()
    out = TagAssignment(a.variables)
    for var in a.variables:
        for tag in a.tags_of(var):
            out.assign(var, drop.get(tag, tag))
    return out


def drop_singletons(a: TagAssignment) -> TagAssignment:
    """Remove tags assigned to at most one variable."""
    out = TagAssignment(a.variables)
    for var in a.variables:
        for tag in a.tags_of(var):
            if len(a.variables_of(tag)) > 1:
                out.assign(var, tag)
    return out


def add_tag_noise(a: TagAssignment, pct: float, seed: int) -> TagAssignment:
    """Corrupt pct% of the assignment mass, half added and half removed.

    Adds ``round(pct/2 * M/100)`` uniformly random absent (variable, tag)
    pairs drawn from the existing tag universe and removes the same number
    of existing pairs, where M is the total assignment count.  Both pools
    are taken from the input assignment, so additions are never removed in
    the same call.  Deterministic given the seed.
    """
    rng = random.Random(seed)
    m = a.n_assignments()
    k = int(round(pct / 2.0 * m / 100.0))
    universe = a.universe
    existing = [
        (v, t) for v in a.variables for t in a.tags_of(v)
    ]
    absent = [
        (v, t)
        for v in a.variables
        for t in universe
        if t not in a.tags_of(v)
    ]
    add = rng.sample(absent, min(k, len(absent)))
    remove = rng.sample(existing, min(k, len(existing)))
    out = a.copy()
    for v, t in remove:
        out.drop(v, t)
    for v, t in add:
        out.assign(v, t)
    return out


def layer_assignment(d: Pdag) -> TagAssignment:
    """Perfectly informative synthetic tags: one tag per topological layer."""
    layers = topological_layers(d)
    out = TagAssignment(d.names)
    for v, layer in enumerate(layers):
        out.assign(d.names[v], f"layer{layer}")
    return out


class EvidenceMatrix:
    """Counts of directed edges per ordered tag pair."""

    def __init__(self, universe: Sequence[str]):
        self.universe = list(universe)
        self._idx = {t: i for i, t in enumerate(self.universe)}
        if len(self._idx) != len(self.universe):
            raise ValueError("duplicate tags in universe")
        self.counts = np.zeros((len(self.universe),) * 2, dtype=np.int64)

    def index(self, tag: str) -> int:
        try:
            return self._idx[tag]
        except KeyError:
            raise UnknownTag(tag) from None

    def add(self, a: str, b: str, k: int = 1) -> None:
        self.counts[self.index(a), self.index(b)] += k

    def count(self, a: str, b: str) -> int:
        return int(self.counts[self.index(a), self.index(b)])

    def copy(self) -> "EvidenceMatrix":
        out = EvidenceMatrix(self.universe)
        out.counts = self.counts.copy()
        return out


def collect_evidence(
    g: Pdag, tags: TagAssignment, anti_v: bool = False
) -> EvidenceMatrix:
    """Tally direction evidence from the directed part of g.

    Every directed edge u -> v adds one count for each ordered tag pair
    (a, b) with a on u and b on v; pairs of identical tags are skipped.
    With ``anti_v``, every unshielded non-collider triple (A, C, B) whose
    endpoints share a tag additionally counts each of C's other tags as a
    cause of each shared tag.
    """
    ev = EvidenceMatrix(tags.universe)
    for u, v in g.directed_edges():
        for a in tags.tags_of(g.names[u]):
            for b in tags.tags_of(g.names[v]):
                if a != b:
                    ev.add(a, b)
    if anti_v:
        for a_i, c_i, b_i in _unshielded_noncolliders(g):
            shared = [
                t
                for t in tags.tags_of(g.names[a_i])
                if t in tags.tags_of(g.names[b_i])
            ]
            for t_s in shared:
                for t_c in tags.tags_of(g.names[c_i]):
                    if t_c != t_s:
                        ev.add(t_c, t_s)
    return ev


def _unshielded_noncolliders(g: Pdag):
    """Triples (a, c, b), a < b, with a-c-b adjacent, a,b not adjacent,
    and not both edges directed into c."""
    for c in range(g.n):
        nbrs = sorted(g.neighbors(c))
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                a, b = nbrs[i], nbrs[j]
                if g.adjacent(a, b):
                    continue
                if g.has_directed(a, c) and g.has_directed(b, c):
                    continue
                yield a, c, b


@dataclass(frozen=True)
class PairStat:
    probability: float
    support: int


def p_hat(ev: EvidenceMatrix, a: str, b: str) -> PairStat:
    """Empirical probability that tag a causes tag b, with its support.

    Unobserved pairs (support zero) report probability 0.5 so callers can
    treat them as uninformative.
    """
    if a == b:
        raise IdenticalTags(a)
    fwd = ev.count(a, b)
    bwd = ev.count(b, a)
    s = fwd + bwd
    if s == 0:
        return PairStat(0.5, 0)
    return PairStat(fwd / s, s)


def specificity_prior(a: TagAssignment, t1: str, t2: str) -> float:
    """Down-weights evidence between broad tags: 1 / 2^(n1 + n2 - 1)."""
    n1 = len(a.variables_of(t1))
    n2 = len(a.variables_of(t2))
    if n1 == 0:
        raise UnknownTag(t1)
    if n2 == 0:
        raise UnknownTag(t2)
    return 1.0 / 2.0 ** (n1 + n2 - 1)


@dataclass(frozen=True)
class Relation:
    tag_a: str
    tag_b: str
    probability: float
    support: int
    score: float


def homogeneity(ev: EvidenceMatrix, a: str, b: str) -> Relation:
    """How one-sided the evidence between two tags is.

    Score is ``2 * max(p, 1-p) - 1``; the reported direction is the
    winning one (ties keep the (a, b) order with score 0).  Raises
    :class:`NoEvidence` when the pair was never observed.
    """
    stat = p_hat(ev, a, b)
    if stat.support == 0:
        raise NoEvidence(f"{a} / {b}")
    p = stat.probability
    if p >= 0.5:
        return Relation(a, b, p, stat.support, 2 * p - 1)
    return Relation(b, a, 1 - p, stat.support, 1 - 2 * p)


def mine_relations(
    ev: EvidenceMatrix, min_support: int = 3
) -> list[Relation]:
    """All tag pairs with positive homogeneity and enough support.

    Sorted by support descending, then score descending; remaining ties
    keep universe order.
    """
    rows = []
    for i, a in enumerate(ev.universe):
        for b in ev.universe[i + 1 :]:
            stat = p_hat(ev, a, b)
            if stat.support < min_support or stat.support == 0:
                continue
            rel = homogeneity(ev, a, b)
            if rel.score > 0:
                rows.append(rel)
    rows.sort(key=lambda r: (-r.support, -r.score))
    return rows


def render_relation(r: Relation) -> str:
    pct = int(r.probability * 100)
    return f'"{r.tag_a}" -> "{r.tag_b}" ({pct}% / {r.support})'
