"""Partially directed graphs, Meek closure, and Markov-equivalence machinery."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class CyclicInput(ValueError):
    """The directed part of the input graph contains a cycle."""


class NotADag(ValueError):
    """Operation requires a fully directed acyclic graph."""


class TooManyExtensions(RuntimeError):
    """Extension enumeration exceeded the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"more than {cap} consistent extensions")
        self.cap = cap


class Infeasible(RuntimeError):
    """Fault injection could not realize the requested counts."""


Edge = tuple[int, int]


class Pdag:
    """A partially directed graph over an ordered set of named variables.

    Directed edges are ordered pairs ``(u, v)`` meaning ``u -> v``;
    undirected edges are stored canonically as ``(min, max)``.  At most one
    edge may exist between any two variables.
    """

    __slots__ = ("names", "_dir", "_und", "_nbrs")

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._dir: set[Edge] = set()
        self._und: set[Edge] = set()
        self._nbrs: list[set[int]] = [set() for _ in self.names]

    # -- construction ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.names)

    def copy(self) -> "Pdag":
        g = Pdag.__new__(Pdag)
        g.names = self.names
        g._dir = set(self._dir)
        g._und = set(self._und)
        g._nbrs = [set(s) for s in self._nbrs]
        return g

    def add_directed(self, u: int, v: int) -> None:
        self._check_new(u, v)
        self._dir.add((u, v))
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)

    def add_undirected(self, u: int, v: int) -> None:
        self._check_new(u, v)
        self._und.add((min(u, v), max(u, v)))
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)

    def _check_new(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("self loop")
        if v in self._nbrs[u]:
            raise ValueError(f"edge {u},{v} already present")

    # -- queries ---------------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def has_directed(self, u: int, v: int) -> bool:
        return (u, v) in self._dir

    def has_undirected(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._und

    def neighbors(self, v: int) -> set[int]:
        return set(self._nbrs[v])

    def parents(self, v: int) -> list[int]:
        return sorted(u for u in self._nbrs[v] if (u, v) in self._dir)

    def children(self, u: int) -> list[int]:
        return sorted(v for v in self._nbrs[u] if (u, v) in self._dir)

    def undirected_neighbors(self, v: int) -> list[int]:
        return sorted(
            u for u in self._nbrs[v] if (min(u, v), max(u, v)) in self._und
        )

    def directed_edges(self) -> list[Edge]:
        return sorted(self._dir)

    def undirected_edges(self) -> list[Edge]:
        return sorted(self._und)

    def n_edges(self) -> int:
        return len(self._dir) + len(self._und)

    def is_fully_directed(self) -> bool:
        return not self._und

    # -- mutation (exclusive access assumed; callers copy shared graphs) --

    def direct(self, u: int, v: int) -> None:
        """Turn the undirected edge between u and v into u -> v."""
        key = (min(u, v), max(u, v))
        if key not in self._und:
            raise ValueError(f"no undirected edge {u},{v}")
        self._und.remove(key)
        self._dir.add((u, v))

    def undirect(self, u: int, v: int) -> None:
        """Drop the orientation of the directed edge u -> v."""
        if (u, v) not in self._dir:
            raise ValueError(f"no directed edge {u}->{v}")
        self._dir.remove((u, v))
        self._und.add((min(u, v), max(u, v)))

    def remove_edge(self, u: int, v: int) -> None:
        self._dir.discard((u, v))
        self._dir.discard((v, u))
        self._und.discard((min(u, v), max(u, v)))
        self._nbrs[u].discard(v)
        self._nbrs[v].discard(u)

    # -- directed-part analysis -------------------------------------------

    def is_acyclic(self) -> bool:
        """True when the directed part has no directed cycle."""
        indeg = [0] * self.n
        for _, v in self._dir:
            indeg[v] += 1
        queue = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while queue:
            u = queue.pop()
            seen += 1
            for v in self.children(u):
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        return seen == self.n

    def topological_order(self) -> list[int]:
        indeg = [0] * self.n
        for _, v in self._dir:
            indeg[v] += 1
        import heapq

        heap = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for v in self.children(u):
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(heap, v)
        if len(order) != self.n:
            raise CyclicInput("directed part contains a cycle")
        return order

    def has_directed_path(self, src: int, dst: int) -> bool:
        if src == dst:
            return True
        stack = [src]
        seen = {src}
        while stack:
            u = stack.pop()
            for v in self.children(u):
                if v == dst:
                    return True
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    def descendants(self, v: int) -> set[int]:
        """All nodes reachable from v by directed edges, v excluded."""
        out: set[int] = set()
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.children(u):
                if w not in out:
                    out.add(w)
                    stack.append(w)
        out.discard(v)
        return out

    def ancestors(self, v: int) -> set[int]:
        out: set[int] = set()
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.parents(u):
                if w not in out:
                    out.add(w)
                    stack.append(w)
        out.discard(v)
        return out

    # -- misc --------------------------------------------------------------

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pdag):
            return NotImplemented
        return (
            self.names == other.names
            and self._dir == other._dir
            and self._und == other._und
        )

    def __hash__(self):
        return hash((self.names, frozenset(self._dir), frozenset(self._und)))

    def __repr__(self):
        return (
            f"Pdag({self.n} vars, {len(self._dir)} directed, "
            f"{len(self._und)} undirected)"
        )


def dag_from_edges(names: Sequence[str], edges: Iterable[Edge]) -> Pdag:
    """Build a fully directed graph and verify acyclicity."""
    g = Pdag(names)
    for u, v in edges:
        g.add_directed(u, v)
    if not g.is_acyclic():
        raise CyclicInput("edge set contains a directed cycle")
    return g


def v_structures(g: Pdag) -> set[tuple[int, int, int]]:
    """Unshielded colliders of the directed part, as (a, c, b) with a < b."""
    out = set()
    for c in range(g.n):
        pa = g.parents(c)
        for i in range(len(pa)):
            for j in range(i + 1, len(pa)):
                a, b = pa[i], pa[j]
                if not g.adjacent(a, b):
                    out.add((a, c, b))
    return out


def meek_closure(g: Pdag) -> Pdag:
    """Apply Meek's orientation rules R1-R4 until fixpoint.

    Returns a new graph; the input is not modified.  The directed part of
    the input must be acyclic.
    """
    if not g.is_acyclic():
        raise CyclicInput("directed part contains a cycle")
    out = g.copy()
    changed = True
    while changed:
        changed = False
        for a, b in list(out._und):
            for u, v in ((a, b), (b, a)):
                if _meek_compels(out, u, v):
                    out.direct(u, v)
                    changed = True
                    break
    return out


def _meek_compels(g: Pdag, u: int, v: int) -> bool:
    """True when some Meek rule orients the undirected edge u-v as u -> v."""
    # R1: a -> u, a not adjacent to v.
    for a in g.parents(u):
        if not g.adjacent(a, v):
            return True
    # R2: u -> w -> v.
    for w in g.children(u):
        if g.has_directed(w, v):
            return True
    # R3: u - c, u - d, c -> v, d -> v, c and d non-adjacent.
    cand = [c for c in g.undirected_neighbors(u) if g.has_directed(c, v)]
    for i in range(len(cand)):
        for j in range(i + 1, len(cand)):
            if not g.adjacent(cand[i], cand[j]):
                return True
    # R4: d -> c -> v with u adjacent to d and v, d non-adjacent.
    for c in g.parents(v):
        if c == u:
            continue
        for d in g.parents(c):
            if d != u and d != v and g.adjacent(u, d) and not g.adjacent(v, d):
                return True
    return False


def cpdag_of_dag(d: Pdag) -> Pdag:
    """The CPDAG of d's Markov equivalence class.

    Keeps exactly the edges participating in unshielded colliders directed,
    undirects the rest, and closes under the Meek rules.
    """
    if not d.is_fully_directed():
        raise NotADag("input has undirected edges")
    if not d.is_acyclic():
        raise NotADag("input is cyclic")
    keep: set[Edge] = set()
    for a, c, b in v_structures(d):
        keep.add((a, c))
        keep.add((b, c))
    g = Pdag(d.names)
    for u, v in d.directed_edges():
        if (u, v) in keep:
            g.add_directed(u, v)
        else:
            g.add_undirected(u, v)
    return meek_closure(g)


def collider_pdag_of_dag(d: Pdag) -> Pdag:
    """Reference partially directed graph used by the benchmark harness.

    Unlike :func:`cpdag_of_dag` this keeps every in-edge of every node with
    two or more parents directed, shielded colliders included, then closes
    under the Meek rules.  It is the construction behind the published
    ground-truth baseline scores; on graphs whose only colliders are
    shielded it orients strictly more edges than the exact CPDAG.
    """
    if not d.is_fully_directed():
        raise NotADag("input has undirected edges")
    if not d.is_acyclic():
        raise NotADag("input is cyclic")
    g = Pdag(d.names)
    for u, v in d.directed_edges():
        if len(d.parents(v)) >= 2:
            g.add_directed(u, v)
        else:
            g.add_undirected(u, v)
    return meek_closure(g)


def consistent_extensions(
    g: Pdag, cap: int = 4096, preserve_v_structures: bool = True
) -> list[Pdag]:
    """All DAGs obtained by orienting g's undirected edges.

    Every returned graph shares g's skeleton, agrees with g's directed
    marks, and is acyclic.  With ``preserve_v_structures`` (the default,
    and the right semantics when g is a CPDAG) extensions must additionally
    have exactly the unshielded colliders of g.  Raises
    :class:`TooManyExtensions` as soon as more than ``cap`` extensions are
    found.  Enumeration order is deterministic.
    """
    if not g.is_acyclic():
        return []
    base_v = v_structures(g) if preserve_v_structures else None
    pending = g.undirected_edges()
    out: list[Pdag] = []
    work = g.copy()

    def recurse(i: int) -> None:
        if i == len(pending):
            if base_v is not None and v_structures(work) != base_v:
                return
            if len(out) >= cap:
                raise TooManyExtensions(cap)
            out.append(work.copy())
            return
        a, b = pending[i]
        for u, v in ((a, b), (b, a)):
            # Orienting u -> v closes a cycle iff v already reaches u.
            if work.has_directed_path(v, u):
                continue
            work.direct(u, v)
            recurse(i + 1)
            work.undirect(u, v)

    recurse(0)
    return out


def d_separated(d: Pdag, x: int, y: int, z: frozenset | set) -> bool:
    """d-separation of x and y given z in the DAG d (reachability method)."""
    if not d.is_fully_directed():
        raise NotADag("d-separation is defined on DAGs here")
    if x == y:
        return False
    z = set(z)
    if x in z or y in z:
        raise ValueError("endpoints must not be conditioned on")
    # Ancestors of z (z included) unblock colliders.
    anc_z = set(z)
    stack = list(z)
    while stack:
        u = stack.pop()
        for p in d.parents(u):
            if p not in anc_z:
                anc_z.add(p)
                stack.append(p)
    # States: (node, came_from_child). Start as if entering x from a child.
    seen = set()
    stack2 = [(x, True)]
    while stack2:
        node, up = stack2.pop()
        if (node, up) in seen:
            continue
        seen.add((node, up))
        if node != x and node == y:
            return False
        if up and node not in z:
            for p in d.parents(node):
                if p == y:
                    return False
                stack2.append((p, True))
            for c in d.children(node):
                if c == y:
                    return False
                stack2.append((c, False))
        elif not up:
            if node not in z:
                for c in d.children(node):
                    if c == y:
                        return False
                    stack2.append((c, False))
            if node in anc_z:
                for p in d.parents(node):
                    if p == y:
                        return False
                    stack2.append((p, True))
    return True


@dataclass
class FaultSpec:
    """Counts of structural faults to inject into a ground-truth DAG."""

    remove: int = 0
    flip: int = 0
    undirect: int = 0
    rng_seed: int = 0


def inject_faults(d: Pdag, spec: FaultSpec) -> tuple[Pdag, Optional[Edge]]:
    """Perturb a DAG by removing, flipping, and undirecting edges.

    Faults are applied in that order; flips are rejection-sampled so the
    result stays acyclic.  Returns the perturbed graph together with the
    probe edge (the last edge undirected, in its original orientation), or
    None when ``spec.undirect`` is zero.  Deterministic given the seed.
    """
    if not d.is_fully_directed() or not d.is_acyclic():
        raise NotADag("fault injection starts from a DAG")
    rng = random.Random(spec.rng_seed)
    g = d.copy()
    remaining = d.directed_edges()
    if spec.remove + spec.flip + spec.undirect > len(remaining):
        raise Infeasible("more faults requested than edges available")

    if spec.remove:
        removed = rng.sample(remaining, spec.remove)
        for u, v in removed:
            g.remove_edge(u, v)
        remaining = [e for e in remaining if e not in set(removed)]

    if spec.flip:
        pool = list(remaining)
        rng.shuffle(pool)
        flipped: list[Edge] = []
        for u, v in pool:
            if len(flipped) == spec.flip:
                break
            g.remove_edge(u, v)
            g.add_directed(v, u)
            if g.is_acyclic():
                flipped.append((u, v))
            else:
                g.remove_edge(v, u)
                g.add_directed(u, v)
        if len(flipped) != spec.flip:
            raise Infeasible("could not flip the requested number of edges")
        remaining = [e for e in remaining if e not in set(flipped)]

    probe: Optional[Edge] = None
    if spec.undirect:
        chosen = rng.sample(remaining, spec.undirect)
        for u, v in chosen:
            g.undirect(u, v)
        probe = chosen[-1]
    return g, probe


def topological_layers(d: Pdag) -> list[int]:
    """Longest-path layer index per node; every edge goes to a deeper layer."""
    layer = [0] * d.n
    for v in d.topological_order():
        pa = d.parents(v)
        if pa:
            layer[v] = 1 + max(layer[p] for p in pa)
    return layer


# -- edge-list text format ----------------------------------------------


def write_edgelist(g: Pdag) -> str:
    """Serialize to the plain text edge-list format.

    One edge per line (``a -> b`` or ``a -- b``), isolated variables on
    their own line, ``#`` starts a comment.  Round-trip stable.
    """
    lines = []
    touched: set[int] = set()
    for u, v in g.directed_edges():
        lines.append(f"{g.names[u]} -> {g.names[v]}")
        touched.update((u, v))
    for u, v in g.undirected_edges():
        lines.append(f"{g.names[u]} -- {g.names[v]}")
        touched.update((u, v))
    for v in range(g.n):
        if v not in touched:
            lines.append(g.names[v])
    return "\n".join(lines) + "\n"


def read_edgelist(text: str, names: Optional[Sequence[str]] = None) -> Pdag:
    """Parse the edge-list text format.

    When ``names`` is omitted, variables are numbered in order of first
    appearance.
    """
    entries: list[tuple[str, Optional[str], Optional[str]]] = []
    order: list[str] = []
    seen: set[str] = set()

    def note(name: str) -> None:
        if name not in seen:
            seen.add(name)
            order.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if " -> " in line:
            a, b = (s.strip() for s in line.split(" -> ", 1))
            kind = "->"
        elif " -- " in line:
            a, b = (s.strip() for s in line.split(" -- ", 1))
            kind = "--"
        else:
            if len(line.split()) != 1:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
            note(line)
            continue
        if not a or not b:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
        note(a)
        note(b)
        entries.append((a, kind, b))

    use_names = list(names) if names is not None else order
    g = Pdag(use_names)
    idx = {n: i for i, n in enumerate(use_names)}
    for a, kind, b in entries:
        try:
            u, v = idx[a], idx[b]
        except KeyError as exc:
            raise KeyError(f"unknown variable {exc.args[0]!r}") from None
        if kind == "->":
            g.add_directed(u, v)
        else:
            g.add_undirected(u, v)
    return g
