"""Shared generators and brute-force oracles for the test suite.

Everything here re-derives results from first principles (orientation
enumeration, path enumeration, plain dict tallies) so the tests never
validate the library against itself.
"""

import itertools

from tagorient.graph_core import CyclicInput, Pdag, dag_from_edges


def random_dag(rng, max_n=7, p=0.3, min_n=2):
    """DAG on rng.randint(min_n, max_n) nodes with edge probability p."""
    n = rng.randint(min_n, max_n)
    names = [f"v{k}" for k in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.append((order[a], order[b]))
    return dag_from_edges(names, edges)


def bounded_random_dag(rng, max_n=7, p=0.3, max_edges=11):
    """Random DAG with at most max_edges, keeping 2^m enumerations quick."""
    while True:
        d = random_dag(rng, max_n, p)
        if d.n_edges() <= max_edges:
            return d


def random_pdag(rng, max_n=7, p=0.3, orient_frac=0.5):
    """Consistent random PDAG: a completed graph plus partial knowledge.

    Starts from a random DAG's completed graph and re-directs a random
    subset of the undirected edges the way the generating DAG has them,
    so the marks always admit that DAG as an extension and closure stays
    well-defined.
    """
    from tagorient.graph_core import cpdag_of_dag

    d = random_dag(rng, max_n, p)
    g = cpdag_of_dag(d)
    for u, v in g.undirected_edges():
        if rng.random() < orient_frac:
            if d.has_directed(u, v):
                g.direct(u, v)
            else:
                g.direct(v, u)
    return g


def random_marks(rng, max_n=7, p=0.3, undirect_frac=0.5):
    """Arbitrary mixed graph (no consistency promise), for serialization."""
    d = random_dag(rng, max_n, p)
    g = d.copy()
    for u, v in d.directed_edges():
        if rng.random() < undirect_frac:
            g.undirect(u, v)
    return g


def skeleton(g):
    """Adjacent pairs of g as sorted (a, b) tuples with a < b."""
    pairs = {(min(u, v), max(u, v)) for u, v in g.directed_edges()}
    pairs.update(g.undirected_edges())
    return sorted(pairs)


def dag_vstructs(d):
    """Unshielded colliders of a DAG as (a, c, b) triples with a < b."""
    out = set()
    for c in range(d.n):
        pa = d.parents(c)
        for i in range(len(pa)):
            for j in range(i + 1, len(pa)):
                if not d.adjacent(pa[i], pa[j]):
                    out.add((pa[i], c, pa[j]))
    return out


def enumerate_mec(d):
    """Every DAG with d's skeleton and unshielded colliders, by brute force."""
    pairs = skeleton(d)
    base = dag_vstructs(d)
    out = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        edges = [
            (b, a) if bit else (a, b) for bit, (a, b) in zip(bits, pairs)
        ]
        try:
            g = dag_from_edges(d.names, edges)
        except CyclicInput:
            continue
        if dag_vstructs(g) == base:
            out.append(g)
    return out


def mec_intersection(d, members=None):
    """Reference completed graph: direction intersection over the class."""
    if members is None:
        members = enumerate_mec(d)
    out = Pdag(d.names)
    for a, b in skeleton(d):
        if all(m.has_directed(a, b) for m in members):
            out.add_directed(a, b)
        elif all(m.has_directed(b, a) for m in members):
            out.add_directed(b, a)
        else:
            out.add_undirected(a, b)
    return out


def descendants_of(d, v):
    """Strict descendants of v via child reachability."""
    seen = set()
    stack = [v]
    while stack:
        u = stack.pop()
        for w in d.children(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def ancestors_of(d, v):
    """Strict ancestors of v via parent reachability."""
    seen = set()
    stack = [v]
    while stack:
        u = stack.pop()
        for w in d.parents(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def simple_paths(g, x, y):
    """All simple paths from x to y over the skeleton, as node lists."""
    out = []
    stack = [(x, [x])]
    while stack:
        node, path = stack.pop()
        if node == y:
            out.append(path)
            continue
        for nxt in sorted(g.neighbors(node)):
            if nxt not in path:
                stack.append((nxt, path + [nxt]))
    return out


def dsep_paths(d, x, y, z):
    """d-separation of x and y given z, by checking every simple path."""
    z = set(z)
    for path in simple_paths(d, x, y):
        blocked = False
        for k in range(1, len(path) - 1):
            prev, m, nxt = path[k - 1], path[k], path[k + 1]
            collider = d.has_directed(prev, m) and d.has_directed(nxt, m)
            if collider:
                if not ({m} | descendants_of(d, m)) & z:
                    blocked = True
                    break
            elif m in z:
                blocked = True
                break
        if not blocked:
            return False
    return True


def sid_oracle(truth, pred):
    """Intervention distance recomputed with path-enumeration checks.

    For each ordered pair (i, j), adjusting for pred's parents of i is a
    mistake when a predicted parent descends from i, when the set touches
    a descendant of a node on a proper causal path from i to j, or when
    it leaves a non-causal path open once the first edge of every proper
    causal path is removed.
    """
    n = truth.n
    mistakes = 0
    for i in range(n):
        z = set(pred.parents(i))
        de_i = descendants_of(truth, i)
        for j in range(n):
            if j == i:
                continue
            if j in z:
                mistakes += j in de_i
                continue
            on_path = de_i & (ancestors_of(truth, j) | {j})
            forbidden = set(on_path)
            for w in on_path:
                forbidden |= descendants_of(truth, w)
            if z & forbidden:
                mistakes += 1
                continue
            cut = truth.copy()
            for c in truth.children(i):
                if c in on_path:
                    cut.remove_edge(i, c)
            if not dsep_paths(cut, i, j, z):
                mistakes += 1
    return mistakes


def recount_preference(g, tags, u, v):
    """Forward and backward evidence mass for u -> v, tallied from scratch.

    Counts directed edges of g per ordered tag pair into a plain dict,
    then pools over the two variables' tag pairs, skipping identical
    tags, exactly as the orientation procedure defines its Q value.
    """
    counts = {}
    for s, t in g.directed_edges():
        for a in tags.tags_of(g.names[s]):
            for b in tags.tags_of(g.names[t]):
                if a != b:
                    counts[(a, b)] = counts.get((a, b), 0) + 1
    fwd = bwd = 0
    for a in tags.tags_of(g.names[u]):
        for b in tags.tags_of(g.names[v]):
            if a == b:
                continue
            fwd += counts.get((a, b), 0)
            bwd += counts.get((b, a), 0)
    return fwd, bwd
