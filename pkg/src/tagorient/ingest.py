"""Reading Bayesian networks (BIF dialect) and sampling tabular data."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

import numpy as np

from .graph_core import Pdag, dag_from_edges
from .tags import TagAssignment, parse_tag_lines


class BifParseError(ValueError):
    pass


@dataclass(frozen=True)
class BifVariable:
    name: str
    states: tuple[str, ...]


class BifNetwork:
    """A discrete Bayesian network: structure, state spaces and CPTs."""

    def __init__(self, name: str):
        self.name = name
        self.properties: dict[str, str] = {}
        self.variables: list[BifVariable] = []
        self.parents: dict[str, tuple[str, ...]] = {}
        # cpts[v] has one row per parent-state combination (first parent
        # most significant) and one column per state of v.
        self.cpts: dict[str, np.ndarray] = {}
        self._index: dict[str, int] = {}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def variable(self, name: str) -> BifVariable:
        try:
            return self.variables[self._index[name]]
        except KeyError:
            raise KeyError(f"no variable named {name!r}") from None

    def add_variable(self, name: str, states: Sequence[str]) -> None:
        if name in self._index:
            raise BifParseError(f"variable {name!r} declared twice")
        self._index[name] = len(self.variables)
        self.variables.append(BifVariable(name, tuple(states)))

    def dag(self) -> Pdag:
        names = self.names
        idx = {n: i for i, n in enumerate(names)}
        edges = [
            (idx[p], idx[v])
            for v in names
            for p in self.parents.get(v, ())
        ]
        return dag_from_edges(names, edges)

    def __repr__(self):
        return (
            f"BifNetwork({self.name!r}, {len(self.variables)} vars, "
            f"{sum(len(p) for p in self.parents.values())} arcs)"
        )


_TOKEN = re.compile(r"\"[^\"]*\"|[A-Za-z0-9_.+-]+|[{}()\[\],;|=]")


def _tokenize(text: str) -> list[str]:
    text = re.sub(r"//[^\n]*", " ", text)
    return _TOKEN.findall(text)


class _Stream:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise BifParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, want: str) -> None:
        tok = self.next()
        if tok != want:
            raise BifParseError(f"expected {want!r}, found {tok!r}")


def read_bif(text: str) -> BifNetwork:
    """Parse a BIF document into a network, validating its tables."""
    s = _Stream(_tokenize(text))
    s.expect("network")
    name_parts = []
    while s.peek() != "{":
        name_parts.append(s.next())
    net = BifNetwork(" ".join(name_parts))
    s.expect("{")
    _read_properties(s, net.properties)
    s.expect("}")

    while s.peek() is not None:
        kw = s.next()
        if kw == "variable":
            _read_variable(s, net)
        elif kw == "probability":
            _read_probability(s, net)
        else:
            raise BifParseError(f"unexpected token {kw!r}")
    _validate(net)
    return net


def _read_properties(s: _Stream, into: dict[str, str]) -> None:
    while s.peek() == "property":
        s.next()
        key = s.next()
        parts = []
        while s.peek() != ";":
            parts.append(s.next())
        s.expect(";")
        into[key] = " ".join(p.strip('"') for p in parts)


def _read_variable(s: _Stream, net: BifNetwork) -> None:
    name = s.next()
    s.expect("{")
    states: list[str] = []
    while s.peek() != "}":
        kw = s.next()
        if kw == "type":
            s.expect("discrete")
            s.expect("[")
            card = int(s.next())
            s.expect("]")
            s.expect("{")
            while s.peek() != "}":
                tok = s.next()
                if tok != ",":
                    states.append(tok)
            s.expect("}")
            s.expect(";")
            if len(states) != card:
                raise BifParseError(
                    f"variable {name!r}: {len(states)} states, "
                    f"declared {card}"
                )
        elif kw == "property":
            while s.next() != ";":
                pass
        else:
            raise BifParseError(f"variable {name!r}: unexpected {kw!r}")
    s.expect("}")
    net.add_variable(name, states)


def _read_numbers(s: _Stream) -> list[float]:
    vals = []
    while s.peek() != ";":
        tok = s.next()
        if tok == ",":
            continue
        try:
            vals.append(float(tok))
        except ValueError:
            raise BifParseError(f"expected a number, found {tok!r}") from None
    s.expect(";")
    return vals


def _read_probability(s: _Stream, net: BifNetwork) -> None:
    s.expect("(")
    target = s.next()
    parents: list[str] = []
    if s.peek() == "|":
        s.next()
        while s.peek() != ")":
            tok = s.next()
            if tok != ",":
                parents.append(tok)
    s.expect(")")
    s.expect("{")
    var = net.variable(target)
    for p in parents:
        net.variable(p)
    card = len(var.states)
    pcards = [len(net.variable(p).states) for p in parents]
    n_rows = int(np.prod(pcards)) if parents else 1
    table = np.full((n_rows, card), np.nan)

    while s.peek() != "}":
        kw = s.peek()
        if kw == "table":
            s.next()
            vals = _read_numbers(s)
            if len(vals) != n_rows * card:
                raise BifParseError(
                    f"{target!r}: table has {len(vals)} entries, "
                    f"expected {n_rows * card}"
                )
            table = np.array(vals).reshape(n_rows, card)
        elif kw == "(":
            s.next()
            combo: list[str] = []
            while s.peek() != ")":
                tok = s.next()
                if tok != ",":
                    combo.append(tok)
            s.expect(")")
            if len(combo) != len(parents):
                raise BifParseError(
                    f"{target!r}: row names {len(combo)} parents, "
                    f"expected {len(parents)}"
                )
            row = 0
            for p, st in zip(parents, combo):
                try:
                    k = net.variable(p).states.index(st)
                except ValueError:
                    raise BifParseError(
                        f"{target!r}: {p!r} has no state {st!r}"
                    ) from None
                row = row * len(net.variable(p).states) + k
            vals = _read_numbers(s)
            if len(vals) != card:
                raise BifParseError(
                    f"{target!r}: row has {len(vals)} entries, "
                    f"expected {card}"
                )
            table[row] = vals
        else:
            raise BifParseError(f"{target!r}: unexpected {kw!r}")
    s.expect("}")
    net.parents[target] = tuple(parents)
    net.cpts[target] = table


def _validate(net: BifNetwork) -> None:
    for var in net.variables:
        if var.name not in net.cpts:
            raise BifParseError(f"no probability block for {var.name!r}")
        table = net.cpts[var.name]
        if np.isnan(table).any():
            raise BifParseError(f"{var.name!r}: missing CPT rows")
        sums = table.sum(axis=1)
        if np.any(np.abs(sums - 1.0) > 1e-3):
            bad = int(np.argmax(np.abs(sums - 1.0)))
            raise BifParseError(
                f"{var.name!r}: row {bad} sums to {sums[bad]:.6f}"
            )
    if not net.dag().is_acyclic():
        raise BifParseError("network structure is cyclic")


def load_bif(path: str) -> BifNetwork:
    with open(path) as fh:
        return read_bif(fh.read())


# -- bundled data ----------------------------------------------------------


def _data_root():
    return resources.files(__package__) / "data"


def bundled_networks() -> list[str]:
    root = _data_root() / "networks"
    return sorted(p.name[: -len(".bif")] for p in root.iterdir()
                  if p.name.endswith(".bif"))


def load_network(name: str) -> BifNetwork:
    path = _data_root() / "networks" / f"{name}.bif"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise FileNotFoundError(
            f"no bundled network named {name!r}; "
            f"available: {', '.join(bundled_networks())}"
        ) from None
    return read_bif(text)


def load_bundled_tags(name: str, variables: Sequence[str]) -> TagAssignment:
    path = _data_root() / "tags" / f"{name}.tags"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise FileNotFoundError(f"no bundled tags for {name!r}") from None
    return parse_tag_lines(text, variables)


# -- sampled data -----------------------------------------------------------


class DataTable:
    """Columns of categorical observations, stored as state indices."""

    def __init__(
        self,
        names: Sequence[str],
        states: Sequence[Sequence[str]],
        values: np.ndarray,
    ):
        self.names = tuple(names)
        self.states = tuple(tuple(s) for s in states)
        if len(self.names) != len(self.states):
            raise ValueError("one state list per column required")
        vals = np.asarray(values, dtype=np.int64)
        if vals.ndim != 2 or vals.shape[1] != len(self.names):
            raise ValueError("values must be rows x columns")
        self.values = vals

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    def column(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no column named {name!r}") from None

    def cardinality(self, col: int) -> int:
        return len(self.states[col])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.names)
        for row in self.values:
            w.writerow([self.states[c][k] for c, k in enumerate(row)])
        return buf.getvalue()

    @classmethod
    def from_csv(
        cls, text: str, states: Optional[Sequence[Sequence[str]]] = None
    ) -> "DataTable":
        """Parse a header + rows of state labels.

        Without explicit ``states`` each column's states are its sorted
        distinct values, so levels absent from the data are unknown.
        """
        rows = list(csv.reader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty csv")
        names = rows[0]
        body = rows[1:]
        for r, row in enumerate(body):
            if len(row) != len(names):
                raise ValueError(f"row {r + 2}: wrong number of fields")
        if states is None:
            states = [
                tuple(sorted({r[c] for r in body}))
                for c in range(len(names))
            ]
        lookup = [
            {s: k for k, s in enumerate(col_states)} for col_states in states
        ]
        vals = np.empty((len(body), len(names)), dtype=np.int64)
        for r, row in enumerate(body):
            for c, cell in enumerate(row):
                try:
                    vals[r, c] = lookup[c][cell]
                except KeyError:
                    raise ValueError(
                        f"row {r + 2}: unknown state {cell!r} "
                        f"for column {names[c]!r}"
                    ) from None
        return cls(names, states, vals)


def forward_sample(net: BifNetwork, n: int, seed: int = 0) -> DataTable:
    """Draw n joint observations by ancestral sampling."""
    rng = np.random.default_rng(seed)
    names = net.names
    idx = {name: i for i, name in enumerate(names)}
    dag = net.dag()
    order = dag.topological_order()
    values = np.zeros((n, len(names)), dtype=np.int64)
    for v in order:
        name = names[v]
        parents = net.parents.get(name, ())
        table = net.cpts[name]
        if parents:
            rows = np.zeros(n, dtype=np.int64)
            for p in parents:
                rows = rows * len(net.variable(p).states) + values[:, idx[p]]
            probs = table[rows]
        else:
            probs = np.broadcast_to(table[0], (n, table.shape[1]))
        cum = np.cumsum(probs, axis=1)
        u = rng.random((n, 1)) * cum[:, -1:]
        values[:, v] = np.minimum(
            (u > cum).sum(axis=1), table.shape[1] - 1
        )
    states = [net.variable(name).states for name in names]
    return DataTable(names, states, values)
