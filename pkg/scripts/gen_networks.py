"""Emit the bundled benchmark networks as BIF files.

Canonical parameters are written where public; synthetic conditional
tables are drawn from a seeded gamma sampler elsewhere and flagged with a
``synthetic_parameters`` network property.  Run from the repository root:

    python3 scripts/gen_networks.py
"""

import itertools
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from network_defs import APPROX_PARAMS, NETWORKS

OUT = Path(__file__).resolve().parent.parent / "src" / "tagorient" / "data" / "networks"


def synth_row(rng: random.Random, k: int) -> list[float]:
    """A random probability row, biased away from uniform."""
    raw = [rng.gammavariate(0.8, 1.0) + 1e-3 for _ in range(k)]
    total = sum(raw)
    row = [round(x / total, 6) for x in raw]
    row[-1] = round(1.0 - sum(row[:-1]), 6)
    return row


def rows_for(name, var, states, parents, cpts, rng):
    k = len(states[var])
    pstates = [states[p] for p in parents[var]]
    combos = list(itertools.product(*pstates)) if pstates else [()]
    table = {}
    for combo in combos:
        if cpts is not None:
            table[combo] = cpts[var][combo]
        else:
            table[combo] = synth_row(rng, k)
    return table


def render(name, states, parents, cpts) -> str:
    rng = random.Random(f"networks::{name}")
    lines = [f"network {name} {{"]
    if cpts is None or name in APPROX_PARAMS:
        lines.append('  property synthetic_parameters "yes" ;')
    lines.append("}")
    for var in states:
        vals = ", ".join(states[var])
        lines.append(f"variable {var} {{")
        lines.append(f"  type discrete [ {len(states[var])} ] {{ {vals} }};")
        lines.append("}")
    for var in states:
        table = rows_for(name, var, states, parents, cpts, rng)
        ps = parents[var]
        if not ps:
            row = ", ".join(format(x, "g") for x in table[()])
            lines.append(f"probability ( {var} ) {{")
            lines.append(f"  table {row};")
            lines.append("}")
        else:
            head = ", ".join(ps)
            lines.append(f"probability ( {var} | {head} ) {{")
            for combo, row in table.items():
                label = ", ".join(combo)
                vals = ", ".join(format(x, "g") for x in row)
                lines.append(f"  ({label}) {vals};")
            lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (states, parents, cpts) in NETWORKS.items():
        path = OUT / f"{name}.bif"
        path.write_text(render(name, states, parents, cpts))
        print("wrote", path)


if __name__ == "__main__":
    main()
