"""Validate the bundled network structures against the reference scores.

For each network: arc count, undirected-edge count of the reference
partially directed graph (equals its SHD against the source DAG), recall,
and F1; also reports the exact-CPDAG undirected count for comparison.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from network_defs import NETWORKS
from tagorient.graph_core import (
    cpdag_of_dag,
    collider_pdag_of_dag,
    dag_from_edges,
)

GOLDEN = {
    # name: (nodes, arcs, shd, recall, f1)
    "cancer": (5, 4, 0, 1.00, 1.00),
    "earthquake": (5, 4, 0, 1.00, 1.00),
    "survey": (6, 6, 0, 1.00, 1.00),
    "asia": (8, 8, 3, 0.62, 0.77),
    "lucas": (12, 12, 1, 0.92, 0.96),
    "child": (20, 25, 10, 0.60, 0.75),
    "alarm": (37, 46, 4, 0.91, 0.95),
    "insurance": (27, 52, 2, 0.96, 0.98),
    "hailfinder": (56, 66, 17, 0.74, 0.85),
}


def main():
    ok = True
    for name, (states, parents, _) in NETWORKS.items():
        names = list(states)
        idx = {v: i for i, v in enumerate(names)}
        edges = [(idx[p], idx[v]) for v, ps in parents.items() for p in ps]
        d = dag_from_edges(names, edges)
        ref = collider_pdag_of_dag(d)
        exact = cpdag_of_dag(d)
        n_arcs = len(edges)
        shd = len(ref.undirected_edges())
        recall = (n_arcs - shd) / n_arcs
        f1 = 2 * recall / (1 + recall)
        g_nodes, g_arcs, g_shd, g_r, g_f1 = GOLDEN[name]
        line_ok = (
            d.n == g_nodes
            and n_arcs == g_arcs
            and shd == g_shd
            and abs(recall - g_r) <= 0.005 + 1e-9
            and abs(f1 - g_f1) <= 0.005 + 1e-9
        )
        ok &= line_ok
        print(
            f"{name:11s} nodes={d.n:3d} arcs={n_arcs:3d} "
            f"ref_undirected={shd:3d} recall={recall:.4f} f1={f1:.4f} "
            f"exact_cpdag_undirected={len(exact.undirected_edges()):3d} "
            f"{'OK' if line_ok else 'MISMATCH'}"
        )
    print("ALL OK" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
