#!/usr/bin/env python3
"""Generate graph6 corpora of all connected graphs on n vertices, up to isomorphism.

Graphs on n vertices are grown from every graph on n-1 vertices by adding one
vertex with every possible neighbourhood, then deduplicated with nauty
certificates (via pynauty). Output lines are canonically labelled and sorted,
so repeated runs are byte-identical.

    python3 scripts/generate_corpus.py --max-n 8 --out tests/data

Expected connected counts (OEIS A001349): 1 1 2 6 21 112 853 11117 261080.
"""
import argparse
import itertools
import pathlib

import networkx as nx
import pynauty


def to_nauty(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.Graph(n, directed=False, adjacency_dict=adj)


def canonical_edges(n, edges):
    g = to_nauty(n, edges)
    lab = pynauty.canon_label(g)
    relabel = {old: new for new, old in enumerate(lab)}
    return pynauty.certificate(g), tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))


def extend(graphs, n):
    seen = {}
    for edges in graphs:
        for r in range(n):
            for subset in itertools.combinations(range(n - 1), r):
                e = list(edges) + [(u, n - 1) for u in subset]
                cert, canon = canonical_edges(n, e)
                if cert not in seen:
                    seen[cert] = canon
    return list(seen.values())


def is_connected(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.is_connected(g)


def graph6(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default="tests/data")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    graphs = [()]
    for n in range(1, args.max_n + 1):
        graphs = [()] if n == 1 else extend(graphs, n)
        lines = sorted(graph6(n, e) for e in graphs if is_connected(n, e))
        (out / f"connected_n{n}.g6").write_text("".join(l + "\n" for l in lines))
        print(f"n={n}: {len(graphs)} graphs, {len(lines)} connected")


if __name__ == "__main__":
    main()
