"""Regenerate the graph6 corpora in data/ from the networkx graph atlas.

The atlas lists all graphs up to isomorphism through 7 vertices; entry 0
is the order-0 graph and is skipped. Counts per order are asserted so a
broken atlas install cannot silently truncate the corpora.
"""

import pathlib
import sys

import networkx as nx

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from mycdist import Graph, write_graph6

COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main():
    by_n: dict[int, list[str]] = {n: [] for n in COUNTS}
    for atlas_graph in nx.graph_atlas_g()[1:]:
        n = atlas_graph.number_of_nodes()
        g = Graph(n, list(atlas_graph.edges()))
        by_n[n].append(write_graph6(g))
    for n, want in COUNTS.items():
        assert len(by_n[n]) == want, (n, len(by_n[n]), want)
    data = pathlib.Path(__file__).resolve().parents[1] / "data"
    data.mkdir(exist_ok=True)
    small = [g6 for n in range(1, 7) for g6 in by_n[n]]
    (data / "graphs_n1_6.g6").write_text("\n".join(small) + "\n")
    (data / "graphs_n7.g6").write_text("\n".join(by_n[7]) + "\n")
    print(f"wrote {len(small)} graphs (n 1..6) and {len(by_n[7])} graphs (n=7)")


if __name__ == "__main__":
    main()
