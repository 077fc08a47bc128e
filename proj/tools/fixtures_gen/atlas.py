"""Writes tests/data/atlas7.txt: every graph on at most 7 vertices up to
isomorphism, one per line as "n u-v u-v ...". Run from the repository root."""
import networkx as nx

with open("tests/data/atlas7.txt", "w") as f:
    for g in nx.graph_atlas_g():
        edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
        f.write(f"{g.number_of_nodes()} {edges}".rstrip() + "\n")
