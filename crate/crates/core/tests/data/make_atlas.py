"""Writes atlas.txt: every graph on 1..7 vertices from the networkx atlas.

Each line: graph6, m0, m_neg1, n_pos, n_lt_neg1, n_between, where the counts
come from numpy eigenvalues rounded at 1e-6.
"""
import networkx as nx
import numpy as np

EPS = 1e-6

with open("atlas.txt", "w") as out:
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0:
            continue
        ev = np.linalg.eigvalsh(nx.to_numpy_array(g, nodelist=sorted(g.nodes())))
        m0 = int(np.sum(np.abs(ev) < EPS))
        m1 = int(np.sum(np.abs(ev + 1) < EPS))
        pos = int(np.sum(ev > EPS))
        lt = int(np.sum(ev < -1 - EPS))
        mid = int(np.sum((ev > -1 + EPS) & (ev < -EPS)))
        assert m0 + m1 + pos + lt + mid == n
        # nearest eigenvalue to a boundary must be clearly separated
        for x in ev:
            for b in (0.0, -1.0):
                d = abs(x - b)
                assert d < 1e-9 or d > 1e-4, (n, x)
        g6 = nx.to_graph6_bytes(g, nodes=sorted(g.nodes()), header=False).decode().strip()
        out.write(f"{g6} {m0} {m1} {pos} {lt} {mid}\n")
