"""Independent oracles for densities and homomorphism counts.

Deliberately implemented differently from the library's einsum-based
contraction: the density oracle materializes the full |blocks|^{|V|} grid
of vertex assignments with index broadcasting, and the hom-count oracle
enumerates vertex maps one by one.
"""

import itertools

import numpy as np


def density_oracle(g, w):
    """Direct sum over all blocks^{|V|} assignments via index broadcasting."""
    nv = g.vertex_count
    if nv == 0:
        return 1.0
    k = w.block_count
    grid = np.indices((k,) * nv).reshape(nv, -1)  # one column per assignment
    total = np.ones(grid.shape[1])
    for v in range(nv):
        total = total * w.masses[grid[v]]
    for u, v in g.edges:
        total = total * w.weights[grid[u], grid[v]]
    return float(total.sum())


def hom_count_oracle(g, target):
    """Count edge-preserving maps by exhaustive per-map checking."""
    adj = target.adjacency()
    count = 0
    for phi in itertools.product(range(target.vertex_count), repeat=g.vertex_count):
        if all(adj[phi[u], phi[v]] for u, v in g.edges):
            count += 1
    return count
