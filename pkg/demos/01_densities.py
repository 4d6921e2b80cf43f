"""Computing homomorphism counts and densities on step graphons.

A step graphon is a symmetric block model: a mass for each block and a
weight in [0,1] for each pair of blocks (the diagonal carries loops).
Homomorphism densities t(G, W) generalize subgraph densities of finite
graphs; this script walks through the basic evaluators.
"""

import math

from rhokit import (
    WeightedGraph,
    complete,
    cycle,
    cycle_density_spectral,
    density,
    hom_count,
    parse_graph_spec,
    path,
    spectrum,
)

# --- counting into finite graphs -------------------------------------------

# hom(C_k, K_q) has the classical closed form (q-1)^k + (-1)^k (q-1)
for k in (3, 4, 5):
    print(f"hom(C{k}, K4) = {hom_count(cycle(k), complete(4))}"
          f"  (closed form {3**k + (-1) ** k * 3})")

# mapping a clique onto itself counts its automorphisms: n!
for n in (3, 4, 5):
    print(f"hom(K{n}, K{n}) = {hom_count(complete(n), complete(n))} = {n}!")

# --- densities in a step graphon -------------------------------------------

# two equal communities, dense inside, sparse across
w = WeightedGraph(
    masses=[0.5, 0.5],
    weights=[[0.8, 0.1], [0.1, 0.8]],
)

print()
for spec in ("P1", "P3", "C3", "C4", "K4", "paw"):
    g = parse_graph_spec(spec)
    print(f"t({spec}, W) = {density(g, w):.6f}")

# on the constant graphon W == p every density is p^{|E|}
wp = WeightedGraph.constant(0.3)
assert math.isclose(density(path(3), wp), 0.3**3)
assert math.isclose(density(complete(4), wp), 0.3**6)

# --- spectral shortcut for cycles ------------------------------------------

# t(C_k, W) equals the k-th power-sum of the eigenvalues of the
# mass-weighted kernel; both evaluations agree to machine precision
lam = spectrum(w)
print(f"\nspectrum: {lam}")
for k in (3, 4, 6):
    a = cycle_density_spectral(k, w)
    b = density(cycle(k), w)
    print(f"t(C{k}): spectral {a:.12f}  contraction {b:.12f}")
