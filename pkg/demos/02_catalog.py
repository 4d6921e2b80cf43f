"""The density domination exponent rho(G, H) and its catalog.

rho(G, H) is the best exponent c such that t(H, W) >= t(G, W)^c holds for
every target graphon W with t(G, W) > 0.  The catalog dispatches (G, H)
over named graph families and returns an exact value, a bracket, or a
conjectured value, each with provenance tags naming the argument used.
"""

from rhokit import blowup_upper_bound, complete, cycle, majorization_chain, multipartite, rho_exact

PAIRS = [
    ("P1", "P2"),        # an edge vs the 2-edge path: the classical 2
    ("P3", "P2"),        # shorter path in a longer one
    ("K3", "K2"),        # triangle vs edge: Kruskal-Katona's 2/3
    ("C5", "C4"),        # long odd cycle vs the 4-cycle: spectral
    ("C3", "C4"),        # the famous open bracket [3/2, 8/5]
    ("P5", "P3"),        # open path case, bracketed [7/10, 3/4]
    ("K[2,1]", "K[3,2]"),  # growing both sides of a biclique
    ("K3", "Khub[1,1,1]"),  # clique with pendant hubs
    ("paw", "C4"),       # triangle+pendant vs the square: 4/3
    ("K2", "K3"),        # no triangle in an edge: infinite
]

for g, h in PAIRS:
    res = rho_exact(g, h)
    if res.status == "exact":
        desc = f"= {res.value}"
    elif res.status == "interval":
        desc = f"in [{res.lower}, {res.upper}]"
    else:
        desc = res.status
    print(f"rho({g:9s}, {h:12s}) {desc:18s} via {res.provenance[0]}")

# --- majorization ----------------------------------------------------------

# among complete multipartite graphs with the same vertex count, densities
# are monotone along the majorization order; the chain witnesses the
# comparison one unit-move at a time
print()
print("majorization chain (5,1,1,1) -> (2,2,2,2):")
for step in majorization_chain((5, 1, 1, 1), (2, 2, 2, 2)):
    print("  ", step)

# --- blowup upper bounds ---------------------------------------------------

# placing H inside an iterated blowup of G caps the exponent by the clone
# count product
print()
print("blowup bound rho(K2, C4) <=", blowup_upper_bound(complete(2), cycle(4)))
print("blowup bound rho(K3, K[2,1,1]) <=",
      blowup_upper_bound(complete(3), multipartite([2, 1, 1])))
