"""Certifying lower bounds on rho(G, H) with extremal graphon families.

A lower bound rho(G, H) >= c is witnessed by targets W where the log-ratio
log t(H, W) / log t(G, W) approaches c.  Each construction here is a small
step-graphon family parameterized by a scale n; `certify_lower_bound`
evaluates the ratio along a schedule of scales and reports the gap to the
claimed limit.
"""

from rhokit import ConstructionFamily, certify_lower_bound

# --- exact at every scale --------------------------------------------------

# two disjoint half-measure cliques: t(C3) = 2 (1/2)^3, t(C4) = 2 (1/2)^4,
# so the log-ratio is exactly 3/2 -- the best known lower bound for (C3, C4)
rep = certify_lower_bound("C3", "C4", ConstructionFamily("two_clique"), [1], claimed=1.5)
print(f"(C3, C4) two_clique: achieved {rep.achieved}  gap {rep.gap:.2e}")

# one clique on half the space: densities (1/2)^{|V|}, ratio |V(H)|/|V(G)|
rep = certify_lower_bound("K3", "K2", ConstructionFamily("half_block"), [1], claimed=2 / 3)
print(f"(K3, K2) half_block: achieved {rep.achieved:.6f}  gap {rep.gap:.2e}")

# constant graphon: ratio |E(H)|/|E(G)| at any p in (0,1)
rep = certify_lower_bound("P1", "P2", ConstructionFamily("constant_p", (0.5,)), [1], claimed=2.0)
print(f"(P1, P2) constant:   achieved {rep.achieved}  gap {rep.gap:.2e}")

# --- limits along a scale schedule -----------------------------------------

# heavy looped block in a full bulk: the (paw, C4) ratio climbs to 4/3
fam = ConstructionFamily("paw_family")
rep = certify_lower_bound("paw", "C4", fam, [10, 1000, 10**6], claimed=4 / 3)
print("\n(paw, C4) paw_family schedule:")
for scale, lg, lh, ratio in rep.schedule:
    print(f"  n = {scale:>8}: ratio {ratio:.5f}")
print(f"claimed 4/3, achieved {rep.achieved:.5f}, gap {rep.gap:.5f}")

# looped hub with growing leaf mass: odd cycles are forced through the hub
fam = ConstructionFamily("looped_star")
rep = certify_lower_bound("C5", "C3", fam, [100, 10**4, 10**6], claimed=2 / 3)
print("\n(C5, C3) looped_star schedule:")
for scale, lg, lh, ratio in rep.schedule:
    print(f"  n = {scale:>8}: ratio {ratio:.5f}")
print(f"claimed 2/3, achieved {rep.achieved:.5f}, gap {rep.gap:.5f}")
