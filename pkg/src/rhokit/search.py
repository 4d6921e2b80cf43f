"""Numerical search for step graphons maximizing log t(H,W)/log t(G,W).

The maximized ratio is a certified lower bound on the domination exponent
rho(G,H).  The optimizer is multi-start projected gradient ascent over the
block masses (probability simplex with a floor) and the symmetric weight
matrix (entries clipped to [0,1]), with exact analytic gradients obtained
by pinning tensor-network indices.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .density import _contract, density, log_density
from .errors import DiscrepancyError, DomainError
from .graphs import Graph, WeightedGraph, parse_graph_spec
from .verify import PROFILES, sample_weighted_graph


@functools.lru_cache(maxsize=256)
def _edge_deleted(g):
    return tuple(
        (u, v, Graph.from_edges(g.vertex_count, g.edges - {(u, v)}))
        for u, v in sorted(g.edges)
    )


def density_gradient(g, w):
    """Analytic gradient of t(g, w): (d/d masses, d/d weights).

    The weight gradient is taken with respect to the shared symmetric
    parameters: entry (i,j), i != j, is the derivative when w[i,j] and
    w[j,i] move together; the diagonal moves alone.  Matches a central
    finite difference that perturbs symmetrically.
    """
    nv = g.vertex_count
    k = w.block_count
    mass_factors = [w.masses] * nv
    ones = np.ones(k)

    grad_mass = np.zeros(k)
    for v in range(nv):
        factors = list(mass_factors)
        factors[v] = ones
        grad_mass += np.asarray(_contract(g, factors, w.weights, out_vertices=(v,)))

    grad_weight = np.zeros((k, k))
    for u, v, rest in _edge_deleted(g):
        r = np.asarray(_contract(rest, mass_factors, w.weights, out_vertices=(u, v)))
        grad_weight += r
    grad_weight = grad_weight + grad_weight.T - np.diag(np.diag(grad_weight))
    return grad_mass, grad_weight


def ratio_objective(g, h, w):
    """(ratio, d ratio/d masses, d ratio/d weights) for
    ratio = log t(H,W)/log t(G,W); requires 0 < t(G,W) < 1."""
    tg = density(g, w)
    th = density(h, w)
    if not 0.0 < tg < 1.0:
        raise DomainError("ratio objective needs 0 < t(G,W) < 1")
    if th <= 0.0:
        raise DomainError("ratio objective needs t(H,W) > 0")
    lg, lh = math.log(tg), math.log(th)
    gm, gw = density_gradient(g, w)
    hm, hw = density_gradient(h, w)
    # d(log t)/dx = (dt/dx)/t; quotient rule on lh/lg
    dm = (hm / th * lg - lh * gm / tg) / lg**2
    dw = (hw / th * lg - lh * gw / tg) / lg**2
    return lh / lg, dm, dw


def _project_simplex(v, floor):
    """Euclidean projection onto {x : x >= floor, sum x = 1}."""
    k = v.size
    if k * floor >= 1.0:
        raise DomainError("mass floor too large for the block count")
    u = v - floor
    budget = 1.0 - k * floor
    # sort-based projection of u onto the scaled simplex
    s = np.sort(u)[::-1]
    css = np.cumsum(s) - budget
    idx = np.arange(1, k + 1)
    cond = s - css / idx > 0
    rho = idx[cond][-1]
    theta = css[rho - 1] / rho
    return np.maximum(u - theta, 0.0) + floor


@dataclass(frozen=True)
class SearchConfig:
    block_counts: tuple = (2, 3)
    restarts: int = 6
    iterations: int = 200
    step0: float = 0.25
    seed: int = 0
    mass_floor: float = 1e-3
    margin: float = 1e-6  # keep t(G,W) <= 1 - margin so the ratio exists


@dataclass(frozen=True)
class SearchResult:
    g_spec: str
    h_spec: str
    best_ratio: float
    best_graphon: WeightedGraph
    catalog_upper: float  # inf when no finite upper bound is known
    restarts: int
    config: SearchConfig = field(repr=False, default=None)

    def to_json(self):
        return {
            "g": self.g_spec,
            "h": self.h_spec,
            "best_ratio": self.best_ratio,
            "catalog_upper": None if math.isinf(self.catalog_upper) else self.catalog_upper,
            "restarts": self.restarts,
            "blocks": self.best_graphon.block_count,
            "masses": self.best_graphon.masses.tolist(),
            "weights": self.best_graphon.weights.tolist(),
        }


def _structured_starts(k):
    """Deterministic starting points worth trying at every block count."""
    starts = [WeightedGraph(np.full(k, 1.0 / k), np.full((k, k), 0.5))]
    if k >= 2:
        w = np.zeros((k, k))
        w[0, 0] = 1.0
        starts.append(WeightedGraph(np.full(k, 1.0 / k), w))  # half-block style
        starts.append(WeightedGraph(np.full(k, 1.0 / k), np.eye(k)))  # disjoint cliques
        w = np.zeros((k, k))
        w[0, :] = 1.0
        w[:, 0] = 1.0
        starts.append(WeightedGraph(np.full(k, 1.0 / k), w))  # looped hub
    return starts


def _feasible(g, h, w, margin):
    tg = density(g, w)
    return 0.0 < tg <= 1.0 - margin and density(h, w) > 0.0


def _ascend(g, h, w, cfg):
    """Projected gradient ascent from one starting point; returns the best
    (ratio, WeightedGraph) seen."""
    masses = w.masses.copy()
    weights = w.weights.copy()
    best = (ratio_objective(g, h, WeightedGraph(masses, weights))[0], WeightedGraph(masses, weights))
    for _ in range(cfg.iterations):
        cur = WeightedGraph(masses, weights)
        ratio, dm, dw = ratio_objective(g, h, cur)
        scale = max(np.abs(dm).max(), np.abs(dw).max(), 1e-12)
        step = cfg.step0 / scale
        improved = False
        for _ in range(25):
            nm = _project_simplex(masses + step * dm, cfg.mass_floor)
            nw = np.clip(weights + step * dw, 0.0, 1.0)
            nw = (nw + nw.T) / 2
            cand = WeightedGraph(nm, nw)
            if _feasible(g, h, cand, cfg.margin):
                new_ratio = ratio_objective(g, h, cand)[0]
                if new_ratio > ratio + 1e-14:
                    masses, weights = nm, nw
                    if new_ratio > best[0]:
                        best = (new_ratio, cand)
                    improved = True
                    break
            step /= 2
        if not improved:
            break
    return best


def search_lower_bound(g_spec, h_spec, config=None, jobs=1):
    """Multi-start gradient search for the best density log-ratio.

    Raises DiscrepancyError if the search ever certifies a ratio beyond the
    catalog's upper bound for rho(G,H): that would falsify a proven bound,
    so it indicates a bug, and the result cannot be trusted.
    """
    from .catalog import rho_exact

    cfg = config or SearchConfig()
    g = g_spec if isinstance(g_spec, Graph) else parse_graph_spec(g_spec)
    h = h_spec if isinstance(h_spec, Graph) else parse_graph_spec(h_spec)
    if g.edge_count == 0 or h.edge_count == 0:
        raise DomainError("search requires both patterns to have edges")

    res = rho_exact(g, h)
    upper = math.inf if res.upper is None else float(res.upper)

    feasible_starts = []
    for k in cfg.block_counts:
        starts = _structured_starts(k)
        for r in range(cfg.restarts):
            profile = PROFILES[r % len(PROFILES)]
            starts.append(sample_weighted_graph(profile, k, cfg.seed + 1000 * k + r))
        feasible_starts.extend(w0 for w0 in starts if _feasible(g, h, w0, cfg.margin))

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda w0: _ascend(g, h, w0, cfg), feasible_starts))
    else:
        outcomes = [_ascend(g, h, w0, cfg) for w0 in feasible_starts]

    best_ratio = -math.inf
    best_w = None
    tried = len(feasible_starts)
    for ratio, w_best in outcomes:
        if ratio > best_ratio:
            best_ratio, best_w = ratio, w_best
    if best_w is None:
        raise DomainError("no feasible starting graphon found")

    if best_ratio > upper + 1e-6:
        raise DiscrepancyError(
            f"search ratio {best_ratio} exceeds the certified upper bound "
            f"{upper} for rho({g_spec}, {h_spec})"
        )
    return SearchResult(
        g_spec=str(g_spec),
        h_spec=str(h_spec),
        best_ratio=best_ratio,
        best_graphon=best_w,
        catalog_upper=upper,
        restarts=tried,
        config=cfg,
    )
