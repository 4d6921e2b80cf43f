"""Homomorphism counts and homomorphism densities on step graphons.

The core evaluator contracts one tensor index per pattern vertex: each
vertex contributes its block-mass vector, each edge contributes the block
weight matrix.  numpy's einsum performs the vertex-elimination dynamic
program; a configurable cap rejects contractions whose cheapest greedy
order is still too large.  Density products can be re-evaluated in log
space when the float64 result underflows (constructions drive densities
toward 0).
"""

from __future__ import annotations

import itertools
import math
import os
import re
import string

import numpy as np

from .errors import DomainError, EnumerationCapError
from .graphs import Graph, WeightedGraph, path

DEFAULT_ENUM_CAP = 10**8
_LOGSPACE_BRUTE_CAP = 10**6
_LETTERS = string.ascii_letters


def enumeration_cap():
    """Current enumeration cap; override with env var RHOKIT_ENUM_CAP."""
    raw = os.environ.get("RHOKIT_ENUM_CAP")
    if raw:
        return int(float(raw))
    return DEFAULT_ENUM_CAP


def _contract(g, vertex_factors, weights, out_vertices=(), cap=None):
    """Contract the density tensor network of pattern g.

    vertex_factors[v] is the length-k vector multiplied in for vertex v
    (normally the block masses).  out_vertices are left free, producing an
    array with one axis per free vertex, in the given order.
    """
    nv = g.vertex_count
    if nv == 0:
        return 1.0
    if nv > len(_LETTERS):
        raise EnumerationCapError(f"patterns with more than {len(_LETTERS)} vertices unsupported")
    cap = cap if cap is not None else enumeration_cap()
    k = weights.shape[0]

    subs = []
    ops = []
    for v in range(nv):
        subs.append(_LETTERS[v])
        ops.append(vertex_factors[v])
    for u, v in sorted(g.edges):
        subs.append(_LETTERS[u] + _LETTERS[v])
        ops.append(weights)
    out = "".join(_LETTERS[v] for v in out_vertices)
    expr = ",".join(subs) + "->" + out

    if float(k) ** nv > cap:
        _, info = np.einsum_path(expr, *ops, optimize="greedy")
        m = re.search(r"Largest intermediate:\s*([0-9.eE+]+)", info)
        if m is None or float(m.group(1)) > cap:
            raise EnumerationCapError(
                f"{k}^{nv} maps exceed the enumeration cap {cap} and no "
                f"cheap contraction order was found"
            )
    result = np.einsum(expr, *ops, optimize="greedy")
    return result if out else float(result)


def hom_count(g, target):
    """Exact number of edge-preserving vertex maps V(g) -> V(target)."""
    if not isinstance(target, Graph):
        raise DomainError("hom_count target must be a Graph")
    if g.vertex_count == 0:
        return 1
    if target.vertex_count == 0:
        return 0
    adj = target.adjacency()
    ones = np.ones(target.vertex_count, dtype=np.int64)
    result = _contract(g, [ones] * g.vertex_count, adj)
    if isinstance(result, float):
        result = int(round(result))
    return int(result)


def density(g, w):
    """Homomorphism density t(g, w) of a pattern graph in a step graphon."""
    t = _contract(g, [w.masses] * g.vertex_count, w.weights)
    t = float(t)
    # all terms are nonnegative; clamp float noise at the boundary
    return min(max(t, 0.0), 1.0)


def log_density(g, w):
    """log t(g, w); -inf when the density is exactly 0.

    Falls back to a log-space brute-force summation when the float64
    contraction underflows but a positive map exists.
    """
    t = density(g, w)
    if t > 0.0:
        return math.log(t)
    k = w.block_count
    if float(k) ** g.vertex_count <= _LOGSPACE_BRUTE_CAP:
        return _logspace_bruteforce(g, w)
    return -math.inf


def _logspace_bruteforce(g, w):
    nv = g.vertex_count
    if nv == 0:
        return 0.0
    k = w.block_count
    log_m = np.log(w.masses)
    with np.errstate(divide="ignore"):
        log_w = np.log(w.weights)
    edges = sorted(g.edges)
    terms = []
    for phi in itertools.product(range(k), repeat=nv):
        s = sum(log_m[b] for b in phi)
        ok = True
        for u, v in edges:
            lw = log_w[phi[u], phi[v]]
            if lw == -math.inf:
                ok = False
                break
            s += lw
        if ok:
            terms.append(s)
    if not terms:
        return -math.inf
    m = max(terms)
    return m + math.log(sum(math.exp(t - m) for t in terms))


def spectrum(w):
    """Eigenvalues of the symmetrized mass-weighted kernel
    D^{1/2} weights D^{1/2}, D = diag(masses)."""
    d = np.sqrt(w.masses)
    m = d[:, None] * w.weights * d[None, :]
    return np.linalg.eigvalsh(m)


def cycle_density_spectral(k, w):
    """Sum of k-th powers of the spectrum; equals t(C_k, w) for k >= 3."""
    if k < 1:
        raise DomainError("cycle length must be >= 1")
    lam = spectrum(w)
    return float(np.sum(lam**k))


def common_neighborhood_mass(blocks, w):
    """Mass of the common neighborhood of a multiset of blocks:
    sum_u mu_u * prod_{v in blocks} weights[v, u]."""
    blocks = list(blocks)
    if not blocks:
        raise DomainError("block multiset must be nonempty")
    k = w.block_count
    if any(not (0 <= b < k) for b in blocks):
        raise DomainError(f"block index out of range for {k} blocks")
    prod = np.ones(k)
    for b in blocks:
        prod = prod * w.weights[b]
    return float(np.dot(w.masses, prod))


def generalized_star_density(n, x, w):
    """Density of the star K_{n,x} with a real exponent x >= 0:
    sum over n-tuples of blocks of (mass product) * (common nbhd mass)^x.

    0^0 = 1, so x = 0 always gives 1.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    if x < 0:
        raise DomainError("x must be nonnegative")
    k = w.block_count
    if float(k) ** n > enumeration_cap():
        raise EnumerationCapError(f"{k}^{n} center tuples exceed the enumeration cap")
    total = 0.0
    for tup in itertools.product(range(k), repeat=n):
        mu = 1.0
        for b in tup:
            mu *= w.masses[b]
        d = common_neighborhood_mass(tup, w)
        total += mu * (1.0 if x == 0 else d**x)
    return float(total)


def generalized_path_density(alpha, r, beta, w):
    """Density of the r-edge path with fractional pendant edges of weight
    alpha and beta at its two endpoints (endpoint degree powers)."""
    if not (0 <= alpha <= 1 and 0 <= beta <= 1):
        raise DomainError("alpha, beta must lie in [0,1]")
    if r < 0:
        raise DomainError("r must be a nonnegative integer")
    deg = w.weights @ w.masses
    # 0^0 = 1: zero-degree blocks contribute factor 1 when the exponent is 0
    start = w.masses * _pow00(deg, alpha)
    end = _pow00(deg, beta)
    step = w.weights * w.masses[None, :]
    vec = start
    for _ in range(r):
        vec = vec @ step
    return float(np.dot(vec, end))


def _pow00(base, expo):
    if expo == 0:
        return np.ones_like(base)
    return base**expo


def delta_index(g, i, vertex_cap=20):
    """max over subsets S of |S| - i*|N(S)| (empty set contributes 0)."""
    if i < 1:
        raise DomainError("i must be a positive integer")
    n = g.vertex_count
    if n > vertex_cap:
        raise EnumerationCapError(f"{n} vertices exceed the delta_index cap {vertex_cap}")
    nbrs = [g.neighbors(v) for v in range(n)]
    best = 0
    for mask in range(1 << n):
        size = 0
        nb = set()
        for v in range(n):
            if mask >> v & 1:
                size += 1
                nb |= nbrs[v]
        best = max(best, size - i * len(nb))
    return best


def independence_number(g, vertex_cap=24):
    """Size of the largest independent set (branch and bound)."""
    n = g.vertex_count
    if n > vertex_cap:
        raise EnumerationCapError(f"{n} vertices exceed the independence cap {vertex_cap}")
    nbrs = [frozenset(g.neighbors(v)) for v in range(n)]
    best = 0

    def grow(candidates, size):
        nonlocal best
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        v = min(candidates)
        grow(candidates - {v} - nbrs[v], size + 1)
        grow(candidates - {v}, size)

    grow(frozenset(range(n)), 0)
    return best


def path_density(r, w):
    """t(P_r, w); accepts r = 0 (single vertex, density 1)."""
    if r == 0:
        return 1.0
    return density(path(r), w)
