"""Finite simple graphs, step graphons, and the named graph families.

Pattern graphs are always simple and loop-free.  Loops and edge weights
live only on the target side, in :class:`WeightedGraph`, which represents a
step graphon by block masses and a symmetric weight matrix.

Canonical vertex numbering per family (so homomorphism counts are
reproducible):

* ``path(m)``: vertices ``0..m``, edges ``(i, i+1)``.
* ``cycle(m)``: vertices ``0..m-1``, edges ``(i, (i+1) % m)``.
* ``complete(n)``: vertices ``0..n-1``, all pairs.
* ``star(t)``: center ``0``, leaves ``1..t``.
* ``multipartite(a)``: zero parts dropped, parts laid out in the given
  order, vertices numbered part by part.
* ``hub(a)``: central clique ``0..n-1``; then for each ``i`` in order,
  ``a_i`` pendant vertices adjacent to the clique minus vertex ``i``.
* ``cycle_tail(k, l)``: odd cycle ``0..2k``, tail ``2k+1..2k+l`` hanging
  off vertex ``0``.
* ``paw``: triangle ``0,1,2`` plus pendant ``3`` attached to ``0``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GraphSpecError

MASS_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``0..vertex_count-1``.

    Isolated vertices are allowed: ``vertex_count`` may exceed the number
    of vertices covered by ``edges``.
    """

    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be nonnegative")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"loop ({u},{v}) not allowed in a simple graph")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DomainError(f"edge {e} out of range for {self.vertex_count} vertices")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, vertex_count, edges):
        return cls(vertex_count, frozenset(tuple(e) for e in edges))

    @property
    def edge_count(self):
        return len(self.edges)

    def degrees(self):
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self):
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def is_connected(self):
        if self.vertex_count <= 1:
            return True
        seen = {0}
        stack = [0]
        adj = {v: set() for v in range(self.vertex_count)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        while stack:
            u = stack.pop()
            for w in adj[u] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.vertex_count

    def relabel(self, perm):
        """Apply a vertex permutation (perm[v] = new label of v)."""
        return Graph.from_edges(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges))

    def complement_components(self):
        """Connected components of the complement graph, as sorted vertex lists."""
        n = self.vertex_count
        edge_set = self.edges
        comp_adj = {
            v: {u for u in range(n) if u != v and (min(u, v), max(u, v)) not in edge_set}
            for v in range(n)
        }
        seen = set()
        comps = []
        for v in range(n):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in comp_adj[u] - comp:
                    comp.add(w)
                    stack.append(w)
            seen |= comp
            comps.append(sorted(comp))
        return comps


# ---------------------------------------------------------------------------
# named families

FAMILIES = ("path", "cycle", "complete", "star", "multipartite", "hub", "cycle_tail")


def path(m):
    if m < 1:
        raise DomainError("path needs m >= 1 edges")
    return Graph.from_edges(m + 1, ((i, i + 1) for i in range(m)))


def cycle(m):
    if m < 3:
        raise DomainError("cycle needs m >= 3 edges")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def complete(n):
    if n < 1:
        raise DomainError("complete needs n >= 1 vertices")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(t):
    if t < 1:
        raise DomainError("star needs t >= 1 leaves")
    return Graph.from_edges(t + 1, ((0, i) for i in range(1, t + 1)))


def multipartite(sizes):
    sizes = [int(s) for s in sizes]
    if any(s < 0 for s in sizes):
        raise DomainError("part sizes must be nonnegative")
    sizes = [s for s in sizes if s > 0]
    if not sizes:
        raise DomainError("at least one positive part required")
    bounds = np.cumsum([0] + sizes)
    n = int(bounds[-1])
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def hub(sizes):
    """K'-graph: central clique of size n = len(sizes); for each i, sizes[i]
    pendant vertices adjacent to the clique minus its i-th vertex."""
    sizes = [int(s) for s in sizes]
    n = len(sizes)
    if n < 1:
        raise DomainError("hub needs at least one clique vertex")
    if any(s < 0 for s in sizes):
        raise DomainError("pendant counts must be nonnegative")
    edges = list(itertools.combinations(range(n), 2))
    nxt = n
    for i, a in enumerate(sizes):
        for _ in range(a):
            for j in range(n):
                if j != i:
                    edges.append((j, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def cycle_tail(k, ell):
    """G_{k,l}: odd cycle C_{2k+1} with a path on l edges attached at vertex 0."""
    if k < 1:
        raise DomainError("cycle_tail needs k >= 1")
    if ell < 0:
        raise DomainError("cycle_tail needs l >= 0")
    g = cycle(2 * k + 1)
    edges = set(g.edges)
    prev = 0
    for j in range(ell):
        v = 2 * k + 1 + j
        edges.add((prev, v))
        prev = v
    return Graph.from_edges(2 * k + 1 + ell, edges)


def paw():
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def standard_graph(family, params):
    params = list(params)
    if family == "path":
        return path(params[0])
    if family == "cycle":
        return cycle(params[0])
    if family == "complete":
        return complete(params[0])
    if family == "star":
        return star(params[0])
    if family == "multipartite":
        return multipartite(params)
    if family == "hub":
        return hub(params)
    if family == "cycle_tail":
        return cycle_tail(params[0], params[1])
    raise DomainError(f"unknown family {family!r}")


def family_spec(family, params):
    """Canonical spec text for a family, inverse of parse_graph_spec."""
    params = list(params)
    if family == "path":
        return f"P{params[0]}"
    if family == "cycle":
        return f"C{params[0]}"
    if family == "complete":
        return f"K{params[0]}"
    if family == "star":
        return f"S{params[0]}"
    if family == "multipartite":
        return "K[" + ",".join(str(p) for p in params) + "]"
    if family == "hub":
        return "Khub[" + ",".join(str(p) for p in params) + "]"
    if family == "cycle_tail":
        return f"Gtail[{params[0]},{params[1]}]"
    raise DomainError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# graph surgery


def blowup(g, b):
    """Replace vertex i of g by b[i] clones; clones adjacent iff originals were."""
    b = [int(x) for x in b]
    if len(b) != g.vertex_count:
        raise DomainError(f"blowup vector has length {len(b)}, expected {g.vertex_count}")
    if any(x < 1 for x in b):
        raise DomainError("blowup multiplicities must be positive")
    offs = np.cumsum([0] + b)
    edges = []
    for u, v in g.edges:
        for cu in range(offs[u], offs[u + 1]):
            for cv in range(offs[v], offs[v + 1]):
                edges.append((cu, cv))
    return Graph.from_edges(int(offs[-1]), edges)


def disjoint_union(g1, g2):
    shift = g1.vertex_count
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph.from_edges(g1.vertex_count + g2.vertex_count, edges)


# ---------------------------------------------------------------------------
# structure recognition (used by the rho catalog)


def as_path(g):
    """Return m if g is the path on m >= 1 edges, else None."""
    if g.vertex_count < 2 or g.edge_count != g.vertex_count - 1:
        return None
    deg = g.degrees()
    if max(deg) > 2 or deg.count(1) != 2 or not g.is_connected():
        return None
    return g.edge_count


def as_cycle(g):
    """Return m if g is the cycle on m >= 3 edges, else None."""
    if g.vertex_count < 3 or g.edge_count != g.vertex_count:
        return None
    if any(d != 2 for d in g.degrees()) or not g.is_connected():
        return None
    return g.vertex_count


def as_complete(g):
    n = g.vertex_count
    if n >= 1 and g.edge_count == n * (n - 1) // 2:
        return n
    return None


def as_multipartite(g):
    """Return the part sizes (nonincreasing) if g is complete multipartite, else None."""
    comps = g.complement_components()
    sizes = []
    for comp in comps:
        # each complement component must be a clique in the complement,
        # i.e. an independent set of g with all cross edges present
        for u, v in itertools.combinations(comp, 2):
            if (min(u, v), max(u, v)) in g.edges:
                return None
        sizes.append(len(comp))
    expected = 0
    total = g.vertex_count
    for s in sizes:
        expected += s * (total - s)
    if expected // 2 != g.edge_count:
        return None
    return tuple(sorted(sizes, reverse=True))


def as_star(g):
    """Return t if g is K_{1,t}, t >= 1, else None."""
    parts = as_multipartite(g)
    if parts is not None and len(parts) == 2 and parts[1] == 1 and g.vertex_count >= 2:
        return parts[0]
    return None


def as_hub(g, clique_size=None):
    """Return the pendant-count vector a if g is K'_a (central clique plus,
    for each clique vertex i, a_i pendants adjacent to the clique minus i).

    If clique_size is given, only decompositions with that central clique
    size are considered.
    """
    n_total = g.vertex_count
    sizes = [clique_size] if clique_size else range(min(n_total, 8), 1, -1)
    for n in sizes:
        if n is None or n < 2 or n > n_total:
            continue
        for clique in itertools.combinations(range(n_total), n):
            cs = set(clique)
            if any(
                (u, v) not in g.edges for u, v in itertools.combinations(clique, 2)
            ):
                continue
            counts = {v: 0 for v in clique}
            ok = True
            for v in range(n_total):
                if v in cs:
                    continue
                nb = g.neighbors(v)
                if len(nb) != n - 1 or not nb <= cs:
                    ok = False
                    break
                missing = cs - nb
                counts[missing.pop()] += 1
            if ok:
                return tuple(counts[v] for v in clique)
    return None


def is_paw(g):
    if g.vertex_count != 4 or g.edge_count != 4:
        return False
    return sorted(g.degrees()) == [1, 2, 2, 3]


# ---------------------------------------------------------------------------
# spec mini-language

_FAMILY_RE = re.compile(r"(P|C|K|S)(\d+)$")
_BRACKET_RE = re.compile(r"(K|Khub)\[([\d,\s]*)\]$")
_TAIL_RE = re.compile(r"Gtail\[(\d+)\s*,\s*(\d+)\]$")
_COPIES_RE = re.compile(r"(\d+)x(.+)$")


def parse_graph_spec(text):
    """Parse the graph mini-language into a Graph.

    Grammar: ``P<m>``, ``C<m>``, ``K<n>``, ``S<t>``, ``K[a1,a2,...]``,
    ``Khub[a1,...]``, ``Gtail[k,l]``, ``paw``, ``<n>x<spec>`` (disjoint
    copies), ``@file.edges`` (first line vertex count, remaining lines
    0-indexed edges).
    """
    if not isinstance(text, str):
        raise GraphSpecError("graph spec must be a string")
    stripped = text.strip()
    if not stripped:
        raise GraphSpecError("empty graph spec", text, 0)
    return _parse(stripped, text)


def _parse(s, full):
    pos = full.find(s)

    if s == "paw":
        return paw()

    if s.startswith("@"):
        return load_edge_list(s[1:])

    m = _COPIES_RE.match(s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise GraphSpecError("copy count must be positive", full, pos)
        g = _parse(m.group(2), full)
        out = Graph.from_edges(0, [])
        for _ in range(n):
            out = disjoint_union(out, g)
        return out

    m = _TAIL_RE.match(s)
    if m:
        return cycle_tail(int(m.group(1)), int(m.group(2)))

    m = _BRACKET_RE.match(s)
    if m:
        body = m.group(2).strip()
        if not body:
            raise GraphSpecError("empty part list", full, pos + len(m.group(1)) + 1)
        sizes = [int(p) for p in body.split(",")]
        if m.group(1) == "Khub":
            return hub(sizes)
        return multipartite(sizes)

    m = _FAMILY_RE.match(s)
    if m:
        letter, num = m.group(1), int(m.group(2))
        try:
            if letter == "P":
                return path(num)
            if letter == "C":
                return cycle(num)
            if letter == "K":
                return complete(num)
            return star(num)
        except DomainError as exc:
            raise GraphSpecError(str(exc), full, pos) from exc

    # report the position of the first character that breaks every rule
    bad = pos
    for i, ch in enumerate(s):
        if not (ch.isalnum() or ch in "[],x@. _-"):
            bad = pos + i
            break
    raise GraphSpecError(f"unrecognized graph spec {s!r}", full, bad)


def load_edge_list(path_):
    """Read a ``.edges`` file: first line vertex count, then 0-indexed pairs."""
    with open(path_) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise GraphSpecError(f"empty edge file {path_!r}")
    n = int(tokens[0])
    rest = tokens[1:]
    if len(rest) % 2 != 0:
        raise GraphSpecError(f"odd number of endpoints in {path_!r}")
    edges = [(int(rest[i]), int(rest[i + 1])) for i in range(0, len(rest), 2)]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# step graphons


class WeightedGraph:
    """A step graphon: block masses (positive, summing to 1) and a symmetric
    block weight matrix with entries in [0,1].  Diagonal entries are loop
    weights.  Instances are immutable."""

    __slots__ = ("masses", "weights")

    def __init__(self, masses, weights):
        masses = np.asarray(masses, dtype=float).copy()
        weights = np.asarray(weights, dtype=float).copy()
        if masses.ndim != 1 or masses.size < 1:
            raise DomainError("masses must be a nonempty vector")
        k = masses.size
        if weights.shape != (k, k):
            raise DomainError(f"weights must be {k}x{k}, got {weights.shape}")
        if np.any(masses <= 0):
            raise DomainError("masses must be strictly positive")
        if abs(masses.sum() - 1.0) > MASS_SUM_TOL:
            raise DomainError(f"masses must sum to 1 (got {masses.sum()!r})")
        if not np.allclose(weights, weights.T, rtol=0, atol=0):
            raise DomainError("weights must be exactly symmetric")
        if np.any(weights < 0) or np.any(weights > 1):
            raise DomainError("weights must lie in [0,1]")
        masses.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    @property
    def block_count(self):
        return self.masses.size

    @classmethod
    def from_graph(cls, g):
        """Uniform-mass 0/1 step graphon of an unweighted target graph."""
        n = g.vertex_count
        if n < 1:
            raise DomainError("target graph needs at least one vertex")
        return cls(np.full(n, 1.0 / n), g.adjacency().astype(float))

    @classmethod
    def constant(cls, p):
        return cls([1.0], [[float(p)]])

    def __eq__(self, other):
        return (
            isinstance(other, WeightedGraph)
            and np.array_equal(self.masses, other.masses)
            and np.array_equal(self.weights, other.weights)
        )

    def __hash__(self):
        return hash((self.masses.tobytes(), self.weights.tobytes()))

    def __repr__(self):
        return f"WeightedGraph(masses={self.masses.tolist()}, weights={self.weights.tolist()})"

    def dump(self, fh):
        """Write the `.graphon` text format: block count, masses line, weight rows."""
        fh.write(f"{self.block_count}\n")
        fh.write(" ".join(repr(float(x)) for x in self.masses) + "\n")
        for row in self.weights:
            fh.write(" ".join(repr(float(x)) for x in row) + "\n")

    @classmethod
    def load(cls, fh):
        tokens = fh.read().split()
        if not tokens:
            raise DomainError("empty graphon file")
        k = int(tokens[0])
        need = 1 + k + k * k
        if len(tokens) < need:
            raise DomainError(f"graphon file needs {need} numbers, found {len(tokens)}")
        masses = [float(t) for t in tokens[1 : 1 + k]]
        weights = np.array([float(t) for t in tokens[1 + k : need]]).reshape(k, k)
        return cls(masses, weights)
