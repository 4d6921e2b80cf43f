"""Closed-form values, bounds and conjectures for the density domination
exponent rho(G,H), with provenance tags, plus the majorization machinery
and the finiteness test.

Provenance tags emitted by the dispatcher:

* ``identity``                  -- G and H isomorphic
* ``edgeless-target``           -- H has no edges (density is 1, exponent 0)
* ``infinite-no-hom``           -- hom(H,G)=0, exponent infinite
* ``complete-kruskal-katona``   -- complete vs complete
* ``paths-exact`` / ``paths-open``      -- path vs path
* ``even-cycles-spectral``      -- long cycle vs even cycle
* ``cycle-in-even-cycle``       -- short cycle vs longer even cycle bracket
* ``odd-cycle-pair``            -- odd cycle vs longer odd cycle bracket
* ``cycle-vs-path`` / ``path-vs-even-cycle``
* ``star-small-graph`` / ``star-edge-delta`` / ``star-delta-lower``
* ``bipartite-case-1`` .. ``bipartite-case-5`` / ``bipartite-conjecture``
* ``multipartite-majorization``
* ``hub-clique``
* ``paw-square``
* ``construction-lower`` / ``blowup-upper`` / ``composition-upper``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .density import delta_index, hom_count, independence_number
from .errors import DomainError
from .graphs import (
    Graph,
    as_complete,
    as_cycle,
    as_hub,
    as_multipartite,
    as_path,
    as_star,
    is_paw,
    parse_graph_spec,
)

STATUSES = ("exact", "interval", "conjectured", "infinite", "unknown")


@dataclass(frozen=True)
class RhoResult:
    status: str
    value: object = None  # Fraction, or None
    lower: object = None  # Fraction, or math.inf for infinite
    upper: object = None  # Fraction, or None
    provenance: tuple = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise DomainError(f"bad status {self.status!r}")
        if self.status == "exact":
            object.__setattr__(self, "lower", self.value)
            object.__setattr__(self, "upper", self.value)
        if self.status == "infinite":
            object.__setattr__(self, "lower", math.inf)
            object.__setattr__(self, "upper", None)
        if (
            self.status == "interval"
            and self.upper is not None
            and self.lower > self.upper
        ):
            raise DomainError(f"interval lower {self.lower} > upper {self.upper}")
        object.__setattr__(self, "provenance", tuple(self.provenance))

    def to_json(self):
        def num(x):
            # infinities are encoded by the status field, not a JSON token
            if x is None or (isinstance(x, float) and not math.isfinite(x)):
                return None
            return float(x)

        def exact(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            if isinstance(x, int):
                return f"{x}/1"
            return None

        out = {
            "status": self.status,
            "value": num(self.value),
            "lower": num(self.lower),
            "upper": num(self.upper),
            "provenance": list(self.provenance),
        }
        for name, x in (("value", self.value), ("lower", self.lower), ("upper", self.upper)):
            r = exact(x)
            if r is not None:
                out[name + "_exact"] = r
        return out


# ---------------------------------------------------------------------------
# majorization


def part_sizes(seq):
    """Normalize a part-size vector: nonnegative ints, nonincreasing order,
    at least one positive entry."""
    sizes = tuple(sorted((int(s) for s in seq), reverse=True))
    if any(s < 0 for s in sizes):
        raise DomainError("part sizes must be nonnegative")
    if not sizes or sizes[0] == 0:
        raise DomainError("at least one positive part required")
    return sizes


def _padded(a, b):
    a, b = part_sizes(a), part_sizes(b)
    n = max(len(a), len(b))
    return a + (0,) * (n - len(a)), b + (0,) * (n - len(b))


def majorizes(a, b):
    """True iff every prefix sum of a dominates that of b.  Requires equal
    totals (after zero padding)."""
    a, b = _padded(a, b)
    if sum(a) != sum(b):
        raise DomainError(f"majorization requires equal totals ({sum(a)} vs {sum(b)})")
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa < pb:
            return False
    return True


def majorization_chain(a, b):
    """Chain a = a_0, ..., a_l = b of nonincreasing vectors where each step
    moves one unit from a later index to an earlier index, consecutive
    vectors differ in at most two coordinates, and each majorizes the next."""
    a, b = _padded(a, b)
    if not majorizes(a, b):
        raise DomainError("chain requires a to majorize b")
    chain = [b]
    cur = list(b)
    while tuple(cur) != a:
        r = next(i for i in range(len(a)) if cur[i] != a[i])
        target = cur[r + 1]
        s = max(i for i in range(r + 1, len(cur)) if cur[i] == target)
        cur[r] += 1
        cur[s] -= 1
        chain.append(tuple(cur))
    chain.reverse()
    return chain


# ---------------------------------------------------------------------------
# finiteness and generic bounds


def finiteness(g, h):
    """rho(G,H) is finite exactly when hom(H,G) > 0.  G must be nonempty."""
    g, h = _coerce(g), _coerce(h)
    if g.edge_count == 0:
        raise DomainError("rho(G,H) requires G to have at least one edge")
    return hom_count(h, g) > 0


def general_lower_bounds(g, h):
    """Best of the four universal construction lower bounds."""
    g, h = _coerce(g), _coerce(h)
    bounds = [Fraction(h.edge_count, g.edge_count), Fraction(h.vertex_count, g.vertex_count)]
    if g.is_connected() and h.is_connected() and g.vertex_count >= 2:
        bounds.append(Fraction(h.vertex_count - 1, g.vertex_count - 1))
    dg = g.vertex_count - independence_number(g)
    if dg > 0:
        bounds.append(Fraction(h.vertex_count - independence_number(h), dg))
    return max(bounds)


def blowup_upper_bound(g, h, budget=2_000_000):
    """min over homomorphisms phi: H -> G of prod_v max(1, |phi^-1(v)|).

    H sits inside the blowup of G along the preimage profile; iterated
    single-vertex blowups bound rho by that product.  Returns None when the
    enumeration budget is exhausted.
    """
    g, h = _coerce(g), _coerce(h)
    nh, ng = h.vertex_count, g.vertex_count
    if nh == 0:
        return Fraction(1)
    gadj = g.adjacency()
    order = _bfs_order(h)
    back = [[u for u in order[:i] if (min(order[i], u), max(order[i], u)) in h.edges] for i in range(nh)]
    pos = {v: i for i, v in enumerate(order)}
    best = [None]
    counts = [0] * ng
    visited = [0]

    def rec(i):
        if visited[0] > budget:
            raise TimeoutError
        if i == nh:
            prod = 1
            for c in counts:
                prod *= max(1, c)
            if best[0] is None or prod < best[0]:
                best[0] = prod
            return
        v = order[i]
        for tgt in range(ng):
            visited[0] += 1
            if all(gadj[tgt, assign[pos[u]]] for u in back[i]):
                assign[i] = tgt
                counts[tgt] += 1
                rec(i + 1)
                counts[tgt] -= 1

    assign = [0] * nh
    try:
        rec(0)
    except TimeoutError:
        return None
    return Fraction(best[0]) if best[0] is not None else None


def _bfs_order(h):
    order = []
    seen = set()
    for root in range(h.vertex_count):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(h.neighbors(v)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


# ---------------------------------------------------------------------------
# family dispatch


def _coerce(spec):
    if isinstance(spec, Graph):
        return spec
    return parse_graph_spec(spec)


def _isomorphic(g, h):
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.edges == h.edges:
        return True
    return nx.is_isomorphic(_to_nx(g), _to_nx(h))


def _to_nx(g):
    gg = nx.Graph()
    gg.add_nodes_from(range(g.vertex_count))
    gg.add_edges_from(g.edges)
    return gg


def _exact(value, *tags):
    return RhoResult("exact", value=Fraction(value), provenance=tags)


def _branch_complete(g, h, glb):
    s, t = as_complete(g), as_complete(h)
    if s is None or t is None:
        return None
    # s >= t is guaranteed here: s < t fails the finiteness test upstream
    return _exact(Fraction(t, s), "complete-kruskal-katona")


def _branch_paths(g, h, glb):
    m, n = as_path(g), as_path(h)
    if m is None or n is None:
        return None
    if n % 2 == 1 and m % 2 == 0:
        return _exact(Fraction(n + 1, m), "paths-exact")
    if n > m:
        return _exact(Fraction(n, m), "paths-exact")
    # n < m from here (n == m is the identity case)
    if n % 2 == 0 or (m + 1) % (n + 1) == 0:
        return _exact(Fraction(n + 1, m + 1), "paths-exact")
    if (m, n) == (5, 3):
        return RhoResult(
            "interval", lower=Fraction(7, 10), upper=Fraction(3, 4), provenance=("paths-open",)
        )
    # open case: best subgraph upper via the longest odd m' <= m with n+1 | m'+1
    mp = (n + 1) * ((m + 1) // (n + 1)) - 1
    return RhoResult(
        "interval", lower=glb, upper=Fraction(n + 1, mp + 1), provenance=("paths-open",)
    )


def _branch_cycles(g, h, glb):
    m, n_edges = as_cycle(g), as_cycle(h)
    if m is None or n_edges is None:
        return None
    if n_edges % 2 == 0:
        if m > n_edges:
            return _exact(Fraction(n_edges, m), "even-cycles-spectral")
        # 3 <= m < n_edges (equality is the identity case)
        q = Fraction(1, n_edges - 1)
        return RhoResult(
            "interval",
            lower=Fraction(n_edges - 1, m - 1),
            upper=Fraction(n_edges - 1 - q, m - 1 - q),
            provenance=("cycle-in-even-cycle",),
        )
    # H odd; finiteness already rules out m even or m > n_edges
    k, n = (m - 1) // 2, (n_edges - 1) // 2
    return RhoResult(
        "interval",
        lower=max(Fraction(n, k), glb),
        upper=Fraction(math.ceil(Fraction(n, k)) + 1),
        provenance=("odd-cycle-pair",),
    )


def _branch_cycle_path(g, h, glb):
    m = as_cycle(g)
    n = as_path(h)
    if m is not None and n is not None:
        if n <= m - 1:
            return _exact(Fraction(n + 1, m), "cycle-vs-path")
        return _exact(Fraction(n, m - 1), "cycle-vs-path")
    m = as_path(g)
    c = as_cycle(h)
    if m is not None and c is not None and c % 2 == 0:
        return _exact(Fraction(c, m), "path-vs-even-cycle")
    return None


def _branch_stars(g, h, glb):
    t = as_star(h)
    if t is None:
        return None
    nv = g.vertex_count
    if g.is_connected() and nv <= t + 1:
        return _exact(Fraction(t, nv - 1), "star-small-graph")
    if t == 1:
        return _exact(Fraction(2, nv - delta_index(g, 1)), "star-edge-delta")
    if nv >= t + 1:
        lower = max(glb, Fraction(t + 1, nv - delta_index(g, t)))
        return RhoResult("interval", lower=lower, upper=None, provenance=("star-delta-lower",))
    return None


def _branch_bipartite(g, h, glb):
    a = as_multipartite(g)
    b = as_multipartite(h)
    if a is None or b is None or len(a) != 2 or len(b) != 2:
        return None
    a1, a2 = a
    b1, b2 = b
    if b1 >= a1 and b2 >= a2:
        return _exact(Fraction(b1 * b2, a1 * a2), "bipartite-case-1")
    if b1 <= a1 and b2 >= a2:
        return _exact(Fraction(b2, a2), "bipartite-case-2")
    if b1 <= a1 and b2 <= a2:
        return _exact(max(Fraction(b2, a2), Fraction(b1 + b2, a1 + a2)), "bipartite-case-3")
    if b1 >= a1 and b2 <= a2 and b1 + b2 <= a1 + a2:
        return _exact(Fraction(b1 + b2, a1 + a2), "bipartite-case-4")
    if b1 >= a1 and b2 == 1 and b1 + b2 >= a1 + a2:
        return _exact(Fraction(b1, a1 + a2 - 1), "bipartite-case-5")
    if a2 >= b2 > 1 and a1 <= b1 and b1 + b2 >= a1 + a2:
        value = max(Fraction(b1 * b2, a1 * a2), Fraction(b1 + b2 - 1, a1 + a2 - 1))
        return RhoResult(
            "conjectured", value=value, lower=glb, upper=None, provenance=("bipartite-conjecture",)
        )
    return None


def _branch_multipartite(g, h, glb):
    b = as_multipartite(g)
    a = as_multipartite(h)
    if a is None or b is None:
        return None
    if sum(a) != sum(b):
        return None
    if majorizes(a, b):
        return _exact(Fraction(1), "multipartite-majorization")
    return None


def _branch_hub(g, h, glb):
    n = as_complete(g)
    if n is None or n < 2:
        return None
    a = as_hub(h, clique_size=n)
    if a is None:
        return None
    return _exact(Fraction(1 + sum(a)), "hub-clique")


def _branch_paw(g, h, glb):
    if is_paw(g) and as_cycle(h) == 4:
        return _exact(Fraction(4, 3), "paw-square")
    return None


_BRANCHES = (
    _branch_complete,
    _branch_paths,
    _branch_cycles,
    _branch_cycle_path,
    _branch_stars,
    _branch_bipartite,
    _branch_multipartite,
    _branch_hub,
    _branch_paw,
)

# intermediates scanned for the composition upper bound
# rho(G,J) <= rho(G,H) * rho(H,J)
_INTERMEDIATE_SPECS = ("K2", "P2", "P3", "P4", "K3", "C4", "C5", "C6", "S3")


def _rho_base(g, h, compose):
    if g.edge_count == 0:
        raise DomainError("rho(G,H) requires G to have at least one edge")
    if h.edge_count == 0:
        return _exact(Fraction(0), "edgeless-target")
    if _isomorphic(g, h):
        return _exact(Fraction(1), "identity")
    if hom_count(h, g) == 0:
        return RhoResult("infinite", provenance=("infinite-no-hom",))

    glb = general_lower_bounds(g, h)

    winner = None
    extra_tags = []
    for branch in _BRANCHES:
        res = branch(g, h, glb)
        if res is None:
            continue
        if res.status == "exact":
            if winner is None or winner.status != "exact":
                extra_tags = ([] if winner is None else list(winner.provenance)) + extra_tags
                winner = res
            else:
                extra_tags.extend(res.provenance)
        elif winner is None:
            winner = res
        else:
            extra_tags.extend(res.provenance)

    if winner is None:
        winner = RhoResult("unknown", lower=glb, upper=None, provenance=("construction-lower",))

    if winner.status in ("interval", "unknown"):
        winner = _tighten(g, h, winner, glb, compose)

    if extra_tags:
        seen = list(winner.provenance)
        for t in extra_tags:
            if t not in seen:
                seen.append(t)
        winner = RhoResult(winner.status, winner.value, winner.lower, winner.upper, tuple(seen))
    return winner


def _upper_of(res):
    if res.status == "exact":
        return res.value
    if res.status in ("interval", "unknown"):
        return res.upper
    return None


def _tighten(g, h, res, glb, compose):
    lower = max(res.lower, glb) if res.lower is not None else glb
    upper = res.upper
    tags = list(res.provenance)

    bub = blowup_upper_bound(g, h)
    if bub is not None and (upper is None or bub < upper) and bub >= lower:
        upper = bub
        if "blowup-upper" not in tags:
            tags.append("blowup-upper")

    if compose:
        for spec in _INTERMEDIATE_SPECS:
            mid = parse_graph_spec(spec)
            if _isomorphic(mid, g) or _isomorphic(mid, h):
                continue
            try:
                u1 = _upper_of(_rho_base(g, mid, compose=False))
                u2 = _upper_of(_rho_base(mid, h, compose=False))
            except DomainError:
                continue
            if u1 is None or u2 is None:
                continue
            cand = u1 * u2
            if (upper is None or cand < upper) and cand >= lower:
                upper = cand
                if "composition-upper" not in tags:
                    tags.append("composition-upper")

    return RhoResult(res.status, res.value, lower, upper, tuple(tags))


def rho_exact(g_spec, h_spec):
    """Catalog lookup: dispatch (G,H) over the known graph families and
    return the best known value, bracket or conjecture with provenance."""
    g, h = _coerce(g_spec), _coerce(h_spec)
    return _rho_base(g, h, compose=True)
