"""Coverings of hypergraphs and common coverings.

A covering ``phi`` of H by G maps vertices of G onto vertices of H so that
every edge of G lands bijectively on an edge of H and every vertex keeps its
collection of incident edges.  When H has repeated edges the image of a
G-edge only determines a vertex set, so a covering may carry an explicit
``edge_map`` naming which copy each G-edge goes to.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import reduce
import json
import math

import numpy as np

from ._serial import loads
from .coloring import (
    Coloring,
    as_coloring,
    incidence_parameters,
    monochromatic,
    parameter_tensor,
)
from .errors import GuardExceeded, NotACovering, ValidationError
from .hypergraph import (
    Hypergraph,
    incidence_matrix,
    is_connected,
    profile,
    repeated_edge,
)

#: Node budget for reconstructing an edge map onto a multihypergraph.
EDGE_ASSIGNMENT_GUARD = 10**6


@dataclass(frozen=True)
class CoveringMap:
    phi: tuple
    edge_map: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        if self.edge_map is not None:
            object.__setattr__(self, "edge_map", tuple(int(u) for u in self.edge_map))

    def to_json(self):
        out = {"phi": list(self.phi)}
        if self.edge_map is not None:
            out["edge_map"] = list(self.edge_map)
        return out


def load_covering(text):
    data = loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(data, dict) or not isinstance(data.get("phi"), list):
        raise ValidationError("covering JSON must look like {\"phi\": [...]}")
    return CoveringMap(tuple(data["phi"]), data.get("edge_map"))


def _as_covering(phi):
    return phi if isinstance(phi, CoveringMap) else CoveringMap(tuple(phi))


def _assign_edges(g, h, phi):
    """Find an edge map for ``phi`` when H has repeated edges.

    Each G-vertex over y must meet exactly one G-edge sent to every H-edge
    containing y; copies of an H-edge are assigned by backtracking.
    """
    copies = defaultdict(list)
    for u, e in enumerate(h.edges):
        copies[e].append(u)
    candidates = [copies[tuple(sorted(phi[x] for x in e))] for e in g.edges]
    used = [set() for _ in range(g.n)]
    assignment = [None] * g.m
    budget = [EDGE_ASSIGNMENT_GUARD]

    def available(j):
        return [u for u in candidates[j] if not any(u in used[x] for x in g.edges[j])]

    def search(left):
        if not left:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise GuardExceeded("edge assignment search exceeded its budget")
        # most constrained edge first
        j, options = min(((j, available(j)) for j in left), key=lambda p: (len(p[1]), p[0]))
        left.remove(j)
        for u in options:
            for x in g.edges[j]:
                used[x].add(u)
            assignment[j] = u
            if search(left):
                return True
            for x in g.edges[j]:
                used[x].discard(u)
        left.add(j)
        return False

    if not search(set(range(g.m))):
        raise NotACovering("no assignment of edges to repeated hyperedges is consistent")
    return tuple(assignment)


def verify_covering(g, h, phi, edge_map=None):
    """Check that ``phi`` is a covering of ``h`` by ``g`` and return its fold k.

    Raises :class:`NotACovering` with a witness vertex or edge.
    """
    cov = _as_covering(phi)
    phi = cov.phi
    edge_map = edge_map if edge_map is not None else cov.edge_map
    if len(phi) != g.n:
        raise ValidationError(f"map has {len(phi)} entries, source has {g.n} vertices")
    if any(not 0 <= y < h.n for y in phi):
        raise ValidationError("map sends a vertex outside the target")

    fibers = Counter(phi)
    if len(fibers) != h.n:
        missing = min(set(range(h.n)) - set(fibers))
        raise NotACovering(f"target vertex {missing} has no preimage", witness=("vertex", missing))
    if len(set(fibers.values())) != 1:
        raise NotACovering(f"fiber sizes differ: {sorted(set(fibers.values()))}")
    k = fibers[0] if h.n else 0

    h_edges = set(h.edges)
    for j, e in enumerate(g.edges):
        image = [phi[x] for x in e]
        if len(set(image)) != len(image) or tuple(sorted(image)) not in h_edges:
            raise NotACovering(f"edge {j} does not map onto an edge of the target", witness=("edge", j))

    g_inc, h_inc = g.incident_edges(), h.incident_edges()
    for x in range(g.n):
        here = Counter(tuple(sorted(phi[v] for v in g.edges[j])) for j in g_inc[x])
        there = Counter(h.edges[u] for u in h_inc[phi[x]])
        if here != there:
            raise NotACovering(f"vertex {x} does not keep its incident edges", witness=("vertex", x))

    if edge_map is None:
        if h.multi and len(h_edges) != h.m:
            edge_map = _assign_edges(g, h, phi)
        else:
            index = {e: u for u, e in enumerate(h.edges)}
            edge_map = tuple(index[tuple(sorted(phi[x] for x in e))] for e in g.edges)
    else:
        edge_map = tuple(edge_map)
        if len(edge_map) != g.m:
            raise ValidationError(f"edge map has {len(edge_map)} entries, source has {g.m} edges")
        for j, e in enumerate(g.edges):
            if not 0 <= edge_map[j] < h.m or h.edges[edge_map[j]] != tuple(sorted(phi[x] for x in e)):
                raise NotACovering(f"edge map sends edge {j} to the wrong edge", witness=("edge", j))

    _check_permutation_blocks(g, h, phi, edge_map, k)
    return k


def _check_permutation_blocks(g, h, phi, edge_map, k):
    """Incidence matrix of g, ordered by fibers, must consist of k x k
    permutation blocks at the ones of h's incidence matrix and zeros elsewhere."""
    edge_fibers = Counter(edge_map)
    if h.m and (len(edge_fibers) != h.m or set(edge_fibers.values()) != {k}):
        raise NotACovering(f"edges are not covered exactly {k} times each")
    rows = sorted(range(g.n), key=lambda x: (phi[x], x))
    cols = sorted(range(g.m), key=lambda j: (edge_map[j], j))
    b = incidence_matrix(g)[np.ix_(rows, cols)]
    c = incidence_matrix(h)
    for y in range(h.n):
        for u in range(h.m):
            block = b[y * k:(y + 1) * k, u * k:(u + 1) * k]
            if c[y, u]:
                ok = (block.sum(axis=0) == 1).all() and (block.sum(axis=1) == 1).all()
            else:
                ok = not block.any()
            if not ok:
                raise NotACovering(
                    f"block for target vertex {y} and edge {u} is not "
                    f"{'a permutation' if c[y, u] else 'zero'}",
                    witness=("block", (y, u)),
                )


def covering_blocks(g, h, cov):
    """The k x k blocks ``{(y, u): block}`` of g's fiber-ordered incidence matrix."""
    cov = _as_covering(cov)
    k = verify_covering(g, h, cov)
    edge_map = cov.edge_map or _derived_edge_map(g, h, cov.phi)
    rows = sorted(range(g.n), key=lambda x: (cov.phi[x], x))
    cols = sorted(range(g.m), key=lambda j: (edge_map[j], j))
    b = incidence_matrix(g)[np.ix_(rows, cols)]
    return {
        (y, u): b[y * k:(y + 1) * k, u * k:(u + 1) * k]
        for y in range(h.n)
        for u in range(h.m)
    }


def _derived_edge_map(g, h, phi):
    if h.multi and len(set(h.edges)) != h.m:
        return _assign_edges(g, h, phi)
    index = {e: u for u, e in enumerate(h.edges)}
    return tuple(index[tuple(sorted(phi[x] for x in e))] for e in g.edges)


def covering_as_coloring(g, h, cov):
    """A covering viewed as a perfect coloring of g by the vertices of h.

    Returns the coloring and its parameter tensor, which equals the
    adjacency tensor of h.
    """
    cov = _as_covering(cov)
    verify_covering(g, h, cov)
    f = Coloring(cov.phi, h.n)
    return f, parameter_tensor(g, f)


def lift_coloring(g, h, cov, f):
    """Pull a perfect coloring of h back to g along the covering."""
    cov = _as_covering(cov)
    f = as_coloring(f)
    if len(f) != h.n:
        raise ValidationError(f"coloring has {len(f)} entries, target has {h.n} vertices")
    verify_covering(g, h, cov)
    return Coloring(tuple(f.colors[y] for y in cov.phi), f.k)


def incidence_graph_covering(g, h, cov):
    """The map induced on incidence graphs: vertices by phi, edges by the edge map."""
    cov = _as_covering(cov)
    edge_map = cov.edge_map or _derived_edge_map(g, h, cov.phi)
    return CoveringMap(tuple(cov.phi) + tuple(h.n + u for u in edge_map))


# -- common coverings ------------------------------------------------------


@dataclass
class CoverPlan:
    """Block sizes for the common covering.

    ``pi[i][j] = N[i] V[i][j]``, ``Pi`` is the lcm of the nonzero ``pi``,
    ``t[i] = Pi / N[i]`` and ``s[j] = Pi / M[j]``.  ``mu[(x, e)]`` is the
    position of vertex x among the vertices of its color in edge e, and
    ``nu[(x, e)]`` the position of e among the edges of its range at x.
    """

    pi: list
    Pi: int
    t: list
    s: list
    mu: dict = field(repr=False)
    nu: dict = field(repr=False)


def cover_plan(h, f):
    f = as_coloring(f)
    params = incidence_parameters(h, f)
    if h.m == 0:
        raise ValidationError("common coverings need at least one edge")
    pi = [[params.N[i] * params.V[i][j] for j in range(params.l)] for i in range(params.k)]
    Pi = reduce(math.lcm, (p for row in pi for p in row if p), 1)
    if any(Pi % n for n in params.N) or any(Pi % m for m in params.M):
        raise ValidationError("class sizes do not divide the lcm; is the hypergraph connected?")
    t = [Pi // n for n in params.N]
    s = [Pi // m for m in params.M]

    label = {r: j for j, r in enumerate(params.ranges)}
    range_of = [label[tuple(sorted(f.colors[x] for x in e))] for e in h.edges]
    mu, nu = {}, {}
    for e_idx, e in enumerate(h.edges):
        # rows of the block are scanned top to bottom
        per_color = Counter()
        for x in e:
            c = f.colors[x]
            mu[(x, e_idx)] = per_color[c]
            per_color[c] += 1
    for x, es in enumerate(h.incident_edges()):
        per_range = Counter()
        for e_idx in es:
            j = range_of[e_idx]
            nu[(x, e_idx)] = per_range[j]
            per_range[j] += 1
    return CoverPlan(pi=pi, Pi=Pi, t=t, s=s, mu=mu, nu=nu), params, range_of


def common_cover(h1, f1, h2, f2):
    """A (multi)hypergraph covering both ``h1`` and ``h2``.

    ``f1`` and ``f2`` must be perfect colorings with identical incidence
    parameters.  Returns ``(g, cov1, cov2)``; both coverings carry explicit
    edge maps.  Vertices of g are the tuples ``(x1, x2, a)`` with ``x1`` and
    ``x2`` of the same color i and ``a < t[i]``; edges are ``(e1, e2, b)``
    with ``b < s[j]``.  For incident pairs, the block of g's incidence matrix
    at those indices gets ones at ``(sigma + c v, delta + c w)`` where
    ``sigma = nu1 - nu2 mod v`` and ``delta = mu1 - mu2 mod w``.
    """
    f1, f2 = as_coloring(f1), as_coloring(f2)
    for name, h in (("first", h1), ("second", h2)):
        if not is_connected(h):
            raise ValidationError(f"{name} hypergraph is not connected")
    plan1, p1, range1 = cover_plan(h1, f1)
    plan2, p2, range2 = cover_plan(h2, f2)
    if not p1.same_parameters(p2):
        raise ValidationError(
            f"incidence parameters differ: V={p1.V}, W={p1.W} vs V={p2.V}, W={p2.W}"
        )
    if plan1.t != plan2.t or plan1.s != plan2.s:
        raise AssertionError(f"block sizes disagree: t={plan1.t}/{plan2.t}, s={plan1.s}/{plan2.s}")
    V, W = p1.V, p1.W
    t, s = plan1.t, plan1.s

    classes1, classes2 = f1.classes(), f2.classes()
    vertex_id = {}
    phi1, phi2 = [], []
    for i in range(p1.k):
        for x1 in classes1[i]:
            for x2 in classes2[i]:
                for a in range(t[i]):
                    vertex_id[(x1, x2, a)] = len(phi1)
                    phi1.append(x1)
                    phi2.append(x2)

    by_range1 = [[] for _ in range(p1.l)]
    for e, j in enumerate(range1):
        by_range1[j].append(e)
    by_range2 = [[] for _ in range(p1.l)]
    for e, j in enumerate(range2):
        by_range2[j].append(e)

    members = {}
    emap1, emap2 = [], []
    for j in range(p1.l):
        for e1 in by_range1[j]:
            for e2 in by_range2[j]:
                for b in range(s[j]):
                    members[(e1, e2, b)] = []
                    emap1.append(e1)
                    emap2.append(e2)
    order = list(members)

    for j in range(p1.l):
        for e1 in by_range1[j]:
            for e2 in by_range2[j]:
                for x1 in h1.edges[e1]:
                    i = f1.colors[x1]
                    v, w = V[i][j], W[j][i]
                    reps = t[i] // v
                    for x2 in h2.edges[e2]:
                        if f2.colors[x2] != i:
                            continue
                        sigma = (plan1.nu[(x1, e1)] - plan2.nu[(x2, e2)]) % v
                        delta = (plan1.mu[(x1, e1)] - plan2.mu[(x2, e2)]) % w
                        for c in range(reps):
                            members[(e1, e2, delta + c * w)].append(
                                vertex_id[(x1, x2, sigma + c * v)]
                            )

    g = Hypergraph(len(phi1), tuple(tuple(members[key]) for key in order), multi=True)
    return g, CoveringMap(tuple(phi1), tuple(emap1)), CoveringMap(tuple(phi2), tuple(emap2))


@dataclass
class MultipartiteCover:
    graph: Hypergraph
    covering: CoveringMap
    parts: list
    matchings: list


def multipartite_cover(h):
    """A d-partite cover of a d-uniform r-regular hypergraph split into r perfect matchings.

    Built as the common cover of h and the multihypergraph with r copies of
    one d-vertex edge; the fibers over that edge's vertices are the parts and
    the fibers over its copies are the matchings.
    """
    prof = profile(h)
    if prof.uniform_d is None or prof.regular_r is None:
        raise ValidationError("multipartite cover needs a uniform regular hypergraph")
    d, r = prof.uniform_d, prof.regular_r
    aux = repeated_edge(d, r)
    g, cov, cov_aux = common_cover(h, monochromatic(h.n), aux, monochromatic(d))
    parts = [[] for _ in range(d)]
    for x, y in enumerate(cov_aux.phi):
        parts[y].append(x)
    matchings = [[] for _ in range(r)]
    for j, u in enumerate(cov_aux.edge_map):
        matchings[u].append(j)
    return MultipartiteCover(graph=g, covering=cov, parts=parts, matchings=matchings)


def dumps_covering(cov):
    return json.dumps(_as_covering(cov).to_json())
