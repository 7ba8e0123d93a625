"""Hypergraphs, their incidence matrices and adjacency tensors."""

from collections import Counter, deque
from dataclasses import dataclass
import itertools
import json
import math

import numpy as np

from ._serial import loads
from .errors import GuardExceeded, ValidationError
from .multimatrix import MultiMatrix, _check_size

#: Largest vertex count accepted by the exhaustive transversal search.
TRANSVERSAL_GUARD = 30


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices ``0..n-1``.

    Hyperedges are stored as sorted tuples.  Repeated hyperedges are only
    allowed when ``multi`` is set.
    """

    n: int
    edges: tuple = ()
    multi: bool = False

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise ValidationError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        canon = []
        for pos, e in enumerate(self.edges):
            try:
                vs = [int(v) for v in e]
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"edge {pos} is not a list of integers: {e!r}") from exc
            if not vs:
                raise ValidationError(f"edge {pos} is empty")
            for v in vs:
                if not 0 <= v < self.n:
                    raise ValidationError(f"edge {pos}: vertex id {v} out of range [0, {self.n})")
            if len(set(vs)) != len(vs):
                raise ValidationError(f"edge {pos} repeats a vertex: {vs}")
            canon.append(tuple(sorted(vs)))
        if not self.multi and len(set(canon)) != len(canon):
            dup = next(e for e, c in Counter(canon).items() if c > 1)
            raise ValidationError(f"duplicate edge {list(dup)} but multi is not set")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self):
        return len(self.edges)

    def degrees(self):
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def incident_edges(self):
        """List, per vertex, of the indices of the edges containing it."""
        inc = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return inc

    def to_json(self):
        out = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.multi:
            out["multi"] = True
        return out

    def dumps(self):
        return json.dumps(self.to_json())


def load_hypergraph(text):
    """Parse the JSON form ``{"n": int, "edges": [[...], ...], "multi": bool}``."""
    data = loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(data, dict):
        raise ValidationError("hypergraph JSON must be an object")
    if "n" not in data or "edges" not in data:
        raise ValidationError("hypergraph JSON needs keys 'n' and 'edges'")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ValidationError("'edges' must be a list of lists")
    multi = data.get("multi", False)
    if not isinstance(multi, bool):
        raise ValidationError("'multi' must be a boolean")
    return Hypergraph(data["n"], tuple(edges), multi)


def incidence_matrix(h):
    """n x m 0/1 matrix with ``B[x, e] = 1`` iff vertex x lies in edge e."""
    b = np.zeros((h.n, h.m), dtype=np.int64)
    for j, e in enumerate(h.edges):
        b[list(e), j] = 1
    return b


def from_incidence_matrix(b, multi=True):
    """Hypergraph whose incidence matrix is ``b`` (columns become edges)."""
    b = np.asarray(b)
    if b.ndim != 2 or not np.isin(b, (0, 1)).all():
        raise ValidationError("incidence matrix must be a 2-dimensional 0/1 array")
    edges = tuple(tuple(np.flatnonzero(b[:, j]).tolist()) for j in range(b.shape[1]))
    if not multi:
        multi = len(set(edges)) != len(edges)
    return Hypergraph(b.shape[0], edges, multi)


def dual(h):
    """Swap the roles of vertices and edges."""
    inc = h.incident_edges()
    for v, es in enumerate(inc):
        if not es:
            raise ValidationError(f"vertex {v} is isolated; its dual edge would be empty")
    edges = tuple(tuple(es) for es in inc)
    multi = h.multi or len(set(edges)) != len(edges)
    return Hypergraph(h.m, edges, multi)


@dataclass(frozen=True)
class Profile:
    degrees: list
    sizes: list
    uniform_d: int | None = None
    regular_r: int | None = None


def profile(h):
    degrees = h.degrees()
    sizes = [len(e) for e in h.edges]
    d = sizes[0] if sizes and len(set(sizes)) == 1 else None
    r = degrees[0] if degrees and len(set(degrees)) == 1 else None
    return Profile(degrees=degrees, sizes=sizes, uniform_d=d, regular_r=r)


def is_connected(h):
    """Berge connectivity; the empty and one-vertex hypergraphs count as connected."""
    if h.n <= 1:
        return True
    inc = h.incident_edges()
    seen = [False] * h.n
    seen[0] = True
    queue = deque([0])
    used = [False] * h.m
    while queue:
        v = queue.popleft()
        for j in inc[v]:
            if used[j]:
                continue
            used[j] = True
            for u in h.edges[j]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return all(seen)


def incidence_graph(h):
    """Bipartite Levi graph: vertices ``0..n-1`` are X, ``n..n+m-1`` are E."""
    edges = tuple((x, h.n + j) for j, e in enumerate(h.edges) for x in e)
    return Hypergraph(h.n + h.m, edges)


def adjacency_tensor(h):
    """d-dimensional adjacency matrix of a d-uniform hypergraph.

    Every permutation of a hyperedge gets ``1/(d-1)!``; a hyperedge repeated
    c times in a multihypergraph contributes ``c/(d-1)!``.
    """
    d = profile(h).uniform_d
    if d is None:
        if h.m == 0:
            raise ValidationError("hypergraph has no edges, edge size is undefined")
        raise ValidationError("adjacency tensor needs a uniform hypergraph")
    if d < 2:
        raise ValidationError(f"adjacency tensor needs edge size >= 2, got {d}")
    shape = (h.n,) * d
    _check_size(shape)
    num = np.empty(shape, dtype=object)
    num.fill(0)
    for e in h.edges:
        for perm in itertools.permutations(e):
            num[perm] += 1
    return MultiMatrix.from_parts(num, math.factorial(d - 1))


def adjacency_tensor_for(h, d):
    """Like :func:`adjacency_tensor` but with the edge size given explicitly.

    Needed when the hypergraph has no edges (the zero tensor).
    """
    if h.m:
        t = adjacency_tensor(h)
        if t.dim != d:
            raise ValidationError(f"hypergraph is {t.dim}-uniform, not {d}-uniform")
        return t
    return MultiMatrix.zeros((h.n,) * d)


def enumerate_k_transversals(h, k):
    """All vertex sets meeting every edge in exactly k vertices, sorted."""
    if k < 1:
        raise ValidationError(f"k must be positive, got {k}")
    if h.n > TRANSVERSAL_GUARD:
        raise GuardExceeded(f"transversal search is limited to n <= {TRANSVERSAL_GUARD}, got n={h.n}")
    inc = h.incident_edges()
    taken = [0] * h.m
    left = [len(e) for e in h.edges]
    if any(s < k for s in left):
        return []
    chosen = []
    found = []

    def feasible(v):
        return all(taken[j] <= k and taken[j] + left[j] >= k for j in inc[v])

    def search(v):
        if v == h.n:
            found.append(tuple(chosen))
            return
        for j in inc[v]:
            left[j] -= 1
        # include v
        for j in inc[v]:
            taken[j] += 1
        chosen.append(v)
        if feasible(v):
            search(v + 1)
        chosen.pop()
        for j in inc[v]:
            taken[j] -= 1
        # exclude v
        if feasible(v):
            search(v + 1)
        for j in inc[v]:
            left[j] += 1

    search(0)
    return sorted(found)


# -- a few named hypergraphs --------------------------------------------

FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def fano():
    """The Fano plane as a 3-uniform hypergraph on 7 vertices."""
    return Hypergraph(7, FANO_LINES)


def complete_uniform(n, d):
    return Hypergraph(n, tuple(itertools.combinations(range(n), d)))


def cycle(n):
    """The n-cycle as a 2-uniform hypergraph."""
    return Hypergraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def repeated_edge(d, copies):
    """``copies`` copies of the single edge on ``d`` vertices (a multihypergraph)."""
    return Hypergraph(d, (tuple(range(d)),) * copies, multi=copies > 1)
