"""Vertex colorings, color ranges, and the parameters of perfect colorings.

Colors are ``0..k-1``.  A color range is the sorted tuple of colors met by a
hyperedge; ranges are indexed in sorted (lexicographic) order everywhere, so
``V``/``W`` matrices computed by this module are directly comparable.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import itertools
import json
import math

import numpy as np

from ._serial import loads
from .errors import NotPerfect, ValidationError
from .hypergraph import Hypergraph, profile
from .multimatrix import MultiMatrix, mm_product


@dataclass(frozen=True)
class Coloring:
    """A surjective map from vertices to colors ``0..k-1``."""

    colors: tuple
    k: int = None

    def __post_init__(self):
        try:
            colors = tuple(int(c) for c in self.colors)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"colors must be integers: {self.colors!r}") from exc
        k = max(colors) + 1 if self.k is None and colors else (self.k or 0)
        if any(c < 0 or c >= k for c in colors):
            raise ValidationError(f"colors must lie in [0, {k})")
        missing = set(range(k)) - set(colors)
        if missing:
            raise ValidationError(f"coloring is not surjective, unused colors {sorted(missing)}")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "k", k)

    def __len__(self):
        return len(self.colors)

    def classes(self):
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def counts(self):
        return [len(c) for c in self.classes()]

    def partition(self):
        """The color classes as a set of frozensets (label-free)."""
        return frozenset(frozenset(c) for c in self.classes())

    def canonical(self):
        """Relabel colors by first occurrence in vertex order."""
        relabel = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel))
        return Coloring(tuple(relabel[c] for c in self.colors), self.k)

    def to_json(self):
        return {"colors": list(self.colors)}


def load_coloring(text):
    data = loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(data, dict) or not isinstance(data.get("colors"), list):
        raise ValidationError("coloring JSON must look like {\"colors\": [...]}")
    return Coloring(tuple(data["colors"]))


def monochromatic(n):
    return Coloring((0,) * n)


def as_coloring(f):
    return f if isinstance(f, Coloring) else Coloring(tuple(f))


def _check_length(h, f):
    if len(f) != h.n:
        raise ValidationError(f"coloring has {len(f)} entries, hypergraph has {h.n} vertices")


def color_matrix(f):
    """n x k 0/1 matrix with a single 1 per row, at the vertex's color."""
    f = as_coloring(f)
    num = np.empty((len(f), f.k), dtype=object)
    num.fill(0)
    for v, c in enumerate(f.colors):
        num[v, c] = 1
    return MultiMatrix.from_parts(num, 1)


def color_ranges(h, f):
    """Sorted multiset of vertex colors for every edge, in edge order."""
    f = as_coloring(f)
    _check_length(h, f)
    return [tuple(sorted(f.colors[v] for v in e)) for e in h.edges]


@dataclass
class IncidenceParams:
    """Incidence parameters ``(V, W)`` with the class sizes ``N`` and ``M``.

    ``V[i][g]``: edges of range g at a vertex of color i.
    ``W[g][i]``: vertices of color i in an edge of range g.
    """

    V: list
    W: list
    N: list
    M: list
    ranges: list

    @property
    def k(self):
        return len(self.N)

    @property
    def l(self):
        return len(self.M)

    def same_parameters(self, other):
        return self.V == other.V and self.W == other.W and self.ranges == other.ranges

    def to_json(self):
        return {
            "V": self.V,
            "W": self.W,
            "N": self.N,
            "M": self.M,
            "ranges": [list(r) for r in self.ranges],
        }

    @classmethod
    def from_json(cls, data):
        data = loads(data) if isinstance(data, (str, bytes)) else data
        try:
            V = [[int(x) for x in row] for row in data["V"]]
            W = [[int(x) for x in row] for row in data["W"]]
            N = [int(x) for x in data["N"]]
            M = [int(x) for x in data["M"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed incidence parameters: {exc}") from exc
        ranges = data.get("ranges")
        if ranges is None:
            ranges = [_label_from_w(row) for row in W]
        return cls(V, W, N, M, [tuple(r) for r in ranges])

    def dumps(self):
        return json.dumps(self.to_json())


def _label_from_w(row):
    return tuple(c for c, w in enumerate(row) for _ in range(w))


def incidence_parameters(h, f):
    """Incidence parameters of ``f`` on ``h``; raises :class:`NotPerfect` otherwise."""
    f = as_coloring(f)
    ranges = color_ranges(h, f)
    labels = sorted(set(ranges))
    index = {r: g for g, r in enumerate(labels)}
    range_of_edge = [index[r] for r in ranges]

    rows = [None] * f.k
    owner = [None] * f.k
    for x, es in enumerate(h.incident_edges()):
        row = [0] * len(labels)
        for j in es:
            row[range_of_edge[j]] += 1
        c = f.colors[x]
        if rows[c] is None:
            rows[c], owner[c] = row, x
        elif rows[c] != row:
            raise NotPerfect(
                f"vertices {owner[c]} and {x} both have color {c} "
                f"but see different color ranges",
                witness=(owner[c], x),
            )

    W = [[r.count(c) for c in range(f.k)] for r in labels]
    M = [0] * len(labels)
    for g in range_of_edge:
        M[g] += 1
    return IncidenceParams(V=rows, W=W, N=f.counts(), M=M, ranges=labels)


def is_perfect(h, f):
    try:
        incidence_parameters(h, f)
    except NotPerfect:
        return False
    return True


def multinomial(counts):
    total = sum(counts)
    out = math.factorial(total)
    for c in counts:
        out //= math.factorial(c)
    return out


def _distinct_arrangements(items):
    return sorted(set(itertools.permutations(items)))


def _uniform_size(h, d):
    sizes = profile(h).uniform_d
    if d is None:
        if sizes is None:
            raise ValidationError("parameter tensors need a uniform hypergraph")
        return sizes
    if h.m and sizes != d:
        raise ValidationError(f"hypergraph is not {d}-uniform")
    return d


def parameter_tensor(h, f, d=None):
    """The d-dimensional parameter matrix S with ``A o P = P o S``.

    Entry at ``(c, g_2, ..., g_d)`` is ``V[c][range]`` divided by the number
    of distinct orderings of ``(g_2, ..., g_d)``, where ``range`` is the
    sorted multiset ``{c, g_2, ..., g_d}``.  ``d`` only needs to be given for
    edgeless hypergraphs.
    """
    f = as_coloring(f)
    d = _uniform_size(h, d)
    if d < 2:
        raise ValidationError("parameter tensors need edge size >= 2")
    params = incidence_parameters(h, f)
    s = np.empty((f.k,) * d, dtype=object)
    s.fill(Fraction(0))
    for g, label in enumerate(params.ranges):
        for c in set(label):
            v = params.V[c][g]
            if not v:
                continue
            rest = list(label)
            rest.remove(c)
            weight = Fraction(v, multinomial(Counter(rest).values()))
            for arrangement in _distinct_arrangements(rest):
                s[(c,) + arrangement] = weight
    return MultiMatrix(s)


def parameter_tensor_from_counts(d, range_counts, color_counts, ranges):
    """Parameter tensor from the class sizes alone.

    ``s[g] = d * m_g / n_{g_1} / multinomial(d; w_g)`` for every index
    ``g`` whose sorted form is one of ``ranges`` (with ``m_g`` edges each).
    """
    k = len(color_counts)
    if len(range_counts) != len(ranges):
        raise ValidationError("need one edge count per range label")
    if any(n <= 0 for n in color_counts):
        raise ValidationError("color class sizes must be positive")
    s = np.empty((k,) * d, dtype=object)
    s.fill(Fraction(0))
    for m_g, label in zip(range_counts, ranges):
        label = tuple(sorted(label))
        if len(label) != d or any(not 0 <= c < k for c in label):
            raise ValidationError(f"range {list(label)} is not a size-{d} multiset of colors")
        w = Counter(label)
        # the XE counts these sizes imply must be whole numbers
        for c, w_c in w.items():
            if (w_c * m_g) % color_counts[c]:
                raise ValidationError(
                    f"inconsistent counts: {w_c}*{m_g} edges of range {list(label)} "
                    f"do not split evenly over {color_counts[c]} vertices of color {c}"
                )
        value_base = Fraction(d * m_g, multinomial(w.values()))
        for index in _distinct_arrangements(label):
            s[index] = value_base / color_counts[index[0]]
    return MultiMatrix(s)


def verify_tensor_equation(a, p, s):
    """Exact check of ``a o p == p o s``."""
    if a.dim != s.dim:
        raise ValidationError(f"dimension mismatch: {a.dim} vs {s.dim}")
    if p.dim != 2 or p.shape[0] != a.shape[0] or p.shape[1] != s.shape[0]:
        raise ValidationError(
            f"color matrix of shape {p.shape} does not fit orders {a.shape[0]} and {s.shape[0]}"
        )
    if not a.is_cubic or not s.is_cubic:
        raise ValidationError("both tensors must be cubic")
    return mm_product(a, p) == mm_product(p, s)


def solve_parameter_tensor(a, p):
    """Read a candidate S off ``a o p`` using one vertex per color.

    Any S with ``a o p = p o s`` must have this value, so the candidate
    fails :func:`verify_tensor_equation` exactly when no S exists.
    """
    c = mm_product(a, p)
    k = p.shape[1]
    rep = [None] * k
    cols = np.asarray(p.num)
    for x in range(p.shape[0]):
        color = int(np.flatnonzero(cols[x])[0])
        if rep[color] is None:
            rep[color] = x
    if any(r is None for r in rep):
        raise ValidationError("color matrix has an empty color")
    return MultiMatrix.from_parts(c.num[rep].copy(), c.den)


def diagonal(values):
    k = len(values)
    num = np.empty((k, k), dtype=object)
    num.fill(0)
    for i, v in enumerate(values):
        num[i, i] = int(v)
    return MultiMatrix.from_parts(num, 1)


def symmetrized(s, counts):
    """``N o S`` for ``N = diag(counts)``; symmetric for every perfect coloring."""
    if len(counts) != s.shape[0]:
        raise ValidationError(f"{len(counts)} class sizes for a tensor of order {s.shape[0]}")
    return mm_product(diagonal(counts), s)


def check_perfect_identities(params):
    """Return True iff ``N V = W^T M`` holds exactly."""
    for i in range(params.k):
        for g in range(params.l):
            if params.N[i] * params.V[i][g] != params.W[g][i] * params.M[g]:
                return False
    return True


def construct_from_params(V, W, N, M):
    """Build a (multi)hypergraph and a perfect coloring with parameters ``(V, W)``.

    Colors occupy consecutive vertex blocks of sizes ``N``; ranges occupy
    consecutive edge blocks of sizes ``M``.  Inside the block for color i and
    range g, position ``z`` in ``[0, N[i]*V[i][g])`` puts a 1 at row
    ``z // V[i][g]`` and column ``z % M[g]``.
    """
    try:
        V = [[int(x) for x in row] for row in V]
        W = [[int(x) for x in row] for row in W]
        N = [int(x) for x in N]
        M = [int(x) for x in M]
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"parameters must be integer matrices: {exc}") from exc
    k, l = len(N), len(M)
    if len(V) != k or any(len(row) != l for row in V):
        raise ValidationError(f"V must be {k} x {l}")
    if len(W) != l or any(len(row) != k for row in W):
        raise ValidationError(f"W must be {l} x {k}")
    if any(x < 0 for row in V + W for x in row):
        raise ValidationError("V and W must be nonnegative")
    if any(x <= 0 for x in N + M):
        raise ValidationError("N and M must have positive diagonals")
    for i in range(k):
        for g in range(l):
            if N[i] * V[i][g] != W[g][i] * M[g]:
                raise ValidationError(
                    f"N V != W^T M at color {i}, range {g}: "
                    f"{N[i]}*{V[i][g]} != {W[g][i]}*{M[g]}"
                )
    for g, row in enumerate(W):
        if sum(row) == 0:
            raise ValidationError(f"range {g} has no vertices")
        for i, w in enumerate(row):
            if w > N[i]:
                raise ValidationError(
                    f"range {g} needs {w} vertices of color {i} but only {N[i]} exist"
                )
    if len({tuple(row) for row in W}) != l:
        raise ValidationError("two ranges have identical rows of W")

    n, m = sum(N), sum(M)
    b = np.zeros((n, m), dtype=np.int64)
    row0 = np.concatenate([[0], np.cumsum(N)]).astype(int)
    col0 = np.concatenate([[0], np.cumsum(M)]).astype(int)
    for i in range(k):
        for g in range(l):
            v = V[i][g]
            for z in range(N[i] * v):
                b[row0[i] + z // v, col0[g] + z % M[g]] = 1
    edges = tuple(tuple(np.flatnonzero(b[:, j]).tolist()) for j in range(m))
    colors = tuple(i for i in range(k) for _ in range(N[i]))
    return Hypergraph(n, edges, multi=True), Coloring(colors, k)


def canonical_params(V, W, N, M):
    """Reorder ranges of raw ``(V, W, N, M)`` into sorted label order."""
    labels = [_label_from_w(row) for row in W]
    order = sorted(range(len(labels)), key=lambda g: labels[g])
    return IncidenceParams(
        V=[[row[g] for g in order] for row in V],
        W=[list(W[g]) for g in order],
        N=list(N),
        M=[M[g] for g in order],
        ranges=[labels[g] for g in order],
    )
