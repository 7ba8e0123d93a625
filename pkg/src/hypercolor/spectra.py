"""Eigenpairs of multidimensional matrices.

``(lam, x)`` is an eigenpair of a d-dimensional matrix ``A`` when
``A o x = lam * (x_1^(d-1), ..., x_n^(d-1))``.  Verification runs in complex
floating point; parameter tensors and polynomials stay exact.
"""

from dataclasses import dataclass
from fractions import Fraction
import cmath
import itertools
import logging
import math

import numpy as np

from ._serial import format_complex, parse_complex, to_fraction
from .coloring import Coloring
from .errors import ValidationError
from .multimatrix import MultiMatrix, as_multimatrix
from .polynomial import Polynomial, poly_roots

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class EigenPair:
    lam: complex
    x: tuple
    residual: float = float("nan")

    def to_json(self):
        return {
            "lambda": format_complex(self.lam),
            "x": [format_complex(v) for v in self.x],
            "residual": float(self.residual),
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                parse_complex(data["lambda"]),
                tuple(parse_complex(v) for v in data["x"]),
                float(data.get("residual", float("nan"))),
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed eigenpair JSON: {exc}") from exc


def apply_complex(a, x):
    """Complex-float ``a o x``."""
    a = as_multimatrix(a)
    x = np.asarray(x, dtype=complex)
    if x.shape != (a.shape[-1],):
        raise ValidationError(f"vector of length {x.size} does not fit a matrix of shape {a.shape}")
    t = a.to_complex()
    for _ in range(a.dim - 1):
        t = t @ x
    return t


def eigen_residual(a, lam, x):
    """Max-norm of ``a o x - lam * x^(d-1)``."""
    a = as_multimatrix(a)
    x = np.asarray(x, dtype=complex)
    if not np.any(x):
        raise ValidationError("eigenvectors must be nonzero")
    lhs = apply_complex(a, x)
    return float(np.max(np.abs(lhs - complex(lam) * x ** (a.dim - 1))))


def verify_eigenpair(a, lam, x, tol=DEFAULT_TOL):
    return eigen_residual(a, lam, x) <= tol


def normalize(x):
    """Scale so the largest-magnitude component is exactly 1."""
    x = np.asarray(x, dtype=complex)
    pivot = x[int(np.argmax(np.abs(x)))]
    return x / pivot


def lift_eigenpair(p, pair, a=None):
    """``(lam, P x)`` for a color matrix ``P``.

    ``p`` may be a :class:`Coloring` or an n x k 0/1 matrix.  When the big
    matrix ``a`` is given the residual is computed against it.
    """
    if isinstance(p, Coloring):
        colors = np.asarray(p.colors, dtype=int)
        k = p.k
    else:
        p = as_multimatrix(p)
        if p.dim != 2:
            raise ValidationError("color matrix must be 2-dimensional")
        rows = np.asarray(p.num != 0)
        if not (rows.sum(axis=1) == 1).all():
            raise ValidationError("every row of a color matrix has exactly one 1")
        colors = rows.argmax(axis=1)
        k = p.shape[1]
    x = np.asarray(pair.x, dtype=complex)
    if x.shape != (k,):
        raise ValidationError(f"eigenvector has {x.size} entries, color matrix has {k} colors")
    y = x[colors]
    residual = eigen_residual(a, pair.lam, y) if a is not None else float("nan")
    return EigenPair(pair.lam, tuple(y.tolist()), residual)


# -- 2 colors, 3-uniform ---------------------------------------------------


@dataclass(frozen=True)
class TwoColorThreeUniformParams:
    """The five numbers describing a 3-dimensional parameter tensor of order 2.

    With colors 0 and 1 the tensor is ``s000=a, s001=s010=b, s011=c,
    s100=chi*b, s101=s110=chi*c, s111=d`` where ``chi = n_0 / n_1``.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    chi: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "chi"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

    def tensor(self):
        a, b, c, d, chi = self.a, self.b, self.c, self.d, self.chi
        return MultiMatrix([[[a, b], [b, c]], [[chi * b, chi * c], [chi * c, d]]])

    @classmethod
    def from_tensor(cls, s, chi=None):
        """Read the parameters off a tensor; ``chi`` is inferred when b or c is nonzero."""
        s = as_multimatrix(s)
        if s.shape != (2, 2, 2):
            raise ValidationError(f"expected a 3-dimensional tensor of order 2, got shape {s.shape}")
        a, b, c, d = s[0, 0, 0], s[0, 0, 1], s[0, 1, 1], s[1, 1, 1]
        if chi is None:
            if b:
                chi = s[1, 0, 0] / b
            elif c:
                chi = s[1, 0, 1] / c
            else:
                chi = Fraction(1)  # every chi term is multiplied by b or c
        params = cls(a, b, c, d, chi)
        if params.tensor() != s:
            raise ValidationError("tensor does not have the two-color 3-uniform shape")
        return params


def charpoly_2color_3uniform(params):
    """Characteristic quartic of a two-color 3-dimensional parameter tensor (exact).

    This is the resultant of the two quadratic forms of ``s o x - lam x^2``.
    The ``b^3`` and ``c^3`` terms are mirror images under swapping colors,
    which is why both carry the factor 4.
    """
    a, b, c, d, chi = params.a, params.b, params.c, params.d, params.chi
    return Polynomial((
        a * a * d * d - 3 * chi**2 * b * b * c * c - 6 * chi * a * b * c * d
        + 4 * chi**2 * a * c**3 + 4 * chi * b**3 * d,
        (a + d) * (6 * chi * b * c - 2 * a * d) - 4 * chi**2 * c**3 - 4 * chi * b**3,
        d * d + 4 * a * d + a * a - 6 * chi * b * c,
        -2 * (a + d),
        Fraction(1),
    ))


def charpoly_degree(n, d):
    """Degree of the characteristic polynomial of a d-dimensional matrix of order n."""
    return n * (d - 1) ** (n - 1)


# -- order-2 eigenproblems -------------------------------------------------


def _slice_polynomials(s):
    """Exact coefficients of ``f_c(t, 1)`` for c = 0, 1, where ``f = s o x``."""
    d = s.dim
    polys = []
    for c in range(2):
        coeffs = [Fraction(0)] * d
        for rest in itertools.product(range(2), repeat=d - 1):
            value = s[(c,) + rest]
            if value:
                coeffs[rest.count(0)] += value
        polys.append(coeffs)
    return polys


def eliminant(s):
    """``g(t) = f_0(t,1) - t^(d-1) f_1(t,1)``; its roots t give eigenvectors ``(t, 1)``."""
    s = as_multimatrix(s)
    if s.shape[0] != 2 or not s.is_cubic or s.dim < 2:
        raise ValidationError(f"expected a tensor of order 2 with d >= 2, got shape {s.shape}")
    f0, f1 = _slice_polynomials(s)
    d = s.dim
    g = [Fraction(0)] * (2 * d - 1)
    for i, c in enumerate(f0):
        g[i] += c
    for i, c in enumerate(f1):
        g[i + d - 1] -= c
    return Polynomial(tuple(g)), Polynomial(tuple(f1))


def eigen_order2(s, tol=DEFAULT_TOL):
    """Eigenpairs of a d-dimensional matrix of order 2.

    Three branches: ``x = (1, 0)``, ``x = (0, 1)``, and ``x = (t, 1)`` for the
    roots t of :func:`eliminant`, with ``lam = f_1(t, 1)``.  Every returned
    pair passes :func:`verify_eigenpair` at ``tol``; eigenvalues closer than
    ``tol`` are merged.  Sorted by eigenvalue (real, imag).
    """
    s = as_multimatrix(s)
    g, f1 = eliminant(s)
    d = s.dim
    candidates = []
    if s[(1,) + (0,) * (d - 1)] == 0:
        candidates.append((complex(s[(0,) * d]), (1, 0)))
    if s[(0,) + (1,) * (d - 1)] == 0:
        candidates.append((complex(s[(1,) * d]), (0, 1)))
    if g.is_zero():
        # every (t, 1) is an eigenvector; keep one representative
        logger.warning("eliminant vanishes identically; reporting the eigenvector (1, 1) only")
        candidates.append((complex(f1(1)), (1, 1)))
    else:
        for t in poly_roots(g):
            candidates.append((complex(f1(t)), (t, 1)))

    pairs = []
    for lam, x in candidates:
        x = normalize(x)
        res = eigen_residual(s, lam, x)
        if res > tol:
            logger.warning("dropping eigenpair candidate lam=%s with residual %.3g", lam, res)
            continue
        if any(abs(lam - p.lam) <= tol for p in pairs):
            continue
        pairs.append(EigenPair(lam, tuple(x.tolist()), res))
    return sorted(pairs, key=lambda p: (round(p.lam.real, 9), round(p.lam.imag, 9)))


def unmatched_charpoly_roots(s, tol=DEFAULT_TOL):
    """Roots of the quartic of a two-color 3-dimensional tensor missed by :func:`eigen_order2`.

    Returns an empty list when every root is matched; otherwise the missing
    roots are logged as a warning and returned, never silently dropped.
    """
    poly = charpoly_2color_3uniform(TwoColorThreeUniformParams.from_tensor(s))
    found = [p.lam for p in eigen_order2(s, tol)]
    missing = [z for z in poly_roots(poly) if all(abs(z - lam) > math.sqrt(tol) for lam in found)]
    if missing:
        logger.warning("quartic roots without a matching eigenpair: %s", missing)
    return missing


# -- transversals ----------------------------------------------------------


def _check_transversal_args(d, r, k):
    if d < 2:
        raise ValidationError(f"d must be at least 2, got {d}")
    if not 1 <= k < d:
        raise ValidationError(f"k must satisfy 1 <= k < d, got k={k}, d={d}")
    if r < 1:
        raise ValidationError(f"r must be positive, got {r}")


def transversal_parameter_tensor(d, r, k):
    """Parameter tensor of a k-transversal in a d-uniform r-regular hypergraph.

    Color 0 is the transversal.  Nonzero entries sit at indices with exactly
    k zeros: ``r / C(d-1, k-1)`` when the first index is 0 and
    ``r / C(d-1, k)`` when it is 1.
    """
    _check_transversal_args(d, r, k)
    r = to_fraction(r)
    s = np.empty((2,) * d, dtype=object)
    s.fill(Fraction(0))
    inside = r / math.comb(d - 1, k - 1)
    outside = r / math.comb(d - 1, k)
    for index in itertools.product(range(2), repeat=d):
        if index.count(0) == k:
            s[index] = inside if index[0] == 0 else outside
    return MultiMatrix(s)


def transversal_eigenvalues(d, r, k):
    """``{0} U {r xi^(jk)}`` for a primitive d-th root of unity xi, sorted."""
    _check_transversal_args(d, r, k)
    values = [0j]
    for j in range(1, d + 1):
        z = complex(r) * cmath.exp(2j * math.pi * ((j * k) % d) / d)
        z = complex(round(z.real, 15), round(z.imag, 15))
        if all(abs(z - w) > 1e-12 for w in values):
            values.append(z)
    return sorted(values, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def distinct_nonzero_count(values, tol=DEFAULT_TOL):
    out = []
    for z in values:
        if abs(z) > tol and all(abs(z - w) > tol for w in out):
            out.append(z)
    return len(out)
