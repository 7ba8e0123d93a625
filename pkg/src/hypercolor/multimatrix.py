"""Dense multidimensional matrices over the rationals.

A :class:`MultiMatrix` stores an object array of Python integers together
with one positive common denominator.  Keeping integer numerators lets
numpy's generic loops do the contractions at integer speed while every
result stays exact.

Indices are 0-based and row-major over ``(a_1, ..., a_d)``; the first
position plays the role of ``i`` in the product

    (A o B)[i, b2, ..., bd] = sum A[i, i2, ..., id] * B[i2, b2] * ... * B[id, bd]

where each ``b_k`` is itself a (t-1)-tuple when ``B`` is t-dimensional.
Matrices need not be cubic: color matrices are ``n x k`` and products such
as ``A o P`` have shape ``(n, k, ..., k)``.
"""

from fractions import Fraction
from functools import reduce
import itertools
import math

import numpy as np

from ._serial import format_fraction, to_fraction
from .errors import GuardExceeded, ValidationError

#: Maximum number of dense entries any single matrix may hold.
MAX_ENTRIES = 10**8


def _check_size(shape):
    size = math.prod(shape)
    if size > MAX_ENTRIES:
        raise GuardExceeded(
            f"dense matrix of shape {tuple(shape)} needs {size} entries "
            f"(limit {MAX_ENTRIES})"
        )


def _int_array(values, shape=None):
    arr = np.empty(shape if shape is not None else np.shape(values), dtype=object)
    flat = arr.reshape(-1)
    for pos, v in enumerate(np.asarray(values, dtype=object).reshape(-1)):
        flat[pos] = int(v)
    return arr


class MultiMatrix:
    """Exact d-dimensional matrix, ``entries = num / den``.

    Build one from any nested sequence of ints, Fractions or ``"p/q"``
    strings, or through :meth:`from_parts` when numerators are already
    integer.  Instances are treated as immutable.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, entries):
        raw = np.asarray(entries, dtype=object)
        if raw.ndim == 0:
            raise ValidationError("a multidimensional matrix needs at least one dimension")
        _check_size(raw.shape)
        fracs = [to_fraction(v) for v in raw.reshape(-1)]
        den = reduce(math.lcm, (q.denominator for q in fracs), 1)
        num = np.empty(raw.shape, dtype=object)
        flat = num.reshape(-1)
        for pos, q in enumerate(fracs):
            flat[pos] = q.numerator * (den // q.denominator)
        self._num = num
        self._den = den
        self._normalize()

    @classmethod
    def from_parts(cls, num, den=1):
        """Wrap an integer array ``num`` over denominator ``den`` (no copy)."""
        if den == 0:
            raise ValidationError("zero denominator")
        obj = cls.__new__(cls)
        num = np.asarray(num)
        if num.dtype != object:
            num = _int_array(num)
        if num.ndim == 0:
            raise ValidationError("a multidimensional matrix needs at least one dimension")
        _check_size(num.shape)
        if den < 0:
            num, den = -num, -den
        obj._num = num
        obj._den = int(den)
        obj._normalize()
        return obj

    @classmethod
    def zeros(cls, shape):
        _check_size(shape)
        num = np.empty(shape, dtype=object)
        num.fill(0)
        return cls.from_parts(num, 1)

    def _normalize(self):
        if self._den == 1:
            return
        g = self._den
        for v in self._num.flat:
            g = math.gcd(g, v)
            if g == 1:
                return
        if g > 1:
            self._num = self._num // g
            self._den //= g

    # -- basic properties -------------------------------------------------

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def shape(self):
        return self._num.shape

    @property
    def dim(self):
        return self._num.ndim

    @property
    def is_cubic(self):
        return len(set(self.shape)) <= 1

    @property
    def order(self):
        if not self.is_cubic:
            raise ValidationError(f"matrix of shape {self.shape} has no single order")
        return self.shape[0]

    @property
    def entries(self):
        """Object array of :class:`Fraction` entries (a fresh copy)."""
        out = np.empty(self.shape, dtype=object)
        flat = out.reshape(-1)
        for pos, v in enumerate(self._num.flat):
            flat[pos] = Fraction(v, self._den)
        return out

    def __getitem__(self, index):
        value = self._num[index]
        if isinstance(value, np.ndarray):
            return MultiMatrix.from_parts(value.copy(), self._den)
        return Fraction(value, self._den)

    def tolist(self):
        return self.entries.tolist()

    def to_complex(self):
        return np.asarray(self._num, dtype=float).astype(complex) / self._den

    def nonzero(self):
        """Iterate ``(index, value)`` over nonzero entries in row-major order."""
        for index in itertools.product(*(range(s) for s in self.shape)):
            v = self._num[index]
            if v:
                yield index, Fraction(v, self._den)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._den == other._den
            and np.array_equal(self._num, other._num)
        )

    def __hash__(self):
        return hash((self.shape, self._den, tuple(self._num.flat)))

    def _aligned(self, other):
        if self.shape != other.shape:
            raise ValidationError(f"shape mismatch: {self.shape} vs {other.shape}")
        den = math.lcm(self._den, other._den)
        return self._num * (den // self._den), other._num * (den // other._den), den

    def __add__(self, other):
        a, b, den = self._aligned(other)
        return MultiMatrix.from_parts(a + b, den)

    def __sub__(self, other):
        a, b, den = self._aligned(other)
        return MultiMatrix.from_parts(a - b, den)

    def __neg__(self):
        return MultiMatrix.from_parts(-self._num, self._den)

    def scale(self, factor):
        q = to_fraction(factor)
        return MultiMatrix.from_parts(self._num * q.numerator, self._den * q.denominator)

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self):
        body = np.array2string(self.entries, separator=", ", formatter={"object": str})
        return f"MultiMatrix(shape={self.shape}, {body})"

    # -- JSON -------------------------------------------------------------

    def to_json(self):
        out = {"dim": self.dim}
        if self.is_cubic:
            out["order"] = self.shape[0]
        else:
            out["shape"] = list(self.shape)
        out["entries"] = [format_fraction(Fraction(v, self._den)) for v in self._num.flat]
        return out

    @classmethod
    def from_json(cls, data):
        try:
            dim = int(data["dim"])
            shape = tuple(data["shape"]) if "shape" in data else (int(data["order"]),) * dim
            entries = data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed matrix JSON: {exc}") from exc
        if len(shape) != dim or dim < 1 or min(shape) < 1:
            raise ValidationError(f"bad dimension/order: dim={dim}, shape={shape}")
        _check_size(shape)
        if len(entries) != math.prod(shape):
            raise ValidationError(
                f"expected {math.prod(shape)} entries for shape {shape}, got {len(entries)}"
            )
        return cls(np.asarray(entries, dtype=object).reshape(shape))


def as_multimatrix(value):
    return value if isinstance(value, MultiMatrix) else MultiMatrix(value)


def identity_tensor(d, n):
    """d-dimensional identity of order n: ones exactly on the main diagonal."""
    if d < 1 or n < 1:
        raise ValidationError(f"identity needs d >= 1 and n >= 1, got d={d}, n={n}")
    shape = (n,) * d
    _check_size(shape)
    num = np.empty(shape, dtype=object)
    num.fill(0)
    for i in range(n):
        num[(i,) * d] = 1
    return MultiMatrix.from_parts(num, 1)


def mm_product(a, b):
    """The multidimensional product ``a o b``.

    For a d-dimensional ``a`` and t-dimensional ``b`` the result has
    dimension ``(d-1)(t-1)+1``.  Every trailing axis of ``a`` must match the
    first axis of ``b``.
    """
    a = as_multimatrix(a)
    b = as_multimatrix(b)
    d = a.dim
    if d == 1:
        return a
    for axis, size in enumerate(a.shape[1:], start=1):
        if size != b.shape[0]:
            raise ValidationError(
                f"axis {axis} of left factor has size {size}, "
                f"right factor has first axis {b.shape[0]}"
            )
    out_shape = (a.shape[0],) + tuple(b.shape[1:]) * (d - 1)
    _check_size(out_shape)
    num = a.num
    for _ in range(d - 1):
        # contracting axis 1 appends b's trailing axes at the end, so the
        # beta blocks come out in order beta^2, ..., beta^d
        num = np.tensordot(num, b.num, axes=([1], [0]))
    num = np.asarray(num, dtype=object).reshape(out_shape)
    return MultiMatrix.from_parts(num, a.den * b.den ** (d - 1))


def apply_vector(a, x):
    """Return ``a o x`` as a tuple of Fractions."""
    a = as_multimatrix(a)
    x = [to_fraction(v) for v in x]
    if a.dim > 1 and len(x) != a.shape[1]:
        raise ValidationError(f"vector length {len(x)} does not match order {a.shape[1]}")
    if a.dim == 1:
        return tuple(a.entries.tolist())
    return tuple(mm_product(a, MultiMatrix(x)).entries.tolist())


def is_symmetric(a):
    """True iff ``a`` is invariant under every permutation of its index positions."""
    a = as_multimatrix(a)
    if a.dim == 1:
        return True
    if not a.is_cubic:
        return False
    num = a.num
    # the transpositions (0 j) generate the full symmetric group
    for j in range(1, a.dim):
        perm = list(range(a.dim))
        perm[0], perm[j] = j, 0
        if not np.array_equal(num, num.transpose(perm)):
            return False
    return True


def hyperplane_sum(a, direction, fixed):
    """Sum of the entries whose ``direction``-th index (1-based) equals ``fixed`` (0-based)."""
    a = as_multimatrix(a)
    if not 1 <= direction <= a.dim:
        raise ValidationError(f"direction must be in [1, {a.dim}], got {direction}")
    if not 0 <= fixed < a.shape[direction - 1]:
        raise ValidationError(f"index {fixed} out of range for axis of size {a.shape[direction - 1]}")
    plane = np.take(a.num, fixed, axis=direction - 1)
    total = sum(plane.flat, 0) if isinstance(plane, np.ndarray) else plane
    return Fraction(int(total), a.den)
