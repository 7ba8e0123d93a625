"""Univariate polynomials and a simultaneous-iteration root finder.

Coefficients are stored in ascending order of degree, either all exact
(:class:`Fraction`) or complex floats.
"""

from dataclasses import dataclass
from fractions import Fraction
import cmath
import math

from ._serial import format_complex, format_fraction, parse_complex, to_fraction
from .errors import ValidationError

MAX_ITER = 1000
STEP_TOL = 1e-13
ANGLE_OFFSET = math.sqrt(2) / 4  # irrational, keeps the start points off any symmetry axis


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        exact = all(isinstance(c, (int, Fraction)) and not isinstance(c, bool) for c in coeffs)
        coeffs = [Fraction(c) for c in coeffs] if exact else [complex(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def exact(self):
        return all(isinstance(c, Fraction) for c in self.coeffs)

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self):
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def to_json(self):
        if self.exact:
            return {"coeffs": [format_fraction(c) for c in self.coeffs]}
        return {"coeffs": [format_complex(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            raw = data["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValidationError("polynomial JSON needs 'coeffs'") from exc
        if all(isinstance(c, (str, int)) for c in raw):
            return cls(tuple(to_fraction(c) for c in raw))
        return cls(tuple(parse_complex(c) for c in raw))


def from_roots(roots):
    coeffs = [1]
    for r in roots:
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return Polynomial(tuple(coeffs))


# -- exact arithmetic over Q, used to split off repeated roots -------------


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            r[i + shift] -= factor * c
        r = _trim(r)
    return _trim(q), r


def _monic(a):
    a = _trim(a)
    return [c / a[-1] for c in a] if a else a


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(a):
    return _trim([i * c for i, c in enumerate(a) if i])


def squarefree_factors(p):
    """Yun's algorithm: ``[(factor, multiplicity), ...]`` with coprime squarefree factors."""
    f = _monic([Fraction(c) for c in p.coeffs])
    if len(f) <= 1:
        return []
    out = []
    a = _gcd(f, _deriv(f))
    b = _divmod(f, a)[0]
    c = _divmod(_deriv(f), a)[0]
    dd = [x - y for x, y in _pad(c, _deriv(b))]
    i = 1
    while len(_trim(b)) > 1:
        a = _gcd(b, dd)
        b = _divmod(b, a)[0]
        c = _divmod(dd, a)[0]
        dd = [x - y for x, y in _pad(c, _deriv(b))]
        if len(a) > 1:
            out.append((Polynomial(tuple(a)), i))
        i += 1
    return out


def _pad(x, y):
    n = max(len(x), len(y))
    x = list(x) + [Fraction(0)] * (n - len(x))
    y = list(y) + [Fraction(0)] * (n - len(y))
    return zip(x, y)


# -- numeric root finding --------------------------------------------------


def _durand_kerner(coeffs):
    """Roots of a polynomial given by complex ascending coefficients."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if n == 1:
        return [-monic[0]]
    radius = 1 + max(abs(c) for c in monic[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + ANGLE_OFFSET)) for k in range(n)]

    def evaluate(x):
        acc = 0j
        for c in reversed(monic):
            acc = acc * x + c
        return acc

    for _ in range(MAX_ITER):
        biggest = 0.0
        for k in range(n):
            denom = 1 + 0j
            for j in range(n):
                if j != k:
                    denom *= z[k] - z[j]
            if denom == 0:
                denom = 1e-300
            step = evaluate(z[k]) / denom
            z[k] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[k])))
        if biggest < STEP_TOL:
            break
    return z


def _polish(coeffs, z, rounds=3):
    d = [i * c for i, c in enumerate(coeffs) if i]
    for _ in range(rounds):
        pv = sum(c * z**i for i, c in enumerate(coeffs))
        dv = sum(c * z**i for i, c in enumerate(d))
        if dv == 0 or pv == 0:
            break
        z = z - pv / dv
    return z


def _clean(z, scale=1e-14):
    re = 0.0 if abs(z.real) < scale else z.real
    im = 0.0 if abs(z.imag) < scale * max(1.0, abs(z)) else z.imag
    return complex(re, im)


def _simple_roots(coeffs):
    coeffs = [complex(c) for c in coeffs]
    roots = _durand_kerner(coeffs)
    return [_polish(coeffs, z) for z in roots]


def poly_roots(p):
    """All complex roots of ``p`` with multiplicity, sorted by (real, imag).

    Exact polynomials are first split into squarefree factors so repeated
    roots are found as simple roots of a factor.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(tuple(p))
    if p.is_zero():
        raise ValidationError("the zero polynomial has no finite root set")
    if p.degree == 0:
        return []
    roots = []
    if p.exact:
        coeffs = list(p.coeffs)
        zeros = 0
        while coeffs[0] == 0:
            coeffs.pop(0)
            zeros += 1
        roots.extend([0j] * zeros)
        for factor, mult in squarefree_factors(Polynomial(tuple(coeffs))):
            found = [_clean(z) for z in _simple_roots(factor.coeffs)]
            roots.extend(z for z in found for _ in range(mult))
    else:
        roots.extend(_simple_roots(p.coeffs))
        if all(abs(c.imag) == 0 for c in p.coeffs):
            roots = [_clean(z) for z in roots]
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def relative_residual(p, z):
    """``|p(z)|`` divided by ``sum |c_i| |z|^i`` (0 when both vanish)."""
    scale = sum(abs(complex(c)) * abs(z) ** i for i, c in enumerate(p.coeffs))
    value = abs(complex(p(z)))
    return value / scale if scale else value
