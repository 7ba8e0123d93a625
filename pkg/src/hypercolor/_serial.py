"""Small helpers for the JSON wire formats (rationals, complex numbers)."""

from fractions import Fraction
import json
import math

from .errors import ValidationError


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational: {value!r}") from exc
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # numpy integers and friends
        return Fraction(int(value.numerator), int(value.denominator))
    raise ValidationError(f"not an exact rational: {value!r}")


def format_fraction(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _round_sig(x, digits=12):
    if x == 0 or not math.isfinite(x):
        return 0.0 if x == 0 else x
    return float(f"{x:.{digits}g}")


def format_complex(z, digits=12):
    """``[re, im]`` rounded to ``digits`` significant digits.

    A part smaller than ``10**-digits`` relative to ``max(1, |z|)`` is
    written as 0 so rounding noise does not leak into the output.
    """
    z = complex(z)
    floor = 10.0**-digits * max(1.0, abs(z))
    re = 0.0 if abs(z.real) < floor else z.real
    im = 0.0 if abs(z.imag) < floor else z.imag
    return [_round_sig(re, digits), _round_sig(im, digits)]


def parse_complex(value):
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValidationError(f"complex pair must have 2 entries: {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, str):
        return complex(to_fraction(value))
    raise ValidationError(f"not a complex number: {value!r}")


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from exc
