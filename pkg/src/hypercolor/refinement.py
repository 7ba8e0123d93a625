"""Refinement order on colorings and color refinement on the incidence graph."""

from .coloring import Coloring, as_coloring, color_ranges, monochromatic
from .errors import ValidationError


def is_refinement(f, g):
    """True iff every color class of ``f`` lies inside a single class of ``g``."""
    f, g = as_coloring(f), as_coloring(g)
    if len(f) != len(g):
        raise ValidationError(f"colorings have different lengths {len(f)} and {len(g)}")
    seen = {}
    for a, b in zip(f.colors, g.colors):
        if seen.setdefault(a, b) != b:
            return False
    return True


def same_partition(f, g):
    return as_coloring(f).partition() == as_coloring(g).partition()


def _relabel(signatures):
    labels = {}
    return [labels.setdefault(s, len(labels)) for s in signatures], len(labels)


def wl_refine(h, g):
    """Coarsest perfect coloring of ``h`` that refines ``g``.

    Runs color refinement on the incidence graph, seeded with ``g`` on the
    vertices and the color ranges of ``g`` on the edges.  Both sides are
    refined simultaneously until the number of classes stops growing.
    Output colors are numbered by first occurrence in vertex order.
    """
    g = as_coloring(g)
    ranges = color_ranges(h, g)
    vc, nv = _relabel(g.colors)
    ec, ne = _relabel(ranges)
    inc = h.incident_edges()
    while True:
        new_vc, new_nv = _relabel(
            (vc[x], tuple(sorted(ec[j] for j in inc[x]))) for x in range(h.n)
        )
        new_ec, new_ne = _relabel(
            (ec[j], tuple(sorted(vc[x] for x in e))) for j, e in enumerate(h.edges)
        )
        if new_nv == nv and new_ne == ne:
            break
        vc, nv, ec, ne = new_vc, new_nv, new_ec, new_ne
    return Coloring(tuple(vc), nv)


def coarsest_perfect(h):
    """The perfect coloring that every other perfect coloring of ``h`` refines."""
    return wl_refine(h, monochromatic(h.n)) if h.n else Coloring((), 0)
