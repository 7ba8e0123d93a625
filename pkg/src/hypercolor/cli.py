"""Command-line front end.

Every subcommand reads the JSON file formats of the library, calls one
library operation and writes a result envelope to stdout (or ``--output``)::

    {"status": "ok", "payload": {...}, "diagnostics": [...]}

Errors produce ``{"status": "error", "error": {"code": ..., "message": ...}}``
with exit code 2 (validation), 3 (not perfect), 4 (not a covering) or
5 (guard exceeded).
"""

import argparse
import json
import logging
import sys

from . import coloring as col
from . import covering as cov
from . import hypergraph as hg
from . import refinement, spectra
from .errors import HypercolorError, ValidationError
from .multimatrix import MultiMatrix
from .polynomial import poly_roots
from ._serial import format_complex, loads

FANO_COLORINGS = ((0, 1, 1, 1, 1, 1, 1), (0, 0, 0, 1, 1, 1, 1))


class CommandResult:
    def __init__(self, payload=None, diagnostics=None, error=None, exit_code=0):
        self.payload = payload
        self.diagnostics = list(diagnostics or [])
        self.error = error
        self.exit_code = exit_code

    @property
    def status(self):
        return "error" if self.error else "ok"

    def to_json(self):
        out = {"status": self.status}
        if self.error:
            out["error"] = self.error
        else:
            out["payload"] = self.payload
        out["diagnostics"] = self.diagnostics
        return out


# -- input helpers ---------------------------------------------------------


def _read_json(path, what):
    if path is None:
        raise ValidationError(f"--{what} is required for this command")
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {what} file {path!r}: {exc.strerror}") from exc


def _hypergraph(args, attr="hypergraph"):
    return hg.load_hypergraph(_read_json(getattr(args, attr), attr.replace("_", "-")))


def _coloring(args, attr="coloring"):
    return col.load_coloring(_read_json(getattr(args, attr), attr.replace("_", "-")))


def _tensor_from_args(args):
    """A tensor from ``--tensor``, or the parameter tensor of ``--hypergraph``/``--coloring``."""
    if args.tensor:
        return MultiMatrix.from_json(_read_json(args.tensor, "tensor"))
    h = _hypergraph(args)
    return col.parameter_tensor(h, _coloring(args))


def _require(value, flag):
    if value is None:
        raise ValidationError(f"{flag} is required for this command")
    return value


def _pairs_json(pairs):
    return [p.to_json() for p in pairs]


# -- subcommands -----------------------------------------------------------


def cmd_verify(args):
    h, f = _hypergraph(args), _coloring(args)
    params = col.incidence_parameters(h, f)
    out = {"perfect": True, **params.to_json()}
    d = hg.profile(h).uniform_d
    if d is not None and d >= 2:
        s = col.parameter_tensor(h, f)
        out["S"] = s.to_json()
        out["tensor_equation"] = col.verify_tensor_equation(
            hg.adjacency_tensor(h), col.color_matrix(f), s
        )
    return out, []


def cmd_params(args):
    return col.incidence_parameters(_hypergraph(args), _coloring(args)).to_json(), []


def cmd_tensor(args):
    h = _hypergraph(args)
    if args.coloring:
        return col.parameter_tensor(h, _coloring(args)).to_json(), ["parameter tensor"]
    return hg.adjacency_tensor(h).to_json(), ["adjacency tensor"]


def cmd_refine(args):
    h = _hypergraph(args)
    seed = col.load_coloring(_read_json(args.seed, "seed")) if args.seed else col.monochromatic(h.n)
    f = refinement.wl_refine(h, seed)
    return {**f.to_json(), "k": f.k}, []


def cmd_construct(args):
    p = col.IncidenceParams.from_json(_read_json(args.params, "params"))
    h, f = col.construct_from_params(p.V, p.W, p.N, p.M)
    return {"hypergraph": h.to_json(), "coloring": f.to_json()}, []


def cmd_cover_verify(args):
    g, h = _hypergraph(args), _hypergraph(args, "target")
    c = cov.load_covering(_read_json(args.covering, "covering"))
    return {"k": cov.verify_covering(g, h, c.phi, c.edge_map)}, []


def cmd_cover_common(args):
    h1, f1 = _hypergraph(args), _coloring(args)
    h2, f2 = _hypergraph(args, "hypergraph2"), _coloring(args, "coloring2")
    g, c1, c2 = cov.common_cover(h1, f1, h2, f2)
    notes = [f"{g.n} vertices, {g.m} edges"]
    return {"hypergraph": g.to_json(), "covering1": c1.to_json(), "covering2": c2.to_json()}, notes


def cmd_cover_multipartite(args):
    mp = cov.multipartite_cover(_hypergraph(args))
    return {
        "hypergraph": mp.graph.to_json(),
        "covering": mp.covering.to_json(),
        "parts": mp.parts,
        "matchings": mp.matchings,
    }, []


def cmd_lift_coloring(args):
    g, h = _hypergraph(args), _hypergraph(args, "target")
    c = cov.load_covering(_read_json(args.covering, "covering"))
    lifted = cov.lift_coloring(g, h, c, _coloring(args))
    out = lifted.to_json()
    if hg.profile(g).uniform_d:
        out["S"] = col.parameter_tensor(g, lifted).to_json()
    return out, []


def cmd_eigen(args):
    s = _tensor_from_args(args)
    if s.shape[0] != 2:
        raise ValidationError(f"eigen solves tensors of order 2 only, got order {s.shape[0]}")
    return {"eigenpairs": _pairs_json(spectra.eigen_order2(s, args.tol))}, []


def cmd_charpoly(args):
    s = _tensor_from_args(args)
    params = spectra.TwoColorThreeUniformParams.from_tensor(s)
    p = spectra.charpoly_2color_3uniform(params)
    notes = []
    missing = spectra.unmatched_charpoly_roots(s, args.tol)
    if missing:
        notes.append(f"roots without an eigenpair: {[format_complex(z) for z in missing]}")
    return {
        **p.to_json(),
        "degree": p.degree,
        "roots": [format_complex(z) for z in poly_roots(p)],
    }, notes


def cmd_transversal_spectrum(args):
    d, r, k = _require(args.d, "--d"), _require(args.r, "--r"), _require(args.k, "--k")
    s = spectra.transversal_parameter_tensor(d, r, k)
    formula = spectra.transversal_eigenvalues(d, r, k)
    computed = [p.lam for p in spectra.eigen_order2(s, args.tol)]
    return {
        "S": s.to_json(),
        "eigenvalues": [format_complex(z) for z in formula],
        "computed": [format_complex(z) for z in computed],
        "distinct_nonzero": spectra.distinct_nonzero_count(formula),
    }, []


def cmd_transversals(args):
    h = _hypergraph(args)
    found = hg.enumerate_k_transversals(h, _require(args.k, "--k"))
    return {"transversals": [list(t) for t in found], "count": len(found)}, []


def demo_fano(tol):
    """Both perfect 2-colorings of the Fano plane and the seven eigenvalues they give."""
    h = hg.fano()
    a = hg.adjacency_tensor(h)
    colorings, lifted = [], []
    for colors in FANO_COLORINGS:
        f = col.Coloring(colors)
        params = col.incidence_parameters(h, f)
        s = col.parameter_tensor(h, f)
        quartic = spectra.charpoly_2color_3uniform(spectra.TwoColorThreeUniformParams.from_tensor(s))
        pairs = spectra.eigen_order2(s, tol)
        colorings.append({
            "colors": list(colors),
            **params.to_json(),
            "S": s.to_json(),
            "charpoly": quartic.to_json(),
            "eigenpairs": _pairs_json(pairs),
        })
        for pair in pairs:
            big = spectra.lift_eigenpair(f, pair, a)
            if all(abs(big.lam - q.lam) > tol for q in lifted):
                lifted.append(big)
    lifted.sort(key=lambda p: (round(p.lam.real, 9), round(p.lam.imag, 9)))
    return {
        "hypergraph": h.to_json(),
        "colorings": colorings,
        "eigenpairs": _pairs_json(lifted),
        "distinct_eigenvalues": len(lifted),
    }


def cmd_demo(args):
    if args.name != "fano":
        raise ValidationError(f"unknown demo {args.name!r}; available: fano")
    out = demo_fano(args.tol)
    return out, [f"{out['distinct_eigenvalues']} verified eigenvalues of the Fano plane"]


COMMANDS = {
    "verify": (cmd_verify, "check a coloring is perfect; report V, W and S"),
    "params": (cmd_params, "incidence parameters of a perfect coloring"),
    "tensor": (cmd_tensor, "adjacency tensor, or parameter tensor with --coloring"),
    "refine": (cmd_refine, "coarsest perfect coloring refining --seed"),
    "construct": (cmd_construct, "build a hypergraph with given incidence parameters"),
    "cover-verify": (cmd_cover_verify, "check --covering maps --hypergraph onto --target"),
    "cover-common": (cmd_cover_common, "common covering of two colored hypergraphs"),
    "cover-multipartite": (cmd_cover_multipartite, "d-partite cover split into perfect matchings"),
    "lift-coloring": (cmd_lift_coloring, "pull a coloring of --target back along --covering"),
    "eigen": (cmd_eigen, "eigenpairs of an order-2 tensor"),
    "charpoly": (cmd_charpoly, "quartic of a two-color 3-dimensional parameter tensor"),
    "transversal-spectrum": (cmd_transversal_spectrum, "parameter tensor and spectrum of a k-transversal"),
    "transversals": (cmd_transversals, "all k-transversals of a hypergraph"),
    "demo": (cmd_demo, "worked scenarios (available: fano)"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--hypergraph", help="hypergraph JSON file")
    common.add_argument("--coloring", help="coloring JSON file")
    common.add_argument("--seed", help="seed coloring JSON file for refine")
    common.add_argument("--target", help="target hypergraph JSON file of a covering")
    common.add_argument("--covering", help="covering map JSON file")
    common.add_argument("--hypergraph2", help="second hypergraph for cover-common")
    common.add_argument("--coloring2", help="second coloring for cover-common")
    common.add_argument("--params", help="incidence parameters JSON file")
    common.add_argument("--tensor", help="multidimensional matrix JSON file")
    common.add_argument("--k", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--tol", type=float, default=spectra.DEFAULT_TOL)
    common.add_argument("--threads", type=int, default=1,
                        help="worker count (every operation currently runs on one thread)")
    common.add_argument("--output", default="-", help="output file, '-' for stdout")

    parser = argparse.ArgumentParser(prog="hypercolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "demo":
            p.add_argument("name", help="scenario name")
    return parser


def run(argv=None):
    """Parse ``argv`` and execute one subcommand; returns a :class:`CommandResult`."""
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if args.threads < 1:
            raise ValidationError("--threads must be at least 1")
        if args.tol <= 0:
            raise ValidationError("--tol must be positive")
        payload, notes = handler(args)
        result = CommandResult(payload, notes)
    except HypercolorError as exc:
        error = {"code": exc.code, "message": str(exc)}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            error["witness"] = witness
        result = CommandResult(error=error, exit_code=exc.exit_code)
    result.output = args.output
    return result


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    result = run(argv)
    text = json.dumps(result.to_json(), default=str)
    if result.output == "-":
        sys.stdout.write(text + "\n")
    else:
        try:
            with open(result.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            sys.stderr.write(f"cannot write {result.output}: {exc.strerror}\n")
            return 2
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
