"""Acceptance criteria 1 to 13.

Each test gathers every failed check before asserting, prints one
``PASS``/``FAIL`` line and records it for the terminal summary.
"""

from fractions import Fraction
import cmath
import itertools
import json
import math
from pathlib import Path
import time

import numpy as np

from hypercolor import (
    Coloring,
    EigenPair,
    Hypergraph,
    TwoColorThreeUniformParams,
    ValidationError,
    adjacency_tensor,
    charpoly_2color_3uniform,
    color_matrix,
    common_cover,
    construct_from_params,
    eigen_order2,
    enumerate_k_transversals,
    fano,
    hyperplane_sum,
    identity_tensor,
    incidence_matrix,
    incidence_parameters,
    is_perfect,
    is_symmetric,
    lift_coloring,
    lift_eigenpair,
    mm_product,
    monochromatic,
    multipartite_cover,
    parameter_tensor,
    profile,
    symmetrized,
    transversal_eigenvalues,
    transversal_parameter_tensor,
    verify_covering,
    verify_eigenpair,
    wl_refine,
)
from hypercolor.cli import run
from hypercolor.coloring import canonical_params
from hypercolor.covering import covering_blocks
from hypercolor.hypergraph import complete_uniform, repeated_edge
from hypercolor.multimatrix import MultiMatrix
from hypercolor.polynomial import Polynomial
from hypercolor.spectra import charpoly_degree, distinct_nonzero_count

import oracles

DATA = Path(__file__).parent / "data"
TOL = 1e-9
RESULTS = []

POINT = (0, 1, 1, 1, 1, 1, 1)
LINE = (0, 0, 0, 1, 1, 1, 1)
S_POINT = {(0, 1, 1): 3, (1, 0, 1): Fraction(1, 2), (1, 1, 0): Fraction(1, 2), (1, 1, 1): 2}
S_LINE = {(0, 0, 0): 1, (0, 1, 1): 2, (1, 0, 1): Fraction(3, 2), (1, 1, 0): Fraction(3, 2)}
F3 = repeated_edge(3, 3)


def record(number, title, failures, elapsed, budget):
    if elapsed > budget:
        failures.append(f"took {elapsed:.2f}s, budget {budget}s")
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {title} ({elapsed:.2f}s)"
    if failures:
        shown = "; ".join(failures[:4])
        more = f" (+{len(failures) - 4} more)" if len(failures) > 4 else ""
        line += f" -- {shown}{more}"
    print(line)
    RESULTS.append(line)
    assert not failures, line


def same_set(found, expected, tol=TOL):
    found, expected = list(found), list(expected)
    if len(found) != len(expected):
        return False
    return all(any(abs(z - w) <= tol for w in expected) for z in found) and all(
        any(abs(z - w) <= tol for w in found) for z in expected
    )


def cli_payload(*argv):
    result = run(list(argv))
    return result.exit_code, result.to_json()


def test_criterion_01_fano_parameters():
    start, failures = time.perf_counter(), []
    expected = {
        "coloring_point.json": ([[3, 0], [1, 2]], [[1, 2], [0, 3]], S_POINT),
        "coloring_line.json": ([[1, 2], [0, 3]], [[3, 0], [1, 2]], S_LINE),
    }
    for name, (V, W, S) in expected.items():
        code, out = cli_payload("params", "--hypergraph", str(DATA / "fano.json"), "--coloring", str(DATA / name))
        if code != 0 or out["payload"]["V"] != V or out["payload"]["W"] != W:
            failures.append(f"params CLI on {name}: {out}")
        colors = POINT if "point" in name else LINE
        p = incidence_parameters(fano(), colors)
        if (p.V, p.W) != (V, W):
            failures.append(f"V, W for {name}: {p.V}, {p.W}")
        if dict(parameter_tensor(fano(), colors).nonzero()) != S:
            failures.append(f"tensor for {name}")
    record(1, "Fano V, W and parameter tensors", failures, time.perf_counter() - start, 1)


def test_criterion_02_fano_charpolys():
    start, failures = time.perf_counter(), []
    cases = [
        (POINT, Polynomial((0, -3, 4, -4, 1)), [0, 3, complex(0.5, math.sqrt(3) / 2), complex(0.5, -math.sqrt(3) / 2)]),
        (LINE, Polynomial((18, -18, 1, -2, 1)), [1, 3, complex(-1, math.sqrt(5)), complex(-1, -math.sqrt(5))]),
    ]
    for colors, quartic, spectrum in cases:
        s = parameter_tensor(fano(), colors)
        got = charpoly_2color_3uniform(TwoColorThreeUniformParams.from_tensor(s))
        if got != quartic:
            failures.append(f"quartic {got.coeffs} != {quartic.coeffs}")
        lams = [p.lam for p in eigen_order2(s)]
        if not same_set(lams, spectrum):
            failures.append(f"eigenvalues {lams}")
    record(2, "Fano characteristic polynomials and spectra", failures, time.perf_counter() - start, 1)


def test_criterion_03_fano_census():
    start, failures = time.perf_counter(), []
    h = fano()
    perfect, classes = [], {}
    visited = 0
    for mask in range(1, 2**6):
        # vertex 0 keeps color 0, so every bipartition is visited once
        colors = [0] + [(mask >> v) & 1 for v in range(6)]
        visited += 1
        if not is_perfect(h, Coloring(colors)):
            continue
        if colors.count(0) > colors.count(1):
            colors = [1 - c for c in colors]
        colors = tuple(colors)
        perfect.append(colors)
        p = incidence_parameters(h, Coloring(colors, 2))
        classes.setdefault((json.dumps(p.V), json.dumps(p.W)), []).append(colors)
    if visited != 63:
        failures.append(f"visited {visited} bipartitions")
    sizes = sorted(min(c.count(0), c.count(1)) for c in perfect)
    if len(perfect) != 14 or sizes != [1] * 7 + [3] * 7:
        failures.append(f"{len(perfect)} perfect colorings with small class sizes {sizes}")
    wanted = {
        (json.dumps([[3, 0], [1, 2]]), json.dumps([[1, 2], [0, 3]])),
        (json.dumps([[1, 2], [0, 3]]), json.dumps([[3, 0], [1, 2]])),
    }
    if set(classes) != wanted:
        failures.append(f"parameter classes {sorted(classes)}")
    record(3, "Fano perfect 2-coloring census", failures, time.perf_counter() - start, 1)


def display_grid(s):
    """Lay a transversal tensor out the way the printed blocks are arranged."""
    r = lambda *g: s[g]
    if s.dim == 2:
        return [[r(0, 0), r(0, 1)], [r(1, 0), r(1, 1)]]
    if s.dim == 3:
        return [[r(g1, g2, g3) for g1 in range(2) for g3 in range(2)] for g2 in range(2)]
    return [
        [r(g1, g2, g3, g4) for g1 in range(2) for g3 in range(2)]
        for g4 in range(2)
        for g2 in range(2)
    ]


def swap_colors(s):
    flipped = s.entries[(slice(None, None, -1),) * s.dim]
    return MultiMatrix(flipped)


def printed_display(d, k, r):
    r = Fraction(r)
    h, t, z = r / 2, r / 3, Fraction(0)
    return {
        (2, 1): [[z, r], [r, z]],
        (3, 1): [[z, h, r, z], [h, z, z, z]],
        (4, 1): [[z, t, r, z], [t, z, z, z], [t, z, z, z], [z, z, z, z]],
        (4, 2): [[z, z, z, t], [z, t, t, z], [z, t, t, z], [t, z, z, z]],
    }[(d, k)]


def test_criterion_04_transversal_spectra():
    start, failures = time.perf_counter(), []
    for r in (1, 2, 6):
        for (d, k), swap in {(2, 1): False, (4, 2): False, (3, 1): True, (4, 1): True}.items():
            s = transversal_parameter_tensor(d, r, k)
            shown = display_grid(swap_colors(s) if swap else s)
            if shown != printed_display(d, k, r):
                failures.append(f"display d={d} k={k} r={r}")
    for d, k in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2), (6, 3), (6, 4)]:
        for r in (1, 2, 6):
            lams = [p.lam for p in eigen_order2(transversal_parameter_tensor(d, r, k))]
            xi = cmath.exp(2j * math.pi / d)
            expected = transversal_eigenvalues(d, r, k)
            if not all(any(abs(z - r * xi ** (j * k)) <= TOL for z in expected) for j in range(d)):
                failures.append(f"formula set d={d} k={k} r={r}")
            if not same_set(lams, expected):
                failures.append(f"eigen_order2 d={d} k={k} r={r} gives {[complex(round(z.real, 6), round(z.imag, 6)) for z in lams]}")
            if distinct_nonzero_count(lams) != d // math.gcd(k, d):
                failures.append(f"nonzero count d={d} k={k} r={r}")
    record(4, "transversal tensors and spectra", failures, time.perf_counter() - start, 1)


def test_criterion_05_transversal_nonexistence():
    start, failures = time.perf_counter(), []
    for n in (4, 5, 6):
        found = enumerate_k_transversals(complete_uniform(n, 3), 1)
        if found:
            failures.append(f"complete 3-uniform on {n} has {found}")
    if enumerate_k_transversals(fano(), 1):
        failures.append("Fano has a transversal")
    record(5, "no transversals in complete 3-uniform and Fano", failures, time.perf_counter() - start, 5)


def test_criterion_06_definition_equivalence():
    start, failures = time.perf_counter(), []
    cases = perfect_cases = 0
    for n in (3, 4, 5):
        triples = list(itertools.combinations(range(n), 3))
        for mask in range(1, 2 ** len(triples)):
            edges = tuple(e for i, e in enumerate(triples) if mask >> i & 1)
            h = Hypergraph(n, edges)
            a = adjacency_tensor(h)
            for cmask in range(2 ** (n - 1)):
                colors = tuple((cmask << 1) >> v & 1 for v in range(n))
                f = Coloring(colors)
                cases += 1
                perfect = is_perfect(h, f)
                exists = oracles.tensor_equation_solvable(n, list(edges), f.colors, f.k)
                if perfect != exists:
                    failures.append(f"n={n} edges={edges} colors={colors}")
                    continue
                if not perfect:
                    continue
                perfect_cases += 1
                s = parameter_tensor(h, f)
                pm = color_matrix(f)
                if mm_product(a, pm) != mm_product(pm, s):
                    failures.append(f"A o P != P o S for {edges}, {colors}")
                p = incidence_parameters(h, f)
                nv = [[p.N[i] * p.V[i][g] for g in range(len(p.M))] for i in range(f.k)]
                wm = [[p.W[g][i] * p.M[g] for g in range(len(p.M))] for i in range(f.k)]
                if nv != wm:
                    failures.append(f"NV != W^T M for {edges}, {colors}")
                if not is_symmetric(symmetrized(s, p.N)):
                    failures.append(f"N o S not symmetric for {edges}, {colors}")
    if perfect_cases == 0:
        failures.append("no perfect cases visited")
    print(f"definition equivalence: {cases} colorings, {perfect_cases} perfect")
    record(6, "perfect iff tensor equation, NV = W^T M, symmetry", failures, time.perf_counter() - start, 60)


def test_criterion_07_tensor_laws():
    def rand(rng, shape):
        return MultiMatrix(np.asarray(oracles.random_dense(rng, shape), dtype=object).reshape(shape))

    start, failures = time.perf_counter(), []
    rng = oracles.rng(7)
    for trial in range(100):
        n = rng.randint(1, 2)
        a, b, c = (rand(rng, (n,) * rng.randint(1, 3)) for _ in range(3))
        if mm_product(mm_product(a, b), c) != mm_product(a, mm_product(b, c)):
            failures.append(f"associativity trial {trial}")
    for trial in range(100):
        n, d = rng.randint(1, 3), rng.randint(1, 3)
        a, b = rand(rng, (n,) * d), rand(rng, (n,) * rng.randint(1, 3))
        lam = oracles.random_rational(rng)
        if mm_product(a, b * lam) != mm_product(a, b) * lam ** (d - 1):
            failures.append(f"scalar law trial {trial}")
    for trial in range(100):
        n = rng.randint(1, 4)
        a, b = rand(rng, (n, n)), rand(rng, (n,) * rng.randint(1, 2))
        if b.dim == 2:
            expected = oracles.matmul(a.tolist(), b.tolist())
        else:
            expected = [sum(a.tolist()[i][j] * b.tolist()[j] for j in range(n)) for i in range(n)]
        if mm_product(a, b).tolist() != expected:
            failures.append(f"dot product trial {trial}")
    for trial in range(100):
        d, n = rng.randint(1, 4), rng.randint(1, 5)
        colors = oracles.random_coloring(rng, n, k_max=3)
        p = color_matrix(colors)
        if mm_product(identity_tensor(d, n), p) != mm_product(p, identity_tensor(d, p.shape[1])):
            failures.append(f"identity law trial {trial}")
    record(7, "tensor algebra laws on 400 exact instances", failures, time.perf_counter() - start, 10)


def test_criterion_08_wl_correctness():
    start, failures = time.perf_counter(), []
    rng = oracles.rng(8)
    graphs = [oracles.random_hypergraph(rng, max_n=6, max_m=6) for _ in range(200)]
    triples = list(itertools.combinations(range(4), 3))
    graphs += [(4, [e for i, e in enumerate(triples) if mask >> i & 1]) for mask in range(16)]
    checked = 0
    for n, edges in graphs:
        h = Hypergraph(n, tuple(edges))
        seeds = [tuple([0] * n)] + [oracles.random_coloring(rng, n) for _ in range(4)]
        for seed in seeds:
            out = wl_refine(h, seed)
            checked += 1
            if not oracles.is_perfect(n, edges, out.colors):
                failures.append(f"not perfect: {n}, {edges}, {seed}")
            elif not oracles.refines(out.colors, seed):
                failures.append(f"does not refine seed: {n}, {edges}, {seed}")
            elif oracles.partition_of(out.colors) != oracles.partition_of(
                oracles.coarsest_perfect_refinement(n, edges, seed)
            ):
                failures.append(f"not coarsest: {n}, {edges}, {seed}")
    print(f"WL correctness: {len(graphs)} hypergraphs, {checked} seeds")
    record(8, "WL output is the coarsest perfect refinement", failures, time.perf_counter() - start, 60)


def random_consistent_params(rng):
    """Rejection-sample (V, W, N, M) with N V = W^T M and entries at most 4."""
    while True:
        k, l = rng.randint(1, 3), rng.randint(1, 3)
        N = [rng.randint(1, 4) for _ in range(k)]
        M = [rng.randint(1, 4) for _ in range(l)]
        W = [[rng.randint(0, min(4, N[i])) for i in range(k)] for _ in range(l)]
        if any(sum(row) == 0 for row in W) or len({tuple(row) for row in W}) != l:
            continue
        V = []
        for i in range(k):
            row = [Fraction(W[g][i] * M[g], N[i]) for g in range(l)]
            if any(x.denominator != 1 or x > 4 for x in row):
                break
            V.append([int(x) for x in row])
        else:
            return V, W, N, M


def test_criterion_09_construct_round_trip():
    start, failures = time.perf_counter(), []
    rng = oracles.rng(9)
    for trial in range(50):
        V, W, N, M = random_consistent_params(rng)
        want = canonical_params(V, W, N, M)
        h, f = construct_from_params(V, W, N, M)
        got = incidence_parameters(h, f)
        if (got.V, got.W, got.N, got.M) != (want.V, want.W, want.N, want.M):
            failures.append(f"trial {trial}: {V}, {W}, {N}, {M}")
    for bad in (
        ([[3, 0], [1, 2]], [[1, 2], [0, 3]], [1, 6], [3, 5]),
        ([[2]], [[1]], [3], [5]),
        ([[1, 1], [1, 0]], [[1, 1], [0, 1]], [2, 2], [2, 2]),
    ):
        try:
            construct_from_params(*bad)
        except ValidationError:
            continue
        failures.append(f"accepted inconsistent {bad}")
    record(9, "construct then measure returns the parameters", failures, time.perf_counter() - start, 5)


def test_criterion_10_common_cover():
    start, failures = time.perf_counter(), []
    g, c1, c2 = common_cover(fano(), monochromatic(7), F3, monochromatic(3))
    p = profile(g)
    if (g.n, g.m, p.uniform_d, p.regular_r) != (63, 63, 3, 3):
        failures.append(f"shape {(g.n, g.m, p.uniform_d, p.regular_r)}")
    if verify_covering(g, fano(), c1) != 9:
        failures.append("Fano side is not a 9-covering")
    if verify_covering(g, F3, c2.phi, c2.edge_map) != 21:
        failures.append("F3 side is not a 21-covering")
    for target, cov, k in ((fano(), c1, 9), (F3, c2, 21)):
        b = incidence_matrix(target)
        for (x, e), block in covering_blocks(g, target, cov).items():
            ones = sorted(map(sum, block)) + sorted(map(sum, zip(*block)))
            if b[x, e] and ones != [1] * (2 * k) or not b[x, e] and any(ones):
                failures.append(f"block ({x}, {e}) of the {k}-covering")
                break
    mp = multipartite_cover(fano())
    part_of = {x: i for i, part in enumerate(mp.parts) for x in part}
    if len(mp.parts) != 3 or any(sorted(part_of[x] for x in e) != [0, 1, 2] for e in mp.graph.edges):
        failures.append("multipartite cover is not 3-partite")
    if len(mp.matchings) != 3 or any(
        sorted(x for j in m for x in mp.graph.edges[j]) != list(range(mp.graph.n)) for m in mp.matchings
    ):
        failures.append("matchings are not 3 perfect matchings")
    if verify_covering(mp.graph, fano(), mp.covering) * 7 != mp.graph.n:
        failures.append("multipartite cover does not cover Fano")
    record(10, "common cover of Fano and F3, multipartite cover", failures, time.perf_counter() - start, 5)


def test_criterion_11_transfer_through_cover():
    start, failures = time.perf_counter(), []
    g, c1, _ = common_cover(fano(), monochromatic(7), F3, monochromatic(3))
    a_g = adjacency_tensor(g)
    ones = EigenPair(3, (1,) * 7)
    if not verify_eigenpair(adjacency_tensor(fano()), 3, ones.x):
        failures.append("all-ones is not an eigenvector of Fano")
    lifted = lift_eigenpair(Coloring(c1.phi, 7), ones, a_g)
    if not lifted.residual <= TOL:
        failures.append(f"lifted all-ones residual {lifted.residual}")
    for colors, want in ((POINT, S_POINT), (LINE, S_LINE)):
        f = lift_coloring(g, fano(), c1, colors)
        if not is_perfect(g, f):
            failures.append(f"lift of {colors} is not perfect")
        elif dict(parameter_tensor(g, f).nonzero()) != want:
            failures.append(f"lift of {colors} changes the tensor")
    record(11, "eigenpairs and colorings lift through the cover", failures, time.perf_counter() - start, 5)


def test_criterion_12_lifted_fano_eigenpairs():
    start, failures = time.perf_counter(), []
    a = adjacency_tensor(fano())
    spectrum = []
    for colors in (POINT, LINE):
        for pair in eigen_order2(parameter_tensor(fano(), colors)):
            big = lift_eigenpair(Coloring(colors), pair, a)
            if not big.residual <= TOL or not verify_eigenpair(a, big.lam, big.x):
                failures.append(f"lam={pair.lam} residual {big.residual}")
            values = []
            for z in big.x:
                if all(abs(z - w) > TOL for w in values):
                    values.append(z)
            if len(values) > 2:
                failures.append(f"lam={pair.lam} has {len(values)} component values")
            if all(abs(pair.lam - w) > TOL for w in spectrum):
                spectrum.append(pair.lam)
    if len(spectrum) != 7:
        failures.append(f"{len(spectrum)} distinct eigenvalues")
    record(12, "seven verified Fano eigenpairs from two colorings", failures, time.perf_counter() - start, 1)


def test_criterion_13_degree_and_hyperplanes():
    start, failures = time.perf_counter(), []
    if charpoly_degree(2, 3) != 4 or 2 * (3 - 1) ** (2 - 1) != 4:
        failures.append("formula degree")
    tensors = []
    for colors in (POINT, LINE):
        s = parameter_tensor(fano(), colors)
        quartic = charpoly_2color_3uniform(TwoColorThreeUniformParams.from_tensor(s))
        if quartic.degree != 4:
            failures.append(f"quartic degree {quartic.degree}")
        tensors.append((fano(), Coloring(colors), s))
    rng = oracles.rng(13)
    for _ in range(60):
        n = rng.randint(3, 7)
        pool = list(itertools.combinations(range(n), 3))
        h = Hypergraph(n, tuple(sorted(rng.sample(pool, rng.randint(1, min(8, len(pool)))))))
        f = wl_refine(h, oracles.random_coloring(rng, n))
        tensors.append((h, f, parameter_tensor(h, f)))
    for h, f, s in tensors:
        degrees = h.degrees()
        for c, members in enumerate(f.classes()):
            if hyperplane_sum(s, 1, c) != degrees[members[0]]:
                failures.append(f"hyperplane sum of color {c} in {h.edges}")
    record(13, "quartic degree and hyperplane sums", failures, time.perf_counter() - start, 1)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
