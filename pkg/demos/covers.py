"""A common cover of the Fano plane and a triple edge, and lifts through it."""

from hypercolor import (
    Coloring,
    EigenPair,
    adjacency_tensor,
    common_cover,
    fano,
    is_perfect,
    lift_coloring,
    lift_eigenpair,
    monochromatic,
    multipartite_cover,
    parameter_tensor,
    profile,
    verify_covering,
)
from hypercolor.hypergraph import repeated_edge


def main():
    f3 = repeated_edge(3, 3)
    g, c1, c2 = common_cover(fano(), monochromatic(7), f3, monochromatic(3))
    p = profile(g)
    print(f"cover: {g.n} vertices, {g.m} edges, {p.uniform_d}-uniform, {p.regular_r}-regular")
    print(f"  covers Fano {verify_covering(g, fano(), c1)} times")
    print(f"  covers the triple edge {verify_covering(g, f3, c2.phi, c2.edge_map)} times")

    lifted = lift_eigenpair(Coloring(c1.phi, 7), EigenPair(3, (1,) * 7), adjacency_tensor(g))
    print(f"all-ones eigenpair lifted, residual {lifted.residual:.1e}")
    for colors in ((0, 1, 1, 1, 1, 1, 1), (0, 0, 0, 1, 1, 1, 1)):
        f = lift_coloring(g, fano(), c1, colors)
        same = parameter_tensor(g, f) == parameter_tensor(fano(), colors)
        print(f"lift of {colors}: perfect={is_perfect(g, f)}, same tensor={same}")

    mp = multipartite_cover(fano())
    print(f"\nmultipartite cover: parts {[len(x) for x in mp.parts]}, {len(mp.matchings)} perfect matchings")


if __name__ == "__main__":
    main()
