"""Color refinement from a seed coloring down to the coarsest perfect one."""

from hypercolor import Hypergraph, fano, incidence_parameters, monochromatic, wl_refine
from hypercolor.hypergraph import cycle


def show(name, h, seed):
    f = wl_refine(h, seed)
    p = incidence_parameters(h, f)
    print(f"{name}: seed {tuple(seed)} -> {f.colors} ({f.k} colors), V = {p.V}")


def main():
    show("Fano, one vertex marked", fano(), (1, 0, 0, 0, 0, 0, 0))
    show("Fano, two vertices marked", fano(), (1, 1, 0, 0, 0, 0, 0))
    show("6-cycle, one vertex marked", cycle(6), (1, 0, 0, 0, 0, 0))
    star = Hypergraph(5, ((0, 1, 2), (0, 3, 4)))
    show("two triples sharing a vertex", star, monochromatic(5).colors)


if __name__ == "__main__":
    main()
