"""Transversal colorings: their tensors, spectra, and a spectral obstruction."""

import math

from hypercolor import eigen_order2, enumerate_k_transversals, fano, transversal_parameter_tensor
from hypercolor.hypergraph import complete_uniform
from hypercolor.spectra import distinct_nonzero_count


def main():
    r = 2
    for d, k in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (6, 4)]:
        s = transversal_parameter_tensor(d, r, k)
        lams = [p.lam for p in eigen_order2(s)]
        shown = ", ".join(f"{z.real:+.3f}{z.imag:+.3f}i" for z in lams)
        print(f"d={d} k={k} r={r}: {shown}")
        print(f"  distinct nonzero: {distinct_nonzero_count(lams)}, d/gcd(k,d) = {d // math.gcd(k, d)}")

    print("\n1-transversals by exhaustive search:")
    for n in (4, 5, 6):
        print(f"  complete 3-uniform on {n} vertices: {len(enumerate_k_transversals(complete_uniform(n, 3), 1))}")
    print(f"  Fano plane: {len(enumerate_k_transversals(fano(), 1))}")


if __name__ == "__main__":
    main()
