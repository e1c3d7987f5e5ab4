"""Time the compiled kernels against the numpy/pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from dihedral_cayley import _pykernels, kernels
from dihedral_cayley import field_construction as fc
from dihedral_cayley import search_oracle as so
from dihedral_cayley.cyclic_cover import cover_set
from dihedral_cayley.group_core import GroupSpec, decode_indices, indices_of


def cases():
    S = fc.build_generating_set(101)
    spec = S.spec
    digits, sign = decode_indices(spec, indices_of(spec, fc.transported_set(S)))
    digits = np.ascontiguousarray(digits)
    radix = spec.radix_array()
    yield "product_cover p=101", lambda b: b.product_cover(radix, spec.n, digits, sign)
    yield "bfs_distances p=101", lambda b: b.bfs_distances(radix, spec.n, digits, sign)

    n = 20011
    res = np.asarray(cover_set(n).sorted_residues(), dtype=np.int64)
    yield "cyclic_distances n=20011", lambda b: b.cyclic_distances(n, res)

    spec = GroupSpec((4, 4))
    table = so.cayley_table(spec)
    atoms = so.atoms(spec, table)
    yield "atom_search Z4xZ4 size 6", lambda b: b.atom_search(table, atoms, 6)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'kernel':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:28s} {py:10.2f} {'-':>10s} {'-':>8s}")
            continue
        cy = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:28s} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
