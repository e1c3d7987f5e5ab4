"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
numpy/pure-Python ``_pykernels`` module stands in.  Both expose::

    product_cover(orders, n, s_digits, s_sign) -> uint8[2n]
    bfs_distances(orders, n, s_digits, s_sign) -> int32[2n]
    cyclic_distances(n, residues)              -> int32[n]
    atom_search(table, atoms, target)          -> (atom indices | None, examined)

Set ``DIHEDRAL_CAYLEY_BACKEND=python`` to force the fallback at runtime.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

try:
    from . import _kernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

_forced_python = os.environ.get("DIHEDRAL_CAYLEY_BACKEND", "").lower() == "python"

if compiled_backend is not None and not _forced_python:
    backend, BACKEND_NAME = compiled_backend, "cython"
else:
    backend, BACKEND_NAME = python_backend, "python"

product_cover = backend.product_cover
bfs_distances = backend.bfs_distances
cyclic_distances = backend.cyclic_distances
atom_search = backend.atom_search
