"""Hot-kernel dispatch: compiled extension when available, pure Python otherwise.

Two kernels dominate the library's runtime:

* ``poly_mulreduce`` -- integer-vector convolution followed by reduction
  modulo the conductor's cyclotomic polynomial (the core of every exact
  field multiplication);
* ``modp_rank`` -- in-place Gaussian elimination over a prime field on a
  dense machine-word matrix (the fast lane of the tensor-power rank
  computations).

The compiled variants live in ``taftdouble._speedups`` (built from Cython).
Set ``TAFTDOUBLE_PURE=1`` to force the pure implementations; the benchmark
in ``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os


def _poly_mulreduce_py(a, b, rows):
    phi = len(a)
    out = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    for idx in range(2 * phi - 2, phi - 1, -1):
        t = out[idx]
        if t:
            row = rows[idx - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    out[j] += t * rj
    del out[phi:]
    return out


def _modp_rank_py(mat, p):
    """Rank of an int64 numpy matrix over F_p (destroys its argument)."""
    import numpy as np

    a = mat % p
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = None
        colvals = a[rank:, col]
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1 :, col]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            idx = rank + 1 + nzb
            a[idx, col:] = (a[idx, col:] - np.outer(below[nzb], a[rank, col:])) % p
        rank += 1
    return rank


_FORCE_PURE = os.environ.get("TAFTDOUBLE_PURE", "") not in ("", "0")

if not _FORCE_PURE:
    try:
        from . import _speedups as _ext
    except ImportError:
        _ext = None
else:
    _ext = None

if _ext is not None:
    BACKEND = "compiled"
    poly_mulreduce = _ext.poly_mulreduce
    modp_rank = _ext.modp_rank
else:
    BACKEND = "pure"
    poly_mulreduce = _poly_mulreduce_py
    modp_rank = _modp_rank_py
