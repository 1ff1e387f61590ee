"""Matrix Market text I/O for dense matrices and vectors.

Both the array and coordinate variants are accepted on read; writes use the
array variant with 17 significant digits so values round-trip.
"""
from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.io import mmread, mmwrite


def write_matrix(path, a, comment: str = "") -> None:
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    mmwrite(str(path), a, comment=comment, precision=17)


def read_matrix(path) -> np.ndarray:
    m = mmread(str(path))
    if sparse.issparse(m):
        m = m.toarray()
    return np.asarray(m, dtype=np.float64)


def write_vector(path, v, comment: str = "") -> None:
    v = np.asarray(v, dtype=np.float64).reshape(-1, 1)
    mmwrite(str(path), v, comment=comment, precision=17)


def read_vector(path) -> np.ndarray:
    m = read_matrix(path)
    if m.ndim != 2 or 1 not in m.shape:
        raise ValueError(f"{path} holds a {m.shape} matrix, not a vector")
    return m.ravel()
