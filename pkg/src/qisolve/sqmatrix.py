"""Dense matrices wrapped with squared-norm sample/query access.

Entry and norm queries are O(1); index draws follow the squared-norm
distributions over rows, columns, and entries within a row, each costing
one binary search over a prefix-sum table.
"""
from __future__ import annotations

import numpy as np

from .rng import RandomStream


def _cdf_draw(cdf: np.ndarray, u):
    """Map uniforms in [0, 1) to indices by inverse CDF.

    Zero-weight entries occupy an empty slice of the CDF and can never be
    returned. The target is clamped one ulp below the total so a uniform
    rounding up to 1.0*total cannot index past the table.
    """
    total = cdf[-1]
    t = np.minimum(u * total, np.nextafter(total, 0.0))
    return np.searchsorted(cdf, t, side="right")


class SQMatrix:
    """A real n x d matrix with cached squared-norm distributions.

    Immutable after construction: the entry array is marked read-only, and
    concurrent reads/draws are safe provided each caller owns its own
    RandomStream. The per-row entry tables are built on first use; building
    the same row twice is idempotent, so no locking is needed.
    """

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError("matrix must be 2-D with at least one row and one column")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must all be finite")
        self.n, self.d = a.shape
        self.entries = a
        self.row_sqnorms = np.einsum("ij,ij->i", a, a)
        self.col_sqnorms = np.einsum("ij,ij->j", a, a)
        self.row_cdf = np.cumsum(self.row_sqnorms)
        self.col_cdf = np.cumsum(self.col_sqnorms)
        self.frob_sq = float(self.row_cdf[-1])
        if self.frob_sq <= 0.0:
            raise ValueError("all-zero matrix has no sampling distribution")
        self._row_entry_cdfs: dict[int, np.ndarray] = {}
        a.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.d

    @property
    def row_probs(self) -> np.ndarray:
        return self.row_sqnorms / self.frob_sq

    @property
    def col_probs(self) -> np.ndarray:
        return self.col_sqnorms / self.frob_sq

    def query_entry(self, r: int, c: int) -> float:
        if not (0 <= r < self.n):
            raise IndexError(f"row index {r} out of range [0, {self.n})")
        if not (0 <= c < self.d):
            raise IndexError(f"column index {c} out of range [0, {self.d})")
        return float(self.entries[r, c])

    def sample_row(self, rng: RandomStream) -> int:
        """Draw a row index proportional to its squared norm."""
        return int(_cdf_draw(self.row_cdf, rng.uniform()))

    def sample_col(self, rng: RandomStream) -> int:
        """Draw a column index proportional to its squared norm."""
        return int(_cdf_draw(self.col_cdf, rng.uniform()))

    def sample_rows(self, rng: RandomStream, size: int) -> np.ndarray:
        return _cdf_draw(self.row_cdf, rng.uniforms(size))

    def sample_cols(self, rng: RandomStream, size: int) -> np.ndarray:
        return _cdf_draw(self.col_cdf, rng.uniforms(size))

    def row_entry_cdf(self, r: int) -> np.ndarray:
        if not (0 <= r < self.n):
            raise IndexError(f"row index {r} out of range [0, {self.n})")
        cdf = self._row_entry_cdfs.get(r)
        if cdf is None:
            row = self.entries[r]
            cdf = np.cumsum(row * row)
            if cdf[-1] <= 0.0:
                raise ValueError(f"row {r} has zero norm; no entry distribution exists")
            self._row_entry_cdfs[r] = cdf
        return cdf

    def sample_entry_in_row(self, r: int, rng: RandomStream) -> int:
        """Draw a column index proportional to the squared entries of row r."""
        return int(_cdf_draw(self.row_entry_cdf(r), rng.uniform()))
