"""Orthonormal Haar wavelet dictionaries."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Dictionary", "haar_dictionary"]


@dataclass(frozen=True, eq=False)
class Dictionary:
    """An N x N matrix whose columns are orthonormal atoms."""

    atoms: np.ndarray

    @property
    def n(self) -> int:
        return self.atoms.shape[1]

    def reconstruct(self, indices, coefficients) -> np.ndarray:
        """Linear combination of the selected atoms."""
        if len(indices) == 0:
            return np.zeros(self.atoms.shape[0])
        return self.atoms[:, list(indices)] @ np.asarray(coefficients, dtype=np.float64)


def haar_dictionary(n: int) -> Dictionary:
    """Full-depth orthonormal 1D Haar basis of dimension n = 2^m.

    Column 0 is the constant scaling atom; the remaining columns are the
    step wavelets at every dyadic level, coarse to fine, translations
    left to right.  Each atom is +a on the first half of its support and
    -a on the second, with a chosen for unit norm.
    """
    n = int(n)
    if n < 2 or n & (n - 1):
        raise ValueError(f"dictionary dimension must be a power of two >= 2, got {n}")
    atoms = np.zeros((n, n), dtype=np.float64)
    atoms[:, 0] = 1.0 / np.sqrt(n)
    col = 1
    support = n
    while support >= 2:
        amp = 1.0 / np.sqrt(support)
        half = support // 2
        for start in range(0, n, support):
            atoms[start : start + half, col] = amp
            atoms[start + half : start + support, col] = -amp
            col += 1
        support //= 2
    atoms.setflags(write=False)
    return Dictionary(atoms)
