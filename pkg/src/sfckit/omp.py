"""Greedy sparse coding by orthogonal matching pursuit.

Each iteration selects the atom best correlated with the current
residual, refits all selected atoms by least squares, and subtracts the
projection; the residual norm is therefore non-increasing and the
selected indices stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .wavelets import Dictionary

__all__ = ["SparseCoding", "omp"]


@dataclass(frozen=True, eq=False)
class SparseCoding:
    """Output of the pursuit: selected atoms, their weights, and the fit."""

    indices: tuple[int, ...]
    coefficients: np.ndarray
    residual_norm: float
    iterations: int


def omp(signal, dictionary: Dictionary, k: int, tol: float = 0.0) -> SparseCoding:
    """Approximate `signal` with at most k dictionary atoms.

    Stops after k selections or once the residual norm drops to `tol`.
    The least-squares refit is done through an incrementally updated
    Cholesky factor of the Gram matrix of the selected atoms (with a
    dense lstsq fallback if the selection ever becomes numerically
    dependent), keeping each refit O(k^2).

    A zero signal selects nothing and reports a zero residual.
    """
    atoms = dictionary.atoms
    dim, n = atoms.shape
    b = np.asarray(signal, dtype=np.float64).ravel()
    if b.shape[0] != dim:
        raise ValueError(f"signal length {b.shape[0]} != dictionary dimension {dim}")
    if not 1 <= k <= n:
        raise ValueError(f"sparsity must be in [1, {n}], got {k}")

    selected: list[int] = []
    taken = np.zeros(n, dtype=bool)
    sel_atoms = np.empty((dim, k))
    chol = np.zeros((k, k))  # lower-triangular factor of the Gram matrix
    rhs = np.empty(k)
    coef = np.zeros(0)
    resid = b.copy()
    rnorm = float(np.linalg.norm(resid))
    dependent = False

    while len(selected) < k and rnorm > tol:
        corr = atoms.T @ resid
        corr[taken] = 0.0
        j = int(np.argmax(np.abs(corr)))
        if corr[j] == 0.0:
            break
        m = len(selected)
        col = atoms[:, j]
        sel_atoms[:, m] = col
        rhs[m] = col @ b
        if not dependent:
            cross = sel_atoms[:, :m].T @ col
            if m:
                low = solve_triangular(chol[:m, :m], cross, lower=True, check_finite=False)
            else:
                low = np.empty(0)
            diag_sq = float(col @ col) - float(low @ low)
            if diag_sq <= 1e-12:
                dependent = True
            else:
                chol[m, :m] = low
                chol[m, m] = np.sqrt(diag_sq)
        selected.append(j)
        taken[j] = True
        m += 1
        if dependent:
            coef = np.linalg.lstsq(sel_atoms[:, :m], b, rcond=None)[0]
        else:
            z = solve_triangular(chol[:m, :m], rhs[:m], lower=True, check_finite=False)
            coef = solve_triangular(chol[:m, :m].T, z, lower=False, check_finite=False)
        resid = b - sel_atoms[:, :m] @ coef
        rnorm = float(np.linalg.norm(resid))

    return SparseCoding(
        indices=tuple(selected),
        coefficients=np.asarray(coef[: len(selected)], dtype=np.float64).copy(),
        residual_norm=rnorm,
        iterations=len(selected),
    )
