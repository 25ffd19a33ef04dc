"""Vectorised NumPy fallback for the closure search."""
from __future__ import annotations

import numpy as np


def closure_hits(beta: np.ndarray, cands: np.ndarray, m: int) -> np.ndarray:
    """Indices of rows ``lam_1`` whose propagation ``lam_{l+1} = lam_l + u_{lam_l} beta_l`` closes up.

    Closing up means ``lam_{d+1} == eta^m lam_1``.
    """
    cands = np.asarray(cands, dtype=np.int64)
    beta = np.asarray(beta, dtype=np.int64)
    n = cands.shape[1]
    idx = np.arange(n, dtype=np.int64)
    code = idx + n * cands + m
    target = np.empty_like(cands)
    np.put_along_axis(target, code % n, code // n, axis=1)
    lam = cands.copy()
    for row in beta:
        order = np.argsort(-(idx + n * lam), axis=1, kind="stable")
        add = np.empty_like(lam)
        np.put_along_axis(add, order, np.broadcast_to(row, lam.shape), axis=1)
        lam += add
    return np.flatnonzero((lam == target).all(axis=1))
