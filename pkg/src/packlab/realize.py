"""Floating-point realization of abstract packing clusters.

Some packings (the divergent-wall example among them) admit no rational
sphere-vector realization even though their curvatures are integers, so
render-oriented outputs fall back to floats.  Given the normalized weight
Gram W and a curvature vector k with k^T W^{-1} k = 0, this builds real
sphere vectors with Gram W whose first coordinates are exactly the
requested curvatures: diagonalize W against the standard inversive frame,
then move the isotropic vector representing the curvature functional onto
the last basis vector by Lorentz reflections.

Float output only; never feed these coordinates back into exact code.
"""

from __future__ import annotations

import numpy as np

from .errors import PreconditionError
from .orbit import Cluster


def _inversive_gram(n: int) -> np.ndarray:
    j = np.zeros((n + 2, n + 2))
    for i in range(1, n + 1):
        j[i, i] = 1.0
    j[0, n + 1] = j[n + 1, 0] = 1.0
    return j


def _reflect(j: np.ndarray, w: np.ndarray) -> np.ndarray:
    n2 = w @ j @ w
    return np.eye(len(w)) - 2.0 * np.outer(w, j @ w) / n2


def numeric_realization(cluster: Cluster) -> np.ndarray:
    """Columns = float sphere vectors realizing the cluster's working basis."""
    if cluster.curvature_seed is None:
        raise PreconditionError("numeric realization needs cluster curvature data")
    w_exact = cluster.system.normalized_gram
    rank = len(w_exact)
    n = rank - 2
    w = np.array([[float(x) for x in row] for row in w_exact])
    jmat = _inversive_gram(n)

    evals, evecs = np.linalg.eigh(w)
    order = np.argsort(-evals)  # positives first, the single negative last
    evals, evecs = evals[order], evecs[:, order]
    if evals[-1] >= 0 or np.any(evals[:-1] <= 0):
        raise PreconditionError("cluster Gram is not of hyperbolic signature")
    alpha = np.sqrt(np.abs(evals))[:, None] * evecs.T  # basis coords in a +..+- frame

    frame = np.zeros((rank, rank))
    for i in range(1, n + 1):
        frame[i, i - 1] = 1.0  # e_1 .. e_n: the positive definite block
    frame[0, n] = frame[n + 1, n] = 1.0 / np.sqrt(2.0)  # (e_0 + e_{n+1})/sqrt(2)
    frame[0, n + 1] = 1.0 / np.sqrt(2.0)
    frame[n + 1, n + 1] = -1.0 / np.sqrt(2.0)  # (e_0 - e_{n+1})/sqrt(2), norm -1
    y = frame @ alpha  # columns realize the basis: y^T J y == W

    k = np.array([float(x) for x in cluster.curvature_seed])
    coeff = np.linalg.solve(w, k)
    u = y @ coeff  # isotropic vector representing the curvature functional
    target = np.zeros(rank)
    target[n + 1] = 1.0
    scale = max(1.0, float(np.abs(u).max()))
    if abs(u[0]) > 1e-10 * scale:
        # (u - target, u - target) = -2 (u, target) = -2 u[0] != 0
        lorentz = _reflect(jmat, u - target)
    else:
        # isotropy forces u ~ c e_{n+1}; fix the scale with a boost
        c = u[n + 1]
        if abs(c) < 1e-10 * scale:
            raise PreconditionError("degenerate curvature functional")
        lorentz = np.eye(rank)
        lorentz[0, 0] = c
        lorentz[n + 1, n + 1] = 1.0 / c
    x = lorentz @ y
    if not np.allclose(x[0], k, rtol=1e-8, atol=1e-8):
        raise PreconditionError("numeric realization failed to match the curvature row")
    return x


def approximate_spheres(cluster: Cluster, columns) -> list[dict]:
    """Float curvature/center/radius records for abstract orbit columns."""
    x = numeric_realization(cluster)
    out = []
    for col in columns:
        v = x @ np.array([float(c) for c in col])
        k = v[0]
        if abs(k) < 1e-12:
            norm = float(np.linalg.norm(v[1:-1]))
            out.append(
                {
                    "curvature": 0.0,
                    "normal": tuple(float(x) / norm for x in v[1:-1]),
                    "offset": float(v[-1]) / norm,
                    "radius": float("inf"),
                }
            )
        else:
            out.append(
                {
                    "curvature": float(k),
                    "center": tuple(float(t) / float(k) for t in v[1:-1]),
                    "radius": 1.0 / abs(float(k)),
                }
            )
    return out
