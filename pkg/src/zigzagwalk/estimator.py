"""Scikit-learn style facade over the mesh and the walk.

ZigZagLocator turns the library into a fit/predict pair: fit builds (or
adopts) a triangulation over the training points, predict maps query
points to the id of a containing face.  It exists for pipeline
compatibility; the underlying modules remain the primary API.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .mesh import Mesh, OUTER_FACE
from .meshgen import delaunay_from_points
from .walk import (
    BoundaryStart,
    TieBreakPolicy,
    WalkConfig,
    WalkStatus,
    locate,
)


class ZigZagLocator(BaseEstimator):
    """Point-location estimator backed by the zig-zag walk.

    Parameters
    ----------
    triangles : sequence of (i, j, k) or None
        Faces over the points passed to fit.  None triangulates the
        points with the built-in Delaunay generator.
    policy : str, "right" | "left" | "random"
        Tie-break rule when both successor edges are equally close.
    seed : int
        Seed for the "random" policy; ignored otherwise.
    max_steps : int or None
        Walk step guard; None allows one more step than the edge count.

    Attributes
    ----------
    mesh_ : Mesh
        The triangulation queries run against.
    """

    def __init__(self, triangles=None, policy: str = "right", seed: int = 0,
                 max_steps: Optional[int] = None):
        self.triangles = triangles
        self.policy = policy
        self.seed = seed
        self.max_steps = max_steps

    def fit(self, X, y=None):
        X = check_array(X, dtype=float)
        if X.shape[1] != 2:
            raise ValueError(f"expected 2D points, got {X.shape[1]} columns")
        pts = [(float(x), float(y_)) for x, y_ in X]
        if self.triangles is None:
            self.mesh_ = delaunay_from_points(pts)
        else:
            self.mesh_ = Mesh(pts, [tuple(map(int, t)) for t in self.triangles])
        self._cfg = WalkConfig(policy=TieBreakPolicy(self.policy, self.seed),
                               max_steps=self.max_steps)
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        """Face id containing each query point, -1 when outside the hull."""
        check_is_fitted(self, "mesh_")
        X = check_array(X, dtype=float)
        if X.shape[1] != 2:
            raise ValueError(f"expected 2D points, got {X.shape[1]} columns")
        m = self.mesh_
        out = np.empty(len(X), dtype=np.intp)
        start = 0
        for i, (x, y) in enumerate(X):
            try:
                res, _ = locate(m, start, (float(x), float(y)), self._cfg)
            except BoundaryStart:
                out[i] = -1
                continue
            if res.status is WalkStatus.FOUND:
                out[i] = res.face
                start = 3 * res.face  # warm start: queries tend to cluster
            else:
                out[i] = -1
        return out

    def score(self, X, y):
        """Fraction of queries whose predicted face id equals y."""
        return float(np.mean(self.predict(X) == np.asarray(y)))
