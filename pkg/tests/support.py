"""Shared fixtures and independent reference implementations.

The reference code here deliberately avoids the library's own closed forms:
the 3D pitch/roll oracle minimizes over a dense grid of sampled axis
directions (with the admissible-set endpoints included exactly), and the
2D location oracle in zigzagwalk.oracle is an exhaustive scan.
"""

import math

import numpy as np

from zigzagwalk.mesh import Mesh
from zigzagwalk.oriented3d import closest_point_on_triangle


def square_mesh() -> Mesh:
    # unit-ish square split by the (0,0)-(2,2) diagonal
    return Mesh([(0, 0), (2, 0), (2, 2), (0, 2)], [(0, 1, 2), (0, 2, 3)])


def single_triangle() -> Mesh:
    return Mesh([(0, 0), (2, 0), (0, 2)], [(0, 1, 2)])


def two_row_strip() -> Mesh:
    """Two triangle rows around a center vertex; queries above the center
    force the walk to detour left or right around the tip."""
    verts = [(-5, -3), (5, -3), (0, 0), (-5, 3), (5, 3)]
    return Mesh(verts, [(0, 1, 2), (0, 2, 3), (2, 4, 3), (1, 4, 2)])


def in_hull_points(mesh: Mesh, k: int, rng) -> list:
    """k points sampled uniformly inside random faces (closed hull)."""
    faces = rng.integers(0, mesh.n_faces, size=k)
    u = rng.random((k, 2))
    flip = u.sum(axis=1) > 1.0
    u[flip] = 1.0 - u[flip]
    pts = []
    for f, (r, s) in zip(faces, u):
        a, b, c = (mesh.vertex(v) for v in mesh.face_vertices(int(f)))
        t = 1.0 - r - s
        pts.append((t * a[0] + r * b[0] + s * c[0],
                    t * a[1] + r * b[1] + s * c[1]))
    return pts


def sampled_pitch_roll(t, p, samples: int = 1_000_000):
    """Brute-force (pitch, roll) minimization over sampled roll axes.

    Samples the admissible axis directions for the closest-point feature
    (full circle for an interior foot, closed half-circle for an edge foot,
    the closed wedge for a vertex foot).  The sample grid includes the
    admissible-set boundary directions exactly, so the true lexicographic
    minimum is hit when it sits on the boundary.
    """
    tri = np.asarray(t, dtype=float)
    p = np.asarray(p, dtype=float)
    foot, feat = closest_point_on_triangle(tri, p)
    w = p - foot
    n = np.cross(tri[1] - tri[0], tri[2] - tri[0])
    n /= np.linalg.norm(n)

    if feat.kind == "face":
        ex = tri[1] - tri[0]
        ex /= np.linalg.norm(ex)
        ey = np.cross(n, ex)
        theta = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    elif feat.kind == "edge":
        i = feat.index
        e = tri[(i + 1) % 3] - tri[i]
        e /= np.linalg.norm(e)
        inward = np.cross(n, e)
        if float(inward @ (tri[(i + 2) % 3] - foot)) < 0:
            inward = -inward
        ex, ey = e, inward
        theta = np.linspace(0.0, math.pi, samples, endpoint=True)
    else:
        i = feat.index
        v = tri[i]
        e1 = tri[(i + 1) % 3] - v
        e1 /= np.linalg.norm(e1)
        e2 = tri[(i + 2) % 3] - v
        e2 /= np.linalg.norm(e2)
        wedge = math.acos(max(-1.0, min(1.0, float(e1 @ e2))))
        ex = e1
        ey = e2 - float(e2 @ e1) * e1
        ey /= np.linalg.norm(ey)
        theta = np.linspace(0.0, wedge, samples, endpoint=True)

    axes = np.outer(np.cos(theta), ex) + np.outer(np.sin(theta), ey)
    wn = float(np.linalg.norm(w))
    pitch = np.arccos(np.clip(axes @ w / wn, -1.0, 1.0))
    wp = w[None, :] - axes * (axes @ w)[:, None]
    wp2 = np.einsum("ij,ij->i", wp, wp)
    roll = np.where(
        wp2 <= 1e-30 * wn * wn,
        math.pi / 2,
        np.arccos(np.clip(np.abs(wp @ n) / np.sqrt(np.maximum(wp2, 1e-300)),
                          0.0, 1.0)))
    amin = float(pitch.min())
    tied = pitch <= amin + 1e-9
    return amin, float(roll[tied].min())


def random_triangle3(rng, lo=-2.0, hi=2.0, min_area2=0.5):
    while True:
        tri = rng.uniform(lo, hi, (3, 3))
        if np.linalg.norm(np.cross(tri[1] - tri[0], tri[2] - tri[0])) >= min_area2:
            return tri
