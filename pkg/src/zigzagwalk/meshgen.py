"""Deterministic, seedable triangulation generators for tests and benchmarks.

Four families: grid (unit squares split by a diagonal), delaunay (uniform
random points triangulated by incremental Bowyer-Watson with exact
predicates), fan (thin triangles sharing an apex), and strip (a zig-zag
band of high-aspect triangles).  Equal specs produce byte-identical meshes.

The Bowyer-Watson construction carries one ghost triangle (a, b, -1) per
hull edge instead of a super-triangle.  A ghost is in conflict with a new
point when the point lies strictly left of a->b (outside the hull across
that edge), or exactly on the open span of the segment; the second case
splits the hull edge, and collinear points beyond the span must not match
or retriangulation would emit a zero-area face.  Exactly cocircular
quadruples are treated as no-conflict, which keeps every circumcircle
empty in the open-disk sense and picks one diagonal deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mesh import Mesh
from .predicates import incircle, orient2d, scale_exponent, scaled_int


class SpecInvalid(Exception):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Parameters for generate.  Fields beyond kind/n apply per family:
    seed and bbox to delaunay, apex_angle (total spread, radians) to fan,
    aspect (base over height) to strip.  scale multiplies all coordinates.
    """

    kind: str
    n: int = 10
    seed: int = 0
    bbox: tuple = (0.0, 0.0, 100.0, 100.0)
    apex_angle: float = 0.35
    aspect: float = 1000.0
    scale: float = 1.0


def generate(spec: GenSpec) -> Mesh:
    if spec.n < 1:
        raise SpecInvalid(f"n must be positive, got {spec.n}")
    if not (spec.scale > 0 and math.isfinite(spec.scale)):
        raise SpecInvalid(f"scale must be positive and finite, got {spec.scale}")
    if spec.kind == "grid":
        verts, tris = _grid(spec.n)
    elif spec.kind == "delaunay":
        if spec.n < 3:
            raise SpecInvalid("delaunay needs at least 3 points")
        x0, y0, x1, y1 = spec.bbox
        if not (x1 > x0 and y1 > y0):
            raise SpecInvalid(f"empty bbox {spec.bbox}")
        verts, tris = _random_delaunay(spec.n, spec.seed, spec.bbox)
    elif spec.kind == "fan":
        if not (0 < spec.apex_angle < math.pi):
            raise SpecInvalid(f"apex_angle must be in (0, pi), got {spec.apex_angle}")
        verts, tris = _fan(spec.n, spec.apex_angle)
    elif spec.kind == "strip":
        if spec.aspect < 1:
            raise SpecInvalid(f"aspect must be >= 1, got {spec.aspect}")
        verts, tris = _strip(spec.n, spec.aspect)
    else:
        raise SpecInvalid(f"unknown kind {spec.kind!r}")
    if spec.scale != 1.0:
        verts = [(x * spec.scale, y * spec.scale) for x, y in verts]
    return Mesh(verts, tris)


def _grid(n):
    verts = [(float(i), float(j)) for j in range(n + 1) for i in range(n + 1)]
    tris = []
    for j in range(n):
        for i in range(n):
            a = j * (n + 1) + i
            b = a + 1
            c = a + n + 2
            d = a + n + 1
            tris.append((a, b, c))
            tris.append((a, c, d))
    return verts, tris


def _fan(n, apex_angle):
    r = 100.0
    step = apex_angle / n
    verts = [(0.0, 0.0)]
    verts += [(r * math.cos(i * step), r * math.sin(i * step)) for i in range(n + 1)]
    tris = [(0, 1 + i, 2 + i) for i in range(n)]
    return verts, tris


def _strip(n, aspect):
    h = 2.0 / aspect
    verts = [(float(i), 0.0 if i % 2 == 0 else h) for i in range(n + 2)]
    # consecutive triples alternate orientation; Mesh flips the odd ones
    tris = [(i, i + 1, i + 2) for i in range(n)]
    return verts, tris


def delaunay_from_points(points) -> Mesh:
    """Delaunay triangulation of the given distinct points (at least 3,
    not all collinear).  Deterministic in the input order."""
    pts = [(float(p[0]), float(p[1])) for p in points]
    if len(set(pts)) != len(pts):
        raise SpecInvalid("duplicate points")
    tris = _bowyer_watson(pts)
    return Mesh(pts, tris)


def _random_delaunay(n, seed, bbox):
    x0, y0, x1, y1 = (float(v) for v in bbox)
    rng = np.random.default_rng(seed)
    pts = []
    used = set()
    while len(pts) < n:
        draw = rng.uniform((x0, y0), (x1, y1), size=(n - len(pts), 2))
        for x, y in draw:
            q = (float(x), float(y))
            if q not in used:
                used.add(q)
                pts.append(q)
    return pts, _bowyer_watson(pts)


class _Front:
    """Growing triangulation for Bowyer-Watson: triangle soup plus ghosts.

    Triangles are vertex triples, third index -1 for ghosts.  Adjacency
    lives in a directed-edge map; the reverse of any directed edge belongs
    to the neighbor (ghost edges carry -1 endpoints and chain the hull).
    Float circumcircle data backs a vectorized conflict prefilter; every
    accepted conflict is certified by the exact predicates.
    """

    def __init__(self, pts):
        self.pts = pts
        self.tri = []
        self.alive = []
        self.edge = {}
        self.free = []
        cap = 16
        self.cx = np.full(cap, np.inf)
        self.cy = np.full(cap, np.inf)
        self.r2 = np.full(cap, -np.inf)  # dead slots can never prefilter-match

    def _grow(self):
        cap = len(self.cx)
        if len(self.tri) >= cap:
            ext = np.full(cap, np.inf)
            self.cx = np.concatenate([self.cx, ext])
            self.cy = np.concatenate([self.cy, ext])
            self.r2 = np.concatenate([self.r2, np.full(cap, -np.inf)])

    def add(self, a, b, c):
        if self.free:
            t = self.free.pop()
        else:
            t = len(self.tri)
            self.tri.append(None)
            self.alive.append(False)
            self._grow()
        self.tri[t] = (a, b, c)
        self.alive[t] = True
        for u, v in ((a, b), (b, c), (c, a)):
            self.edge[(u, v)] = t
        if c != -1:
            pa, pb, pc = self.pts[a], self.pts[b], self.pts[c]
            d = 2.0 * (pa[0] * (pb[1] - pc[1]) + pb[0] * (pc[1] - pa[1])
                       + pc[0] * (pa[1] - pb[1]))
            if d == 0.0 or not math.isfinite(d):
                # float-degenerate circumcircle: force the exact path
                self.cx[t] = 0.0
                self.cy[t] = 0.0
                self.r2[t] = np.inf
            else:
                a2 = pa[0] * pa[0] + pa[1] * pa[1]
                b2 = pb[0] * pb[0] + pb[1] * pb[1]
                c2 = pc[0] * pc[0] + pc[1] * pc[1]
                ux = (a2 * (pb[1] - pc[1]) + b2 * (pc[1] - pa[1]) + c2 * (pa[1] - pb[1])) / d
                uy = (a2 * (pc[0] - pb[0]) + b2 * (pa[0] - pc[0]) + c2 * (pb[0] - pa[0])) / d
                self.cx[t] = ux
                self.cy[t] = uy
                self.r2[t] = (pa[0] - ux) ** 2 + (pa[1] - uy) ** 2
        else:
            # ghosts are prefiltered separately; keep them out of this one
            self.cx[t] = np.inf
            self.cy[t] = np.inf
            self.r2[t] = -np.inf
        return t

    def remove(self, t):
        a, b, c = self.tri[t]
        for u, v in ((a, b), (b, c), (c, a)):
            if self.edge.get((u, v)) == t:
                del self.edge[(u, v)]
        self.alive[t] = False
        self.r2[t] = -np.inf
        self.cx[t] = np.inf
        self.free.append(t)

    def conflicts(self, t, p) -> bool:
        a, b, c = self.tri[t]
        pa, pb = self.pts[a], self.pts[b]
        if c != -1:
            pc = self.pts[c]
            return incircle(pa[0], pa[1], pb[0], pb[1], pc[0], pc[1], p[0], p[1]) > 0
        o = orient2d(pa[0], pa[1], pb[0], pb[1], p[0], p[1])
        if o != 0:
            return o > 0
        # collinear with the hull edge: conflict only strictly inside the span
        k = scale_exponent(pa[0], pa[1], pb[0], pb[1], p[0], p[1])
        axi, ayi = scaled_int(pa[0], k), scaled_int(pa[1], k)
        bxi, byi = scaled_int(pb[0], k), scaled_int(pb[1], k)
        pxi, pyi = scaled_int(p[0], k), scaled_int(p[1], k)
        tnum = (pxi - axi) * (bxi - axi) + (pyi - ayi) * (byi - ayi)
        tden = (bxi - axi) ** 2 + (byi - ayi) ** 2
        return 0 < tnum < tden

    def find_conflict(self, p) -> int:
        n = len(self.tri)
        d2 = (self.cx[:n] - p[0]) ** 2 + (self.cy[:n] - p[1]) ** 2
        with np.errstate(invalid="ignore"):
            cand = d2 <= self.r2[:n] * (1.0 + 1e-9) + 1e-7
        for t in np.nonzero(cand)[0]:
            if self.alive[t] and self.conflicts(int(t), p):
                return int(t)
        # ghosts, and a safety net for prefilter misses
        for t in range(n):
            if self.alive[t] and self.conflicts(t, p):
                return t
        raise AssertionError(f"no conflict found for point {p}")

    def insert(self, pi):
        p = self.pts[pi]
        seed = self.find_conflict(p)
        conflict = {seed}
        stack = [seed]
        while stack:
            t = stack.pop()
            a, b, c = self.tri[t]
            for u, v in ((a, b), (b, c), (c, a)):
                nb = self.edge.get((v, u))
                if nb is not None and nb not in conflict and self.conflicts(nb, p):
                    conflict.add(nb)
                    stack.append(nb)
        boundary = []
        for t in sorted(conflict):
            a, b, c = self.tri[t]
            for u, v in ((a, b), (b, c), (c, a)):
                if self.edge.get((v, u)) not in conflict:
                    boundary.append((u, v))
        for t in sorted(conflict):
            self.remove(t)
        for u, v in boundary:
            if u == -1:
                self.add(v, pi, -1)
            elif v == -1:
                self.add(pi, u, -1)
            else:
                self.add(u, v, pi)

    def real_triangles(self):
        return [self.tri[t] for t in range(len(self.tri))
                if self.alive[t] and self.tri[t][2] != -1]


def _bowyer_watson(pts):
    if len(pts) < 3:
        raise SpecInvalid("need at least 3 points")
    j = -1
    for cand in range(2, len(pts)):
        if orient2d(pts[0][0], pts[0][1], pts[1][0], pts[1][1],
                    pts[cand][0], pts[cand][1]) != 0:
            j = cand
            break
    if j == -1:
        raise SpecInvalid("all points are collinear")
    front = _Front(pts)
    a, b, c = 0, 1, j
    if orient2d(pts[a][0], pts[a][1], pts[b][0], pts[b][1], pts[c][0], pts[c][1]) < 0:
        b, c = c, b
    front.add(a, b, c)
    front.add(b, a, -1)
    front.add(c, b, -1)
    front.add(a, c, -1)
    for pi in range(2, len(pts)):
        if pi != j:
            front.insert(pi)
    return front.real_triangles()
