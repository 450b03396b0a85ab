"""Half-edge triangulation with exact construction checks.

Storage is dense and array-based.  Interior face f owns halfedges 3f, 3f+1,
3f+2; halfedge 3f+i runs from the face's vertex i to vertex i+1 (faces wind
counterclockwise), so next stays inside the block.  Boundary halfedges are
allocated after the interior block, carry face = OUTER_FACE and have no
next: asking for one raises OuterFace.  Every undirected edge is exactly
two twinned halfedges.

A mesh is immutable after construction; all accessors are read-only and
safe to share across threads.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .geometry2d import Ordering, PointOnEdge, _compare_keys, _segment_key, orientation
from .predicates import scale_exponent, scaled_int

OUTER_FACE = -1


class MeshError(Exception):
    """Base for construction, access, and file-format failures."""


class OuterFace(MeshError):
    """next/prev requested on a boundary halfedge (no interior winding)."""


class DuplicateVertex(MeshError):
    pass


class DegenerateFace(MeshError):
    pass


class NonManifold(MeshError):
    pass


class InconsistentOrientation(MeshError):
    pass


class Mesh:
    """Half-edge triangulation built from a vertex list and triangle index triples.

    Clockwise input triangles are flipped to counterclockwise.  Construction
    rejects duplicate vertices, zero-area faces, edges shared by more than
    two triangles, and windings that make two faces claim the same directed
    edge.
    """

    def __init__(self, vertices, triangles):
        verts = []
        for i, v in enumerate(vertices):
            x, y = float(v[0]), float(v[1])
            if not (math.isfinite(x) and math.isfinite(y)):
                raise MeshError(f"vertex {i} has non-finite coordinates {v!r}")
            verts.append((x, y))
        seen = {}
        for i, v in enumerate(verts):
            if v in seen:
                raise DuplicateVertex(f"vertices {seen[v]} and {i} coincide at {v}")
            seen[v] = i

        tris = []
        for t, ijk in enumerate(triangles):
            if len(ijk) != 3:
                raise MeshError(f"triangle {t} has {len(ijk)} indices")
            i, j, k = (int(ijk[0]), int(ijk[1]), int(ijk[2]))
            for idx in (i, j, k):
                if idx < 0 or idx >= len(verts):
                    raise MeshError(f"triangle {t} references vertex {idx}, out of range")
            if i == j or j == k or i == k:
                raise DegenerateFace(f"triangle {t} repeats a vertex: {(i, j, k)}")
            o = orientation(verts[i], verts[j], verts[k])
            if o == 0:
                raise DegenerateFace(f"triangle {t} has zero area: {(i, j, k)}")
            if o < 0:
                j, k = k, j
            tris.append((i, j, k))

        tri_sets = {}
        for t, ijk in enumerate(tris):
            key = frozenset(ijk)
            if key in tri_sets:
                raise NonManifold(f"triangles {tri_sets[key]} and {t} use the same vertices")
            tri_sets[key] = t

        undirected = {}
        for t, (i, j, k) in enumerate(tris):
            for u, v in ((i, j), (j, k), (k, i)):
                key = (u, v) if u < v else (v, u)
                undirected.setdefault(key, []).append(t)
        for key, users in undirected.items():
            if len(users) > 2:
                raise NonManifold(f"edge {key} is used by {len(users)} triangles: {users}")

        nf = len(tris)
        origin = []
        nxt = []
        face = []
        twin = [-1] * (3 * nf)
        directed = {}
        for f, (i, j, k) in enumerate(tris):
            for s, (u, v) in enumerate(((i, j), (j, k), (k, i))):
                h = 3 * f + s
                if (u, v) in directed:
                    raise InconsistentOrientation(
                        f"directed edge {u}->{v} claimed by faces "
                        f"{directed[(u, v)] // 3} and {f}")
                directed[(u, v)] = h
                origin.append(u)
                nxt.append(3 * f + (s + 1) % 3)
                face.append(f)
        for (u, v), h in directed.items():
            rev = directed.get((v, u))
            if rev is not None:
                twin[h] = rev
        # unmatched directed edges get boundary twins
        for (u, v), h in sorted(directed.items(), key=lambda kv: kv[1]):
            if twin[h] == -1:
                b = len(origin)
                origin.append(v)
                nxt.append(-1)
                face.append(OUTER_FACE)
                twin.append(h)
                twin[h] = b

        self.vertices = verts
        self.triangles = tris
        self._origin = origin
        self._twin = twin
        self._next = nxt
        self._face = face
        self._n_interior = 3 * nf
        self._seg_arrays = None
        self._face_arrays = None
        self._int_cache = None

    # -- counts ------------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.triangles)

    @property
    def n_halfedges(self) -> int:
        return len(self._origin)

    @property
    def n_edges(self) -> int:
        return len(self._origin) // 2

    # -- accessors ----------------------------------------------------------

    def vertex(self, v):
        return self.vertices[v]

    def origin(self, e) -> int:
        return self._origin[e]

    def dest(self, e) -> int:
        return self._origin[self._twin[e]]

    def inv(self, e) -> int:
        return self._twin[e]

    def next(self, e) -> int:
        if self._face[e] == OUTER_FACE:
            raise OuterFace(f"halfedge {e} is on the boundary")
        return self._next[e]

    def prev(self, e) -> int:
        # triangles make prev = next of next
        if self._face[e] == OUTER_FACE:
            raise OuterFace(f"halfedge {e} is on the boundary")
        return self._next[self._next[e]]

    def face(self, e) -> int:
        return self._face[e]

    def endpoints(self, e):
        return self._origin[e], self._origin[self._twin[e]]

    def segment(self, e):
        return self.vertices[self._origin[e]], self.vertices[self._origin[self._twin[e]]]

    def edge_of_face(self, f) -> int:
        if f == OUTER_FACE:
            raise OuterFace("the outer face has no canonical halfedge")
        return 3 * f

    def face_vertices(self, f):
        return self.triangles[f]

    def is_boundary(self, e) -> bool:
        return self._face[e] == OUTER_FACE

    # -- serialization -------------------------------------------------------

    def export_triangles(self):
        """Vertex and triangle lists that rebuild an identical mesh."""
        return [list(v) for v in self.vertices], [list(t) for t in self.triangles]

    def to_json_obj(self):
        v, t = self.export_triangles()
        return {"vertices": v, "triangles": t}

    def save_json(self, path):
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_json_obj(), f)
            f.write("\n")

    @classmethod
    def from_json_obj(cls, obj):
        if not isinstance(obj, dict) or "vertices" not in obj or "triangles" not in obj:
            raise MeshError("mesh JSON must be an object with 'vertices' and 'triangles'")
        return cls(obj["vertices"], obj["triangles"])

    @classmethod
    def load_json(cls, path):
        with open(path, "r", encoding="utf-8") as f:
            try:
                obj = json.load(f)
            except ValueError as exc:
                raise MeshError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    @classmethod
    def load_off(cls, path):
        """Read a 2D triangulation from an OFF file.  z coordinates must be 0."""
        with open(path, "r", encoding="utf-8") as f:
            tokens = []
            for line in f:
                line = line.split("#", 1)[0].strip()
                if line:
                    tokens.extend(line.split())
        if tokens and tokens[0].upper() == "OFF":
            tokens = tokens[1:]
        if len(tokens) < 3:
            raise MeshError(f"{path}: truncated OFF header")
        try:
            nv, nf = int(tokens[0]), int(tokens[1])
            pos = 3  # header edge count is ignored
            verts = []
            for _ in range(nv):
                x, y, z = (float(tokens[pos]), float(tokens[pos + 1]), float(tokens[pos + 2]))
                if z != 0.0:
                    raise MeshError(f"{path}: nonzero z coordinate {z}; only planar input is supported")
                verts.append((x, y))
                pos += 3
            tris = []
            for _ in range(nf):
                cnt = int(tokens[pos])
                if cnt != 3:
                    raise MeshError(f"{path}: face with {cnt} vertices; only triangles are supported")
                tris.append((int(tokens[pos + 1]), int(tokens[pos + 2]), int(tokens[pos + 3])))
                pos += 4
        except (IndexError, ValueError) as exc:
            raise MeshError(f"{path}: malformed OFF file: {exc}") from exc
        return cls(verts, tris)

    # -- validation -----------------------------------------------------------

    def validate(self):
        """Recheck every structural and geometric invariant from the raw arrays.

        Returns a list of violation strings, empty when the mesh is sound.
        """
        report = []
        n = len(self._origin)
        for e in range(n):
            t = self._twin[e]
            if not (0 <= t < n):
                report.append(f"halfedge {e}: twin {t} out of range")
                continue
            if t == e:
                report.append(f"halfedge {e}: is its own twin")
            elif self._twin[t] != e:
                report.append(f"halfedge {e}: twin involution broken (twin {t} points back to {self._twin[t]})")
            if 0 <= t < n and self._origin[e] == self._origin[t]:
                report.append(f"halfedge {e}: twin shares its origin vertex {self._origin[e]}")
        for e in range(n):
            f = self._face[e]
            if f == OUTER_FACE:
                if self._next[e] != -1:
                    report.append(f"halfedge {e}: boundary halfedge has next {self._next[e]}")
                continue
            if not (0 <= f < len(self.triangles)):
                report.append(f"halfedge {e}: face {f} out of range")
                continue
            n1 = self._next[e]
            if not (0 <= n1 < n):
                report.append(f"halfedge {e}: next {n1} out of range")
                continue
            if self._face[n1] != f:
                report.append(f"halfedge {e}: next crosses from face {f} to {self._face[n1]}")
            n2 = self._next[n1]
            if not (0 <= n2 < n and 0 <= self._next[n2] < n):
                report.append(f"halfedge {e}: next chain leaves range")
                continue
            if self._next[n2] != e:
                report.append(f"halfedge {e}: next^3 is {self._next[n2]}, not the identity")
            t = self._twin[e]
            if 0 <= t < n and 0 <= n1 < n and self._origin[n1] != self._origin[t]:
                report.append(f"halfedge {e}: next starts at vertex {self._origin[n1]}, "
                              f"dest is {self._origin[t]}")
        for f, (i, j, k) in enumerate(self.triangles):
            if orientation(self.vertices[i], self.vertices[j], self.vertices[k]) <= 0:
                report.append(f"face {f}: vertices {(i, j, k)} are not counterclockwise")
            owned = [e for e in range(n) if self._face[e] == f]
            if len(owned) != 3:
                report.append(f"face {f}: owns {len(owned)} halfedges, expected 3")
        seen = {}
        for i, v in enumerate(self.vertices):
            if v in seen:
                report.append(f"vertices {seen[v]} and {i} coincide at {v}")
            seen[v] = i
        return report

    # -- neighborhood counting ----------------------------------------------

    def _segments_np(self):
        if self._seg_arrays is None:
            o = np.array(self._origin, dtype=np.intp)
            d = np.array([self._origin[t] for t in self._twin], dtype=np.intp)
            vx = np.array([v[0] for v in self.vertices])
            vy = np.array([v[1] for v in self.vertices])
            self._seg_arrays = (vx[o], vy[o], vx[d], vy[d])
        return self._seg_arrays

    def _faces_np(self):
        if self._face_arrays is None:
            t = np.array(self.triangles, dtype=np.intp).reshape(-1, 3)
            vx = np.array([v[0] for v in self.vertices])
            vy = np.array([v[1] for v in self.vertices])
            self._face_arrays = (vx[t[:, 0]], vy[t[:, 0]], vx[t[:, 1]], vy[t[:, 1]],
                                 vx[t[:, 2]], vy[t[:, 2]])
        return self._face_arrays

    def _int_coords(self):
        if self._int_cache is None:
            k = scale_exponent(*(c for v in self.vertices for c in v))
            xi = [scaled_int(v[0], k) for v in self.vertices]
            yi = [scaled_int(v[1], k) for v in self.vertices]
            self._int_cache = (k, xi, yi)
        return self._int_cache

    def _exact_key(self, e, pxi, pyi, shift):
        """Oriented-distance key of halfedge e against a pre-scaled point.

        pxi, pyi live at mesh scale + shift; mesh vertex integers are lifted
        by shift so both sides share one scale.
        """
        _, xi, yi = self._int_coords()
        a = self._origin[e]
        b = self._origin[self._twin[e]]
        return _segment_key(xi[a] << shift, yi[a] << shift,
                            xi[b] << shift, yi[b] << shift, pxi, pyi)

    def _scaled_query(self, p):
        km, _, _ = self._int_coords()
        px, py = float(p[0]), float(p[1])
        kp = scale_exponent(px, py)
        k = max(km, kp)
        return scaled_int(px, k), scaled_int(py, k), k - km

    def neighborhood_size(self, e, p) -> int:
        """Count halfedges whose oriented distance to p is <= that of edge e.

        This is the exhaustive scan bound on walk length: the walk can only
        visit edges at least as close as wherever it currently stands.  The
        count runs over every halfedge, including e itself, its twin, and
        boundary halfedges.  Edges containing p count (their distance is 0).
        Raises PointOnEdge when p is on the closed segment of e itself.
        """
        pxi, pyi, shift = self._scaled_query(p)
        ref = self._exact_key(e, pxi, pyi, shift)
        if ref[0] == 0:
            raise PointOnEdge(f"point {tuple(p)} lies on halfedge {e}")

        ax, ay, bx, by = self._segments_np()
        px, py = float(p[0]), float(p[1])
        abx = bx - ax
        aby = by - ay
        apx = px - ax
        apy = py - ay
        t = (apx * abx + apy * aby) / (abx * abx + aby * aby)
        np.clip(t, 0.0, 1.0, out=t)
        dx = apx - t * abx
        dy = apy - t * aby
        d2 = dx * dx + dy * dy

        km, _, _ = self._int_coords()
        k = km + shift  # the integer keys measure distances scaled by 2^k
        if k >= 512:
            ref_d2 = math.inf
        else:
            try:
                ref_d2 = (ref[0] / ref[1]) / 4.0 ** k
            except OverflowError:
                ref_d2 = math.inf
        if not math.isfinite(ref_d2):
            # out-of-float-range coordinates: resolve everything exactly
            band = np.ones(len(d2), dtype=bool)
            count = 0
        else:
            mag = max(1.0, abs(px), abs(py),
                      float(np.max(np.abs(ax))), float(np.max(np.abs(ay))),
                      float(np.max(np.abs(bx))), float(np.max(np.abs(by))))
            # slack must dominate the cancellation error of the float pass
            slack = 1e-9 * ref_d2 + (1e-11 * mag) ** 2
            count = int(np.count_nonzero(d2 < ref_d2 - slack))
            band = np.abs(d2 - ref_d2) <= slack
        for e2 in np.nonzero(band)[0]:
            k2 = self._exact_key(int(e2), pxi, pyi, shift)
            if k2[0] == 0 or _compare_keys(k2, ref) is not Ordering.GREATER:
                count += 1
        return count


def build_from_triangles(points, tris) -> Mesh:
    """Construct a half-edge mesh; see Mesh for the validation rules."""
    return Mesh(points, tris)
