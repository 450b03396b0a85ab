"""Half-edge mesh structure, validation, IO, and neighborhood counting."""

import math

import pytest

from support import single_triangle, square_mesh
from zigzagwalk.geometry2d import PointOnEdge
from zigzagwalk.mesh import (
    OUTER_FACE,
    DegenerateFace,
    DuplicateVertex,
    InconsistentOrientation,
    Mesh,
    MeshError,
    NonManifold,
    OuterFace,
    build_from_triangles,
)
from zigzagwalk.meshgen import GenSpec, generate


def test_single_triangle_structure():
    m = single_triangle()
    assert m.n_vertices == 3 and m.n_faces == 1
    assert m.n_halfedges == 6 and m.n_edges == 3
    for e in range(3):
        assert m.face(e) == 0
        assert m.face(m.inv(e)) == OUTER_FACE
        assert m.inv(m.inv(e)) == e
        assert m.next(m.next(m.next(e))) == e
        assert m.prev(m.next(e)) == e
        assert m.dest(e) == m.origin(m.next(e))
    assert m.segment(0) == ((0.0, 0.0), (2.0, 0.0))
    with pytest.raises(OuterFace):
        m.next(m.inv(0))
    assert m.validate() == []


def test_square_diagonal_twins():
    m = square_mesh()
    assert m.n_halfedges == 10 and m.n_faces == 2 and m.n_edges == 5
    # face 0 = (0,1,2), face 1 = (0,2,3): diagonal is halfedges 2 and 3
    assert m.inv(2) == 3 and m.inv(3) == 2
    assert m.face(2) == 0 and m.face(3) == 1
    assert m.validate() == []


def test_clockwise_triangles_are_flipped():
    m = Mesh([(0, 0), (2, 0), (0, 2)], [(0, 2, 1)])
    assert m.export_triangles()[1] == [[0, 1, 2]]
    assert m.validate() == []


def test_error_taxonomy():
    with pytest.raises(DuplicateVertex):
        Mesh([(0, 0), (2, 0), (0, 2), (2, 0)], [(0, 1, 2)])
    with pytest.raises(DegenerateFace):
        Mesh([(0, 0), (2, 0), (0, 2)], [(0, 1, 1)])
    with pytest.raises(DegenerateFace):
        Mesh([(0, 0), (1, 0), (2, 0)], [(0, 1, 2)])   # collinear
    with pytest.raises(NonManifold):
        Mesh([(0, 0), (2, 0), (0, 2)], [(0, 1, 2), (0, 1, 2)])
    with pytest.raises(NonManifold):
        # three faces on one undirected edge
        Mesh([(0, 0), (2, 0), (0, 2), (0, -2), (2, 2)],
             [(0, 1, 2), (0, 3, 1), (0, 1, 4)])
    with pytest.raises(InconsistentOrientation):
        # two CCW faces overlap and share a directed edge
        Mesh([(0, 0), (2, 0), (0, 2), (1, 1)], [(0, 1, 2), (0, 1, 3)])
    with pytest.raises(MeshError):
        Mesh([(0, 0), (2, 0), (0, 2)], [(0, 1, 5)])
    with pytest.raises(MeshError):
        Mesh([(0, 0), (2, 0), (math.inf, 2)], [(0, 1, 2)])


def test_validate_reports_corruption():
    m = square_mesh()
    m._twin[0], m._twin[1] = m._twin[1], m._twin[0]
    assert m.validate() != []


def test_euler_formula_grid():
    m = generate(GenSpec("grid", n=2))
    v, f = m.n_vertices, m.n_faces
    e = m.n_edges
    assert (v, f, e) == (9, 8, 16)
    assert v - e + f == 1  # planar disc


def test_json_roundtrip(tmp_path):
    m = generate(GenSpec("delaunay", n=30, seed=4))
    path = tmp_path / "m.json"
    m.save_json(path)
    m2 = Mesh.load_json(path)
    assert m2.vertices == m.vertices
    assert m2.export_triangles() == m.export_triangles()
    assert m2.validate() == []
    # byte determinism of the writer
    path2 = tmp_path / "m2.json"
    m2.save_json(path2)
    assert path.read_bytes() == path2.read_bytes()


def test_off_loader(tmp_path):
    path = tmp_path / "m.off"
    path.write_text(
        "OFF\n# comment\n4 2 5\n0 0 0\n2 0 0\n2 2 0\n0 2 0\n"
        "3 0 1 2\n3 0 2 3\n")
    m = Mesh.load_off(path)
    assert m.n_vertices == 4 and m.n_faces == 2
    assert m.validate() == []
    bad = tmp_path / "bad.off"
    bad.write_text("OFF\n3 1 3\n0 0 1\n2 0 0\n0 2 0\n3 0 1 2\n")
    with pytest.raises(MeshError):
        Mesh.load_off(bad)   # nonzero z
    quad = tmp_path / "quad.off"
    quad.write_text("OFF\n4 1 4\n0 0 0\n2 0 0\n2 2 0\n0 2 0\n4 0 1 2 3\n")
    with pytest.raises(MeshError):
        Mesh.load_off(quad)  # triangles only


def test_build_from_triangles():
    m = build_from_triangles([(0, 0), (1, 0), (1, 1), (0, 1)],
                             [(0, 1, 2), (0, 2, 3)])
    assert isinstance(m, Mesh) and m.n_faces == 2


def test_neighborhood_far_point_counts_all():
    m = single_triangle()
    # far above the bottom edge every halfedge is at least as close
    assert m.neighborhood_size(0, (1.0, 5.0)) == 6


def test_neighborhood_near_edge_counts_pair():
    m = single_triangle()
    # hugging the bottom edge only that edge (both halfedges) is closer
    assert m.neighborhood_size(0, (1.0, 0.1)) == 2


def test_neighborhood_monotone_in_distance():
    m = generate(GenSpec("grid", n=4))
    sizes = [m.neighborhood_size(0, (2.0, y)) for y in (0.3, 1.1, 2.7, 3.9)]
    assert all(a <= b for a, b in zip(sizes, sizes[1:]))
    assert sizes[0] >= 1


def test_neighborhood_point_on_reference_edge():
    m = single_triangle()
    with pytest.raises(PointOnEdge):
        m.neighborhood_size(0, (1.0, 0.0))


def test_neighborhood_matches_slow_scan():
    """Cross-check against a direct per-halfedge comparison loop."""
    from zigzagwalk.geometry2d import Ordering, od_compare

    m = generate(GenSpec("delaunay", n=25, seed=2))
    import numpy as np

    rng = np.random.default_rng(0)
    for _ in range(40):
        p = (rng.uniform(0, 100), rng.uniform(0, 100))
        e = int(rng.integers(0, m.n_halfedges))
        try:
            fast = m.neighborhood_size(e, p)
        except PointOnEdge:
            continue
        ref = m.segment(e)
        slow = 0
        for h in range(m.n_halfedges):
            try:
                if od_compare(m.segment(h), ref, p) is not Ordering.GREATER:
                    slow += 1
            except PointOnEdge:
                slow += 1   # p on the candidate edge: distance zero
        assert fast == slow
