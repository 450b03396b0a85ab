"""Command-line front end.

Subcommands: gen (write a generated mesh), locate (run one walk), bench
(CSV statistics over random queries, doubling as a correctness gate), svg
(render a recorded walk), validate (structural mesh check).  Every path is
deterministic for fixed flags and seed.  Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys

import numpy as np

from .geometry2d import PointOnEdge
from .mesh import Mesh, MeshError, OUTER_FACE
from .meshgen import GenSpec, SpecInvalid, generate
from .oracle import audit_trace, brute_force_locate, link_distance_stats
from .walk import (
    BoundaryStart,
    InvariantViolation,
    TieBreakPolicy,
    WalkConfig,
    WalkStatus,
    locate,
    trace_json_obj,
    visibility_walk_baseline,
)

_DOMAIN_ERRORS = (MeshError, SpecInvalid, PointOnEdge, InvariantViolation,
                  OSError, ValueError, KeyError, IndexError,
                  json.JSONDecodeError)


def _parse_point(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y - got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numeric x,y - got {text!r}")


def _load_mesh(path: str) -> Mesh:
    if path.endswith(".off"):
        return Mesh.load_off(path)
    return Mesh.load_json(path)


def _load_mesh_or_spec(text: str) -> Mesh:
    """A mesh file path, or an inline spec kind[:n[:seed]] such as grid:10."""
    import os

    if os.path.exists(text):
        return _load_mesh(text)
    parts = text.split(":")
    if parts[0] in ("grid", "delaunay", "fan", "strip"):
        n = int(parts[1]) if len(parts) > 1 else 10
        seed = int(parts[2]) if len(parts) > 2 else 0
        return generate(GenSpec(parts[0], n=n, seed=seed))
    raise OSError(f"no such mesh file or inline spec: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zigzagwalk",
        description="Point location in triangulations by a zig-zag walk.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a mesh and write it as JSON")
    g.add_argument("--kind", required=True,
                   choices=["grid", "delaunay", "fan", "strip"])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    l = sub.add_parser("locate", help="walk to the face containing a point")
    l.add_argument("mesh", help="mesh file (.json or .off)")
    l.add_argument("--start", type=int, default=0, help="start halfedge id")
    l.add_argument("--point", type=_parse_point, required=True,
                   metavar="X,Y")
    l.add_argument("--policy", choices=["right", "left", "random"],
                   default="right")
    l.add_argument("--seed", type=int, default=0)
    l.add_argument("--trace", help="write the walk trace as JSON")
    l.add_argument("--check", action="store_true",
                   help="re-verify the invariants at every step")

    b = sub.add_parser("bench", help="random-query statistics as CSV")
    b.add_argument("mesh", help="mesh file, or inline spec kind[:n[:seed]]")
    b.add_argument("--queries", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--policies", default="right,left,random",
                   help="comma-separated policy list")
    b.add_argument("--baseline", choices=["visibility"],
                   help="include a baseline walk row")
    b.add_argument("--out", help="CSV output path (default stdout)")

    s = sub.add_parser("svg", help="render a recorded walk")
    s.add_argument("mesh")
    s.add_argument("trace")
    s.add_argument("--out", required=True)

    v = sub.add_parser("validate", help="check mesh structural invariants")
    v.add_argument("mesh")
    return ap


def cmd_gen(args) -> int:
    mesh = generate(GenSpec(args.kind, n=args.n, seed=args.seed))
    mesh.save_json(args.out)
    print(f"wrote {args.out}: {mesh.n_vertices} vertices, "
          f"{mesh.n_faces} faces")
    return 0


def cmd_locate(args) -> int:
    mesh = _load_mesh(args.mesh)
    if not 0 <= args.start < mesh.n_halfedges:
        print(f"start edge {args.start} out of range", file=sys.stderr)
        return 1
    cfg = WalkConfig(policy=TieBreakPolicy(args.policy, args.seed),
                     record_trace=bool(args.trace) or args.check,
                     check_invariants=args.check)
    try:
        result, trace = locate(mesh, args.start, args.point, cfg)
    except BoundaryStart as ex:
        # the start edge already faces the hull: report it as the boundary
        print(f"BOUNDARY edge={ex.edge} steps=0")
        return 0
    if args.check:
        report = audit_trace(mesh, trace, trace.point)
        if report:
            for line in report:
                print(f"audit: {line}", file=sys.stderr)
            return 1
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump(trace_json_obj(trace, result), fh, indent=2)
            fh.write("\n")
    if result.status is WalkStatus.FOUND:
        print(f"FOUND face={result.face} steps={result.steps}")
        return 0
    if result.status is WalkStatus.BOUNDARY:
        print(f"BOUNDARY edge={result.edge} steps={result.steps}")
        return 0
    print(f"ABORTED steps={result.steps} reason={result.reason}")
    return 1


def _sample_queries(mesh: Mesh, k: int, rng):
    """k points sampled inside the mesh: a face, then barycentric weights."""
    faces = rng.integers(0, mesh.n_faces, size=k)
    u = rng.random((k, 2))
    flip = u.sum(axis=1) > 1.0
    u[flip] = 1.0 - u[flip]
    out = []
    for f, (r, s) in zip(faces, u):
        a, b, c = (mesh.vertex(v) for v in mesh.face_vertices(int(f)))
        t = 1.0 - r - s
        out.append((t * a[0] + r * b[0] + s * c[0],
                    t * a[1] + r * b[1] + s * c[1]))
    return out


def _agrees(mesh, result, answer) -> bool:
    if result.status is WalkStatus.FOUND:
        return result.face in answer.faces
    if result.status is WalkStatus.BOUNDARY:
        return not answer.inside or answer.on_boundary_of_hull
    return False


def cmd_bench(args) -> int:
    mesh = _load_mesh_or_spec(args.mesh)
    policies = [p.strip() for p in args.policies.split(",") if p.strip()]
    for p in policies:
        if p not in ("right", "left", "random"):
            raise ValueError(f"unknown policy {p!r}")
    rng = np.random.default_rng(args.seed)
    k = args.queries
    points = _sample_queries(mesh, k, rng)
    starts = [int(e) for e in rng.integers(0, mesh.n_halfedges, size=k)]
    answers = [brute_force_locate(mesh, p) for p in points]
    bounds = {}

    rows = []
    disagreed = False
    for pol in policies:
        cfg = WalkConfig(policy=TieBreakPolicy(pol, args.seed),
                         record_trace=True)
        steps, ops, utils = [], [], []
        agree = 0
        for i, (p, e0) in enumerate(zip(points, starts)):
            result, trace = locate(mesh, e0, p, cfg)
            st = link_distance_stats(mesh, trace)
            steps.append(st["steps"])
            ops.append(st["atomic_ops"])
            key = (trace.start_edge, p)
            if key not in bounds:
                bounds[key] = mesh.neighborhood_size(trace.start_edge, p)
            utils.append(st["steps"] / bounds[key])
            if _agrees(mesh, result, answers[i]):
                agree += 1
        if agree != k:
            disagreed = True
        rows.append((pol, k, steps, ops, utils, agree))

    if args.baseline:
        steps, ops, utils = [], [], []
        agree = 0
        for i, (p, e0) in enumerate(zip(points, starts)):
            result = visibility_walk_baseline(mesh, e0, p, seed=args.seed + i)
            steps.append(result.steps)
            ops.append(3 * result.steps)
            key = (e0 if mesh.face(e0) != OUTER_FACE else mesh.inv(e0), p)
            if key not in bounds:
                bounds[key] = mesh.neighborhood_size(key[0], p)
            utils.append(result.steps / bounds[key])
            if _agrees(mesh, result, answers[i]):
                agree += 1
        if agree != k:
            disagreed = True
        rows.append(("visibility", k, steps, ops, utils, agree))

    lines = ["policy,queries,mean_steps,median_steps,max_steps,"
             "mean_atomic_ops,max_bound_utilization,oracle_agreement"]
    for pol, kk, steps, ops, utils, agree in rows:
        lines.append(
            f"{pol},{kk},{statistics.mean(steps):.6f},"
            f"{statistics.median(steps):.6f},{max(steps)},"
            f"{statistics.mean(ops):.6f},{max(utils):.6f},{agree}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if disagreed:
        print("oracle disagreement detected", file=sys.stderr)
        return 1
    return 0


def cmd_svg(args) -> int:
    mesh = _load_mesh(args.mesh)
    with open(args.trace) as fh:
        trace = json.load(fh)
    try:
        svg = render_svg(mesh, trace)
    except (KeyError, TypeError) as ex:
        print(f"trace does not match mesh: {ex}", file=sys.stderr)
        return 1
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return 0


def render_svg(mesh: Mesh, trace: dict, width: float = 640.0) -> str:
    """Deterministic SVG 1.1 rendering of a recorded walk.

    Mesh edges in grey, visited faces filled with an opacity ramp in visit
    order, stepped edges stroked, the query point crosshaired.  Raises
    ValueError when the trace references edges outside the mesh.
    """
    steps = trace["steps"]
    start_edge = int(trace["start_edge"])
    point = trace["point"]
    edges = [start_edge] + [int(s["edge"]) for s in steps]
    for e in edges:
        if not 0 <= e < mesh.n_halfedges:
            raise ValueError(f"edge id {e} out of range")
    px, py = float(point[0]), float(point[1])

    xs = [v[0] for v in mesh.vertices] + [px]
    ys = [v[1] for v in mesh.vertices] + [py]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    margin = 0.05 * span
    x0, x1 = x0 - margin, x1 + margin
    y0, y1 = y0 - margin, y1 + margin
    scale = width / (x1 - x0)
    height = (y1 - y0) * scale

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        return (y1 - y) * scale  # svg y grows downward

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width:.1f}" height="{height:.1f}" '
           f'viewBox="0 0 {width:.1f} {height:.1f}">',
           f'<rect width="{width:.1f}" height="{height:.1f}" fill="white"/>']

    # visited faces, visit order encoded in the fill opacity
    visited = []
    for e in edges:
        f = mesh.face(e)
        if f != OUTER_FACE and (not visited or visited[-1] != f):
            visited.append(f)
    for i, f in enumerate(visited):
        a, b, c = (mesh.vertex(v) for v in mesh.face_vertices(f))
        op = 0.15 + 0.7 * (i / max(1, len(visited) - 1)) if len(visited) > 1 else 0.5
        pts = " ".join(f"{sx(q[0]):.3f},{sy(q[1]):.3f}" for q in (a, b, c))
        out.append(f'<polygon points="{pts}" fill="#7fbf7f" '
                   f'fill-opacity="{op:.3f}" stroke="none"/>')

    # undirected mesh edges
    for e in range(mesh.n_halfedges):
        if e > mesh.inv(e):
            continue
        (ax, ay), (bx, by) = mesh.segment(e)
        out.append(f'<line x1="{sx(ax):.3f}" y1="{sy(ay):.3f}" '
                   f'x2="{sx(bx):.3f}" y2="{sy(by):.3f}" '
                   f'stroke="#999999" stroke-width="1"/>')

    # the walked edge sequence
    for e in edges:
        (ax, ay), (bx, by) = mesh.segment(e)
        out.append(f'<line x1="{sx(ax):.3f}" y1="{sy(ay):.3f}" '
                   f'x2="{sx(bx):.3f}" y2="{sy(by):.3f}" '
                   f'stroke="#cc4422" stroke-width="2.5"/>')

    out.append(f'<circle cx="{sx(px):.3f}" cy="{sy(py):.3f}" r="4" '
               f'fill="#2244cc"/>')
    out.append(f'<circle cx="{sx(px):.3f}" cy="{sy(py):.3f}" r="8" '
               f'fill="none" stroke="#2244cc" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_validate(args) -> int:
    mesh = _load_mesh(args.mesh)
    report = mesh.validate()
    if report:
        for line in report:
            print(line, file=sys.stderr)
        return 1
    print(f"OK: {mesh.n_vertices} vertices, {mesh.n_faces} faces, "
          f"{mesh.n_edges} edges")
    return 0


_COMMANDS = {"gen": cmd_gen, "locate": cmd_locate, "bench": cmd_bench,
             "svg": cmd_svg, "validate": cmd_validate}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args)
    except _DOMAIN_ERRORS as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
