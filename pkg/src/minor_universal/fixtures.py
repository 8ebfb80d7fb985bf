"""Example instances: hand-built embeddings and seeded random generators."""
from __future__ import annotations

import math
import random
from typing import Sequence

from .graphcore import (
    PlaneGraph,
    add_edge_in_face,
    outerface_of,
    rev,
    trace_faces,
)
from .polygonal import PolygonalEmbedding, Signature, validate


def square_sphere() -> PolygonalEmbedding:
    """Smallest sphere polygon: a quadrilateral with one vertex per side."""
    # outer cycle c0, u, c1, v; signature a0 ~a0 glues u to v
    edges = {0: (0, 1), 1: (1, 2), 2: (2, 3), 3: (3, 0)}
    rotation = {
        0: ((0, 0), (3, 1)),
        1: ((0, 1), (1, 0)),
        2: ((1, 1), (2, 0)),
        3: ((2, 1), (3, 0)),
    }
    g = PlaneGraph(vertices=(0, 1, 2, 3), edges=edges, rotation=rotation,
                   outerface=((0, 0), (1, 0), (2, 0), (3, 0)))
    p = PolygonalEmbedding(g, border=(0, 2), sides=((1,), (3,)),
                           signature=Signature.parse(["a0", "~a0"]))
    assert not validate(p)
    return p


def polygon_embedding(sigma: Signature, m: int) -> PolygonalEmbedding:
    """Bare polygon: the boundary cycle with ``m`` vertices per side."""
    q = len(sigma)
    n = q * (m + 1)
    edges = {i: (i, (i + 1) % n) for i in range(n)}
    rotation = {i: ((i, 0), (i - 1 if i else n - 1, 1)) for i in range(n)}
    g = PlaneGraph(vertices=tuple(range(n)), edges=edges, rotation=rotation,
                   outerface=tuple((i, 0) for i in range(n)))
    border = tuple(t * (m + 1) for t in range(q))
    sides = tuple(tuple(range(t * (m + 1) + 1, (t + 1) * (m + 1))) for t in range(q))
    return PolygonalEmbedding(g, border, sides, sigma)


def _insert_center(g: PlaneGraph, face: Sequence) -> tuple[PlaneGraph, int]:
    """Put a new vertex inside a triangular face, joined to its corners."""
    assert len(face) == 3
    w = g.next_vertex_id()
    e0 = g.next_edge_id()
    spokes = (e0, e0 + 1, e0 + 2)
    edges = dict(g.edges)
    rot = {v: list(r) for v, r in g.rotation.items()}
    for t, d in enumerate(face):
        v = g.dart_tail(d)
        edges[spokes[t]] = (v, w)
        rot[v].insert(rot[v].index(d), (spokes[t], 0))
    rot[w] = [(spokes[0], 1), (spokes[2], 1), (spokes[1], 1)]
    return PlaneGraph(
        vertices=tuple(list(g.vertices) + [w]),
        edges=edges,
        rotation={v: tuple(r) for v, r in rot.items()},
        outerface=g.outerface,
    ), w


def random_triangulated(sigma: Signature, m: int, n: int, seed: int = 0) -> PolygonalEmbedding:
    """Random polygonal embedding of size (m, n) with triangular inner faces.

    The polygon interior is fan-triangulated from random boundary vertices
    and the internal vertices are inserted one by one into random inner
    triangles that avoid corners, so corners keep degree 2.
    """
    rng = random.Random(seed)
    p = polygon_embedding(sigma, m)
    corners = p.corners()
    g = p.graph
    outer_canon = g.outerface

    def inner_faces(gr: PlaneGraph):
        outer = set(outer_canon)
        return [f for f in trace_faces(gr) if not (set(f) & outer)]

    # triangulate the disc with random ears avoiding corners
    while True:
        big = [f for f in inner_faces(g) if len(f) > 3]
        if not big:
            break
        f = rng.choice(big)
        L = len(f)
        opts = []
        for t in range(L):
            a, b = g.dart_tail(f[t]), g.dart_tail(f[(t + 2) % L])
            if a != b and a not in corners and b not in corners:
                opts.append(t)
        t = rng.choice(opts)
        g, _ = add_edge_in_face(g, f[t], f[(t + 2) % L])

    for _ in range(n):
        tris = [f for f in inner_faces(g)
                if len(f) == 3 and not ({g.dart_tail(d) for d in f} & corners)]
        if not tris:
            raise ValueError(
                "no corner-free triangle to host an internal vertex "
                f"(signature length {len(sigma)}, m={m} is too small)")
        g, _ = _insert_center(g, rng.choice(tris))

    p2 = PolygonalEmbedding(g, p.border, p.sides, p.signature)
    assert not validate(p2)
    return p2


# ---------------------------------------------------------------------------
# K6 embedded on the torus


K6_COORDS: dict[int, tuple[float, float]] = {
    1: (0, 1.5), 2: (1, 0), 3: (-1, 0), 4: (2, 1.5), 5: (0, -1.5), 6: (-2, 1.5),
    34: (-4, -3), 35: (-4, 3), 36: (4, 3), 37: (4, -3),
    76: (-1.5, 3), 77: (0, 3), 78: (1.5, 3), 82: (3, 3),
    84: (4, 1.5), 86: (4, 0.75), 88: (4, -1),
    83: (3, -3), 81: (1.5, -3), 80: (0, -3), 79: (-1.5, -3),
    89: (-4, -1), 87: (-4, 0.75), 85: (-4, 1.5),
}

_K6_EDGES = [
    # boundary walk: 35, top, 36, right, 37, bottom, 34, left
    (35, 76), (76, 77), (77, 78), (78, 82), (82, 36),
    (36, 84), (84, 86), (86, 88), (88, 37),
    (37, 83), (83, 81), (81, 80), (80, 79), (79, 34),
    (34, 89), (89, 87), (87, 85), (85, 35),
    # edges between internal vertices
    (6, 3), (3, 5), (5, 2), (2, 4), (4, 1), (1, 6), (3, 1), (1, 2), (2, 3),
    # edges from internal vertices to side vertices
    (76, 6), (79, 5), (1, 77), (80, 5), (4, 78), (81, 5), (4, 82),
    (4, 84), (2, 86), (85, 6), (87, 6), (83, 88), (89, 3),
]


def plane_from_coords(
    coords: dict[int, tuple[float, float]],
    edge_list: Sequence[tuple[int, int]],
    outer_dart: tuple[int, int],
) -> PlaneGraph:
    """Plane graph from straight-line coordinates (y axis pointing up).

    Rotations are the clockwise angular order around each vertex; the face
    containing ``outer_dart`` becomes the outerface.
    """
    verts = sorted(coords)
    edges = {i: uv for i, uv in enumerate(edge_list)}
    at: dict[int, list[tuple[float, int, int]]] = {v: [] for v in verts}
    for e, (u, v) in edges.items():
        for w, s in ((u, 0), (v, 1)):
            o = v if w == u else u
            dx = coords[o][0] - coords[w][0]
            dy = coords[o][1] - coords[w][1]
            at[w].append((-math.atan2(dy, dx), e, s))
    rotation = {v: tuple((e, s) for _, e, s in sorted(at[v])) for v in verts}
    g = PlaneGraph(vertices=tuple(verts), edges=edges, rotation=rotation,
                   outerface=())
    outer = outerface_of(g, outer_dart)
    return PlaneGraph(g.vertices, g.edges, g.rotation, outer)


def k6_torus() -> PolygonalEmbedding:
    """K6 drawn in a square whose sides glue into a torus.

    The six mutually-joined vertices sit inside the square; every K6 edge
    not drawn inside reaches the boundary and continues from the twin
    position on the opposite side.
    """
    g = plane_from_coords(K6_COORDS, _K6_EDGES, (0, 0))  # dart 35 -> 76 is clockwise
    p = PolygonalEmbedding(
        g,
        border=(35, 36, 37, 34),
        sides=((76, 77, 78, 82), (84, 86, 88), (83, 81, 80, 79), (89, 87, 85)),
        signature=Signature.parse(["a1", "a2", "~a1", "~a2"]),
    )
    assert not validate(p), validate(p)
    return p


def sphere_outerplanar(m: int = 3) -> PolygonalEmbedding:
    """Empty-interior sphere polygon of size (m, 0)."""
    return polygon_embedding(Signature.parse(["a0", "~a0"]), m)


def tree_fixture() -> PolygonalEmbedding:
    """Deterministic torus fixture whose internal vertices form one tree.

    Four internal vertices are stacked into the same region of a
    fan-triangulated square, so the spanning forest is a single
    caterpillar-shaped tree hanging off one outerface vertex.
    """
    p = polygon_embedding(Signature.parse("a1 a2 ~a1 ~a2".split()), 2)
    corners = p.corners()
    g = p.graph
    outer = set(g.outerface)

    def first_free_triangle(gr):
        for f in trace_faces(gr):
            if len(f) == 3 and not (set(f) & outer) \
                    and not ({gr.dart_tail(d) for d in f} & corners):
                return f
        raise AssertionError("no corner-free triangle")

    # fan-triangulate the square deterministically
    while True:
        big = [f for f in trace_faces(g) if len(f) > 3 and not (set(f) & outer)]
        if not big:
            break
        f = big[0]
        L = len(f)
        t = min(t for t in range(L)
                if g.dart_tail(f[t]) not in corners
                and g.dart_tail(f[(t + 2) % L]) not in corners
                and g.dart_tail(f[t]) != g.dart_tail(f[(t + 2) % L]))
        g, _ = add_edge_in_face(g, f[t], f[(t + 2) % L])
    for _ in range(4):
        g, _ = _insert_center(g, first_free_triangle(g))
    p2 = PolygonalEmbedding(g, p.border, p.sides, p.signature)
    assert not validate(p2)
    return p2


def octahedron() -> PlaneGraph:
    """The octahedron with its planar embedding (outer triangle 0, 1, 2)."""
    coords = {
        0: (0.0, 2.0), 1: (1.9, -1.1), 2: (-1.9, -1.1),
        3: (0.0, -0.8), 4: (-0.8, 0.5), 5: (0.8, 0.5),
    }
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (1, 3), (2, 3), (2, 4), (0, 4), (0, 5), (1, 5)]
    return plane_from_coords(coords, edges, (0, 0))


# ---------------------------------------------------------------------------
# stacked planar triangulations for the Hamiltonian-major construction


def stacked_triangulation(n_inserts: int, seed: int = 0) -> PlaneGraph:
    """Planar triangulation grown by repeatedly stacking a vertex in a face."""
    rng = random.Random(seed)
    edges = {0: (0, 1), 1: (1, 2), 2: (2, 0)}
    rotation = {
        0: ((0, 0), (2, 1)),
        1: ((1, 0), (0, 1)),
        2: ((2, 0), (1, 1)),
    }
    g = PlaneGraph(vertices=(0, 1, 2), edges=edges, rotation=rotation,
                   outerface=((0, 0), (1, 0), (2, 0)))
    for _ in range(n_inserts):
        faces = [f for f in trace_faces(g) if f != g.outerface]
        faces = [f for f in faces if len(f) == 3]
        g, _ = _insert_center(g, rng.choice(faces))
    return g


def stacked_circuit(g: PlaneGraph) -> list[int]:
    """A 4-cycle through an inner triangle sharing an edge with the outer one.

    The outer triangle x, y, z together with the apex w of an inner face on
    edge x-y gives the circuit x, w, y, z.
    """
    outer = g.outerface
    x, y, z = (g.dart_tail(d) for d in outer)
    d = outer[0]            # dart x -> y on the outerface
    inner = next(f for f in trace_faces(g) if rev(d) in f)
    w = next(g.dart_tail(dd) for dd in inner
             if g.dart_tail(dd) not in (x, y, z))
    return [x, w, y, z]
