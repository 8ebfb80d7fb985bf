"""Rotation-system core: face tracing, Euler genus, editing, serialization."""
import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minor_universal.fixtures import octahedron, plane_from_coords, stacked_triangulation
from minor_universal.graphcore import (
    add_edge_in_face,
    canonical_cycle,
    delete_edges,
    dart_token,
    edge_sets_equal,
    euler_characteristic_check,
    from_json_dict,
    outerface_of,
    parse_dart,
    rev,
    subdivide_edge,
    to_json_dict,
    trace_faces,
)

K4_COORDS = {0: (0.0, 2.0), 1: (-2.0, -1.0), 2: (2.0, -1.0), 3: (0.0, 0.0)}
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4():
    return plane_from_coords(K4_COORDS, K4_EDGES, outer_dart=(0, 0))


def test_k4_faces():
    g = k4()
    faces = trace_faces(g)
    assert len(faces) == 4                       # V - E + F = 4 - 6 + 4 = 2
    assert all(len(f) == 3 for f in faces)
    assert euler_characteristic_check(g) == 0


def test_octahedron_faces():
    g = octahedron()
    faces = trace_faces(g)
    assert len(faces) == 8
    assert euler_characteristic_check(g) == 0
    assert canonical_cycle(g.outerface) in {canonical_cycle(f) for f in faces}


def test_nonplanar_rotation_detected():
    # flipping one rotation of K4 destroys the plane embedding
    g = k4()
    rot = dict(g.rotation)
    rot[3] = tuple(reversed(rot[3]))
    g2 = type(g)(g.vertices, g.edges, rot, ())
    assert euler_characteristic_check(g2) != 0


@pytest.mark.parametrize("seed", range(5))
def test_euler_genus_agrees_with_networkx_planarity(seed):
    g = stacked_triangulation(6, seed)
    assert euler_characteristic_check(g) == 0
    ok, _ = nx.check_planarity(nx.Graph(tuple(pq) for pq in g.edge_pairs()))
    assert ok


def test_dart_tokens():
    assert dart_token((5, 1)) == "e5:1"
    assert parse_dart("e5:1") == (5, 1)
    assert rev((5, 1)) == (5, 0)
    assert rev(rev((7, 0))) == (7, 0)


def test_json_round_trip():
    g = k4()
    data = to_json_dict(g)
    assert data["format"] == 1
    g2 = from_json_dict(json.loads(json.dumps(data)))
    assert g2.vertices == g.vertices
    assert dict(g2.edges) == dict(g.edges)
    assert dict(g2.rotation) == dict(g.rotation)
    assert g2.outerface == g.outerface


def test_add_edge_in_face():
    g = k4()
    # connect 1 and 2 again inside the inner face bounded by 1,2,3
    faces = trace_faces(g)
    target = next(f for f in faces
                  if {g.dart_tail(d) for d in f} == {1, 2, 3}
                  and canonical_cycle(f) != canonical_cycle(g.outerface))
    da = next(d for d in target if g.dart_tail(d) == 1)
    db = next(d for d in target if g.dart_tail(d) == 2)
    g2, e = add_edge_in_face(g, da, db)
    g2.check()
    assert euler_characteristic_check(g2) == 0
    assert len(trace_faces(g2)) == 5
    assert g2.edges[e] in ((1, 2), (2, 1))


def test_subdivide_and_delete():
    g = k4()
    g2, s, e2 = subdivide_edge(g, 3)   # edge (1, 2)
    g2.check()
    assert euler_characteristic_check(g2) == 0
    assert set(g2.edges[3]) == {1, s}
    assert set(g2.edges[e2]) == {s, 2}
    g3 = delete_edges(g2, [3, e2])
    g3.check()
    assert s not in {v for uv in g3.edges.values() for v in uv}


def test_outerface_of_matches_trace():
    g = k4()
    d = g.outerface[0]
    assert canonical_cycle(outerface_of(g, d)) == canonical_cycle(g.outerface)


def test_edge_sets_equal():
    assert edge_sets_equal(k4(), k4())
    assert not edge_sets_equal(k4(), delete_edges(k4(), [0]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_stacked_triangulations_always_plane(seed, n):
    g = stacked_triangulation(n, seed)
    g.check()
    assert euler_characteristic_check(g) == 0
    faces = trace_faces(g)
    assert sum(len(f) for f in faces) == 2 * len(g.edges)
