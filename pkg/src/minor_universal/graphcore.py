"""Plane multigraphs given by rotation systems, plus face tracing.

A plane graph is stored combinatorially: integer vertex ids, integer edge
ids mapping to ordered endpoint pairs, and for every vertex the clockwise
cyclic list of incident edge-ends.  An edge-end is a pair ``(edge_id, s)``
with ``s`` in ``{0, 1}`` selecting an endpoint of the edge; the same pair
doubles as the dart that leaves that endpoint along the edge.  One traced
face is designated as the outerface and stored as its closed dart walk.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping, Sequence

Dart = tuple[int, int]


class MalformedRotation(ValueError):
    """Rotation lists disagree with the edge incidences."""


class Disconnected(ValueError):
    """Operation needs a connected graph."""


def rev(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


def dart_token(d: Dart) -> str:
    return f"e{d[0]}:{d[1]}"


def parse_dart(token: str) -> Dart:
    if not token.startswith("e") or ":" not in token:
        raise ValueError(f"bad edge-end token: {token!r}")
    eid, _, end = token[1:].partition(":")
    return (int(eid), int(end))


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable plane multigraph.

    ``edges[e] == (u, v)`` means end 0 of ``e`` sits at ``u`` and end 1 at
    ``v``.  ``rotation[v]`` lists the edge-ends at ``v`` in clockwise order
    as drawn.  ``outerface`` is the clockwise dart walk of the outer face.
    """

    vertices: tuple[int, ...]
    edges: Mapping[int, tuple[int, int]]
    rotation: Mapping[int, tuple[Dart, ...]]
    outerface: tuple[Dart, ...]

    def dart_tail(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def dart_head(self, d: Dart) -> int:
        return self.edges[d[0]][1 - d[1]]

    def degree(self, v: int) -> int:
        return len(self.rotation.get(v, ()))

    def neighbors(self, v: int) -> list[int]:
        return [self.dart_head(d) for d in self.rotation.get(v, ())]

    def edge_pairs(self) -> set[frozenset[int]]:
        return {frozenset(uv) for uv in self.edges.values()}

    def vertex_set(self) -> set[int]:
        return set(self.vertices)

    def next_vertex_id(self) -> int:
        return max(self.vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self.edges, default=-1) + 1

    def outer_vertices(self) -> list[int]:
        return [self.dart_tail(d) for d in self.outerface]

    def next_dart(self, d: Dart) -> Dart:
        """Face-tracing successor: reverse, then clockwise successor."""
        r = rev(d)
        rot = self.rotation[self.dart_tail(r)]
        i = rot.index(r)
        return rot[(i + 1) % len(rot)]

    def check(self) -> None:
        """Raise MalformedRotation unless rotations match the incidences."""
        seen: set[Dart] = set()
        vset = set(self.vertices)
        for e, (u, v) in self.edges.items():
            if u not in vset or v not in vset:
                raise MalformedRotation(f"edge {e} touches unknown vertex")
        for v in self.vertices:
            for d in self.rotation.get(v, ()):
                if d[0] not in self.edges or d[1] not in (0, 1):
                    raise MalformedRotation(f"unknown edge-end {d} at {v}")
                if self.edges[d[0]][d[1]] != v:
                    raise MalformedRotation(f"edge-end {d} listed at wrong vertex {v}")
                if d in seen:
                    raise MalformedRotation(f"edge-end {d} listed twice")
                seen.add(d)
        for e in self.edges:
            for s in (0, 1):
                if (e, s) not in seen:
                    raise MalformedRotation(f"edge-end {(e, s)} missing from rotations")
        if self.outerface:
            for d in self.outerface:
                if d[0] not in self.edges:
                    raise MalformedRotation(f"outerface uses unknown edge {d[0]}")


def trace_faces(g: PlaneGraph) -> list[tuple[Dart, ...]]:
    """All face walks of the embedding, deterministically ordered.

    Each face is rotated to start at its smallest dart and faces are sorted
    by that dart.
    """
    g.check()
    remaining = {(e, s) for e in g.edges for s in (0, 1)}
    faces = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        walk = [start]
        remaining.discard(start)
        d = g.next_dart(start)
        while d != start:
            walk.append(d)
            remaining.discard(d)
            d = g.next_dart(d)
        faces.append(tuple(walk))
    return sorted(faces, key=lambda f: min(f))


def is_connected(g: PlaneGraph) -> bool:
    if not g.vertices:
        return True
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def euler_characteristic_check(g: PlaneGraph) -> int:
    """Euler genus 2 - V + E - F of a connected embedded graph."""
    if not is_connected(g):
        raise Disconnected("euler characteristic needs a connected graph")
    f = len(trace_faces(g))
    genus = 2 - len(g.vertices) + len(g.edges) - f
    return genus


def edge_sets_equal(a, b) -> bool:
    """Same vertex ids and same edge set as unordered endpoint-id pairs."""
    return a.vertex_set() == b.vertex_set() and a.edge_pairs() == b.edge_pairs()


def outerface_of(g: PlaneGraph, d: Dart) -> tuple[Dart, ...]:
    """The traced face containing dart ``d`` (for designating an outerface)."""
    for f in trace_faces(g):
        if d in f:
            return f
    raise ValueError(f"dart {d} not in any face")


def canonical_cycle(walk: Sequence) -> tuple:
    """Rotate a cyclic sequence to start at its minimum element."""
    walk = tuple(walk)
    if not walk:
        return walk
    i = walk.index(min(walk))
    return walk[i:] + walk[:i]


# ---------------------------------------------------------------------------
# surgery helpers (all return new graphs; inputs are never mutated)


def _rot_copy(g: PlaneGraph) -> dict[int, list[Dart]]:
    return {v: list(g.rotation.get(v, ())) for v in g.vertices}


def _freeze(vertices: Iterable[int], edges: Mapping[int, tuple[int, int]],
            rotation: Mapping[int, Sequence[Dart]], outerface: Sequence[Dart]) -> PlaneGraph:
    return PlaneGraph(
        vertices=tuple(vertices),
        edges=dict(edges),
        rotation={v: tuple(r) for v, r in rotation.items()},
        outerface=tuple(outerface),
    )


def add_edge_in_face(g: PlaneGraph, da: Dart, db: Dart) -> tuple[PlaneGraph, int]:
    """Add an edge between the tails of two darts of a common face.

    The new edge is placed in the angular wedge just before each given dart,
    splitting the face the two darts bound (or joining two faces if the darts
    lie on different walks of the same region).
    """
    u, w = g.dart_tail(da), g.dart_tail(db)
    e = g.next_edge_id()
    rot = _rot_copy(g)
    edges = dict(g.edges)
    edges[e] = (u, w)
    rot[u].insert(rot[u].index(da), (e, 0))
    rot[w].insert(rot[w].index(db), (e, 1))
    return _freeze(g.vertices, edges, rot, g.outerface), e


def add_edge_at_isolated(g: PlaneGraph, da: Dart, v: int) -> tuple[PlaneGraph, int]:
    """Connect isolated vertex ``v`` into the face holding dart ``da``."""
    u = g.dart_tail(da)
    e = g.next_edge_id()
    rot = _rot_copy(g)
    edges = dict(g.edges)
    edges[e] = (u, v)
    rot[u].insert(rot[u].index(da), (e, 0))
    rot[v] = [(e, 1)]
    return _freeze(g.vertices, edges, rot, g.outerface), e


def delete_edges(g: PlaneGraph, eids: Iterable[int]) -> PlaneGraph:
    dead = set(eids)
    edges = {e: uv for e, uv in g.edges.items() if e not in dead}
    rot = {v: [d for d in g.rotation.get(v, ()) if d[0] not in dead] for v in g.vertices}
    outer = tuple(d for d in g.outerface if d[0] not in dead)
    return _freeze(g.vertices, edges, rot, outer)


def subdivide_edge(g: PlaneGraph, e: int, new_vertex: int | None = None) -> tuple[PlaneGraph, int, int]:
    """Split edge ``e`` into ``u - s - v``; returns (graph, s, new_edge_id).

    Edge ``e`` keeps its id and becomes ``u - s``; the new edge is ``s - v``.
    The outerface walk is rerouted through ``s`` when ``e`` lies on it.
    """
    u, v = g.edges[e]
    s = g.next_vertex_id() if new_vertex is None else new_vertex
    e2 = g.next_edge_id()
    edges = dict(g.edges)
    edges[e] = (u, s)
    edges[e2] = (s, v)
    rot = _rot_copy(g)
    rot[v][rot[v].index((e, 1))] = (e2, 1)
    # walking u -> s -> v must follow the (e,0), (e2,0) darts in order
    rot[s] = [(e, 1), (e2, 0)]
    outer: list[Dart] = []
    for d in g.outerface:
        if d[0] != e:
            outer.append(d)
        elif d == (e, 0):  # traversed u -> v
            outer.extend([(e, 0), (e2, 0)])
        else:  # traversed v -> u
            outer.extend([(e2, 1), (e, 1)])
    return _freeze(list(g.vertices) + [s], edges, rot, outer), s, e2


def to_json_dict(g: PlaneGraph) -> dict:
    return {
        "format": 1,
        "vertices": list(g.vertices),
        "edges": [[e, u, v] for e, (u, v) in sorted(g.edges.items())],
        "rotation": {str(v): [dart_token(d) for d in g.rotation.get(v, ())] for v in g.vertices},
        "outerface": [dart_token(d) for d in g.outerface],
    }


def from_json_dict(data: Mapping) -> PlaneGraph:
    if data.get("format") != 1:
        raise ValueError("unsupported format")
    g = PlaneGraph(
        vertices=tuple(data["vertices"]),
        edges={e: (u, v) for e, u, v in data["edges"]},
        rotation={int(v): tuple(parse_dart(t) for t in rot) for v, rot in data["rotation"].items()},
        outerface=tuple(parse_dart(t) for t in data["outerface"]),
    )
    g.check()
    return g


def dumps(g: PlaneGraph) -> str:
    return json.dumps(to_json_dict(g), indent=2, sort_keys=True)


def loads(text: str) -> PlaneGraph:
    return from_json_dict(json.loads(text))
