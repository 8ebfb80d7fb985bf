"""The universal half-grid embedding for a signature and side capacity.

For a signature of length ``q`` and side capacity ``m`` the construction
places the grid vertices (i, j) with 0 <= j <= i < q*m (grid edges between
vertices at Manhattan distance 1), runs a separate cycle along the diagonal
(i, i), and subdivides that cycle by a corner before every index divisible
by ``m``.  The diagonal cycle with its corners is the outerface; everything
strictly below the diagonal is internal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Dart, PlaneGraph
from .polygonal import PolygonalEmbedding, Signature


@dataclass(frozen=True)
class UniversalEmbedding:
    embedding: PolygonalEmbedding
    m: int
    coords: dict[int, tuple[int, int]]   # grid vertex id -> (i, j)
    corner_ids: tuple[int, ...]

    @property
    def grid_id(self) -> dict[tuple[int, int], int]:
        return {ij: v for v, ij in self.coords.items()}


def universal_counts(sigma: Signature, m: int) -> dict[str, int]:
    """Closed-form size facts for the universal embedding."""
    q = len(sigma)
    d = q * m
    return {
        "diagonal": d,
        "internal": d * (d - 1) // 2,
        "side_length": m,
        "per_side": m,
        "vertices": d * (d + 1) // 2 + q,
        "sewn_upper": (q * q * m * m + q) // 2,
    }


def build_universal(sigma: Signature, m: int) -> UniversalEmbedding:
    if m < 1:
        raise ValueError("side capacity must be positive")
    if not sigma.is_valid():
        raise ValueError("every signature letter must occur exactly twice")
    q = len(sigma)
    d = q * m

    ids: dict[tuple[int, int], int] = {}
    nxt = 0
    for i in range(d):
        for j in range(i + 1):
            ids[(i, j)] = nxt
            nxt += 1
    corner_ids = tuple(range(nxt, nxt + q))

    edges: dict[int, tuple[int, int]] = {}
    eid = 0

    def add_edge(u: int, v: int) -> int:
        nonlocal eid
        edges[eid] = (u, v)
        eid += 1
        return eid - 1

    grid_edge: dict[tuple[int, int, int, int], int] = {}
    for i in range(d):
        for j in range(i + 1):
            if (i + 1, j) in ids:
                grid_edge[(i, j, i + 1, j)] = add_edge(ids[(i, j)], ids[(i + 1, j)])
            if j + 1 <= i:
                grid_edge[(i, j, i, j + 1)] = add_edge(ids[(i, j)], ids[(i, j + 1)])

    # outer cycle: corner t, then diagonal vertices t*m .. (t+1)*m - 1
    cycle: list[int] = []
    for t in range(q):
        cycle.append(corner_ids[t])
        cycle.extend(ids[(i, i)] for i in range(t * m, (t + 1) * m))
    cyc_edge: dict[int, int] = {}  # position -> edge from cycle[pos] to cycle[pos+1]
    n_cyc = len(cycle)
    for pos in range(n_cyc):
        cyc_edge[pos] = add_edge(cycle[pos], cycle[(pos + 1) % n_cyc])

    pos_of = {v: t for t, v in enumerate(cycle)}

    def cyc_dart_next(v: int) -> Dart:
        e = cyc_edge[pos_of[v]]
        return (e, 0)

    def cyc_dart_prev(v: int) -> Dart:
        e = cyc_edge[(pos_of[v] - 1) % n_cyc]
        return (e, 1)

    def grid_dart(i: int, j: int, i2: int, j2: int) -> Dart:
        if (i, j, i2, j2) in grid_edge:
            return (grid_edge[(i, j, i2, j2)], 0)
        return (grid_edge[(i2, j2, i, j)], 1)

    rotation: dict[int, list[Dart]] = {}
    for i in range(d):
        for j in range(i + 1):
            v = ids[(i, j)]
            rot: list[Dart] = []
            if i == j:
                # clockwise from north-east: cycle-next, east, south, cycle-prev
                rot.append(cyc_dart_next(v))
                if (i + 1, j) in ids:
                    rot.append(grid_dart(i, j, i + 1, j))
                if j - 1 >= 0:
                    rot.append(grid_dart(i, j, i, j - 1))
                rot.append(cyc_dart_prev(v))
            else:
                # clockwise from north: up, east, south, west
                if j + 1 <= i:
                    rot.append(grid_dart(i, j, i, j + 1))
                if (i + 1, j) in ids:
                    rot.append(grid_dart(i, j, i + 1, j))
                if j - 1 >= 0:
                    rot.append(grid_dart(i, j, i, j - 1))
                if i - 1 >= j:
                    rot.append(grid_dart(i, j, i - 1, j))
            rotation[v] = rot
    for t, c in enumerate(corner_ids):
        rotation[c] = [cyc_dart_next(c), cyc_dart_prev(c)]

    outer = [ (cyc_edge[pos], 0) for pos in range(n_cyc) ]

    graph = PlaneGraph(
        vertices=tuple(range(nxt + q)),
        edges=edges,
        rotation={v: tuple(r) for v, r in rotation.items()},
        outerface=tuple(outer),
    )
    sides = tuple(
        tuple(ids[(i, i)] for i in range(t * m, (t + 1) * m)) for t in range(q)
    )
    emb = PolygonalEmbedding(graph, corner_ids, sides, sigma)
    coords = {v: ij for ij, v in ids.items()}
    return UniversalEmbedding(emb, m, coords, corner_ids)
