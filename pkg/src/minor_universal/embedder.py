"""Certified embedding of a polygonal embedding into the universal one.

A polygonal embedding of size at most (m, n) is outerplanarized, padded to
side length exactly M = m + 2n, triangulated, and finally realized inside
the universal embedding of the same signature and side length M via a
staircase of branch sets in the half-grid.  The composed witness certifies
that the sewing of the input is a minor of the sewing of the universal
embedding.
"""
from __future__ import annotations

from typing import Mapping

from .polygonal import PolygonalEmbedding, SewnGraph, sew, validate
from .reduce import (
    MinorStep,
    Witness,
    compose_witness,
    guard_corners,
    outerplanarize_full,
    triangulate_inner,
    witness_from_contractions,
)
from .universal import UniversalEmbedding, build_universal


class SideTooLong(ValueError):
    """A side exceeds the requested padded length."""


class SpanViolation(ValueError):
    """The staircase branch sets fail to realize the embedding."""


def pad_sides(
    p: PolygonalEmbedding, target: int
) -> tuple[PolygonalEmbedding, list[tuple[int, int]]]:
    """Subdivide side edges until every side has exactly ``target`` vertices.

    Twin sides always have equal length, so the first clockwise edge of the
    first deficient side is subdivided together with its twin until both
    reach the target.  Returns the padded embedding and the (keep, new)
    contraction pairs that undo the padding.
    """
    for i, s in enumerate(p.sides):
        if len(s) > target:
            raise SideTooLong(f"side {i} has {len(s)} vertices, target {target}")
    pairs: list[tuple[int, int]] = []
    while True:
        i = next((i for i, s in enumerate(p.sides) if len(s) < target), None)
        if i is None:
            return p, pairs
        from .polygonal import subdivide_twin_edge_tracked
        p, new_pairs = subdivide_twin_edge_tracked(p, p.side_edges(i)[0])
        pairs.extend(new_pairs)


def neighbor_span(p: PolygonalEmbedding) -> dict[int, tuple[int, int]]:
    """Smallest index interval per boundary position covering the position
    and all its non-corner neighbours; position 0 spans to the far end."""
    cyc = p.outer_cycle()
    corners = p.corners()
    idx: dict[int, int] = {}
    order: list[int] = []
    for v in cyc:
        if v not in corners:
            idx[v] = len(order)
            order.append(v)
    D = len(order)
    span: dict[int, tuple[int, int]] = {}
    for v, i in idx.items():
        nbrs = [idx[w] for w in p.graph.neighbors(v) if w in idx]
        a = min(nbrs + [i])
        b = max(nbrs + [i])
        if i == 0:
            b = D
        span[i] = (a, b)
    return span


def staircase_witness(
    p: PolygonalEmbedding, u: UniversalEmbedding
) -> Witness:
    """Branch sets realizing sew(p) inside the sewing of the universal
    embedding of the same signature and side length.

    The i-th boundary vertex maps to the i-th diagonal cell together with a
    partial grid column below it and a partial grid row right of it, sized
    by the vertex's neighbour span; corners map to corner cells.  Raises
    SpanViolation if the resulting sets fail to witness the minor.
    """
    if p.signature.tokens() != u.embedding.signature.tokens():
        raise SpanViolation("signatures differ")
    if any(len(s) != u.m for s in p.sides):
        raise SpanViolation(f"every side must have exactly {u.m} vertices")
    if p.measured_size()[1] != 0:
        raise SpanViolation("the embedding must be outerplanar")

    sp = sew(p)
    su = sew(u.embedding)
    span = neighbor_span(p)
    cyc = p.outer_cycle()
    corners = list(p.border)

    gid = u.grid_id
    order = [v for v in cyc if v not in set(corners)]
    witness: dict[int, set[int]] = {}
    for i, v in enumerate(order):
        a, b = span[i]
        cells = {gid[(i, i)]}
        cells.update(gid[(i, k)] for k in range(a + 1, i + 1))
        cells.update(gid[(k, i)] for k in range(i, b))
        key = sp.projection[v]
        witness.setdefault(key, set()).update(su.projection[c] for c in cells)
    for t, c in enumerate(corners):
        key = sp.projection[c]
        witness.setdefault(key, set()).add(su.projection[u.corner_ids[t]])

    out = {k: frozenset(vs) for k, vs in witness.items()}
    from .verify import verify_witness
    bad = verify_witness(sp, su, out)
    if bad:
        raise SpanViolation("; ".join(f"{v.kind}: {v.detail}" for v in bad))
    return out


def universal_embed(p: PolygonalEmbedding) -> tuple[UniversalEmbedding, Witness]:
    """Embed ``p`` into the universal embedding of side length m + 2n.

    Returns the universal embedding for the input's signature and the
    witness showing sew(p) as a minor of its sewing.
    """
    bad = validate(p)
    if bad:
        raise ValueError(f"invalid embedding: {bad}")
    m, n = p.measured_size()
    M = m + 2 * n

    res = outerplanarize_full(p)
    p3 = res.swapped

    padded, pad_pairs = pad_sides(p3, M)
    w_pad = witness_from_contractions(sew(p3), sew(padded), pad_pairs)

    guarded, _ = guard_corners(padded)
    tri, _ = triangulate_inner(guarded)

    u = build_universal(p.signature, M)
    w_stair = staircase_witness(tri, u)

    # triangulating adds edges only, so the sewn vertex sets agree
    assert set(w_stair) == set(sew(padded).vertices)
    witness = compose_witness(compose_witness(res.witness, w_pad), w_stair)
    return u, witness
