"""Polygonal embeddings: plane graphs whose outerface is cut into sides.

The outerface cycle is partitioned by degree-2 corner vertices into sides.
A signature (a word in which every letter occurs exactly twice, possibly
barred) pairs the sides; sewing glues twin sides and produces the graph
embedded on the closed surface encoded by the signature.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphcore import (
    Dart,
    Disconnected,
    MalformedRotation,
    PlaneGraph,
    canonical_cycle,
    dart_token,
    from_json_dict,
    parse_dart,
    subdivide_edge,
    to_json_dict,
    trace_faces,
)

Symbol = tuple[str, bool]  # (letter, barred)


def parse_symbol(token: str) -> Symbol:
    if token.startswith("~"):
        return (token[1:], True)
    return (token, False)


def symbol_token(sym: Symbol) -> str:
    return ("~" if sym[1] else "") + sym[0]


@dataclass(frozen=True)
class Signature:
    symbols: tuple[Symbol, ...]

    @classmethod
    def parse(cls, tokens: Sequence[str]) -> "Signature":
        return cls(tuple(parse_symbol(t) for t in tokens))

    def tokens(self) -> list[str]:
        return [symbol_token(s) for s in self.symbols]

    def __len__(self) -> int:
        return len(self.symbols)

    def letter_positions(self) -> dict[str, list[int]]:
        pos: dict[str, list[int]] = {}
        for i, (letter, _) in enumerate(self.symbols):
            pos.setdefault(letter, []).append(i)
        return pos

    def is_valid(self) -> bool:
        return all(len(p) == 2 for p in self.letter_positions().values())

    def side_pairs(self) -> list[tuple[int, int, bool]]:
        """(i, j, same_orientation) for each letter, i < j.

        Twin sides glue position-by-position when both occurrences carry the
        same bar, and in reversed order when the bars differ.
        """
        out = []
        for letter, pos in sorted(self.letter_positions().items()):
            if len(pos) != 2:
                raise ValueError(f"letter {letter!r} occurs {len(pos)} times")
            i, j = pos
            out.append((i, j, self.symbols[i][1] == self.symbols[j][1]))
        return out


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}" if self.detail else self.kind


@dataclass(frozen=True)
class PolygonalEmbedding:
    graph: PlaneGraph
    border: tuple[int, ...]          # corner vertices, clockwise
    sides: tuple[tuple[int, ...], ...]  # non-corner vertices per side, clockwise
    signature: Signature

    def corners(self) -> set[int]:
        return set(self.border)

    def outer_cycle(self) -> list[int]:
        """Expected outerface vertex order: corner, its side, next corner, ..."""
        walk: list[int] = []
        for i, c in enumerate(self.border):
            walk.append(c)
            walk.extend(self.sides[i])
        return walk

    def internal_vertices(self) -> list[int]:
        on_outer = set(self.outer_cycle())
        return [v for v in self.graph.vertices if v not in on_outer]

    def measured_size(self) -> tuple[int, int]:
        """(max side length, number of internal vertices)."""
        m = max((len(s) for s in self.sides), default=0)
        return (m, len(self.internal_vertices()))

    def side_edges(self, i: int) -> list[int]:
        """Edge ids along side i, from corner i to corner i+1."""
        walk = self.graph.outerface
        verts = [self.graph.dart_tail(d) for d in walk]
        start = verts.index(self.border[i])
        n = len(walk)
        return [walk[(start + t) % n][0] for t in range(len(self.sides[i]) + 1)]

    def rank(self) -> dict[int, int]:
        """Outerface position of each boundary vertex, from the first corner."""
        cyc = self.outer_cycle()
        return {v: t for t, v in enumerate(cyc)}


@dataclass(frozen=True)
class TwinPairing:
    vertex_twins: dict[int, int]          # involution on non-corner side vertices
    corner_classes: dict[int, frozenset]  # corner -> its identification class
    edge_twins: dict[int, int]            # involution on side edges


@dataclass(frozen=True)
class SewnGraph:
    """Quotient of a polygonal embedding by its twin pairing."""

    vertices: tuple[int, ...]
    edges: Mapping[int, tuple[int, int]]
    projection: Mapping[int, int]   # polygon vertex -> sewn vertex
    inner_face_count: int

    def vertex_set(self) -> set[int]:
        return set(self.vertices)

    def edge_pairs(self) -> set[frozenset[int]]:
        return {frozenset(uv) for uv in self.edges.values()}


def validate(p: PolygonalEmbedding) -> list[Violation]:
    """All structural invariants; an empty list means the embedding is valid."""
    out: list[Violation] = []
    g = p.graph
    try:
        g.check()
    except MalformedRotation as exc:
        return [Violation("RotationMalformed", str(exc))]

    faces = trace_faces(g)
    ends = sum(len(f) for f in faces)
    if ends != 2 * len(g.edges):
        out.append(Violation("FaceCover", "face walks do not partition edge-ends"))
    comps = _component_count(g)
    if len(g.vertices) - len(g.edges) + len(faces) != 1 + comps:
        out.append(Violation("EulerCheck", "embedding is not planar"))

    if not g.outerface:
        return out + [Violation("OuterfaceMissing")]
    if canonical_cycle(g.outerface) not in {canonical_cycle(f) for f in faces}:
        out.append(Violation("OuterfaceMismatch", "designated walk is not a traced face"))
    overts = g.outer_vertices()
    if len(set(overts)) != len(overts):
        out.append(Violation("OuterfaceNotCycle", "outerface walk repeats a vertex"))
        return out

    expected = p.outer_cycle()
    if canonical_cycle(expected) != canonical_cycle(overts):
        out.append(Violation("OuterfaceMismatch", "border/sides disagree with outerface walk"))
        return out

    for c in p.border:
        if g.degree(c) != 2:
            out.append(Violation("CornerDegree", f"corner {c} has degree {g.degree(c)}"))
    if not p.signature.is_valid() or len(p.signature) != len(p.border):
        out.append(Violation("SignatureLetterCount"))
        return out
    for i, j, _ in p.signature.side_pairs():
        if len(p.sides[i]) != len(p.sides[j]):
            out.append(Violation(
                "SideLengthMismatch",
                f"sides {i} and {j} have lengths {len(p.sides[i])} != {len(p.sides[j])}"))
    return out


def _component_count(g: PlaneGraph) -> int:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = 0
    for v in g.vertices:
        if v in seen:
            continue
        comps += 1
        seen.add(v)
        stack = [v]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


def derive_twins(p: PolygonalEmbedding) -> TwinPairing:
    """Positional twin pairing of side vertices/edges plus corner classes.

    For twin sides glued in the same direction the k-th items pair up; for
    opposite directions the order reverses.  Corner classes are the
    transitive closure of the induced endpoint identifications.
    """
    vtw: dict[int, int] = {}
    etw: dict[int, int] = {}
    parent: dict[int, int] = {c: c for c in p.border}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    nb = len(p.border)
    for i, j, same in p.signature.side_pairs():
        a, b = p.sides[i], p.sides[j]
        ea, eb = p.side_edges(i), p.side_edges(j)
        L = len(a)
        for k in range(L):
            mate = b[k] if same else b[L - 1 - k]
            vtw[a[k]] = mate
            vtw[mate] = a[k]
        for k in range(L + 1):
            mate_e = eb[k] if same else eb[L - k]
            etw[ea[k]] = mate_e
            etw[mate_e] = ea[k]
        if same:
            union(p.border[i], p.border[j])
            union(p.border[(i + 1) % nb], p.border[(j + 1) % nb])
        else:
            union(p.border[i], p.border[(j + 1) % nb])
            union(p.border[(i + 1) % nb], p.border[j])

    classes: dict[int, set[int]] = {}
    for c in p.border:
        classes.setdefault(find(c), set()).add(c)
    corner_classes = {c: frozenset(classes[find(c)]) for c in p.border}
    return TwinPairing(vtw, corner_classes, etw)


def sew(p: PolygonalEmbedding) -> SewnGraph:
    """Glue twin sides: quotient vertices, merge twin edge pairs."""
    tw = derive_twins(p)
    proj: dict[int, int] = {}
    for v in p.graph.vertices:
        proj[v] = v
    for a, b in tw.vertex_twins.items():
        rep = min(a, b)
        proj[a] = rep
        proj[b] = rep
    for c in p.border:
        proj[c] = min(tw.corner_classes[c])
    edges: dict[int, tuple[int, int]] = {}
    for e, (u, v) in p.graph.edges.items():
        rep = min(e, tw.edge_twins.get(e, e))
        edges[rep] = (proj[u], proj[v])
    inner = len(trace_faces(p.graph)) - 1
    return SewnGraph(
        vertices=tuple(sorted(set(proj.values()))),
        edges=edges,
        projection=proj,
        inner_face_count=inner,
    )


def sewn_genus(p: PolygonalEmbedding) -> int:
    """Euler genus of the glued embedding.

    Gluing removes the outerface and identifies twin darts, so the faces of
    the sewn embedding are exactly the inner faces of the polygon; the genus
    is 2 - V + E - F on the quotient counts.
    """
    if _component_count(p.graph) != 1:
        raise Disconnected("sewn genus needs a connected embedding")
    s = sew(p)
    genus = 2 - len(s.vertices) + len(s.edges) - s.inner_face_count
    assert genus >= 0
    return genus


def _locate_side_edge(p: PolygonalEmbedding, e: int) -> tuple[int, int]:
    for i in range(len(p.sides)):
        edges = p.side_edges(i)
        if e in edges:
            return i, edges.index(e)
    raise ValueError(f"edge {e} is not a side edge")


def subdivide_twin_edge_tracked(
    p: PolygonalEmbedding, e: int
) -> tuple[PolygonalEmbedding, list[tuple[int, int]]]:
    """Subdivide side edge ``e`` and its twin at mirrored positions.

    Returns the new embedding plus (keep, new) contraction pairs that undo
    the two subdivisions.
    """
    tw = derive_twins(p)
    e2 = tw.edge_twins[e]
    if e2 == e:
        raise ValueError("side edge cannot be its own twin")
    i, k = _locate_side_edge(p, e)
    j, k2 = _locate_side_edge(p, e2)

    g = p.graph
    pairs: list[tuple[int, int]] = []
    sides = [list(s) for s in p.sides]
    keep1 = p.graph.edges[e][0]
    g, s1, _ = subdivide_edge(g, e)
    pairs.append((keep1, s1))
    sides[i].insert(k, s1)
    # the two fresh vertices are twins, so both contractions must target the
    # same sewn vertex: pick the endpoint of the twin edge glued onto keep1
    glued = tw.corner_classes.get(keep1, frozenset(
        (keep1, tw.vertex_twins.get(keep1, keep1))))
    keep2 = next(v for v in p.graph.edges[e2] if v in glued)
    g, s2, _ = subdivide_edge(g, e2)
    pairs.append((keep2, s2))
    sides[j].insert(k2, s2)
    p2 = PolygonalEmbedding(g, p.border, tuple(tuple(s) for s in sides), p.signature)
    return p2, pairs


def subdivide_twin_edge(p: PolygonalEmbedding, e: int) -> PolygonalEmbedding:
    return subdivide_twin_edge_tracked(p, e)[0]


def to_json(p: PolygonalEmbedding) -> dict:
    data = to_json_dict(p.graph)
    data["border"] = list(p.border)
    data["signature"] = p.signature.tokens()
    return data


def from_json(data: Mapping) -> PolygonalEmbedding:
    g = from_json_dict(data)
    border = tuple(data["border"])
    sig = Signature.parse(data["signature"])
    walk = g.outer_vertices()
    for c in border:
        if walk.count(c) != 1:
            raise ValueError(f"corner {c} does not occur exactly once on the outerface")
    start = walk.index(border[0])
    walk = walk[start:] + walk[:start]
    marks = [t for t, v in enumerate(walk) if v in set(border)]
    found = tuple(walk[t] for t in marks)
    if found != border:
        raise ValueError("border order disagrees with the outerface walk")
    sides = []
    for idx, t in enumerate(marks):
        end = marks[idx + 1] if idx + 1 < len(marks) else len(walk)
        sides.append(tuple(walk[t + 1:end]))
    return PolygonalEmbedding(g, border, tuple(sides), sig)


def dumps(p: PolygonalEmbedding) -> str:
    return json.dumps(to_json(p), indent=2, sort_keys=True)


def loads(text: str) -> PolygonalEmbedding:
    return from_json(json.loads(text))
