"""Reduction of a polygonal embedding to an outerplanar one.

The pipeline guards corners with triangles, triangulates inner faces,
extracts a spanning forest of the internal vertices rooted on the
outerface, blows each tree up into a cycle hugging its contour, splits
the cycle anchors into outerface edges, mirrors each split on the twin
side, and finally swaps every cycle interior onto the outerface while a
copy is re-attached on the twin side.  Every stage emits minor steps whose
replay recovers the stage input, so the whole run certifies that the
sewing of the input is a minor of the sewing of the outerplanar output.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graphcore import (
    Dart,
    Disconnected,
    PlaneGraph,
    add_edge_at_isolated,
    add_edge_in_face,
    canonical_cycle,
    delete_edges,
    edge_sets_equal,
    outerface_of,
    rev,
    subdivide_edge,
    trace_faces,
)
from .polygonal import (
    PolygonalEmbedding,
    SewnGraph,
    derive_twins,
    sew,
)


class CannotAvoidCorner(ValueError):
    """A face cannot be triangulated without raising a corner degree."""


class TooSmallCircuit(ValueError):
    pass


class SeparatingCircuit(ValueError):
    """The circuit does not bound a disc holding the rest of the graph."""


class EdgeAnchorViolation(AssertionError):
    """Twin bookkeeping touched an anchor edge in a forbidden way."""


@dataclass(frozen=True)
class MinorStep:
    """One certified reduction step, replayable on the stage output."""

    kind: str                 # "contract-edge" | "delete-edge" | "delete-vertex"
    a: int = -1               # contract: kept vertex; delete-edge: endpoint; delete-vertex: vertex
    b: int = -1               # contract: removed vertex; delete-edge: endpoint

    def to_json(self) -> dict:
        return {"kind": self.kind, "a": self.a, "b": self.b}


def replay_steps(g, steps: Sequence[MinorStep]) -> tuple[set[int], set[frozenset]]:
    """Apply minor steps to a graph's abstract (vertices, edge pairs) view."""
    verts = set(g.vertex_set())
    pairs = set(g.edge_pairs())
    rep = {v: v for v in verts}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for st in steps:
        if st.kind == "contract-edge":
            ra, rb = find(st.a), find(st.b)
            if ra != rb:
                rep[max(ra, rb)] = min(ra, rb)
        elif st.kind == "delete-edge":
            pairs.discard(frozenset((find(st.a), find(st.b))))
        elif st.kind == "delete-vertex":
            verts.discard(find(st.a))
        else:
            raise ValueError(st.kind)
    out_pairs = set()
    for pq in pairs:
        mapped = frozenset(find(x) for x in pq)
        if len(mapped) == 2:
            out_pairs.add(mapped)
    out_verts = {find(v) for v in verts}
    return out_verts, out_pairs


def replay_matches(major, minor, steps: Sequence[MinorStep]) -> bool:
    verts, pairs = replay_steps(major, steps)
    return verts == minor.vertex_set() and pairs == minor.edge_pairs()


# ---------------------------------------------------------------------------
# corner guarding and triangulation


def _inner_dart_at_corner(g: PlaneGraph, c: int) -> Dart:
    outer = set(g.outerface)
    for d in g.rotation[c]:
        if d not in outer:
            return d
    raise ValueError(f"corner {c} has no inner dart")


def guard_corners(p: PolygonalEmbedding) -> tuple[PolygonalEmbedding, list[MinorStep]]:
    """Put every corner on an inner triangle by joining its two neighbours.

    Corners needing a guard are decided against the input state, so a pair
    of corners sharing the same neighbours each receive their own edge.
    """
    g = p.graph
    faces = trace_faces(g)
    face_of = {d: f for f in faces for d in f}
    need = [c for c in p.border if len(face_of[_inner_dart_at_corner(g, c)]) != 3]
    steps: list[MinorStep] = []
    for c in need:
        d = _inner_dart_at_corner(g, c)
        face = next(f for f in trace_faces(g) if d in f)
        i = face.index(d)
        du = face[i - 1]              # arrives at c, leaves the first neighbour
        dw = face[(i + 1) % len(face)]  # leaves the second neighbour
        g, _ = add_edge_in_face(g, du, dw)
        steps.append(MinorStep("delete-edge", g.dart_tail(du), g.dart_tail(dw)))
    p2 = PolygonalEmbedding(g, p.border, p.sides, p.signature)
    return p2, steps


def _components(g: PlaneGraph) -> list[set[int]]:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _connect_components(g: PlaneGraph, steps: list[MinorStep]) -> PlaneGraph:
    """Tie floating interior components into an inner face of the main part."""
    while True:
        comps = _components(g)
        if len(comps) <= 1:
            break
        outer_comp = next(c for c in comps if g.dart_tail(g.outerface[0]) in c)
        floater = min((c for c in comps if c is not outer_comp), key=min)
        outer_canon = canonical_cycle(g.outerface)
        target = next(
            f for f in trace_faces(g)
            if canonical_cycle(f) != outer_canon and g.dart_tail(f[0]) in outer_comp)
        anchor_dart = target[0]
        fl_darts = sorted(d for f in trace_faces(g) for d in f if g.dart_tail(d) in floater)
        if fl_darts:
            g, _ = add_edge_in_face(g, anchor_dart, fl_darts[0])
            other = g.dart_tail(fl_darts[0])
        else:
            other = min(floater)
            g, _ = add_edge_at_isolated(g, anchor_dart, other)
        steps.append(MinorStep("delete-edge", g.dart_tail(anchor_dart), other))
    return g


def _triangulate_faces(g: PlaneGraph, corners: set[int],
                       steps: list[MinorStep], include_outer: bool = False) -> PlaneGraph:
    outer_canon = canonical_cycle(g.outerface)
    while True:
        faces = trace_faces(g)
        todo = None
        for f in faces:
            if len(f) <= 3:
                continue
            if not include_outer and canonical_cycle(f) == outer_canon:
                continue
            todo = f
            break
        if todo is None:
            return g
        verts = [g.dart_tail(d) for d in todo]
        L = len(todo)
        cands = sorted(
            (verts[t], t) for t in range(L) if verts[t] not in corners)
        if not cands:
            raise CannotAvoidCorner(f"face {verts} has only corner vertices")
        placed = False
        for _, t in cands:
            w0, w2 = verts[t], verts[(t + 2) % L]
            if w0 != w2 and w2 not in corners:
                g, _ = add_edge_in_face(g, todo[t], todo[(t + 2) % L])
                steps.append(MinorStep("delete-edge", w0, w2))
                placed = True
                break
        if not placed:
            raise CannotAvoidCorner(f"no chord avoids corners in face {verts}")


def triangulate_inner(p: PolygonalEmbedding) -> tuple[PolygonalEmbedding, list[MinorStep]]:
    """Make every inner face a triangle (or shorter), leaving corners alone.

    Floating interior components are first tied into the embedding so the
    result is connected.
    """
    steps: list[MinorStep] = []
    g = _connect_components(p.graph, steps)
    g = _triangulate_faces(g, p.corners(), steps)
    return PolygonalEmbedding(g, p.border, p.sides, p.signature), steps


# ---------------------------------------------------------------------------
# spanning forest


@dataclass(frozen=True)
class RootedForest:
    """Vertex-disjoint trees covering the internal vertices, rooted on the
    outerface and meeting it only at their roots."""

    trees: tuple[tuple[int, tuple[int, ...]], ...]   # (root, sorted edge ids)

    def edge_count(self) -> int:
        return sum(len(es) for _, es in self.trees)


def _spanning_forest_graph(g: PlaneGraph, outer: Sequence[int]) -> RootedForest:
    oset = set(outer)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for e, (u, v) in sorted(g.edges.items()):
        adj[u].append((v, e))
        adj[v].append((u, e))
    for v in adj:
        adj[v].sort()

    root0 = min(oset)
    parent_edge: dict[int, tuple[int, int]] = {}
    seen = {root0}
    queue = [root0]
    while queue:
        u = queue.pop(0)
        for w, e in adj[u]:
            if w not in seen:
                seen.add(w)
                parent_edge[w] = (u, e)
                queue.append(w)
    if len(seen) != len(g.vertices):
        raise Disconnected("spanning forest needs a connected graph")

    tree_edges = {e for _, e in parent_edge.values()}

    def forest_adj() -> dict[int, list[tuple[int, int]]]:
        fa: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
        for e in tree_edges:
            u, v = g.edges[e]
            fa[u].append((v, e))
            fa[v].append((u, e))
        return fa

    # cut each path joining two outerface vertices, dropping the edge at the
    # path's higher-id endpoint
    while True:
        fa = forest_adj()
        cut = None
        for u in sorted(oset):
            back: dict[int, tuple[int, int]] = {u: (u, -1)}
            queue = [u]
            hits = []
            while queue:
                x = queue.pop(0)
                if x in oset and x != u:
                    hits.append(x)
                    continue
                for w, e in fa[x]:
                    if w not in back:
                        back[w] = (x, e)
                        queue.append(w)
            if hits:
                v = min(hits)
                hi = max(u, v)
                if hi == v:
                    cut = back[v][1]
                else:
                    x = v
                    while back[x][0] != u:
                        x = back[x][0]
                    cut = back[x][1]
                break
        if cut is None:
            break
        tree_edges.discard(cut)

    fa = forest_adj()
    seen2: set[int] = set()
    trees = []
    for r in sorted(oset):
        if not fa[r] or r in seen2:
            continue
        comp_edges: set[int] = set()
        stack = [r]
        seen2.add(r)
        while stack:
            x = stack.pop()
            for w, e in fa[x]:
                if w not in seen2:
                    seen2.add(w)
                    comp_edges.add(e)
                    stack.append(w)
        trees.append((r, tuple(sorted(comp_edges))))
    return RootedForest(tuple(trees))


def spanning_forest(p: PolygonalEmbedding) -> RootedForest:
    return _spanning_forest_graph(p.graph, p.graph.outer_vertices())


# ---------------------------------------------------------------------------
# blow-up


@dataclass(frozen=True)
class BlowupRecord:
    """One tree turned into a contour cycle plus same-vertex chords."""

    anchor: int
    cycle: tuple[int, ...]        # cycle vertices in tour order, anchor first
    cycle_edges: tuple[int, ...]  # edge t joins cycle[t] to cycle[t+1]
    chords: tuple[int, ...]       # edges joining consecutive visits of a vertex


def _walk_darts_at(g: PlaneGraph, v: int) -> tuple[Dart, Dart]:
    """(arriving dart, departing dart) of the outerface walk at ``v``."""
    for i, d in enumerate(g.outerface):
        if g.dart_tail(d) == v:
            return g.outerface[i - 1], d
    raise ValueError(f"{v} is not on the outerface")


def _cw_scan(rot: Sequence[Dart], start: Dart, allowed: set[int]) -> Dart:
    i = rot.index(start)
    for t in range(1, len(rot) + 1):
        d = rot[(i + t) % len(rot)]
        if d[0] in allowed:
            return d
    raise ValueError("no allowed dart found")


def _sector(rot: Sequence[Dart], frm: Dart, to: Dart) -> list[Dart]:
    """Darts strictly between ``frm`` and ``to`` scanning clockwise."""
    i = rot.index(frm)
    out = []
    for t in range(1, len(rot)):
        d = rot[(i + t) % len(rot)]
        if d == to:
            return out
        out.append(d)
    if frm == to:
        return out
    raise ValueError("target dart not found in rotation")


def blow_up(
    p: PolygonalEmbedding | PlaneGraph, forest: RootedForest
):
    """Replace each forest tree by the cycle of its plane contour.

    Walking clockwise around a tree visits each edge twice; every visit
    becomes a cycle vertex inheriting the non-tree edge-ends of its angular
    sector, and consecutive visits of the same tree vertex are joined by a
    chord inside the cycle.  Contracting the chords undoes the operation.
    """
    g = p.graph if isinstance(p, PolygonalEmbedding) else p
    records: list[BlowupRecord] = []
    steps: list[MinorStep] = []
    for root, tedges in forest.trees:
        es = set(tedges)
        rot = {v: list(r) for v, r in g.rotation.items()}

        _, dep = _walk_darts_at(g, root)
        d = _cw_scan(rot[root], dep, es)
        tour = [d]
        while True:
            head = g.dart_head(d)
            d = _cw_scan(rot[head], rev(d), es)
            if d == tour[0]:
                break
            tour.append(d)
        assert len(tour) == 2 * len(es)

        tails = [g.dart_tail(d) for d in tour]
        nxt_v = g.next_vertex_id()
        copy_id: list[int] = []
        first_seen: set[int] = set()
        for t, w in enumerate(tails):
            if t == 0:
                copy_id.append(root)
                first_seen.add(root)
            elif w not in first_seen:
                copy_id.append(w)
                first_seen.add(w)
            else:
                copy_id.append(nxt_v)
                nxt_v += 1

        nxt_e = g.next_edge_id()
        T = len(tour)
        cyc_eids = list(range(nxt_e, nxt_e + T))
        nxt_e += T

        visits_of: dict[int, list[int]] = {}
        for t, w in enumerate(tails):
            visits_of.setdefault(w, []).append(t)
        chord_eids: list[int] = []
        chord_next: dict[int, tuple[int, int]] = {}  # visit t -> (edge, end) toward next visit
        chord_prev: dict[int, tuple[int, int]] = {}
        for w, vis in visits_of.items():
            for a in range(len(vis) - 1):
                e = nxt_e
                nxt_e += 1
                chord_eids.append(e)
                chord_next[vis[a]] = (e, 0)
                chord_prev[vis[a + 1]] = (e, 1)
                steps.append(MinorStep("contract-edge",
                                       min(copy_id[vis[a]], copy_id[vis[a + 1]]),
                                       max(copy_id[vis[a]], copy_id[vis[a + 1]])))

        new_edges = dict(g.edges)
        for e in es:
            del new_edges[e]
        for t in range(T):
            new_edges[cyc_eids[t]] = (copy_id[t], copy_id[(t + 1) % T])
        for w, vis in visits_of.items():
            for a in range(len(vis) - 1):
                e = chord_next[vis[a]][0]
                new_edges[e] = (copy_id[vis[a]], copy_id[vis[a + 1]])

        new_rot = {v: list(r) for v, r in g.rotation.items()}
        for w in visits_of:
            del new_rot[w]
        sectors: list[list[Dart]] = []
        for t in range(T):
            w = tails[t]
            sec = _sector(g.rotation[w], rev(tour[t - 1]), tour[t])
            sec = [d for d in sec if d[0] not in es]
            sectors.append(sec)
        # the anchor sector must carry both outerface darts of the root
        arr0, dep0 = _walk_darts_at(g, root)
        assert rev(arr0) in sectors[0] and dep0 in sectors[0]

        for t in range(T):
            c = copy_id[t]
            r_list: list[Dart] = [(cyc_eids[t - 1], 1)]
            r_list.extend(sectors[t])
            r_list.append((cyc_eids[t], 0))
            if t in chord_next:
                r_list.append(chord_next[t])
            if t in chord_prev:
                r_list.append(chord_prev[t])
            new_rot[c] = r_list
            for d in sectors[t]:
                e, s = d
                uv = list(new_edges[e])
                uv[s] = c
                new_edges[e] = tuple(uv)

        new_vertices = [v for v in g.vertices if v not in visits_of or v in first_seen]
        new_vertices.extend(cid for t, cid in enumerate(copy_id)
                            if cid >= g.next_vertex_id())
        g = PlaneGraph(
            vertices=tuple(new_vertices),
            edges=new_edges,
            rotation={v: tuple(r) for v, r in new_rot.items()},
            outerface=g.outerface,
        )
        records.append(BlowupRecord(
            anchor=root,
            cycle=tuple(copy_id),
            cycle_edges=tuple(cyc_eids),
            chords=tuple(chord_eids),
        ))
    if isinstance(p, PolygonalEmbedding):
        return PolygonalEmbedding(g, p.border, p.sides, p.signature), records, steps
    return g, records, steps


# ---------------------------------------------------------------------------
# anchor splitting


@dataclass(frozen=True)
class AnchorSplit:
    """An anchor vertex split into an outerface edge."""

    kept: int                    # keeps the anchor's id
    added: int                   # new endpoint of the anchor edge
    anchor_edge: int
    path: tuple[int, ...]        # contour path from kept to added
    path_edges: tuple[int, ...]
    chords: tuple[int, ...]      # inside edges carried along (blow-up chords)
    twin_edge: int = -1          # set by the twin-splitting wrapper
    twin_pair: tuple[int, int] = (-1, -1)   # (subdivided side vertex, new vertex)


def _split_one_anchor(g: PlaneGraph, rec: BlowupRecord) -> tuple[PlaneGraph, AnchorSplit]:
    a = rec.anchor
    arr, dep = _walk_darts_at(g, a)
    dart_u, dart_v = rev(arr), dep
    rot = list(g.rotation[a])
    i0 = rot.index(dart_u)
    ordered = rot[i0:] + rot[:i0]
    assert ordered[1] == dart_v, "outerface wedge must be clockwise-adjacent"

    ci = (rec.cycle_edges[-1], 1)   # cycle edge arriving from the last visit
    co = (rec.cycle_edges[0], 0)    # cycle edge leaving toward the first visit
    assert g.dart_tail(ci) == a and g.dart_tail(co) == a
    idx_ci = ordered.index(ci)
    assert co in ordered[2:idx_ci], "cycle exit must sit on the far side of the wedge"
    a2 = g.next_vertex_id()
    ne = g.next_edge_id()

    moved = [dart_v] + ordered[2:idx_ci]
    rot_a1 = [ci] + ordered[idx_ci + 1:] + [dart_u, (ne, 0)]
    rot_a2 = [(ne, 1)] + moved

    edges = dict(g.edges)
    edges[ne] = (a, a2)
    for e, s in moved:
        uv = list(edges[e])
        uv[s] = a2
        edges[e] = tuple(uv)
    rotation = {v: list(r) for v, r in g.rotation.items()}
    rotation[a] = rot_a1
    rotation[a2] = rot_a2

    outer = []
    for d in g.outerface:
        outer.append(d)
        if d == arr:
            outer.append((ne, 0))
    g2 = PlaneGraph(
        vertices=tuple(list(g.vertices) + [a2]),
        edges=edges,
        rotation={v: tuple(r) for v, r in rotation.items()},
        outerface=tuple(outer),
    )
    interior = tuple(reversed(rec.cycle[1:]))
    path_edges = tuple(reversed(rec.cycle_edges))
    split = AnchorSplit(
        kept=a,
        added=a2,
        anchor_edge=ne,
        path=(a,) + interior + (a2,),
        path_edges=path_edges,
        chords=rec.chords,
    )
    return g2, split


def split_anchors(
    g1: PlaneGraph, records: Sequence[BlowupRecord]
) -> tuple[PlaneGraph, list[AnchorSplit], list[MinorStep], list[int]]:
    """Split every anchor into an edge lying on the outerface.

    Returns the new graph, the split records, the undo steps, and the
    Hamiltonian cycle obtained by walking the outerface and detouring
    through each contour path instead of its anchor edge.
    """
    g = g1
    splits: list[AnchorSplit] = []
    steps: list[MinorStep] = []
    for rec in records:
        g, split = _split_one_anchor(g, rec)
        splits.append(split)
        steps.append(MinorStep("contract-edge", split.kept, split.added))
    interiors = {s.kept: list(s.path[1:-1]) for s in splits}
    added_of = {s.kept: s.added for s in splits}
    ham: list[int] = []
    walk = g.outer_vertices()
    for i, v in enumerate(walk):
        ham.append(v)
        if v in interiors and walk[(i + 1) % len(walk)] == added_of[v]:
            ham.extend(interiors[v])
    return g, splits, steps, ham


# ---------------------------------------------------------------------------
# twin splitting


def _side_index_of(p: PolygonalEmbedding, v: int) -> tuple[int, int]:
    for i, s in enumerate(p.sides):
        if v in s:
            return i, s.index(v)
    raise ValueError(f"{v} is not a side vertex")


def _walk_neighbors(p: PolygonalEmbedding, v: int) -> tuple[int, int]:
    cyc = p.outer_cycle()
    i = cyc.index(v)
    return cyc[i - 1], cyc[(i + 1) % len(cyc)]


def _outer_edge_between(g: PlaneGraph, u: int, v: int) -> int:
    for d in g.outerface:
        if {g.dart_tail(d), g.dart_head(d)} == {u, v}:
            return d[0]
    raise ValueError(f"no outerface edge between {u} and {v}")


def twin_split_all(
    p1: PolygonalEmbedding, records: Sequence[BlowupRecord]
) -> tuple[PolygonalEmbedding, list[AnchorSplit], list[MinorStep]]:
    """Split all anchors, mirroring each split by a twin-edge subdivision.

    For an anchor between outerface neighbours ``u < a < v`` (in outerface
    rank from the first corner) with twins ``x, b, y``, the edge ``b-y`` is
    subdivided when ``a < b`` or ``y < b``, otherwise ``x-b`` is; either way
    the fresh edge at ``b`` becomes the positional twin of the new anchor
    edge.  An anchor edge is never subdivided and never twinned with
    another anchor edge; both facts are asserted.
    """
    p = p1
    rank0 = p1.rank()
    order = sorted(records, key=lambda rec: rank0[rec.anchor])
    splits: list[AnchorSplit] = []
    steps: list[MinorStep] = []
    anchor_edges: set[int] = set()
    for rec in order:
        a = rec.anchor
        rank = p.rank()
        pv, nx = _walk_neighbors(p, a)
        u, v = (pv, nx) if rank[pv] < rank[nx] else (nx, pv)
        tw = derive_twins(p)
        b = tw.vertex_twins[a]
        side_i, _ = _side_index_of(p, a)
        side_j, posb = _side_index_of(p, b)
        same = next(s for i2, j2, s in p.signature.side_pairs()
                    if {i2, j2} == {side_i, side_j})
        bp, bn = _walk_neighbors(p, b)
        v_is_next = (v == nx)
        if same == v_is_next:
            y, x = bn, bp
        else:
            y, x = bp, bn
        if rank[a] < rank[b] or rank[y] < rank[b]:
            sub_u, sub_v = b, y
        else:
            sub_u, sub_v = x, b
        e_sub = _outer_edge_between(p.graph, sub_u, sub_v)
        if e_sub in anchor_edges:
            raise EdgeAnchorViolation(f"anchor edge {e_sub} would be subdivided")

        g, s_new, e2 = subdivide_edge(p.graph, e_sub)
        # the subdivision splits e_sub=(q0,q1) into q0-s (keeps the id) and s-q1
        q0, _q1 = p.graph.edges[e_sub]
        bs_edge = e_sub if q0 == b else e2

        sides = [list(s) for s in p.sides]
        other = sub_u if sub_v == b else sub_v
        jb = sides[side_j].index(b)
        walkpos = p.rank()
        n_outer = len(walkpos)
        if walkpos[other] == (walkpos[b] + 1) % n_outer:
            sides[side_j].insert(jb + 1, s_new)   # s sits clockwise after b
        else:
            sides[side_j].insert(jb, s_new)

        pg = PolygonalEmbedding(g, p.border, tuple(tuple(s) for s in sides), p.signature)
        g2, split = _split_one_anchor(pg.graph, rec)
        sides2 = [list(s) for s in pg.sides]
        ia = sides2[side_i].index(a)
        sides2[side_i].insert(ia + 1, split.added)
        p = PolygonalEmbedding(g2, p.border, tuple(tuple(s) for s in sides2), p.signature)

        tw2 = derive_twins(p)
        if tw2.edge_twins.get(split.anchor_edge) != bs_edge:
            raise EdgeAnchorViolation(
                f"anchor edge {split.anchor_edge} twinned with "
                f"{tw2.edge_twins.get(split.anchor_edge)}, expected {bs_edge}")
        if bs_edge in anchor_edges:
            raise EdgeAnchorViolation("two anchor edges became twins")
        anchor_edges.add(split.anchor_edge)
        split = AnchorSplit(
            kept=split.kept, added=split.added, anchor_edge=split.anchor_edge,
            path=split.path, path_edges=split.path_edges, chords=split.chords,
            twin_edge=bs_edge, twin_pair=(b, s_new))
        splits.append(split)
        steps.append(MinorStep("contract-edge", split.kept, split.added))
        steps.append(MinorStep("contract-edge", b, s_new))
    return p, splits, steps


# ---------------------------------------------------------------------------
# swapping


def _insert_block(rot: list[Dart], at: Dart, block: list[Dart], after: bool) -> list[Dart]:
    i = rot.index(at)
    if after:
        return rot[: i + 1] + block + rot[i + 1:]
    return rot[:i] + block + rot[i:]


def swap_all(
    p2: PolygonalEmbedding, splits: Sequence[AnchorSplit]
) -> tuple[PolygonalEmbedding, list[MinorStep]]:
    """Move each contour path onto the outerface, copying it to the twin side.

    The anchor edge and the inside chords are deleted, which extends the
    anchor's side by the contour path; a fresh copy of the path and chords
    is attached around the twin edge, which becomes an inner edge.  The
    sewing is unchanged as an abstract graph, so no undo steps are needed.
    """
    p = p2
    for sp in splits:
        g = p.graph
        tw = derive_twins(p)
        b1 = tw.vertex_twins[sp.kept]
        b2 = tw.vertex_twins[sp.added]
        ebs = tw.edge_twins[sp.anchor_edge]
        assert set(g.edges[ebs]) == {b1, b2}
        interior = list(sp.path[1:-1])
        allowed = set(interior) | {sp.added}
        for e in sp.chords:
            assert set(g.edges[e]) <= allowed, "chords must stay inside the contour"

        keep_dart = next(d for d in g.outerface
                         if d[0] != sp.anchor_edge and g.dart_tail(d) == p.border[0])
        g = delete_edges(g, [sp.anchor_edge, *sp.chords])
        outer = outerface_of(g, keep_dart)
        g = PlaneGraph(g.vertices, g.edges, g.rotation, outer)

        ebs_dart = next(d for d in outer if d[0] == ebs)
        first, second = g.dart_tail(ebs_dart), g.dart_head(ebs_dart)
        if first == b1:
            originals = [sp.kept] + interior + [sp.added]
        else:
            assert first == b2
            originals = [sp.added] + list(reversed(interior)) + [sp.kept]
        nxt_v = g.next_vertex_id()
        copy_of: dict[int, int] = {originals[0]: first, originals[-1]: second}
        nodes = [first]
        for w in originals[1:-1]:
            copy_of[w] = nxt_v
            nodes.append(nxt_v)
            nxt_v += 1
        nodes.append(second)
        T = len(nodes)

        nxt_e = g.next_edge_id()
        edges = dict(g.edges)
        rot = {v: list(r) for v, r in g.rotation.items()}
        incident: dict[int, list[tuple[int, Dart]]] = {t: [] for t in range(T)}
        pos = {v: t for t, v in enumerate(nodes)}
        for t in range(T - 1):
            e = nxt_e
            nxt_e += 1
            edges[e] = (nodes[t], nodes[t + 1])
            incident[t].append(((t + 1) % T, (e, 0)))
            incident[t + 1].append((t, (e, 1)))
        incident[0].append((T - 1, ebs_dart))
        incident[T - 1].append((0, rev(ebs_dart)))
        for ce in sp.chords:
            cu, cv = p.graph.edges[ce]
            pu, pv = pos[copy_of[cu]], pos[copy_of[cv]]
            e = nxt_e
            nxt_e += 1
            edges[e] = (nodes[pu], nodes[pv])
            incident[pu].append((pv, (e, 0)))
            incident[pv].append((pu, (e, 1)))

        def ordered_darts(t: int) -> list[Dart]:
            items = sorted(incident[t], key=lambda it: (it[0] - t - 1) % T)
            return [d for _, d in items]

        for t in range(1, T - 1):
            rot[nodes[t]] = ordered_darts(t)
        block_first = [d for d in ordered_darts(0) if d != ebs_dart]
        rot[first] = _insert_block(rot[first], ebs_dart, block_first, after=False)
        block_second = [d for d in ordered_darts(T - 1) if d != rev(ebs_dart)]
        rot[second] = _insert_block(rot[second], rev(ebs_dart), block_second, after=True)

        g = PlaneGraph(
            vertices=tuple(list(g.vertices) + nodes[1:-1]),
            edges=edges,
            rotation={v: tuple(r) for v, r in rot.items()},
            outerface=(),
        )
        outer = outerface_of(g, keep_dart)
        g = PlaneGraph(g.vertices, g.edges, g.rotation, outer)

        sides = [list(s) for s in p.sides]
        side_i, _ = _side_index_of(p, sp.kept)
        side_j, _ = _side_index_of(p, b1)
        ia = sides[side_i].index(sp.kept)
        assert sides[side_i][ia + 1] == sp.added
        sides[side_i][ia + 1:ia + 1] = interior
        jfirst = sides[side_j].index(first)
        assert sides[side_j][jfirst + 1] == second
        sides[side_j][jfirst + 1:jfirst + 1] = nodes[1:-1]
        p = PolygonalEmbedding(g, p.border, tuple(tuple(s) for s in sides), p.signature)
    return p, []


# ---------------------------------------------------------------------------
# sewn-level witnesses and the full pipeline


Witness = dict[int, frozenset]


def witness_from_contractions(
    s_in: SewnGraph, s_out: SewnGraph, pairs: Iterable[tuple[int, int]]
) -> Witness:
    """Branch sets in the output sewing that contract back to the input one."""
    parent = {v: v for v in s_out.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for kept, gone in pairs:
        a, b = find(s_out.projection[kept]), find(s_out.projection[gone])
        if a != b:
            parent[max(a, b)] = min(a, b)
    classes: dict[int, set[int]] = {}
    for v in s_out.vertices:
        classes.setdefault(find(v), set()).add(v)
    assert set(classes) == set(s_in.vertices), "contracted classes must match the input sewing"
    return {rep: frozenset(members) for rep, members in classes.items()}


def compose_witness(w1: Witness, w2: Witness) -> Witness:
    """Witness of h in k from witnesses of h in g and of g in k."""
    return {h: frozenset().union(*(w2[g] for g in members))
            for h, members in w1.items()}


@dataclass(frozen=True)
class OuterplanarizeResult:
    guarded: PolygonalEmbedding
    triangulated: PolygonalEmbedding
    forest: RootedForest
    blown: PolygonalEmbedding
    records: tuple[BlowupRecord, ...]
    split: PolygonalEmbedding
    splits: tuple[AnchorSplit, ...]
    swapped: PolygonalEmbedding
    steps: dict[str, tuple[MinorStep, ...]]
    witness: Witness


def outerplanarize_full(p: PolygonalEmbedding) -> OuterplanarizeResult:
    pg, guard_steps = guard_corners(p)
    pt, tri_steps = triangulate_inner(pg)
    forest = _spanning_forest_graph(pt.graph, pt.graph.outer_vertices())
    p1, records, blow_steps = blow_up(pt, forest)
    p2, splits, split_steps = twin_split_all(p1, records)
    p3, swap_steps = swap_all(p2, splits)

    s0 = sew(p)
    s1 = sew(p1)
    s2 = sew(p2)
    s3 = sew(p3)
    if not edge_sets_equal(s2, s3):
        raise AssertionError("swapping must preserve the sewn graph")

    w_blow = witness_from_contractions(
        s0, s1, [(st.a, st.b) for st in blow_steps])
    w_split = witness_from_contractions(
        s1, s2, [(st.a, st.b) for st in split_steps])
    w_swap = {v: frozenset([v]) for v in s3.vertices}
    witness = compose_witness(compose_witness(w_blow, w_split), w_swap)
    return OuterplanarizeResult(
        guarded=pg, triangulated=pt, forest=forest, blown=p1,
        records=tuple(records), split=p2, splits=tuple(splits), swapped=p3,
        steps={
            "guard": tuple(guard_steps),
            "triangulate": tuple(tri_steps),
            "blow_up": tuple(blow_steps),
            "split": tuple(split_steps),
            "swap": tuple(swap_steps),
        },
        witness=witness,
    )


def outerplanarize(p: PolygonalEmbedding) -> tuple[PolygonalEmbedding, Witness]:
    res = outerplanarize_full(p)
    return res.swapped, res.witness


# ---------------------------------------------------------------------------
# Hamiltonian majors of plane graphs


@dataclass(frozen=True)
class HamiltonianMajorResult:
    graph: PlaneGraph
    cycle: tuple[int, ...]
    steps: tuple[MinorStep, ...]


def hamiltonian_major(g: PlaneGraph, circuit: Sequence[int]) -> HamiltonianMajorResult:
    """A planar Hamiltonian major of ``g`` with at most 2n - k vertices.

    ``circuit`` must be a cycle whose removal-side is empty in some
    embedding: after stripping the chords between circuit vertices the
    circuit must bound a face, which is then used as the outerface.
    """
    k = len(circuit)
    if k < 1:
        raise TooSmallCircuit("circuit needs at least one vertex")
    if k < 3:
        # too short to bound a disc: triangulate everything and restart from
        # a triangle face, undoing the added chords afterwards
        steps: list[MinorStep] = []
        gt = _triangulate_faces(g, set(), steps, include_outer=True)
        tri_faces = [f for f in trace_faces(gt) if len(f) == 3]
        if not tri_faces:
            raise TooSmallCircuit("graph too small to grow a triangle circuit")
        face = tri_faces[0]
        inner = hamiltonian_major(gt, [gt.dart_tail(d) for d in face])
        return HamiltonianMajorResult(inner.graph, inner.cycle,
                                      inner.steps + tuple(steps))

    cset = set(circuit)
    if len(cset) != k:
        raise ValueError("circuit repeats a vertex")
    ring: set[frozenset] = {frozenset((circuit[i], circuit[(i + 1) % k]))
                            for i in range(k)}
    ring_eids: set[int] = set()
    chords: list[int] = []
    for e, (u, v) in sorted(g.edges.items()):
        if u in cset and v in cset:
            pq = frozenset((u, v))
            if pq in ring and not any(frozenset(g.edges[r]) == pq for r in ring_eids):
                ring_eids.add(e)
            else:
                chords.append(e)
    if len(ring_eids) != k:
        raise SeparatingCircuit("the circuit is not a cycle of the graph")

    g2 = delete_edges(g, chords)
    target = canonical_cycle(sorted(cset))
    face = None
    for f in trace_faces(g2):
        if len(f) == k and canonical_cycle(sorted(g2.dart_tail(d) for d in f)) == target \
                and {d[0] for d in f} == ring_eids:
            face = f
            break
    if face is None:
        raise SeparatingCircuit("circuit does not bound a face after removing its chords")
    g2 = PlaneGraph(g2.vertices, g2.edges, g2.rotation, face)

    # chords that fit on the body side go back in now; the rest stay outside
    # the circuit and are re-embedded after the reduction
    outside: list[int] = []
    for e in chords:
        u, v = g.edges[e]
        placed = False
        for f in trace_faces(g2):
            if canonical_cycle(f) == canonical_cycle(g2.outerface):
                continue
            tails = [g2.dart_tail(d) for d in f]
            if u in tails and v in tails:
                g2, _ = add_edge_in_face(g2, f[tails.index(u)], f[tails.index(v)])
                placed = True
                break
        if not placed:
            outside.append(e)
    chords = outside

    forest = _spanning_forest_graph(g2, [g2.dart_tail(d) for d in face])
    g3, records, blow_steps = blow_up(g2, forest)
    g4, _splits, split_steps, ham = split_anchors(g3, records)

    for e in chords:
        u, v = g.edges[e]
        placed = False
        for f in trace_faces(g4):
            tails = [g4.dart_tail(d) for d in f]
            if u in tails and v in tails:
                g4, _ = add_edge_in_face(g4, f[tails.index(u)], f[tails.index(v)])
                placed = True
                break
        if not placed:
            raise SeparatingCircuit(f"cannot re-embed chord {u}-{v}")
    steps = tuple(split_steps) + tuple(blow_steps)
    return HamiltonianMajorResult(g4, tuple(ham), steps)
