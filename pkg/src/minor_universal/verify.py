"""Independent checkers for minor witnesses and Hamiltonian majors.

Nothing here reuses the construction code paths: checks work directly on
the abstract (vertices, edge pairs) view so they can referee the builders.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .polygonal import PolygonalEmbedding, sew


@dataclass(frozen=True)
class WitnessViolation:
    kind: str      # "EmptyBranch" | "Overlap" | "DisconnectedBranch" | "MissingEdge"
    detail: str


class TooLarge(ValueError):
    """The instance exceeds the brute-force size cap."""


def _abstract(g) -> tuple[set[int], set[frozenset]]:
    # self-loops (edges glued onto one vertex) carry no minor information
    return set(g.vertex_set()), {pq for pq in g.edge_pairs() if len(pq) == 2}


def verify_witness(minor, major, witness: Mapping[int, frozenset]) -> list[WitnessViolation]:
    """Check branch sets: non-empty, disjoint, connected, edges realized.

    Runs in time linear in the major's size plus the witness size.
    """
    h_verts, h_pairs = _abstract(minor)
    g_verts, g_pairs = _abstract(major)
    out: list[WitnessViolation] = []

    if set(witness) != h_verts:
        missing = h_verts - set(witness)
        extra = set(witness) - h_verts
        out.append(WitnessViolation(
            "EmptyBranch", f"branch keys mismatch: missing={sorted(missing)} extra={sorted(extra)}"))
        return out

    owner: dict[int, int] = {}
    for h, branch in witness.items():
        if not branch:
            out.append(WitnessViolation("EmptyBranch", f"branch of {h} is empty"))
            continue
        for v in branch:
            if v not in g_verts:
                out.append(WitnessViolation(
                    "EmptyBranch", f"branch of {h} uses unknown vertex {v}"))
            elif v in owner:
                out.append(WitnessViolation(
                    "Overlap", f"vertex {v} lies in branches of {owner[v]} and {h}"))
            else:
                owner[v] = h

    adj: dict[int, list[int]] = {}
    for pq in g_pairs:
        u, v = tuple(pq)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for h, branch in witness.items():
        if not branch:
            continue
        start = next(iter(branch))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for w in adj.get(x, ()):
                if w in branch and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != set(branch):
            out.append(WitnessViolation(
                "DisconnectedBranch",
                f"branch of {h} splits into {sorted(seen)} vs {sorted(set(branch) - seen)}"))

    # one sweep over the major's edges collects all realized minor pairs
    realized: set[frozenset] = set()
    for pq in g_pairs:
        u, v = tuple(pq)
        hu, hv = owner.get(u), owner.get(v)
        if hu is not None and hv is not None and hu != hv:
            realized.add(frozenset((hu, hv)))
    for pq in sorted(h_pairs, key=sorted):
        if pq not in realized:
            u, v = sorted(pq)
            out.append(WitnessViolation("MissingEdge", f"minor edge {u}-{v} is not realized"))
    return out


def restrict_witness(witness: Mapping[int, frozenset], major) -> dict[int, frozenset]:
    """Drop branch vertices absent from the major (useful after pruning)."""
    keep = set(major.vertex_set())
    return {h: frozenset(b & keep) for h, b in witness.items()}


def is_minor_bruteforce(minor, major) -> bool:
    """Exhaustive minor test for tiny instances (<= 7 / <= 14 vertices)."""
    h_verts, h_pairs = _abstract(minor)
    g_verts, g_pairs = _abstract(major)
    if len(h_verts) > 7 or len(g_verts) > 14:
        raise TooLarge(f"brute force capped at 7/14 vertices, got {len(h_verts)}/{len(g_verts)}")
    if len(h_verts) > len(g_verts):
        return False

    hv = sorted(h_verts)
    adj: dict[int, set[int]] = {v: set() for v in g_verts}
    for pq in g_pairs:
        u, v = tuple(pq)
        adj[u].add(v)
        adj[v].add(u)

    def connected(sub: frozenset) -> bool:
        start = next(iter(sub))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()] & sub:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(sub)

    def touches(s1: frozenset, s2: frozenset) -> bool:
        return any(adj[x] & s2 for x in s1)

    gv = sorted(g_verts)

    def extend(i: int, used: set[int], branches: list[frozenset]) -> bool:
        if i == len(hv):
            return True
        h = hv[i]
        need = [hv.index(x) for x in h_verts
                if frozenset((h, x)) in h_pairs and hv.index(x) < i]
        free = [v for v in gv if v not in used]
        # grow candidate connected subsets from each seed
        for r in range(1, len(free) + 1):
            for combo in combinations(free, r):
                sub = frozenset(combo)
                if not connected(sub):
                    continue
                if any(not touches(sub, branches[j]) for j in need):
                    continue
                branches.append(sub)
                if extend(i + 1, used | sub, branches):
                    return True
                branches.pop()
        return False

    return extend(0, set(), [])


def verify_hamiltonian(g, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` visits every vertex once along edges of ``g``."""
    verts, pairs = _abstract(g)
    if len(cycle) != len(verts) or set(cycle) != verts:
        return False
    if len(cycle) < 3:
        return False
    return all(frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) in pairs
               for i in range(len(cycle)))


def verify_p_minor(
    small: PolygonalEmbedding, big: PolygonalEmbedding,
    witness: Mapping[int, frozenset],
) -> list[WitnessViolation]:
    """Check that ``small`` is a polygonal minor of ``big``: both carry the
    same signature and the witness realizes sew(small) inside sew(big)."""
    out: list[WitnessViolation] = []
    if small.signature.tokens() != big.signature.tokens():
        out.append(WitnessViolation(
            "SignatureMismatch",
            f"signatures differ: {small.signature.tokens()} vs {big.signature.tokens()}"))
    out.extend(verify_witness(sew(small), sew(big), witness))
    return out
