"""Shared test utilities: abstract graph shim and the random fixture suite."""
from __future__ import annotations

from itertools import combinations

from minor_universal.polygonal import Signature


class Abstract:
    """Bare (vertices, edge pairs) view for the independent checkers."""

    def __init__(self, vertices, pairs):
        self._v = set(vertices)
        self._p = {frozenset(pq) for pq in pairs}

    def vertex_set(self):
        return set(self._v)

    def edge_pairs(self):
        return set(self._p)


def complete(n: int, offset: int = 0) -> Abstract:
    vs = range(offset, offset + n)
    return Abstract(vs, combinations(vs, 2))


def induced(g, keep) -> Abstract:
    keep = set(keep)
    return Abstract(keep, (pq for pq in g.edge_pairs() if pq <= keep))


# Deterministic suite of random inner-triangulated polygonal embeddings.
# Polygons over a 2-letter signature need m >= 2 before an interior vertex
# can sit in a corner-free triangle, hence the per-signature minimum.
_SIGS = [("a0 ~a0", 2), ("a1 a1", 2), ("a1 a2 ~a1 ~a2", 1), ("a1 a2 a1 a2", 1)]

SUITE: list[tuple[str, int, int, int]] = []   # (signature tokens, m, n, seed)
_i = 0
while len(SUITE) < 208:
    _toks, _mmin = _SIGS[_i % 4]
    SUITE.append((_toks, _mmin + (_i // 4) % (6 - _mmin), 1 + (_i * 7) % 15, _i))
    _i += 1

SUITE_IDS = [f"{toks.replace(' ', '')}-m{m}-n{n}-s{seed}"
             for toks, m, n, seed in SUITE]


def suite_embedding(i: int):
    from minor_universal.fixtures import random_triangulated
    toks, m, n, seed = SUITE[i]
    return random_triangulated(Signature.parse(toks.split()), m, n, seed)
