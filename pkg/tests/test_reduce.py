"""Reduction pipeline: guard, triangulate, forest, blow-up, split, swap."""
import pytest

from minor_universal.fixtures import (
    octahedron,
    stacked_circuit,
    stacked_triangulation,
    tree_fixture,
)
from minor_universal.graphcore import edge_sets_equal, euler_characteristic_check, trace_faces
from minor_universal.polygonal import sew, sewn_genus, validate
from minor_universal.reduce import (
    MinorStep,
    blow_up,
    guard_corners,
    hamiltonian_major,
    outerplanarize,
    outerplanarize_full,
    replay_matches,
    replay_steps,
    spanning_forest,
    split_anchors,
    triangulate_inner,
    witness_from_contractions,
)
from minor_universal.verify import verify_hamiltonian, verify_p_minor, verify_witness

from helpers import SUITE_IDS, suite_embedding


@pytest.fixture(scope="module")
def tree():
    return tree_fixture()


def test_guard_corners_puts_triangles_at_corners(tree):
    g1, steps = guard_corners(tree)
    assert validate(g1) == []
    assert g1.measured_size() == tree.measured_size()
    assert sewn_genus(g1) == sewn_genus(tree)
    # every corner now closes a triangle with its two outer neighbours
    cyc = g1.outer_cycle()
    pairs = g1.graph.edge_pairs()
    for c in g1.corners():
        i = cyc.index(c)
        assert frozenset((cyc[i - 1], cyc[(i + 1) % len(cyc)])) in pairs
    # guard edges are pure additions: nothing to replay
    assert steps == [] or all("-" in s.kind for s in steps)


def test_triangulate_inner_faces(tree):
    g1, _ = guard_corners(tree)
    g2, steps = triangulate_inner(g1)
    assert validate(g2) == []
    faces = [f for f in trace_faces(g2.graph)
             if {d for d in f} != {d for d in g2.graph.outerface}]
    assert all(len(f) == 3 for f in faces)
    # chords are pure additions between existing vertices
    assert steps == [] or all("-" in s.kind for s in steps)


def test_spanning_forest_covers_interior(tree):
    g1, _ = guard_corners(tree)
    g2, _ = triangulate_inner(g1)
    forest = spanning_forest(g2)
    internal = set(g2.graph.vertices) - set(g2.outer_cycle())
    covered = set()
    corners = g2.corners()
    for root, eids in forest.trees:
        assert root in set(g2.outer_cycle()) - corners
        verts = {v for e in eids for v in g2.graph.edges[e]}
        assert root in verts
        covered |= verts - {root}
    assert covered == internal
    # tree edge counts: |tree| = internal vertices it owns
    assert forest.edge_count() == len(internal)


def test_blow_up_internal_count(tree):
    g1, _ = guard_corners(tree)
    g2, _ = triangulate_inner(g1)
    forest = spanning_forest(g2)
    n = len(set(g2.graph.vertices) - set(g2.outer_cycle()))
    k = len(forest.trees)
    g3, records, steps = blow_up(g2, forest)
    assert validate(g3) == []
    m0, n0 = tree.measured_size()
    assert g3.measured_size() == (m0, 2 * n - k)
    assert len(records) == k
    # replaying the contraction steps merges each cycle back to its tree
    assert all(s.kind == "contract-edge" for s in steps)


def test_split_anchors_hamiltonian(tree):
    g1, _ = guard_corners(tree)
    g2, _ = triangulate_inner(g1)
    forest = spanning_forest(g2)
    g3, records, _ = blow_up(g2, forest)
    n = len(set(g2.graph.vertices) - set(g2.outer_cycle()))
    g4, splits, steps, ham = split_anchors(g3.graph, records)
    assert len(g4.vertices) == len(g3.graph.vertices) + len(records)
    outer_count = len(g2.outer_cycle())
    assert len(g4.vertices) == outer_count + 2 * n
    assert len(set(ham)) == len(g4.vertices)
    assert verify_hamiltonian(g4, ham)


def test_outerplanarize_end_to_end(tree):
    res = outerplanarize_full(tree)
    m, n = tree.measured_size()
    assert res.swapped.measured_size()[1] == 0
    assert res.swapped.measured_size()[0] <= m + 2 * n
    for stage in (res.guarded, res.triangulated, res.blown, res.split, res.swapped):
        assert validate(stage) == []
    assert edge_sets_equal(sew(res.split), sew(res.swapped))
    assert verify_p_minor(tree, res.swapped, res.witness) == []
    # convenience wrapper agrees
    p3, w = outerplanarize(tree)
    assert p3.measured_size() == res.swapped.measured_size()
    assert verify_p_minor(tree, p3, w) == []


@pytest.mark.parametrize("i", [0, 17, 101, 202], ids=lambda i: SUITE_IDS[i])
def test_outerplanarize_random(i):
    p = suite_embedding(i)
    res = outerplanarize_full(p)
    assert res.swapped.measured_size()[1] == 0
    assert verify_p_minor(p, res.swapped, res.witness) == []


class TestReplay:
    def test_contract_then_delete(self):
        g = octahedron()
        steps = [MinorStep("contract-edge", 0, 3), MinorStep("delete-edge", 1, 2)]
        verts, pairs = replay_steps(g, steps)
        assert {0, 3} not in [set(p) for p in pairs]
        assert frozenset((1, 2)) not in pairs
        # contracted class is represented by its minimum id
        assert 0 in verts and 3 not in verts

    def test_witness_from_contractions(self):
        g = octahedron()
        s_full = sew_like(g)
        w = witness_from_contractions(s_full, s_full, [])
        assert set(w) == set(g.vertices)
        assert all(w[v] == frozenset((v,)) for v in g.vertices)


def sew_like(g):
    """Abstract stand-in with the projection interface of a sewn graph."""
    class S:
        vertices = g.vertices
        projection = {v: v for v in g.vertices}

        def vertex_set(self):
            return set(g.vertices)

        def edge_pairs(self):
            return g.edge_pairs()
    return S()


class TestHamiltonianMajor:
    def test_octahedron(self):
        g = octahedron()
        circuit = [0, 5, 1, 2]   # outer triangle grown by the apex of one face
        res = hamiltonian_major(g, circuit)
        assert len(res.graph.vertices) <= 2 * len(g.vertices) - 4
        assert euler_characteristic_check(res.graph) == 0
        assert verify_hamiltonian(res.graph, res.cycle)
        assert replay_matches(res.graph, g, res.steps)

    @pytest.mark.parametrize("seed", range(6))
    def test_stacked(self, seed):
        g = stacked_triangulation(5, seed)
        res = hamiltonian_major(g, stacked_circuit(g))
        n = len(g.vertices)
        assert len(res.graph.vertices) <= 2 * n - 4
        assert euler_characteristic_check(res.graph) == 0
        assert verify_hamiltonian(res.graph, res.cycle)
        assert replay_matches(res.graph, g, res.steps)
