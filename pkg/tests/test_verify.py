"""Independent witness checking and the brute-force minor oracle."""
import pytest

from minor_universal.fixtures import octahedron
from minor_universal.verify import (
    TooLarge,
    is_minor_bruteforce,
    restrict_witness,
    verify_hamiltonian,
    verify_witness,
)

from helpers import Abstract, complete, induced

PATH4 = Abstract(range(4), [(0, 1), (1, 2), (2, 3)])
CYCLE4 = Abstract(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])


class TestVerifyWitness:
    def test_identity_accepted(self):
        w = {v: frozenset((v,)) for v in range(4)}
        assert verify_witness(CYCLE4, CYCLE4, w) == []

    def test_contraction_accepted(self):
        tri = Abstract(range(3), [(0, 1), (1, 2), (2, 0)])
        w = {0: frozenset((0,)), 1: frozenset((1,)), 2: frozenset((2, 3))}
        assert verify_witness(tri, CYCLE4, w) == []

    def test_empty_branch(self):
        w = {0: frozenset(), 1: frozenset((1,)), 2: frozenset((2,)), 3: frozenset((3,))}
        kinds = {v.kind for v in verify_witness(PATH4, PATH4, w)}
        assert "EmptyBranch" in kinds

    def test_overlap(self):
        w = {0: frozenset((0, 1)), 1: frozenset((1,)), 2: frozenset((2,)), 3: frozenset((3,))}
        kinds = {v.kind for v in verify_witness(PATH4, PATH4, w)}
        assert "Overlap" in kinds

    def test_disconnected_branch(self):
        tri = Abstract(range(3), [(0, 1), (1, 2), (2, 0)])
        w = {0: frozenset((0, 2)), 1: frozenset((1,)), 2: frozenset((3,))}
        kinds = {v.kind for v in verify_witness(tri, PATH4, w)}
        assert "DisconnectedBranch" in kinds

    def test_missing_edge(self):
        w = {v: frozenset((v,)) for v in range(4)}
        out = verify_witness(CYCLE4, PATH4, w)
        assert [v.kind for v in out] == ["MissingEdge"]

    def test_key_mismatch(self):
        w = {0: frozenset((0,))}
        kinds = {v.kind for v in verify_witness(PATH4, PATH4, w)}
        assert "EmptyBranch" in kinds


class TestBruteForce:
    def test_k4_minor_of_k4(self):
        assert is_minor_bruteforce(complete(4), complete(4))

    def test_k4_minor_of_octahedron(self):
        assert is_minor_bruteforce(complete(4), octahedron())

    def test_k5_not_minor_of_octahedron(self):
        # the octahedron is planar, K5 is not
        assert not is_minor_bruteforce(complete(5), octahedron())

    def test_cycle_not_minor_of_path(self):
        assert not is_minor_bruteforce(CYCLE4, PATH4)

    def test_minor_larger_than_major(self):
        assert not is_minor_bruteforce(complete(5), complete(4))

    def test_size_caps(self):
        with pytest.raises(TooLarge):
            is_minor_bruteforce(complete(8), complete(14, offset=100))
        with pytest.raises(TooLarge):
            is_minor_bruteforce(complete(4), complete(15, offset=100))


def test_restrict_witness():
    w = {0: frozenset((0, 9)), 1: frozenset((1,))}
    r = restrict_witness(w, PATH4)
    assert r == {0: frozenset((0,)), 1: frozenset((1,))}


def test_induced_restriction_helper():
    sub = induced(octahedron(), {0, 1, 2})
    assert sub.vertex_set() == {0, 1, 2}
    assert sub.edge_pairs() == {frozenset((0, 1)), frozenset((1, 2)), frozenset((0, 2))}


class TestHamiltonianCheck:
    def test_octahedron_has_one(self):
        assert verify_hamiltonian(octahedron(), [0, 1, 3, 5, 4, 2])

    def test_rejects_short_cycle(self):
        assert not verify_hamiltonian(octahedron(), [0, 1, 2])

    def test_rejects_non_cycle(self):
        assert not verify_hamiltonian(PATH4, [0, 1, 2, 3])
