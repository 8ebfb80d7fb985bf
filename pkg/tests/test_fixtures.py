"""Fixture generators: validity, determinism, documented failure modes."""
import pytest

from minor_universal import polygonal
from minor_universal.fixtures import (
    k6_torus,
    octahedron,
    polygon_embedding,
    random_triangulated,
    sphere_outerplanar,
    square_sphere,
    stacked_circuit,
    stacked_triangulation,
    tree_fixture,
)
from minor_universal.polygonal import Signature, sew, sewn_genus, validate


def sig(text: str) -> Signature:
    return Signature.parse(text.split())


def test_square_sphere():
    p = square_sphere()
    assert validate(p) == []
    assert p.measured_size() == (1, 0)


def test_sphere_outerplanar():
    p = sphere_outerplanar(3)
    assert validate(p) == []
    assert p.measured_size() == (3, 0)
    assert sewn_genus(p) == 0


def test_tree_fixture():
    p = tree_fixture()
    assert validate(p) == []
    assert p.measured_size() == (2, 4)
    assert sewn_genus(p) == 2


def test_k6_torus():
    p = k6_torus()
    assert validate(p) == []
    assert sewn_genus(p) == 2
    s = sew(p)
    assert len(s.vertices) == 14


def test_octahedron():
    g = octahedron()
    g.check()
    assert len(g.vertices) == 6
    assert len(g.edges) == 12


def test_random_triangulated_deterministic():
    s = sig("a1 a2 ~a1 ~a2")
    a = polygonal.dumps(random_triangulated(s, 3, 6, seed=42))
    b = polygonal.dumps(random_triangulated(s, 3, 6, seed=42))
    c = polygonal.dumps(random_triangulated(s, 3, 6, seed=43))
    assert a == b
    assert a != c


def test_random_triangulated_valid():
    for seed in range(8):
        p = random_triangulated(sig("a1 a1"), 2, 5, seed)
        assert validate(p) == []
        assert p.measured_size() == (2, 5)


def test_random_triangulated_two_letter_m1_impossible():
    # with a 2-letter signature and one vertex per side, every triangle of
    # the polygon touches a corner, so no interior vertex can be inserted
    with pytest.raises(ValueError):
        random_triangulated(sig("a0 ~a0"), 1, 1, seed=0)


def test_stacked_triangulation_deterministic():
    a = stacked_triangulation(5, 9)
    b = stacked_triangulation(5, 9)
    assert dict(a.edges) == dict(b.edges)
    assert dict(a.rotation) == dict(b.rotation)
    circuit = stacked_circuit(a)
    assert len(circuit) == 4
    assert len(set(circuit)) == 4
