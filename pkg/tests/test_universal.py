"""Half-grid universal embedding: sizes, structure, sewing."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minor_universal.polygonal import Signature, sew, validate
from minor_universal.universal import build_universal, universal_counts

SIGS = ["a0 ~a0", "a1 a1", "a1 a2 ~a1 ~a2", "a1 a2 a1 a2"]


def sig(text: str) -> Signature:
    return Signature.parse(text.split())


def test_counts_example():
    c = universal_counts(sig("a1 a2 a1 a2"), 2)
    assert c["diagonal"] == 8
    assert c["internal"] == 28
    assert c["side_length"] == 2
    assert c["sewn_upper"] == 34


def test_torus_m2_sewn_vertex_count():
    u = build_universal(sig("a1 a2 ~a1 ~a2"), 2)
    assert len(sew(u.embedding).vertices) == 33


@pytest.mark.parametrize("text", SIGS)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_measured_size(text, m):
    s = sig(text)
    u = build_universal(s, m)
    d = len(s) * m
    assert u.embedding.measured_size() == (m, d * (d - 1) // 2)
    assert validate(u.embedding) == []


@pytest.mark.parametrize("text", SIGS)
@pytest.mark.parametrize("m", [1, 2])
def test_grid_structure(text, m):
    s = sig(text)
    u = build_universal(s, m)
    d = len(s) * m
    # coords cover the lower-triangular half grid bijectively
    cells = set(u.coords.values())
    assert cells == {(i, j) for i in range(d) for j in range(i + 1)}
    assert len(u.coords) == len(cells)
    gid = u.grid_id
    # diagonal cells form the outer walk together with the corners
    diag = {gid[(i, i)] for i in range(d)}
    outer = set(u.embedding.outer_cycle())
    assert diag <= outer
    assert outer == diag | set(u.corner_ids)
    # corner c_t sits immediately before diagonal index t*m
    cyc = u.embedding.outer_cycle()
    start = cyc.index(u.corner_ids[0])
    walk = cyc[start:] + cyc[:start]
    for t in range(len(s)):
        assert walk[t * (m + 1)] == u.corner_ids[t]


@pytest.mark.parametrize("text", SIGS)
def test_sewn_upper_is_an_upper_bound_formula(text):
    s = sig(text)
    for m in (1, 2, 3):
        c = universal_counts(s, m)
        assert c["sewn_upper"] == (len(s) ** 2 * m ** 2 + len(s)) // 2


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SIGS), st.integers(1, 4))
def test_universal_always_valid(text, m):
    u = build_universal(sig(text), m)
    assert validate(u.embedding) == []
    s = sew(u.embedding)
    # sewing only merges boundary vertices; interior count is untouched
    d = len(sig(text)) * m
    assert len(s.vertices) >= d * (d - 1) // 2
