import itertools
import random

import pytest

import oracles
from edgering import (
    BipartiteGraphError,
    DisconnectedError,
    Graph,
    build_from_edges,
    cone_contains,
    face_of,
    fundamental_sets,
    regular_vertices,
    supporting_hyperplanes,
)
from edgering.semigroup import enumerate_semigroup, rho_vector


# ------------------------------------------------------- regular vertices


def test_regular_vertices_match_definition_oracle(all_fixture_graphs):
    for name, G in all_fixture_graphs.items():
        assert set(regular_vertices(G)) == oracles.oracle_regular_vertices(G), name


def test_regular_vertices_frozen_values(bowtie, t1min, t2min, triangle):
    assert set(regular_vertices(bowtie)) == {"v2", "v3", "v4", "v5"}
    assert set(regular_vertices(t1min)) == {
        "w", "x2", "x4", "y1_1", "y1_2", "y3_1", "y3_2"
    }
    assert "w" not in set(regular_vertices(t2min))
    assert len(regular_vertices(t2min)) == 8
    assert regular_vertices(triangle) == ()


def test_regular_vertices_gates():
    square = build_from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    with pytest.raises(BipartiteGraphError):
        regular_vertices(square)
    two_parts = Graph(("a", "b", "c", "d"), (("a", "b"), ("c", "d")))
    with pytest.raises(DisconnectedError):
        regular_vertices(two_parts)


# ------------------------------------------------------- fundamental sets


def test_fundamental_sets_match_subset_oracle(small_fixture_graphs):
    for name, G in small_fixture_graphs.items():
        got = {F.vertices for F in fundamental_sets(G)}
        assert got == oracles.oracle_fundamental_sets(G), name


def test_fundamental_sets_sorted_and_consistent(t2min):
    fsets = fundamental_sets(t2min)
    assert len(fsets) == 40
    keys = [F.sort_key(t2min) for F in fsets]
    assert keys == sorted(keys)
    for F in fsets:
        assert F.neighborhood == frozenset().union(
            *(t2min.neighbors(v) for v in F.vertices)
        )
        assert not F.vertices & F.neighborhood


def test_bowtie_single_vertex_fundamental_sets(bowtie):
    singles = [F for F in fundamental_sets(bowtie) if len(F.vertices) == 1]
    assert [F.vertices for F in singles] == [frozenset({"v1"})]


# ------------------------------------------------------- hyperplanes


def test_supporting_hyperplanes_structure(t1min):
    hyps = supporting_hyperplanes(t1min)
    regs = [h for h in hyps if h.kind == "regular"]
    funds = [h for h in hyps if h.kind == "fundamental"]
    assert len(regs) == len(regular_vertices(t1min))
    for h in regs:
        i = t1min.index(h.vertex)
        assert h.coefficients == tuple(
            1 if j == i else 0 for j in range(t1min.dimension)
        )
    for h in funds:
        assert h.sets  # provenance retained
        F = h.sets[0]
        for v in F.vertices:
            assert h.coefficients[t1min.index(v)] == -1
        for v in F.neighborhood:
            assert h.coefficients[t1min.index(v)] == 1


def test_hyperplane_dedup_keeps_all_provenance(small_fixture_graphs):
    for name, G in small_fixture_graphs.items():
        hyps = supporting_hyperplanes(G)
        assert len({h.coefficients for h in hyps}) == len(hyps), name
        total_sets = sum(len(h.sets) for h in hyps if h.kind == "fundamental")
        assert total_sets == len(fundamental_sets(G)), name


# ------------------------------------------------------- cone membership


def test_cone_contains_matches_lp_oracle(triangle, bowtie, t1min):
    rng = random.Random(17)
    for G in (triangle, bowtie, t1min):
        d = G.dimension
        # all truncated semigroup points lie in the cone
        for x in enumerate_semigroup(G, 6):
            assert cone_contains(G, x)
            assert oracles.oracle_cone_contains(G, x)
        # random small vectors: both verdicts agree either way
        for _ in range(60):
            x = tuple(rng.randint(-2, 4) for _ in range(d))
            assert cone_contains(G, x) == oracles.oracle_cone_contains(G, x), x


def test_cone_rejects_negative_nonregular_coordinate(triangle):
    # no coordinate hyperplanes exist for the triangle, yet negativity is
    # still excluded by the fundamental inequalities
    assert regular_vertices(triangle) == ()
    assert not cone_contains(triangle, (-1, 1, 1))
    assert cone_contains(triangle, (0, 1, 1))


# ------------------------------------------------------- faces


def test_face_dimensions_are_d_minus_1(all_fixture_graphs):
    for name, G in all_fixture_graphs.items():
        for h in supporting_hyperplanes(G):
            assert face_of(G, h).dimension == G.dimension - 1, (name, h.kind)


def test_bowtie_shared_vertex_face(bowtie):
    """The face cut out by the {v1} fundamental hyperplane consists of the
    four edges through v1 (each evaluates to 0; the two opposite edges
    evaluate to 2)."""
    (h,) = [
        h
        for h in supporting_hyperplanes(bowtie)
        if h.kind == "fundamental"
        and any(F.vertices == frozenset({"v1"}) for F in h.sets)
    ]
    face = face_of(bowtie, h)
    assert set(face.edges) == {
        ("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v1", "v5")
    }
    assert h.value(rho_vector(bowtie, "v2", "v3")) == 2
    assert h.value(rho_vector(bowtie, "v4", "v5")) == 2
    assert face.dimension == 4


def test_triangle_faces(triangle):
    for h in supporting_hyperplanes(triangle):
        face = face_of(triangle, h)
        assert len(face.edges) == 2
        assert face.dimension == 2
