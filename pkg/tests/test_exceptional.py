import pytest

from edgering import (
    Cycle,
    ExceptionalPair,
    NotAnEdgeError,
    NotDiameterFourCactusError,
    PreconditionViolatedError,
    build_triangular_cactus,
    cycle_vector,
    exceptional_pairs,
    holes,
    is_exceptional,
    is_normal,
    lemma_double_w_edge,
    lemma_edge_augment,
    lemma_pair_sum,
    member,
    minimal_odd_cycles,
    odd_cycle_condition,
    pair_vector,
)
from edgering.exceptional import (
    double_w_edge_cases,
    edge_augment_cases,
    lemma_edge_augment_vector,
    lemma_pair_sum_vector,
    pair_sum_cases,
    require_diameter4_cactus,
)
from edgering.semigroup import decompose


# ------------------------------------------------------------ pairs


def test_exceptional_pair_counts(all_fixture_graphs):
    expect = {
        "triangle": 0, "bowtie": 0, "friend3": 0, "cac3": 0,
        "t1min": 1, "t2min": 1, "cact4a": 3, "cact4b": 6,
    }
    for name, G in all_fixture_graphs.items():
        assert len(exceptional_pairs(G)) == expect[name], name


def test_is_exceptional_shared_vertex(bowtie):
    a, b = minimal_odd_cycles(bowtie)
    assert a.vertex_set & b.vertex_set == {"v1"}
    assert not is_exceptional(bowtie, a, b)


def test_is_exceptional_bridge(cac3):
    # both pendant triangles hang off adjacent spokes: the x1-x2 edge
    # bridges them
    cycles = {
        frozenset(c.vertex_set): c for c in minimal_odd_cycles(cac3)
    }
    c1 = cycles[frozenset({"x1", "y1_1", "y1_2"})]
    c2 = cycles[frozenset({"x2", "y2_1", "y2_2"})]
    assert not is_exceptional(cac3, c1, c2)
    assert odd_cycle_condition(cac3) and is_normal(cac3)


def test_is_exceptional_positive(t1min):
    (P,) = exceptional_pairs(t1min)
    a, b = P.cycles()
    assert is_exceptional(t1min, a, b)
    assert P.vertex_set == frozenset(
        {"x1", "y1_1", "y1_2", "x3", "y3_1", "y3_2"}
    )


def test_pair_canonical_order(t1min):
    (P,) = exceptional_pairs(t1min)
    a, b = P.cycles()
    swapped = ExceptionalPair.make(t1min, b, a)
    assert swapped == P
    assert P.as_json() == [["x1", "y1_1", "y1_2"], ["x3", "y3_1", "y3_2"]]


def test_vectors(t1min):
    (P,) = exceptional_pairs(t1min)
    a, _ = P.cycles()
    va = cycle_vector(t1min, a)
    assert sum(va) == 3
    assert va[t1min.index("x1")] == 1
    q = pair_vector(t1min, P)
    assert q == (0, 1, 0, 1, 0, 1, 1, 1, 1)


def test_normality_equals_empty_holes(all_fixture_graphs):
    for name, G in all_fixture_graphs.items():
        if name in ("cact4a", "cact4b"):
            continue  # degree-12 enumeration at d >= 15 is out of test budget
        assert odd_cycle_condition(G) == (holes(G, 12) == frozenset()), name


def test_class_gate(friend3, triangle):
    for G in (friend3, triangle):
        with pytest.raises(NotDiameterFourCactusError):
            require_diameter4_cactus(G)


# ------------------------------------------------------------ lemma: pair sum


def test_pair_sum_with_itself_is_member(t1min):
    (P,) = exceptional_pairs(t1min)
    assert lemma_pair_sum(t1min, P, P) is True
    v = lemma_pair_sum_vector(t1min, P, P)
    assert v == tuple(2 * a for a in pair_vector(t1min, P))
    assert member(t1min, v) is True


def test_pair_sum_shared_cycle_not_member(cact4a):
    pairs = exceptional_pairs(cact4a)
    p0, p1 = pairs[0], pairs[1]  # both contain the x1 pendant cycle
    assert lemma_pair_sum(cact4a, p0, p1) is False
    assert member(cact4a, lemma_pair_sum_vector(cact4a, p0, p1)) is False


def test_pair_sum_bridged_rematch_is_member():
    # all four spokes carry pendant triangles: re-matching the two pairs
    # produces bridged (non-exceptional) pairings on both sides
    G = build_triangular_cactus(triangles=2, pendants=(1, 1, 1, 1))
    cycles = {min(c.vertex_set): c for c in minimal_odd_cycles(G)}
    P = ExceptionalPair.make(G, cycles["x1"], cycles["x3"])
    Q = ExceptionalPair.make(G, cycles["x2"], cycles["x4"])
    assert lemma_pair_sum(G, P, Q) is True
    assert member(G, lemma_pair_sum_vector(G, P, Q)) is True


def test_pair_sum_requires_exceptional_inputs(t1min, cac3):
    hub_tri = next(
        c for c in minimal_odd_cycles(t1min) if "w" in c.vertex_set
    )
    pend_tri = next(
        c for c in minimal_odd_cycles(t1min) if c.vertex_set & {"x1"} and "w" not in c.vertex_set
    )
    bad = ExceptionalPair(hub_tri, pend_tri)  # cycles share x1 or are bridged
    with pytest.raises(PreconditionViolatedError):
        lemma_pair_sum(t1min, bad, bad)
    # and the class gate itself rejects graphs outside diameter 4
    good_cycles = minimal_odd_cycles(cac3)
    with pytest.raises(NotDiameterFourCactusError):
        lemma_pair_sum(
            cac3,
            ExceptionalPair(good_cycles[0], good_cycles[1]),
            ExceptionalPair(good_cycles[0], good_cycles[1]),
        )


# ------------------------------------------------------------ lemma: edge add


def test_edge_augment_frozen_cases(t1min):
    (P,) = exceptional_pairs(t1min)
    assert lemma_edge_augment(t1min, P, ("w", "x2")) is True
    assert lemma_edge_augment(t1min, P, ("w", "x4")) is True
    assert lemma_edge_augment(t1min, P, ("x1", "x2")) is False
    assert lemma_edge_augment(t1min, P, ("y1_1", "y1_2")) is False
    with pytest.raises(NotAnEdgeError):
        lemma_edge_augment(t1min, P, ("x1", "x3"))


def test_edge_augment_witness(t1min):
    (P,) = exceptional_pairs(t1min)
    v = lemma_edge_augment_vector(t1min, P, ("w", "x2"))
    witness = decompose(t1min, v)
    assert witness is not None and len(witness) == 4


# ------------------------------------------------------------ lemma: two hub edges


def test_double_w_edge_frozen_cases(t2min):
    (P,) = exceptional_pairs(t2min)
    assert lemma_double_w_edge(t2min, P, "x5", "x6") is True
    assert lemma_double_w_edge(t2min, P, "x5", "x5") is False


def test_double_w_edge_nonadjacent_spokes_false():
    G = build_triangular_cactus(
        triangles=4, pendants=(1, 0, 1, 0, 0, 0, 0, 0)
    )
    pairs = exceptional_pairs(G)
    (P,) = pairs
    assert lemma_double_w_edge(G, P, "x5", "x7") is False


def test_double_w_edge_preconditions(t1min, t2min):
    (P1,) = exceptional_pairs(t1min)
    with pytest.raises(PreconditionViolatedError):
        lemma_double_w_edge(t1min, P1, "x2", "x4")  # x2 neighbors the cycle
    (P2,) = exceptional_pairs(t2min)
    with pytest.raises(PreconditionViolatedError):
        lemma_double_w_edge(t2min, P2, "y1_1", "x5")  # y1_1 not hub-adjacent


# ------------------------------------------------------------ case sweeps


def test_case_generators_shapes(t1min, t2min):
    assert len(list(pair_sum_cases(t1min))) == 1
    assert len(list(edge_augment_cases(t1min))) == 12  # 1 pair x 12 edges
    assert len(list(double_w_edge_cases(t1min))) == 0  # no admissible spokes
    assert len(list(double_w_edge_cases(t2min))) == 3  # {x5,x6} with repeats


def test_case_reports_carry_witnesses(t2min):
    for case in double_w_edge_cases(t2min):
        assert case["agree"]
        if case["oracle"]:
            assert case["witness"] is not None
        else:
            assert case["witness"] is None
