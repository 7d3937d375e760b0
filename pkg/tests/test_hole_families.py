import itertools
import json
import warnings
from pathlib import Path

import pytest

from edgering import (
    CactusSpec,
    DecompositionMismatchError,
    EmptySetError,
    ExceptionalFamily,
    NotDiameterFourCactusError,
    admissible_fundamental_sets,
    build_from_edges,
    build_triangular_cactus,
    classify,
    cone_contains,
    default_truncation,
    exceptional_families,
    exceptional_pairs,
    hole_decomposition,
    holes,
    lattice_member,
    member,
    q_vector,
    regular_vertices,
    s2_verdict,
    verify_decomposition,
)

GOLDEN = Path(__file__).parent / "golden"


# ------------------------------------------------------------ classify


def test_classify_frozen(t1min, t2min, friend3, bowtie):
    c1 = classify(t1min)
    assert c1.tag == "Type1" and c1.hub == "w" and c1.triangles == 2
    assert c1.zeta_vertices == frozenset({"x2", "x4"})
    assert c1.omega_pairs == ()
    c2 = classify(t2min)
    assert c2.tag == "Type2" and c2.hub == "w" and c2.triangles == 3
    assert c2.zeta_vertices == frozenset({"x2", "x4", "x5", "x6"})
    assert c2.omega_pairs == (("x5", "x6"),)
    assert classify(friend3).tag == "NotDiameter4Cactus"
    assert classify(bowtie).tag == "NotDiameter4Cactus"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classify_sweep_laws(n):
    """Over every 0/1 pendant pattern of diameter 4: the type tag, the
    hub-regularity route, the adjacent-degree-2-spoke route, and the size
    bounds must all agree."""
    for pattern in itertools.product((0, 1), repeat=2 * n):
        spec = CactusSpec(n, pattern)
        if spec.expected_diameter() != 4:
            continue
        G = spec.build()
        ct = classify(G)
        assert ct.hub == "w" and ct.triangles == n
        hub_regular = "w" in set(regular_vertices(G))
        assert (ct.tag == "Type1") == hub_regular
        assert (ct.tag == "Type1") == (ct.omega_count == 0)
        l = ct.zeta_count
        if ct.tag == "Type1":
            assert 0 <= l <= n
        else:
            # diameter 4 forces pendant spokes in two distinct triangles,
            # so at least two spokes are not degree-2
            assert 2 <= l <= 2 * (n - 1)


# ------------------------------------------------------------ families


def test_exceptional_families_frozen(t1min, t2min, cact4a, cact4b):
    f1 = exceptional_families(t1min)
    assert len(f1) == 1 and f1[0].p == 1
    assert len(exceptional_families(t2min)) == 1
    f4a = exceptional_families(cact4a)
    assert [f.p for f in f4a] == [1, 1, 1]  # shared cycles block p=2
    f4b = exceptional_families(cact4b)
    assert [f.p for f in f4b] == [1, 1, 1, 1, 1, 1, 2, 2, 2]


def test_exceptional_families_cross_invariant(cact4b):
    from edgering import is_exceptional

    for fam in exceptional_families(cact4b):
        for P, Q in itertools.combinations(fam.pairs, 2):
            for a in P.cycles():
                for b in Q.cycles():
                    assert is_exceptional(cact4b, a, b)


def test_exceptional_families_shared_spoke_exclusion():
    G = build_triangular_cactus(
        triangles=4, pendants=(1, 1, 1, 0, 0, 0, 0, 0)
    )
    pairs = exceptional_pairs(G)
    assert len(pairs) == 2  # the two bridged pendant cycles pair only
    # with the third; bound allows p=2 but sharing excludes it
    assert [f.p for f in exceptional_families(G)] == [1, 1]


def test_no_oversized_warning_on_fixtures(all_fixture_graphs):
    for name, G in all_fixture_graphs.items():
        if classify(G).tag == "NotDiameter4Cactus":
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            exceptional_families.__wrapped__(G)


def test_gate(friend3):
    with pytest.raises(NotDiameterFourCactusError):
        exceptional_families(friend3)
    with pytest.raises(NotDiameterFourCactusError):
        hole_decomposition(friend3)


# ------------------------------------------------------------ q vectors


def test_q_vector_values(t1min, cact4b):
    (fam,) = exceptional_families(t1min)
    q = q_vector(t1min, fam)
    assert sum(q) == 6
    assert member(t1min, q) is False
    big = [f for f in exceptional_families(cact4b) if f.p == 2][0]
    q2 = q_vector(cact4b, big)
    assert sum(q2) == 12
    assert member(cact4b, q2) is False


def test_q_vector_empty_family_rejected(t1min):
    with pytest.raises(EmptySetError):
        q_vector(t1min, ExceptionalFamily(()))


# ------------------------------------------------------------ admissible sets


def test_admissible_sets_frozen(t1min, t2min):
    (f1,) = exceptional_families(t1min)
    assert admissible_fundamental_sets(t1min, f1) == ()
    (f2,) = exceptional_families(t2min)
    got = [sorted(F.vertices) for F in admissible_fundamental_sets(t2min, f2)]
    assert got == [["x5"], ["x6"]]


def test_admissible_sets_definition(t2min):
    ct = classify(t2min)
    (fam,) = exceptional_families(t2min)
    for F in admissible_fundamental_sets(t2min, fam):
        assert ct.hub in F.neighborhood
        closed = F.vertices | F.neighborhood
        for P in fam.pairs:
            assert not closed & P.vertex_set


def test_admissibility_hereditary(cact4b):
    singles = {
        fam.pairs[0]: set(
            F.vertices for F in admissible_fundamental_sets(cact4b, fam)
        )
        for fam in exceptional_families(cact4b)
        if fam.p == 1
    }
    for fam in exceptional_families(cact4b):
        if fam.p != 2:
            continue
        for F in admissible_fundamental_sets(cact4b, fam):
            for P in fam.pairs:
                assert F.vertices in singles[P]


# ------------------------------------------------------------ decomposition


def test_hole_decomposition_t1min(t1min):
    fams = hole_decomposition(t1min)
    assert len(fams) == 1
    (hf,) = fams
    assert hf.source == "hub"
    assert hf.facet.kind == "regular" and hf.facet.vertex == "w"
    assert hf.dimension == 8
    q = hf.shift
    assert q in hf.points(8)
    assert hf.points(8)


def test_hole_decomposition_t2min(t2min):
    fams = hole_decomposition(t2min)
    assert len(fams) == 2
    assert all(hf.source == "fundamental" for hf in fams)
    names = sorted(
        sorted(F.vertices)[0]
        for hf in fams
        for F in hf.facet.sets
        if len(F.vertices) == 1 and not (F.vertices - {"x5", "x6"})
    )
    assert names == ["x5", "x6"]
    assert all(hf.dimension == 10 for hf in fams)


def test_shift_invariants(t1min, t2min):
    for G in (t1min, t2min):
        for hf in hole_decomposition(G):
            q = hf.shift
            assert lattice_member(G, q)
            assert cone_contains(G, q)
            assert member(G, q) is False


def test_family_points_are_holes(t1min, t2min):
    for G in (t1min, t2min):
        hole_set = holes(G, 10)
        for hf in hole_decomposition(G):
            pts = hf.points(10)
            assert pts <= hole_set
            assert hf.points(8) == frozenset(
                x for x in pts if sum(x) <= 8
            )


def test_verify_decomposition_degree_zero_vacuous(t1min):
    report = verify_decomposition(t1min, 0)
    assert report["passed"]
    assert report["hole_total"] == 0
    assert report["family_point_total"] == 0


def test_verify_decomposition_report_shape(t2min):
    report = verify_decomposition(t2min, 8)
    assert report["passed"]
    assert report["type"]["tag"] == "Type2"
    assert report["family_dimensions"] == [10, 10]
    assert report["holes_not_covered"] == []
    assert report["family_points_not_holes"] == []
    assert report["hole_count_by_degree"] == {"6": 1, "8": 11}
    json.dumps(report)  # serializable


def test_decomposition_mismatch_error_payload():
    report = {
        "holes_not_covered": [[0, 1]],
        "family_points_not_holes": [],
        "passed": False,
    }
    err = DecompositionMismatchError(report)
    assert err.report is report
    assert "1" in str(err)


# ------------------------------------------------------------ verdicts


def test_s2_verdict_flagship(t1min, t2min):
    for G, tag in ((t1min, "Type1"), (t2min, "Type2")):
        v = s2_verdict(G, 12)
        assert v["normal"] is False and v["s2"] is True
        ev = v["evidence"]
        assert ev["route"] == tag
        assert ev["ladder"] == [6, 8, 10, 12]
        assert ev["ladder_consistent"] is True
        assert ev["all_families_full_dimension"] is True
        assert all(ev["verified_at"].values())
        assert ev["family_dimensions"] == [G.dimension - 1] * len(
            ev["families"]
        )


def test_s2_verdict_normal_route(friend3, bowtie):
    for G in (friend3, bowtie):
        v = s2_verdict(G, 8)
        assert v == {
            "normal": True,
            "s2": True,
            "evidence": {
                "route": "normal",
                "degree": 8,
                "type": classify(G).as_json(),
                "hole_count": 0,
            },
        }


def test_s2_verdict_unsupported_route():
    # two triangles joined by a 2-path: an exceptional pair exists (not
    # normal) but the graph is no triangular cactus, so no decomposition
    G = build_from_edges(
        [
            ("a1", "a2"), ("a2", "a3"), ("a3", "a1"),
            ("b1", "b2"), ("b2", "b3"), ("b3", "b1"),
            ("a1", "m"), ("m", "b1"),
        ]
    )
    v = s2_verdict(G, 6)
    assert v["normal"] is False
    assert v["s2"] is None
    assert v["evidence"]["route"] == "unsupported"


def test_default_truncation(t1min, t2min, cact4b, bowtie, monkeypatch):
    assert default_truncation(t1min) == 8
    assert default_truncation(t2min) == 8
    assert default_truncation(cact4b) == 10
    assert default_truncation(bowtie) == 8
    monkeypatch.setenv("EDGERING_MAX_DEGREE", "6")
    assert default_truncation(cact4b) == 6
    assert default_truncation(t1min) == 6


def test_golden_evidence(t1min, t2min):
    for name, G in (("t1min", t1min), ("t2min", t2min)):
        got = json.dumps(s2_verdict(G, 12), indent=2, sort_keys=True)
        want = (GOLDEN / f"{name}_s2_evidence.json").read_text()
        assert got.strip() == want.strip(), name
