"""Hole structure of diameter-4 triangular cacti.

The normalization gap of these graphs organizes into families: each family
is a shift vector q (the sum of cycle-pair vectors over a compatible
collection of exceptional pairs) plus the integer lattice of a facet,
intersected with the cone. Which facets occur depends on whether the hub is
regular (Type 1: admissible fundamental-set facets plus the hub facet) or
not (Type 2: admissible fundamental-set facets only). Serre's (S2) condition
holds when every family has dimension one less than the ambient dimension;
that check, run degree slab by degree slab against independently enumerated
holes, is the verdict this module produces.
"""

from __future__ import annotations

import itertools
import os
import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import facets as facets_mod
from .errors import (
    DecompositionMismatchError,
    DisconnectedError,
    EmptySetError,
    NotDiameterFourCactusError,
)
from .exceptional import (
    ExceptionalPair,
    exceptional_pairs,
    is_exceptional,
    odd_cycle_condition,
    pair_vector,
    require_diameter4_cactus,
)
from .graph_core import Graph
from .lattices import IntegerLattice
from .semigroup import enumerate_normalization, holes, vector_degree

TYPE1 = "Type1"
TYPE2 = "Type2"
NOT_DIAM4 = "NotDiameter4Cactus"


@dataclass(frozen=True)
class CactusType:
    """Classification of a graph within the diameter-4 triangular cactus
    family. `zeta_vertices` are the hub neighbors with no pendant triangles
    (degree 2); `omega_pairs` the adjacent pairs among them. The hub is
    regular exactly when no such adjacent pair exists."""

    tag: str
    hub: object = None
    zeta_vertices: frozenset = frozenset()
    omega_pairs: tuple = ()
    triangles: int = 0

    @property
    def zeta_count(self) -> int:
        return len(self.zeta_vertices)

    @property
    def omega_count(self) -> int:
        return len(self.omega_pairs)

    def as_json(self) -> dict:
        return {
            "tag": self.tag,
            "hub": None if self.hub is None else str(self.hub),
            "zeta_vertices": sorted(map(str, self.zeta_vertices)),
            "omega_pairs": [[str(a), str(b)] for a, b in self.omega_pairs],
            "triangles": self.triangles,
        }


@lru_cache(maxsize=None)
def classify(G: Graph) -> CactusType:
    """Type1 iff the hub is a regular cutpoint, Type2 iff it is not regular;
    anything outside the diameter-4 triangular cactus class gets the
    NotDiameter4Cactus tag with no further fields."""
    try:
        hub = require_diameter4_cactus(G)
    except (NotDiameterFourCactusError, DisconnectedError):
        return CactusType(NOT_DIAM4)
    spokes = sorted(G.neighbors(hub), key=G.index)
    zeta = frozenset(v for v in spokes if G.degree(v) == 2)
    omega = tuple(
        (a, b)
        for a, b in itertools.combinations(spokes, 2)
        if a in zeta and b in zeta and G.has_edge(a, b)
    )
    tag = TYPE1 if hub in facets_mod.regular_vertices(G) else TYPE2
    return CactusType(tag, hub, zeta, omega, len(spokes) // 2)


def _require_cactus_type(G: Graph) -> CactusType:
    ct = classify(G)
    if ct.tag == NOT_DIAM4:
        raise NotDiameterFourCactusError(
            "hole-family construction needs a diameter-4 triangular cactus"
        )
    return ct


@dataclass(frozen=True)
class ExceptionalFamily:
    """A collection of exceptional pairs in which any cross pairing of
    cycles from distinct members is itself exceptional."""

    pairs: tuple

    @property
    def p(self) -> int:
        return len(self.pairs)

    def as_json(self) -> list:
        return [P.as_json() for P in self.pairs]


def _compatible(G: Graph, P: ExceptionalPair, Q: ExceptionalPair) -> bool:
    return all(
        is_exceptional(G, a, b)
        for a in P.cycles()
        for b in Q.cycles()
    )


@lru_cache(maxsize=None)
def exceptional_families(G: Graph) -> tuple:
    """All compatible collections of exceptional pairs of size 1 up to
    half the hub-triangle count. Larger compatible collections are outside
    the proven range; finding one triggers a warning, never silent use."""
    ct = _require_cactus_type(G)
    pairs = exceptional_pairs(G)
    bound = ct.triangles // 2
    compat = {
        (i, j): _compatible(G, pairs[i], pairs[j])
        for i, j in itertools.combinations(range(len(pairs)), 2)
    }
    out = []
    for p in range(1, bound + 1):
        for combo in itertools.combinations(range(len(pairs)), p):
            if all(compat[i, j] for i, j in itertools.combinations(combo, 2)):
                out.append(ExceptionalFamily(tuple(pairs[i] for i in combo)))
    for combo in itertools.combinations(range(len(pairs)), bound + 1):
        if all(compat[i, j] for i, j in itertools.combinations(combo, 2)):
            warnings.warn(
                f"compatible collection of {bound + 1} exceptional pairs exceeds "
                f"the proven bound {bound}; not used in family construction"
            )
            break
    return tuple(out)


def q_vector(G: Graph, family: ExceptionalFamily) -> tuple:
    """Sum of the cycle-pair vectors over the family; degree 6p."""
    if not family.pairs:
        raise EmptySetError("a family needs at least one exceptional pair")
    total = (0,) * G.dimension
    for P in family.pairs:
        total = tuple(a + b for a, b in zip(total, pair_vector(G, P)))
    return total


def admissible_fundamental_sets(G: Graph, family: ExceptionalFamily) -> tuple:
    """Fundamental sets whose closed neighborhood touches the hub but none
    of the family's cycles."""
    ct = _require_cactus_type(G)
    out = []
    for F in facets_mod.fundamental_sets(G):
        if ct.hub not in F.neighborhood:
            continue
        closed = F.vertices | F.neighborhood
        if any(closed & P.vertex_set for P in family.pairs):
            continue
        out.append(F)
    return tuple(out)


class HoleFamily:
    """One predicted family of holes: shift + facet lattice, within the cone.

    `points(D)` filters the degree-truncated normalization through an exact
    integer-lattice solve of (x - shift) against the facet's generators, so
    family points and holes share one enumeration and one representation.
    """

    def __init__(self, G: Graph, shift: tuple, facet: facets_mod.Hyperplane,
                 source: str, family: ExceptionalFamily):
        self.graph = G
        self.shift = shift
        self.facet = facet
        self.source = source  # "hub" | "fundamental"
        self.family = family
        self.face = facets_mod.face_of(G, facet)
        self.dimension = self.face.dimension
        self._lattice = IntegerLattice.from_vectors(
            G.dimension, self.face.generator_vectors
        )
        self._points: dict[int, frozenset] = {}

    def points(self, D: int) -> frozenset:
        if D not in self._points:
            q = self.shift
            self._points[D] = frozenset(
                x
                for x in enumerate_normalization(self.graph, D)
                if self._lattice.contains(tuple(a - b for a, b in zip(x, q)))
            )
        return self._points[D]

    def point_count_by_degree(self, D: int) -> dict:
        counts: dict[str, int] = {}
        for x in self.points(D):
            key = str(vector_degree(x))
            counts[key] = counts.get(key, 0) + 1
        return dict(sorted(counts.items(), key=lambda kv: int(kv[0])))

    def as_json(self, D: int | None = None) -> dict:
        out = {
            "shift": list(self.shift),
            "shift_degree": vector_degree(self.shift),
            "facet": self.facet.as_json(self.graph),
            "dimension": self.dimension,
            "source": self.source,
            "pairs": self.family.as_json(),
        }
        if D is not None:
            out["points_by_degree"] = self.point_count_by_degree(D)
        return out

    def __repr__(self) -> str:
        return (
            f"HoleFamily(shift degree {vector_degree(self.shift)}, "
            f"{self.source} facet, dimension {self.dimension})"
        )


def hole_decomposition(G: Graph, D: int | None = None) -> tuple:
    """The predicted families: for every compatible pair collection, one
    family per admissible fundamental set, plus the hub facet family when
    the hub is regular (Type 1). Passing D precomputes truncated points."""
    ct = _require_cactus_type(G)
    hyps = facets_mod.supporting_hyperplanes(G)
    by_coeffs = {h.coefficients: h for h in hyps}
    hub_hyp = None
    if ct.tag == TYPE1:
        i = G.index(ct.hub)
        hub_hyp = by_coeffs[
            tuple(1 if j == i else 0 for j in range(G.dimension))
        ]
    families = []
    for fam in exceptional_families(G):
        q = q_vector(G, fam)
        for F in admissible_fundamental_sets(G, fam):
            coeffs = [0] * G.dimension
            for v in F.vertices:
                coeffs[G.index(v)] = -1
            for v in F.neighborhood:
                coeffs[G.index(v)] = 1
            families.append(
                HoleFamily(G, q, by_coeffs[tuple(coeffs)], "fundamental", fam)
            )
        if hub_hyp is not None:
            families.append(HoleFamily(G, q, hub_hyp, "hub", fam))
    if D is not None:
        for hf in families:
            hf.points(D)
    return tuple(families)


def verify_decomposition(G: Graph, D: int) -> dict:
    """Check that the enumerated holes up to degree D equal the union of
    the predicted families' truncated points. Returns the evidence report;
    raises DecompositionMismatchError when the sets differ."""
    families = hole_decomposition(G, D)
    hole_set = holes(G, D)
    union = frozenset().union(*(hf.points(D) for hf in families)) if families else frozenset()
    missed = sorted(hole_set - union, key=lambda x: (sum(x), x))
    extra = sorted(union - hole_set, key=lambda x: (sum(x), x))
    report = {
        "graph": {"dimension": G.dimension, "edges": G.edge_count},
        "degree": D,
        "type": classify(G).as_json(),
        "exceptional_pairs": [P.as_json() for P in exceptional_pairs(G)],
        "families": [hf.as_json(D) for hf in families],
        "family_dimensions": [hf.dimension for hf in families],
        "hole_count_by_degree": _count_by_degree(hole_set),
        "family_point_total": len(union),
        "hole_total": len(hole_set),
        "holes_not_covered": [list(x) for x in missed],
        "family_points_not_holes": [list(x) for x in extra],
        "passed": not missed and not extra,
    }
    if not report["passed"]:
        raise DecompositionMismatchError(report)
    return report


def default_truncation(G: Graph) -> int:
    """Default degree bound: 6 plus twice the largest usable collection
    size for cacti, 8 otherwise; capped by EDGERING_MAX_DEGREE (default 12)."""
    cap = int(os.environ.get("EDGERING_MAX_DEGREE", "12"))
    ct = classify(G)
    if ct.tag in (TYPE1, TYPE2):
        return min(2 * (ct.triangles // 2) + 6, cap)
    return min(8, cap)


def s2_verdict(G: Graph, D: int | None = None) -> dict:
    """Normality plus the (S2) verdict with supporting evidence.

    Normal graphs are (S2) outright (verified here by an empty hole set up
    to D). Diameter-4 triangular cacti go through the family decomposition:
    verification must pass on every degree slab of the ladder up to D, the
    slabs must agree, and every family must have dimension d-1; a family of
    lower dimension would make the verdict inconclusive (None), never a
    confident failure. Non-normal graphs outside the class are inconclusive.
    """
    if D is None:
        D = default_truncation(G)
    ct = classify(G)
    normal = odd_cycle_condition(G)
    if normal:
        hole_set = holes(G, D)
        return {
            "normal": True,
            "s2": True,
            "evidence": {
                "route": "normal",
                "degree": D,
                "type": ct.as_json(),
                "hole_count": len(hole_set),
            },
        }
    if ct.tag == NOT_DIAM4:
        return {
            "normal": False,
            "s2": None,
            "evidence": {
                "route": "unsupported",
                "degree": D,
                "type": ct.as_json(),
                "reason": "no decomposition is available for this graph class",
                "hole_count_by_degree": _count_by_degree(holes(G, D)),
            },
        }
    ladder = sorted({x for x in (6, 8, 10, 12) if x < D} | {D})
    reports = {str(Dk): verify_decomposition(G, Dk) for Dk in ladder}
    families = hole_decomposition(G, D)
    monotone = _ladder_consistent(G, families, ladder)
    d = G.dimension
    dims_ok = all(hf.dimension == d - 1 for hf in families)
    s2: bool | None = True if (dims_ok and monotone) else None
    evidence = {
        "route": ct.tag,
        "degree": D,
        "ladder": ladder,
        "type": ct.as_json(),
        "ambient_dimension": d,
        "exceptional_pairs": [P.as_json() for P in exceptional_pairs(G)],
        "families": [hf.as_json(D) for hf in families],
        "family_dimensions": [hf.dimension for hf in families],
        "all_families_full_dimension": dims_ok,
        "ladder_consistent": monotone,
        "hole_count_by_degree": _count_by_degree(holes(G, D)),
        "verified_at": {k: r["passed"] for k, r in reports.items()},
    }
    return {"normal": False, "s2": s2, "evidence": evidence}


def _ladder_consistent(G: Graph, families, ladder) -> bool:
    """Smaller-degree results must be exactly the degree slices of larger
    ones, for both holes and family points."""
    top = ladder[-1]
    top_holes = holes(G, top)
    for Dk in ladder[:-1]:
        if holes(G, Dk) != frozenset(x for x in top_holes if sum(x) <= Dk):
            return False
    for hf in families:
        top_points = hf.points(top)
        for Dk in ladder[:-1]:
            if hf.points(Dk) != frozenset(x for x in top_points if sum(x) <= Dk):
                return False
    return True


def _count_by_degree(vectors) -> dict:
    counts: dict[str, int] = {}
    for x in vectors:
        key = str(sum(x))
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: int(kv[0])))
