"""Exceptional pairs of odd cycles, the normality criterion, and closed-form
membership tests for sums built from cycle pairs on diameter-4 triangular
cacti.

An exceptional pair is two vertex-disjoint chordless odd cycles with no edge
between them. Their indicator-sum vector is the canonical element of the
normalization that fails semigroup membership, which is exactly why the edge
ring of a graph is normal iff no exceptional pair exists.

The three lemma_* functions are closed forms proved only for triangular
cacti of diameter 4; they refuse other inputs rather than extrapolate. Each
is checked exhaustively against the membership oracle in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    NotAnEdgeError,
    NotDiameterFourCactusError,
    PreconditionViolatedError,
)
from .graph_core import (
    Cycle,
    Graph,
    diameter,
    hub_vertex,
    is_triangular_cactus,
    minimal_odd_cycles,
    neighbors_of_set,
)


@dataclass(frozen=True)
class ExceptionalPair:
    """Unordered pair of vertex-disjoint, bridge-free chordless odd cycles;
    `first` precedes `second` in the canonical cycle order."""

    first: Cycle
    second: Cycle

    def cycles(self) -> tuple[Cycle, Cycle]:
        return (self.first, self.second)

    @property
    def vertex_set(self) -> frozenset:
        return self.first.vertex_set | self.second.vertex_set

    @staticmethod
    def make(G: Graph, a: Cycle, b: Cycle) -> "ExceptionalPair":
        ka = tuple(G.index(v) for v in a.vertices)
        kb = tuple(G.index(v) for v in b.vertices)
        if (len(ka), ka) > (len(kb), kb):
            a, b = b, a
        return ExceptionalPair(a, b)

    def as_json(self) -> list:
        return [list(map(str, self.first.vertices)), list(map(str, self.second.vertices))]


def cycle_vector(G: Graph, cycle: Cycle) -> tuple:
    """Indicator vector of the cycle's vertex set; degree = cycle length."""
    on = {G.index(v) for v in cycle.vertices}
    return tuple(1 if i in on else 0 for i in range(G.dimension))


def pair_vector(G: Graph, pair: ExceptionalPair) -> tuple:
    return _add(cycle_vector(G, pair.first), cycle_vector(G, pair.second))


def is_exceptional(G: Graph, a: Cycle, b: Cycle) -> bool:
    """Vertex-disjoint and no bridge edge from one cycle to the other."""
    va, vb = a.vertex_set, b.vertex_set
    if va & vb:
        return False
    return not any(G._adj[u] & vb for u in va)


@lru_cache(maxsize=None)
def exceptional_pairs(G: Graph) -> tuple:
    """All unordered exceptional pairs of minimal odd cycles, in canonical
    cycle order."""
    cycles = minimal_odd_cycles(G)
    return tuple(
        ExceptionalPair(a, b)
        for a, b in itertools.combinations(cycles, 2)
        if is_exceptional(G, a, b)
    )


def odd_cycle_condition(G: Graph) -> bool:
    """Every two minimal odd cycles share a vertex or are bridged."""
    return not exceptional_pairs(G)


def is_normal(G: Graph) -> bool:
    """Normality of the edge ring; equivalent to the odd cycle condition."""
    return odd_cycle_condition(G)


# ---------------------------------------------------------------------------
# closed forms for cycle-pair sums on diameter-4 triangular cacti
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def require_diameter4_cactus(G: Graph):
    """Gate: G must be a triangular cactus of diameter 4. Returns the hub."""
    if not is_triangular_cactus(G) or diameter(G) != 4:
        raise NotDiameterFourCactusError(
            "closed forms are proved only for diameter-4 triangular cacti"
        )
    return hub_vertex(G)


@lru_cache(maxsize=None)
def _minimal_cycle_set(G: Graph) -> frozenset:
    return frozenset(minimal_odd_cycles(G))


def _require_pair(G: Graph, P: ExceptionalPair) -> None:
    for c in P.cycles():
        if c not in _minimal_cycle_set(G):
            raise PreconditionViolatedError(f"{c} is not a minimal odd cycle of G")
    if not is_exceptional(G, P.first, P.second):
        raise PreconditionViolatedError("the given pair is not exceptional")


def lemma_pair_sum(G: Graph, P1: ExceptionalPair, P2: ExceptionalPair) -> bool:
    """Whether the sum of both pairs' cycle vectors lies in the semigroup.

    True iff the four cycles can be re-matched across the pairs so that both
    cross pairs fail to be exceptional (share a vertex or have a bridge).
    Only the two cross matchings are candidates.
    """
    require_diameter4_cactus(G)
    _require_pair(G, P1)
    _require_pair(G, P2)
    a, b = P1.cycles()
    c, d = P2.cycles()
    for left, right in (((a, c), (b, d)), ((a, d), (b, c))):
        if not is_exceptional(G, *left) and not is_exceptional(G, *right):
            return True
    return False


def lemma_pair_sum_vector(G: Graph, P1: ExceptionalPair, P2: ExceptionalPair) -> tuple:
    return _add(pair_vector(G, P1), pair_vector(G, P2))


def lemma_edge_augment(G: Graph, P: ExceptionalPair, edge) -> bool:
    """Whether pair vector + unit(u) + unit(v) for an edge {u, v} lies in
    the semigroup: true iff one endpoint is the hub and the other is in the
    pair's vertex set or its neighborhood."""
    w = require_diameter4_cactus(G)
    _require_pair(G, P)
    u, v = edge
    if not G.has_edge(u, v):
        raise NotAnEdgeError(f"{{{u!r}, {v!r}}} is not an edge")
    reach = P.vertex_set | neighbors_of_set(G, P.vertex_set)
    if u == w:
        return v in reach
    if v == w:
        return u in reach
    return False


def lemma_edge_augment_vector(G: Graph, P: ExceptionalPair, edge) -> tuple:
    from .semigroup import unit_vector

    u, v = edge
    return _add(pair_vector(G, P), _add(unit_vector(G, u), unit_vector(G, v)))


def lemma_double_w_edge(G: Graph, P: ExceptionalPair, u, v) -> bool:
    """Whether pair vector + rho({u, hub}) + rho({v, hub}) lies in the
    semigroup, for hub neighbors u, v outside the pair's closed reach:
    true iff {u, v} is an edge."""
    w = require_diameter4_cactus(G)
    _require_pair(G, P)
    reach = P.vertex_set | neighbors_of_set(G, P.vertex_set)
    for end in (u, v):
        if not G.has_edge(end, w):
            raise PreconditionViolatedError(f"{end!r} is not adjacent to the hub")
        if end in reach:
            raise PreconditionViolatedError(
                f"{end!r} lies in the pair's vertex set or neighborhood"
            )
    return G.has_edge(u, v)


def lemma_double_w_edge_vector(G: Graph, P: ExceptionalPair, u, v) -> tuple:
    from .semigroup import rho_vector

    w = require_diameter4_cactus(G)
    return _add(pair_vector(G, P), _add(rho_vector(G, u, w), rho_vector(G, v, w)))


# ---------------------------------------------------------------------------
# exhaustive verdict reports (closed form vs oracle)
# ---------------------------------------------------------------------------

def pair_sum_cases(G: Graph):
    """Reports for every unordered pair of exceptional pairs, repeats included."""
    pairs = exceptional_pairs(G)
    for P1, P2 in itertools.combinations_with_replacement(pairs, 2):
        vec = lemma_pair_sum_vector(G, P1, P2)
        yield _report(
            G, "pair_sum",
            {"pair1": P1.as_json(), "pair2": P2.as_json()},
            lemma_pair_sum(G, P1, P2), vec,
        )


def edge_augment_cases(G: Graph):
    """Reports for every (exceptional pair, edge) combination."""
    for P in exceptional_pairs(G):
        for e in G.edges:
            vec = lemma_edge_augment_vector(G, P, e)
            yield _report(
                G, "edge_augment",
                {"pair": P.as_json(), "edge": [str(e[0]), str(e[1])]},
                lemma_edge_augment(G, P, e), vec,
            )


def double_w_edge_cases(G: Graph):
    """Reports for every (exceptional pair, u, v) meeting the preconditions:
    u, v adjacent to the hub and outside the pair's closed neighborhood."""
    w = require_diameter4_cactus(G)
    spokes = sorted(G.neighbors(w), key=G.index)
    for P in exceptional_pairs(G):
        reach = P.vertex_set | neighbors_of_set(G, P.vertex_set)
        ok = [u for u in spokes if u not in reach]
        for u, v in itertools.combinations_with_replacement(ok, 2):
            vec = lemma_double_w_edge_vector(G, P, u, v)
            yield _report(
                G, "double_w_edge",
                {"pair": P.as_json(), "u": str(u), "v": str(v)},
                lemma_double_w_edge(G, P, u, v), vec,
            )


def _report(G: Graph, lemma: str, inputs: dict, closed_form: bool, vec: tuple) -> dict:
    from .semigroup import decompose

    witness = decompose(G, vec)
    oracle = witness is not None
    return {
        "lemma": lemma,
        "inputs": inputs,
        "vector": list(vec),
        "closed_form": closed_form,
        "oracle": oracle,
        "witness": [list(map(str, e)) for e in witness] if witness else None,
        "agree": closed_form == oracle,
    }


def _add(a: Iterable[int], b: Iterable[int]) -> tuple:
    return tuple(p + q for p, q in zip(a, b))
