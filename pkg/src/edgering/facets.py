"""Supporting hyperplanes of the edge cone.

The cone spanned by the edge generators is cut out by two kinds of
hyperplanes: one per regular vertex (the coordinate hyperplane x_v = 0,
where regular means every component left after deleting v still has an odd
cycle) and one per fundamental set T (the balance hyperplane comparing T
against its neighborhood). Membership, facet generators, and facet rank all
reduce to integer evaluations against this list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import BipartiteGraphError, DimensionMismatchError
from .graph_core import (
    Graph,
    bipartite_induced_connected,
    components,
    has_odd_cycle,
    neighbors_of_set,
    require_connected,
)
from .lattices import IntegerLattice


@dataclass(frozen=True)
class FundamentalSet:
    """An independent set whose contact graph with its neighborhood is
    connected and whose complement (beyond the neighborhood) has an odd
    cycle in every component."""

    vertices: frozenset
    neighborhood: frozenset

    def sort_key(self, G: Graph) -> tuple:
        return (len(self.vertices), tuple(sorted(G.index(v) for v in self.vertices)))


@dataclass(frozen=True)
class Hyperplane:
    """A supporting hyperplane, stored as its integer coefficient vector.

    The cone lies in the half-space functional(x) >= 0. Regular-vertex
    hyperplanes have the indicator of the vertex as coefficients; fundamental
    hyperplanes carry +1 on the neighborhood and -1 on the set itself.
    """

    coefficients: tuple
    kind: str  # "regular" | "fundamental"
    vertex: object = None
    sets: tuple = field(default=(), compare=False)

    def value(self, x: Sequence[int]) -> int:
        return sum(c * xc for c, xc in zip(self.coefficients, x))

    def as_json(self, G: Graph) -> dict:
        if self.kind == "regular":
            return {"kind": "regular", "vertex": str(self.vertex)}
        T = sorted(self.sets[0].vertices, key=G.index)
        return {
            "kind": "fundamental",
            "T": [str(v) for v in T],
            "coeffs": list(self.coefficients),
        }


@dataclass(frozen=True)
class FaceData:
    """Generators lying on a hyperplane and the rank of the lattice they span."""

    edges: tuple
    generator_vectors: tuple
    dimension: int


@lru_cache(maxsize=None)
def regular_vertices(G: Graph) -> tuple:
    """All vertices whose deletion leaves only components containing an odd
    cycle, in vertex order."""
    require_connected(G)
    if not has_odd_cycle(G):
        raise BipartiteGraphError("regular vertices need at least one odd cycle")
    out = []
    for v in G.vertices:
        comps = components(G, without=(v,))
        if all(has_odd_cycle(G, c) for c in comps):
            out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def fundamental_sets(G: Graph) -> tuple:
    """Every fundamental set, enumerated exhaustively over independent sets,
    sorted by (size, vertex indices)."""
    require_connected(G)
    verts = G.vertices
    d = len(verts)
    found = []

    def extend(start: int, chosen: list, blocked: set) -> None:
        for i in range(start, d):
            v = verts[i]
            if v in blocked:
                continue
            chosen.append(v)
            T = frozenset(chosen)
            N = neighbors_of_set(G, T)
            if bipartite_induced_connected(G, T):
                rest = set(verts) - T - N
                if not rest or all(
                    has_odd_cycle(G, c) for c in components(G, within=rest)
                ):
                    found.append(FundamentalSet(T, N))
            # supersets stay independent only if they avoid neighbors
            extend(i + 1, chosen, blocked | G.neighbors(v))
            chosen.pop()

    extend(0, [], set())
    found.sort(key=lambda F: F.sort_key(G))
    return tuple(found)


@lru_cache(maxsize=None)
def supporting_hyperplanes(G: Graph) -> tuple:
    """One hyperplane per regular vertex followed by one per fundamental
    set; identical coefficient vectors merge with provenances retained."""
    require_connected(G)
    if not has_odd_cycle(G):
        raise BipartiteGraphError("the hyperplane description needs an odd cycle")
    d = G.dimension
    out: list[Hyperplane] = []
    by_coeffs: dict[tuple, int] = {}
    for v in regular_vertices(G):
        i = G.index(v)
        coeffs = tuple(1 if j == i else 0 for j in range(d))
        by_coeffs[coeffs] = len(out)
        out.append(Hyperplane(coeffs, "regular", vertex=v))
    for F in fundamental_sets(G):
        coeffs = [0] * d
        for v in F.vertices:
            coeffs[G.index(v)] = -1
        for v in F.neighborhood:
            coeffs[G.index(v)] = 1
        coeffs = tuple(coeffs)
        at = by_coeffs.get(coeffs)
        if at is None:
            by_coeffs[coeffs] = len(out)
            out.append(Hyperplane(coeffs, "fundamental", sets=(F,)))
        else:
            prior = out[at]
            out[at] = Hyperplane(coeffs, prior.kind, vertex=prior.vertex,
                                 sets=prior.sets + (F,))
    return tuple(out)


def cone_contains(G: Graph, x: Sequence[int]) -> bool:
    """True iff every supporting hyperplane evaluates >= 0 on x."""
    x = tuple(int(c) for c in x)
    if len(x) != G.dimension:
        raise DimensionMismatchError(
            f"vector length {len(x)} != graph dimension {G.dimension}"
        )
    return all(h.value(x) >= 0 for h in supporting_hyperplanes(G))


def face_of(G: Graph, H: Hyperplane) -> FaceData:
    """The generators on which H vanishes, with the integer rank of the
    lattice they span (the dimension of the face H supports)."""
    from .semigroup import rho_vector

    edges = []
    vectors = []
    for u, v in G.edges:
        g = rho_vector(G, u, v)
        if H.value(g) == 0:
            edges.append((u, v))
            vectors.append(g)
    rank = IntegerLattice.from_vectors(G.dimension, vectors).rank
    return FaceData(tuple(edges), tuple(vectors), rank)
