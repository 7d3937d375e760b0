"""The edge semigroup of a graph: generators, membership, lattice, and
degree-truncated enumeration of the semigroup, its normalization, and holes.

Vectors are plain tuples of ints indexed by the graph's vertex order. The
semigroup is generated by one degree-2 vector per edge (the sum of the two
endpoint units). The normalization is enumerated two independent ways and
cross-checked: (A) prune-and-filter over the cone's defining inequalities
plus a lattice-membership test, (B) closure of {0} under adding generators
and the cycle-pair vectors that generate the normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import facets
from .errors import DimensionMismatchError, MethodMismatchError
from .graph_core import Graph
from .lattices import IntegerLattice

LatticeVector = tuple  # tuple[int, ...] of length G.dimension


def unit_vector(G: Graph, v) -> LatticeVector:
    i = G.index(v)
    return tuple(1 if j == i else 0 for j in range(G.dimension))


def rho_vector(G: Graph, u, v) -> LatticeVector:
    """Generator for edge {u, v}: unit(u) + unit(v). NotAnEdgeError if absent."""
    a, b = G.edge(u, v)
    i, j = G.index(a), G.index(b)
    return tuple(1 if k in (i, j) else 0 for k in range(G.dimension))


def vector_degree(x: Sequence[int]) -> int:
    return sum(x)


def graded_sorted(vectors: Iterable[Sequence[int]]) -> list[tuple]:
    """Graded lexicographic order: by degree, then coordinates."""
    return sorted((tuple(v) for v in vectors), key=lambda t: (sum(t), t))


def _check_vector(G: Graph, x: Sequence[int]) -> LatticeVector:
    x = tuple(int(c) for c in x)
    if len(x) != G.dimension:
        raise DimensionMismatchError(
            f"vector length {len(x)} != graph dimension {G.dimension}"
        )
    return x


# ---------------------------------------------------------------------------
# semigroup data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemigroupData:
    """Generators (one per edge, in edge order), the integer lattice they
    span with its Hermite-normal-form basis, and the lattice rank."""

    graph: Graph
    generators: tuple
    lattice: IntegerLattice
    lattice_basis: tuple
    dimension: int


@lru_cache(maxsize=None)
def generators(G: Graph) -> SemigroupData:
    gens = tuple(rho_vector(G, u, v) for u, v in G.edges)
    lattice = IntegerLattice.from_vectors(G.dimension, gens)
    return SemigroupData(
        graph=G,
        generators=gens,
        lattice=lattice,
        lattice_basis=lattice.basis(),
        dimension=lattice.rank,
    )


def lattice_member(G: Graph, x: Sequence[int]) -> bool:
    """Membership in the integer lattice spanned by the edge generators."""
    return generators(G).lattice.contains(_check_vector(G, x))


# ---------------------------------------------------------------------------
# membership oracle
# ---------------------------------------------------------------------------

# residual vector -> witness tuple of edges, or None when not expressible;
# subproblems depend only on the residual, so one table per graph is sound
_memo_by_graph: dict[Graph, dict] = {}


def member(G: Graph, x: Sequence[int]) -> bool:
    """True iff x is a nonnegative integer combination of edge generators.

    Exhaustive backtracking on the least-index positive coordinate, memoized
    on the residual. This is the reference oracle every closed-form result
    in the package is checked against, so it stays definitional: no parity
    or cone shortcuts.
    """
    return decompose(G, x) is not None


def decompose(G: Graph, x: Sequence[int]):
    """Witness multiset of edges summing to x, or None. Edges are returned
    sorted in canonical edge order."""
    x = _check_vector(G, x)
    memo = _memo_by_graph.setdefault(G, {})
    witness = _decompose(G, x, memo)
    if witness is None:
        return None
    return tuple(sorted(witness, key=lambda e: (G.index(e[0]), G.index(e[1]))))


def _decompose(G: Graph, x: LatticeVector, memo: dict):
    if any(c < 0 for c in x):
        return None
    if not any(x):
        return ()
    if x in memo:
        return memo[x]
    i = next(j for j, c in enumerate(x) if c > 0)
    v = G.vertices[i]
    out = None
    for u in sorted(G.neighbors(v), key=G.index):
        j = G.index(u)
        if x[j] <= 0:
            continue
        residual = list(x)
        residual[i] -= 1
        residual[j] -= 1
        sub = _decompose(G, tuple(residual), memo)
        if sub is not None:
            out = ((G.edge(v, u)),) + sub
            break
    memo[x] = out
    return out


# ---------------------------------------------------------------------------
# truncated enumerations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_semigroup(G: Graph, D: int) -> frozenset:
    """All semigroup elements of degree <= D: closure of {0} under adding
    edge generators."""
    return _closure(G.dimension, generators(G).generators, D)


@lru_cache(maxsize=None)
def enumerate_normalization(G: Graph, D: int) -> frozenset:
    """All vectors of degree <= D in cone ∩ lattice, computed by two
    independent methods that must agree.

    Method A filters nonnegative integer vectors through the cone's
    fundamental-set inequalities (the regular-vertex inequalities hold
    automatically on nonnegative vectors) with per-coordinate pruning,
    then keeps lattice members. Method B closes {0} under adding edge
    generators and the doubled-cycle-pair vectors known to generate the
    normalization. Disagreement raises MethodMismatchError: either a bug
    or a graph outside the supported class.
    """
    by_filter = _enumerate_by_inequalities(G, D)
    by_closure = _enumerate_by_closure(G, D)
    if by_filter != by_closure:
        raise MethodMismatchError(by_filter - by_closure, by_closure - by_filter)
    return by_filter


def holes(G: Graph, D: int) -> frozenset:
    """Normalization elements of degree <= D that are not in the semigroup."""
    return frozenset(x for x in enumerate_normalization(G, D) if not member(G, x))


def hole_report(G: Graph, D: int) -> list[tuple]:
    """(degree, vector, in_cone, in_lattice, member) rows for every hole,
    fields evaluated independently, in graded lexicographic order."""
    return [
        (vector_degree(x), x, facets.cone_contains(G, x), lattice_member(G, x),
         member(G, x))
        for x in graded_sorted(holes(G, D))
    ]


def _enumerate_by_inequalities(G: Graph, D: int) -> frozenset:
    d = G.dimension
    lattice = generators(G).lattice
    hyps = [
        h.coefficients
        for h in facets.supporting_hyperplanes(G)
        if h.kind == "fundamental"
    ]
    H = len(hyps)
    # gain[h][k] == 1 when h has a positive coefficient at column >= k;
    # coefficients are in {-1, 0, 1}, so the best future gain is the budget
    gain = [[0] * (d + 1) for _ in range(H)]
    for h in range(H):
        for k in range(d - 1, -1, -1):
            gain[h][k] = 1 if (hyps[h][k] > 0 or gain[h][k + 1]) else 0
    touched = [[h for h in range(H) if hyps[h][k]] for k in range(d)]

    found: list[tuple] = []
    x = [0] * d
    f = [0] * H

    def walk(k: int, budget: int) -> None:
        if k == d:
            if (D - budget) % 2 == 0 and all(c >= 0 for c in f):
                vec = tuple(x)
                if lattice.contains(vec):
                    found.append(vec)
            return
        for val in range(budget + 1):
            x[k] = val
            if val:
                for h in touched[k]:
                    f[h] += hyps[h][k] * val
            rem = budget - val
            if all(f[h] + (rem if gain[h][k + 1] else 0) >= 0 for h in touched[k]):
                walk(k + 1, rem)
            if val:
                for h in touched[k]:
                    f[h] -= hyps[h][k] * val
        x[k] = 0

    walk(0, D)
    return frozenset(found)


def _enumerate_by_closure(G: Graph, D: int) -> frozenset:
    from .exceptional import exceptional_pairs, pair_vector

    additions = list(generators(G).generators)
    additions += [pair_vector(G, P) for P in exceptional_pairs(G)]
    return _closure(G.dimension, additions, D)


def _closure(d: int, additions: Sequence[LatticeVector], D: int) -> frozenset:
    zero = (0,) * d
    seen = {zero}
    frontier = [zero]
    degs = [sum(a) for a in additions]
    while frontier:
        new = []
        for vec in frontier:
            s = sum(vec)
            for a, da in zip(additions, degs):
                if s + da > D:
                    continue
                nxt = tuple(p + q for p, q in zip(vec, a))
                if nxt not in seen:
                    seen.add(nxt)
                    new.append(nxt)
        frontier = new
    return frozenset(seen)
