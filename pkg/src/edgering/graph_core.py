"""Simple graphs with a fixed vertex order, plus the structural predicates
the cone and semigroup layers are built on.

Every vector anywhere in this package is indexed by a Graph's vertex order,
so that order is fixed at construction and never changes. The triangular
cactus builder produces the canonical test family: a hub vertex "w" on n
triangles, spoke vertices "x1".."x{2n}", and optional pendant triangles
"y{i}_{k}" hanging off each spoke.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import networkx as nx

from .errors import (
    AmbiguousCenterError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateVertexError,
    EmptySetError,
    EmptySpecError,
    LoopEdgeError,
    NotAnEdgeError,
    UnknownEndpointError,
)

Vertex = Hashable
Edge = tuple  # canonical (u, v) with index(u) < index(v)


class Graph:
    """Immutable finite simple graph.

    Vertices are opaque hashable labels. The order they are listed in is the
    coordinate order of every vector derived from this graph. Edges are
    normalized to (u, v) with u before v in that order, and the edge list is
    sorted, so generator order is reproducible run to run.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj", "_nxg", "_hash")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]]):
        vertices = tuple(vertices)
        if not vertices:
            raise EmptySetError("a graph needs at least one vertex")
        index: dict[Vertex, int] = {}
        for v in vertices:
            if v in index:
                raise DuplicateVertexError(f"vertex {v!r} listed twice")
            index[v] = len(index)
        canonical = set()
        for e in edges:
            u, v = e
            if u == v:
                raise LoopEdgeError(f"loop at {u!r}")
            for end in (u, v):
                if end not in index:
                    raise UnknownEndpointError(f"edge endpoint {end!r} is not a vertex")
            if index[u] > index[v]:
                u, v = v, u
            canonical.add((u, v))  # set semantics: repeated edges collapse
        self.vertices = vertices
        self.edges = tuple(sorted(canonical, key=lambda e: (index[e[0]], index[e[1]])))
        self._index = index
        adj = {v: set() for v in vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self._nxg = None
        self._hash = hash((self.vertices, self.edges))

    # -- basic queries ------------------------------------------------------

    @property
    def dimension(self) -> int:
        """Number of vertices; the ambient dimension of all derived vectors."""
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownEndpointError(f"{v!r} is not a vertex of this graph") from None

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._index

    def neighbors(self, v: Vertex) -> frozenset:
        self.index(v)
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._index and v in self._adj.get(u, frozenset())

    def edge(self, u: Vertex, v: Vertex) -> Edge:
        """The canonical form of edge {u, v}; NotAnEdgeError if absent."""
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"{{{u!r}, {v!r}}} is not an edge")
        return (u, v) if self.index(u) < self.index(v) else (v, u)

    def as_nx(self) -> "nx.Graph":
        if self._nxg is None:
            g = nx.Graph()
            g.add_nodes_from(self.vertices)
            g.add_edges_from(self.edges)
            self._nxg = g
        return self._nxg

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.dimension} vertices, {self.edge_count} edges)"


def build_from_edges(edge_list: Iterable, vertices: Iterable[Vertex] = None) -> Graph:
    """Construct a Graph from an edge list; vertices default to first
    appearance order over the edges."""
    edge_list = [tuple(e) for e in edge_list]
    if vertices is None:
        seen = []
        for u, v in edge_list:
            for x in (u, v):
                if x not in seen:
                    seen.append(x)
        vertices = seen
    return Graph(vertices, edge_list)


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertices in canonical cyclic order.

    Canonical means: rotated so the smallest-index vertex comes first and
    oriented toward its smaller-index neighbor, so rotations and reflections
    compare equal. `minimal` marks chordless cycles.
    """

    vertices: tuple
    minimal: bool = field(default=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edge_pairs(self):
        """Consecutive vertex pairs, wrapping around; orientation as stored."""
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @staticmethod
    def make(G: Graph, seq: Sequence[Vertex], minimal: bool = False) -> "Cycle":
        seq = tuple(seq)
        if len(seq) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(seq)) != len(seq):
            raise ValueError("cycle vertices must be distinct")
        for a, b in zip(seq, seq[1:] + seq[:1]):
            if not G.has_edge(a, b):
                raise NotAnEdgeError(f"consecutive cycle vertices {a!r}, {b!r} not adjacent")
        ix = G.index
        k = min(range(len(seq)), key=lambda i: ix(seq[i]))
        fwd = seq[k:] + seq[:k]
        rev = (fwd[0],) + tuple(reversed(fwd[1:]))
        best = min(fwd, rev, key=lambda t: tuple(ix(v) for v in t))
        return Cycle(best, minimal=minimal)


def has_chord(G: Graph, cycle: Cycle) -> bool:
    """True if any edge of G joins two non-consecutive cycle vertices."""
    vs = cycle.vertices
    n = len(vs)
    for i, j in itertools.combinations(range(n), 2):
        if (j - i) % n in (1, n - 1):
            continue
        if G.has_edge(vs[i], vs[j]):
            return True
    return False


def minimal_odd_cycles(G: Graph, max_length: int | None = None) -> tuple[Cycle, ...]:
    """All chordless odd cycles, each once up to rotation and reflection.

    For a triangular cactus this is exactly the set of blocks. Sorted by
    (length, vertex indices) so downstream pair enumeration is deterministic.
    """
    found = []
    for nodes in nx.chordless_cycles(G.as_nx(), length_bound=max_length):
        if len(nodes) % 2 == 1:
            found.append(Cycle.make(G, nodes, minimal=True))
    found.sort(key=lambda c: (c.length, tuple(G.index(v) for v in c.vertices)))
    return tuple(found)


# ---------------------------------------------------------------------------
# connectivity, distance, blocks
# ---------------------------------------------------------------------------

def is_connected(G: Graph) -> bool:
    return nx.is_connected(G.as_nx())


def require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DisconnectedError("operation requires a connected graph")


def diameter(G: Graph) -> int:
    require_connected(G)
    return nx.diameter(G.as_nx())


def eccentricities(G: Graph) -> dict:
    require_connected(G)
    return dict(nx.eccentricity(G.as_nx()))


def components(G: Graph, within: Iterable[Vertex] | None = None,
               without: Iterable[Vertex] = ()) -> tuple[frozenset, ...]:
    """Vertex sets of the connected components of the induced subgraph on
    `within` (default: all vertices) minus `without`, ordered by smallest
    vertex index."""
    keep = set(G.vertices if within is None else within) - set(without)
    seen: set = set()
    comps = []
    for start in G.vertices:
        if start not in keep or start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend((G._adj[u] & keep) - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


def has_odd_cycle(G: Graph, within: Iterable[Vertex] | None = None) -> bool:
    """True iff the induced subgraph on `within` is not bipartite.

    Classical equivalence: a graph has an odd cycle iff it is not
    2-colorable, so this is a plain BFS 2-coloring.
    """
    keep = set(G.vertices if within is None else within)
    color: dict = {}
    for start in keep:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in G._adj[u] & keep:
                if v not in color:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return True
    return False


def is_bipartite(G: Graph) -> bool:
    return not has_odd_cycle(G)


def blocks_and_cutpoints(G: Graph) -> tuple[tuple[frozenset, ...], frozenset]:
    """Biconnected components (as vertex sets) and articulation vertices."""
    require_connected(G)
    nxg = G.as_nx()
    blocks = sorted(
        (frozenset(b) for b in nx.biconnected_components(nxg)),
        key=lambda b: sorted(G.index(v) for v in b),
    )
    return tuple(blocks), frozenset(nx.articulation_points(nxg))


def is_triangular_cactus(G: Graph) -> bool:
    """True iff G is connected, has at least one edge, and every block is a
    3-cycle (3-vertex biconnected components are automatically triangles)."""
    require_connected(G)
    if G.edge_count == 0:
        return False
    blocks, _ = blocks_and_cutpoints(G)
    return all(len(b) == 3 for b in blocks)


# ---------------------------------------------------------------------------
# set predicates used by the fundamental-set definition
# ---------------------------------------------------------------------------

def neighbors_of_set(G: Graph, T: Iterable[Vertex]) -> frozenset:
    """N_G(T): every vertex adjacent to something in T. May meet T itself
    when T is not independent."""
    out: set = set()
    for v in T:
        out |= G.neighbors(v)
    return frozenset(out)


def is_independent(G: Graph, T: Iterable[Vertex]) -> bool:
    T = _require_nonempty_vertex_set(G, T)
    return not any(G._adj[u] & T for u in T)


def bipartite_induced_connected(G: Graph, T: Iterable[Vertex]) -> bool:
    """Connectivity of the bipartite graph with parts T and N_G(T), keeping
    only the edges of G that leave T."""
    T = _require_nonempty_vertex_set(G, T)
    N = neighbors_of_set(G, T) - T
    nodes = T | N
    start = next(iter(T))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        if u in T:
            reach = G._adj[u] & N
        else:
            reach = G._adj[u] & T
        for v in reach - seen:
            seen.add(v)
            stack.append(v)
    return seen == nodes


def _require_nonempty_vertex_set(G: Graph, T: Iterable[Vertex]) -> frozenset:
    T = frozenset(T)
    if not T:
        raise EmptySetError("vertex set must be nonempty")
    for v in T:
        G.index(v)
    return T


# ---------------------------------------------------------------------------
# triangular cactus builder
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CactusSpec:
    """Parameters for the canonical cactus shape: `triangles` 3-cycles share
    the hub, and spoke i carries `pendants[i-1]` further 3-cycles.

    Serialized as {"n": triangles, "s": [pendants...]}.
    """

    triangles: int
    pendants: tuple[int, ...]

    def __post_init__(self):
        if self.triangles < 1:
            raise EmptySpecError("at least one triangle through the hub is required")
        object.__setattr__(self, "pendants", tuple(int(c) for c in self.pendants))
        if len(self.pendants) != 2 * self.triangles:
            raise DimensionMismatchError(
                f"need {2 * self.triangles} pendant counts, got {len(self.pendants)}"
            )
        if any(c < 0 for c in self.pendants):
            raise ValueError("pendant counts must be nonnegative")

    @property
    def dimension(self) -> int:
        return 1 + 2 * self.triangles + 2 * sum(self.pendants)

    def spoke_label(self, i: int) -> str:
        return f"x{i}"

    def pendant_label(self, i: int, k: int) -> str:
        return f"y{i}_{k}"

    def expected_diameter(self) -> int:
        """Diameter of the built graph, by case analysis on where the
        pendant triangles sit. Cross-checked against BFS in the tests."""
        n = self.triangles
        loaded = [i for i in range(1, 2 * n + 1) if self.pendants[i - 1] > 0]
        # spokes 2k-1 and 2k are adjacent; any other spoke pair is not
        for a, b in itertools.combinations(loaded, 2):
            if not (a % 2 == 1 and b == a + 1):
                return 4
        if loaded:
            if n == 1:
                return 3 if len(loaded) == 2 else 2
            return 3
        return 1 if n == 1 else 2

    def build(self) -> Graph:
        hub = "w"
        vertices = [hub]
        vertices += [self.spoke_label(i) for i in range(1, 2 * self.triangles + 1)]
        for i in range(1, 2 * self.triangles + 1):
            vertices += [self.pendant_label(i, k) for k in range(1, 2 * self.pendants[i - 1] + 1)]
        edges = []
        for k in range(1, self.triangles + 1):
            a, b = self.spoke_label(2 * k - 1), self.spoke_label(2 * k)
            edges += [(hub, a), (hub, b), (a, b)]
        for i in range(1, 2 * self.triangles + 1):
            xi = self.spoke_label(i)
            for t in range(1, self.pendants[i - 1] + 1):
                ya, yb = self.pendant_label(i, 2 * t - 1), self.pendant_label(i, 2 * t)
                edges += [(xi, ya), (xi, yb), (ya, yb)]
        return Graph(vertices, edges)


def build_triangular_cactus(spec: CactusSpec | None = None, *,
                            triangles: int | None = None,
                            pendants: Sequence[int] | None = None) -> Graph:
    """Build the canonical cactus either from a CactusSpec or from keyword
    parameters. Vertex order: hub, spokes ascending, pendant groups ascending."""
    if spec is None:
        if triangles is None or pendants is None:
            raise EmptySpecError("give a CactusSpec or both triangles= and pendants=")
        spec = CactusSpec(triangles, tuple(pendants))
    return spec.build()


def hub_vertex(G: Graph) -> Vertex:
    """The unique vertex of eccentricity 2 in a diameter-4 triangular cactus.

    Every pendant vertex is at distance 2 from the hub and at distance >= 3
    from anything deeper on the far side, so eccentricity singles the hub
    out. Callers gate on the diameter-4 cactus class first; the uniqueness
    check here is defensive.
    """
    ecc = eccentricities(G)
    best = min(ecc.values())
    candidates = [v for v, e in ecc.items() if e == best]
    if len(candidates) != 1 or best != 2:
        raise AmbiguousCenterError(
            f"no unique eccentricity-2 vertex (minimum {best}, "
            f"{len(candidates)} candidates)"
        )
    return candidates[0]
