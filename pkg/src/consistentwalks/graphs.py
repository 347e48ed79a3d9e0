"""Finite simple graphs and their automorphisms.

Vertices are 0..n-1.  Automorphism search is a candidate-mask backtracking
over the vertex list (correctness over speed; desk scale is <= 64 vertices,
so neighborhoods fit in machine-int bitmasks).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Sequence

from .errors import (
    BadParameters,
    CapExceeded,
    DuplicateEdge,
    LoopEdge,
    NoNArcs,
    NotAutomorphisms,
    TooFewVertices,
    UnknownSpec,
)
from .perms import DEFAULT_GROUP_CAP, Perm, PermutationGroup


class Graph:
    """Immutable simple graph with sorted adjacency lists and bitmask rows."""

    __slots__ = ("vertex_count", "adj", "masks", "connected")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        n = int(vertex_count)
        if n < 3:
            raise TooFewVertices(f"need at least 3 vertices, got {n}")
        masks = [0] * n
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameters(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge ({key[0]},{key[1]}) repeated")
            seen.add(key)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.vertex_count = n
        self.masks = tuple(masks)
        self.adj = tuple(tuple(w for w in range(n) if masks[v] >> w & 1) for v in range(n))
        self.connected = self._bfs_connected()

    def _bfs_connected(self) -> bool:
        seen = 1
        frontier = [0]
        while frontier:
            new = []
            for v in frontier:
                rest = self.masks[v] & ~seen
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    seen |= 1 << w
                    new.append(w)
            frontier = new
        return seen == (1 << self.vertex_count) - 1

    # -- queries -----------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) == 1

    def valence(self) -> int:
        if not self.is_regular():
            raise BadParameters("graph is not regular; valence undefined")
        return len(self.adj[0])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def __repr__(self) -> str:
        return (f"<Graph n={self.vertex_count} m={self.edge_count()}"
                f"{' connected' if self.connected else ' disconnected'}>")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["vertices"], data["edges"])

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        """Parse "u v" lines; vertex count is max index + 1."""
        edges = []
        top = -1
        for lineno, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = body.split()
            if len(parts) != 2:
                raise BadParameters(f"line {lineno}: expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise BadParameters(f"line {lineno}: non-integer vertex in {line!r}") from None
            if u < 0 or v < 0:
                raise BadParameters(f"line {lineno}: negative vertex in {line!r}")
            edges.append((u, v))
            top = max(top, u, v)
        return cls(top + 1, edges)


def validate(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a checked Graph from a raw edge list."""
    return Graph(vertex_count, edges)


# -- named families ----------------------------------------------------------

def named_graph(spec: str) -> Graph:
    """Build a standard graph from a spec string.

    Supported: cycle:n, complete:n, hypercube:a, petersen,
    circulant:n:s1,...,sk, complete_bipartite:a:b.
    """
    parts = spec.strip().lower().split(":")
    kind = parts[0]
    try:
        if kind == "cycle":
            (n,) = map(int, parts[1:])
            return Graph(n, [(i, (i + 1) % n) for i in range(n)])
        if kind == "complete":
            (n,) = map(int, parts[1:])
            return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        if kind == "hypercube":
            (a,) = map(int, parts[1:])
            if a < 1:
                raise BadParameters("hypercube dimension must be >= 1")
            n = 1 << a
            edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(a) if v < v ^ (1 << b)]
            return Graph(n, edges)
        if kind == "petersen":
            if len(parts) != 1:
                raise BadParameters("petersen takes no parameters")
            pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
            index = {p: k for k, p in enumerate(pairs)}
            edges = [(index[p], index[q]) for p in pairs for q in pairs
                     if p < q and not set(p) & set(q)]
            return Graph(10, edges)
        if kind == "circulant":
            n = int(parts[1])
            steps = sorted({int(s) for s in parts[2].split(",")})
            if any(s <= 0 or 2 * s > n for s in steps):
                raise BadParameters(f"circulant steps must satisfy 0 < s <= n/2, got {steps}")
            edges = {(i, (i + s) % n) if i < (i + s) % n else ((i + s) % n, i)
                     for i in range(n) for s in steps}
            return Graph(n, sorted(edges))
        if kind == "complete_bipartite":
            a, b = int(parts[1]), int(parts[2])
            if a < 1 or b < 1:
                raise BadParameters("both sides must be nonempty")
            return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    except (IndexError, ValueError):
        raise BadParameters(f"malformed parameters in {spec!r}") from None
    raise UnknownSpec(f"unknown graph spec {spec!r}")


# -- automorphisms -----------------------------------------------------------

def verify_automorphisms(graph: Graph, perms: Iterable[Perm]) -> None:
    """Raise NotAutomorphisms unless every permutation preserves adjacency."""
    n = graph.vertex_count
    for p in perms:
        if len(p) != n:
            raise NotAutomorphisms(f"degree {len(p)} != vertex count {n}")
        for v in range(n):
            if {p[w] for w in graph.adj[v]} != set(graph.adj[p[v]]):
                raise NotAutomorphisms(f"{p} breaks adjacency at vertex {v}")


def automorphism_group(graph: Graph, cap: int = DEFAULT_GROUP_CAP) -> PermutationGroup:
    """The full automorphism group, by degree-refined backtracking.

    Every element is re-verified against the adjacency relation before the
    group is returned.
    """
    n = graph.vertex_count
    adj = graph.masks
    degs = graph.degrees
    by_degree: dict[int, int] = {}
    for v in range(n):
        by_degree[degs[v]] = by_degree.get(degs[v], 0) | (1 << v)
    init_cand = [by_degree[degs[v]] for v in range(n)]
    found: list[Perm] = []
    images = [0] * n

    def extend(v: int, cand: list[int], used: int) -> None:
        if v == n:
            found.append(Perm(images))
            if len(found) > cap:
                raise CapExceeded(f"automorphism count exceeded cap {cap}")
            return
        avail = cand[v] & ~used
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            nxt = cand[:]
            used2 = used | (1 << u)
            ok = True
            for w in range(v + 1, n):
                m = nxt[w] & (adj[u] if adj[v] >> w & 1 else ~adj[u])
                nxt[w] = m
                if not m & ~used2:
                    ok = False
                    break
            if ok:
                images[v] = u
                extend(v + 1, nxt, used2)

    extend(0, init_cand, 0)
    verify_automorphisms(graph, found)
    group = PermutationGroup(n, found)
    group.small_generating_set()
    return group


@dataclass
class LocalAction:
    """Action of a vertex stabilizer on the neighborhood, reindexed to 0..d-1.

    ``lift[q]`` is one ambient-group element restricting to the local
    element ``q``.
    """

    base_vertex: int
    domain: tuple[int, ...]
    group: PermutationGroup
    lift: dict[Perm, Perm] = field(repr=False)
    stabilizer_order: int = 1

    @property
    def kernel_order(self) -> int:
        return self.stabilizer_order // self.group.order


def local_group(group: PermutationGroup, graph: Graph, v: int) -> LocalAction:
    """Restrict the stabilizer of ``v`` to its neighborhood."""
    verify_automorphisms(graph, group.generators)
    if not 0 <= v < graph.vertex_count:
        raise BadParameters(f"vertex {v} out of range")
    stab = group.pointwise_stabilizer((v,))
    domain = graph.adj[v]
    index = {u: i for i, u in enumerate(domain)}
    lift: dict[Perm, Perm] = {}
    for h in stab.elements:
        q = Perm(index[h[u]] for u in domain)
        lift.setdefault(q, h)
    locals_ = sorted(lift)
    # the restriction is a homomorphism, so |local| divides |G_v|
    assert stab.order % len(locals_) == 0
    local = PermutationGroup(len(domain), locals_)
    return LocalAction(base_vertex=v, domain=domain, group=local, lift=lift,
                       stabilizer_order=stab.order)


# -- transitivity, twins, blow-up --------------------------------------------

def n_arcs(graph: Graph, n: int) -> list[tuple[int, ...]]:
    """All n-arcs: walks whose consecutive triples are pairwise distinct."""
    if n < 1:
        raise BadParameters("n must be >= 1")
    arcs: list[tuple[int, ...]] = [(u, w) for u in range(graph.vertex_count)
                                   for w in graph.adj[u]]
    for _ in range(n - 1):
        arcs = [a + (z,) for a in arcs for z in graph.adj[a[-1]] if z != a[-2]]
    return arcs


def is_n_arc_transitive(group: PermutationGroup, graph: Graph, n: int) -> bool:
    """True iff all n-arcs form a single orbit under the tuple action."""
    arcs = n_arcs(graph, n)
    if not arcs:
        raise NoNArcs(f"graph has no {n}-arc")
    orbit = group.tuple_orbit(arcs[0])
    arc_set = set(arcs)
    assert orbit <= arc_set, "automorphism images of an n-arc must be n-arcs"
    return len(orbit) == len(arc_set)


def is_arc_transitive(group: PermutationGroup, graph: Graph) -> bool:
    return is_n_arc_transitive(group, graph, 1)


def is_vertex_transitive(group: PermutationGroup, graph: Graph) -> bool:
    return len(group.orbit(0)) == graph.vertex_count


def twin_vertices(graph: Graph) -> list[tuple[int, int]]:
    """All unordered pairs with identical neighborhoods."""
    groups: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        groups.setdefault(graph.masks[v], []).append(v)
    pairs = []
    for vs in groups.values():
        pairs.extend((vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))
    return sorted(pairs)


def blowup_point(v: int, i: int, m: int) -> int:
    """Fixed blow-up numbering: (v, i) -> v*m + i."""
    return v * m + i


def lex_blowup(graph: Graph, m: int) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Replace each vertex by an independent m-set; join fibers of adjacent vertices."""
    if m < 1:
        raise BadParameters("m must be >= 1")
    labels = {(v, i): blowup_point(v, i, m)
              for v in range(graph.vertex_count) for i in range(m)}
    edges = [(blowup_point(u, i, m), blowup_point(v, j, m))
             for u, v in graph.edges() for i in range(m) for j in range(m)]
    return Graph(graph.vertex_count * m, edges), labels
