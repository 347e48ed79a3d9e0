"""Consistent walks and cycles: shunts, successors, the orbit census.

Walks are plain vertex tuples, rooted and directed.  A walk (v_0..v_n) is
G-consistent when some g in G maps (v_0..v_{n-1}) onto (v_1..v_n)
pointwise; every such g is a shunt.  Rooted directed cycles carry their
closing vertex, e.g. the trivial cycle on an edge is (u, v, u).
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .errors import InvalidWalk, NotConsistent
from .graphs import Graph, is_vertex_transitive
from .perms import Perm, PermutationGroup

Walk = tuple[int, ...]


def validate_walk(graph: Graph, walk: Sequence[int]) -> Walk:
    w = tuple(int(v) for v in walk)
    if len(w) < 2:
        raise InvalidWalk(f"walk needs at least two vertices, got {w}")
    for v in w:
        if not 0 <= v < graph.vertex_count:
            raise InvalidWalk(f"vertex {v} out of range in {w}")
    for a, b in zip(w, w[1:]):
        if not graph.has_edge(a, b):
            raise InvalidWalk(f"vertices {a},{b} not adjacent in {w}")
    return w


def apply_perm(p: Perm, walk: Sequence[int]) -> Walk:
    return tuple(p[v] for v in walk)


@dataclass(frozen=True)
class ConsistencyWitness:
    """A walk together with one shunt certifying its consistency."""

    walk: Walk
    shunt: Perm
    group: PermutationGroup

    def __post_init__(self):
        for a, b in zip(self.walk, self.walk[1:]):
            if self.shunt[a] != b:
                raise NotConsistent(f"{self.shunt} does not shunt {self.walk}")


def _raw_shunts(group: PermutationGroup, walk: Walk) -> list[Perm]:
    """Chained element filter, no validation or asserts (hot path)."""
    found = group.elements
    for a, b in zip(walk, walk[1:]):
        found = [g for g in found if g[a] == b]
    return list(found)


def shunts(group: PermutationGroup, graph: Graph, walk: Sequence[int]) -> list[Perm]:
    """All g in G mapping the walk's prefix onto its suffix, sorted.

    The returned set is verified to be the coset g0 * G_{(v_1..v_n)} of the
    suffix stabilizer (empty when the walk is not consistent).
    """
    w = validate_walk(graph, walk)
    found = _raw_shunts(group, w)
    if found:
        g0 = found[0]
        suffix_stab = group.pointwise_stabilizer(w[1:])
        assert {g0 * h for h in suffix_stab.elements} == set(found)
    return found


def is_consistent(group: PermutationGroup, graph: Graph,
                  walk: Sequence[int]) -> ConsistencyWitness | None:
    """A witness with the lexicographically smallest shunt, or None."""
    found = shunts(group, graph, walk)
    if not found:
        return None
    return ConsistencyWitness(walk=validate_walk(graph, walk), shunt=found[0], group=group)


def successors(group: PermutationGroup, graph: Graph,
               walk: Sequence[int]) -> list[Walk]:
    """All walks (v_1..v_n, v_n^g) over shunts g, sorted.

    Computed as the shunt images of the walk and cross-checked against the
    orbit of one successor under the suffix stabilizer; the two must agree.
    """
    w = validate_walk(graph, walk)
    shs = shunts(group, graph, w)
    if not shs:
        raise NotConsistent(f"walk {w} has no shunt in the group")
    succ = {apply_perm(g, w) for g in shs}
    one = apply_perm(shs[0], w)
    suffix_stab = group.pointwise_stabilizer(w[1:])
    assert {apply_perm(h, one) for h in suffix_stab.elements} == succ
    return sorted(succ)


def successor_count(group: PermutationGroup, graph: Graph,
                    walk: Sequence[int]) -> int:
    """|Succ(walk)|; for vertex-transitive groups the order identity
    |G_prefix| = |G_walk| * |Succ(walk)| is asserted."""
    w = validate_walk(graph, walk)
    count = len(successors(group, graph, w))
    if is_vertex_transitive(group, graph):
        prefix_stab = group.pointwise_stabilizer(w[:-1])
        walk_stab = group.pointwise_stabilizer(w)
        assert prefix_stab.order == walk_stab.order * count
    return count


def consistent_extensions(group: PermutationGroup, graph: Graph,
                          walk: Sequence[int]) -> list[Walk]:
    """One-vertex extensions of the walk that are still consistent, sorted.

    These are exactly the walks (v_0..v_n, w) with w an endpoint of some
    successor.
    """
    w = validate_walk(graph, walk)
    return sorted({w + (s[-1],) for s in successors(group, graph, w)})


def induced_cycle(witness: ConsistencyWitness) -> Walk:
    """The unique rooted directed cycle the walk and its shunt induce.

    A repeat inside the walk forces periodicity back to the root; otherwise
    the shunt extends the walk until the first revisited vertex, which must
    be the root.
    """
    w, g = witness.walk, witness.shunt
    seen = {w[0]: 0}
    for k, v in enumerate(w[1:], start=1):
        if v in seen:
            assert v == w[0], f"first repeat {v} is not the root of {w}"
            assert all(w[x] == w[x % k] for x in range(len(w)))
            return w[: k + 1]
        seen[v] = k
    cycle = list(w)
    v = g[w[-1]]
    while v not in seen:
        seen[v] = len(cycle)
        cycle.append(v)
        v = g[v]
    assert v == w[0], f"first revisited vertex {v} is not the root of {w}"
    cycle.append(v)
    return tuple(cycle)


# -- cycle census -------------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    representative: Walk
    length: int
    orbit_size: int
    shunt_count: int
    stabilizer_order: int
    trivial: bool

    def to_json(self) -> dict:
        return {
            "representative": list(self.representative),
            "length": self.length,
            "orbit_size": self.orbit_size,
            "shunt_count": self.shunt_count,
            "stabilizer_order": self.stabilizer_order,
            "trivial": self.trivial,
        }


@dataclass(frozen=True)
class CycleOrbitTable:
    records: tuple[OrbitRecord, ...]
    group_order: int
    vertex_transitive: bool

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]

    def lengths(self) -> list[int]:
        return [r.length for r in self.records]

    def shunt_counts(self) -> list[int]:
        return [r.shunt_count for r in self.records]

    def trivial_record(self) -> OrbitRecord:
        (rec,) = [r for r in self.records if r.trivial]
        return rec


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def enumerate_consistent_cycles(group: PermutationGroup, graph: Graph) -> set[Walk]:
    """Every G-consistent rooted directed cycle.

    Each element's cycle decomposition is swept once: a vertex orbit of g
    yields graph cycles (one per rotation) exactly when one, equivalently
    every, consecutive pair is adjacent.  Completeness: a consistent cycle
    rooted at u with shunt g is the g-orbit of u.
    """
    out: set[Walk] = set()
    n = graph.vertex_count
    masks = graph.masks
    for g in group.elements:
        seen = 0
        for start in range(n):
            if seen >> start & 1:
                continue
            cyc = [start]
            w = g[start]
            while w != start:
                cyc.append(w)
                w = g[w]
            for v in cyc:
                seen |= 1 << v
            if len(cyc) >= 2 and masks[cyc[0]] >> cyc[1] & 1:
                for r in range(len(cyc)):
                    rot = cyc[r:] + cyc[:r]
                    out.add(tuple(rot) + (rot[0],))
    return out


def partition_cycles(group: PermutationGroup,
                     cycles: set[Walk]) -> list[list[Walk]]:
    """Group-orbit partition of a G-closed set of cycle tuples."""
    uf = _UnionFind()
    for c in cycles:
        uf.add(c)
    for c in cycles:
        for g in group.generators:
            image = apply_perm(g, c)
            uf.add(image)
            uf.union(c, image)
    buckets: dict[Walk, list[Walk]] = {}
    for c in cycles:
        buckets.setdefault(uf.find(c), []).append(c)
    orbits = [sorted(members) for members in buckets.values()]
    return sorted(orbits, key=lambda orbit: (len(orbit[0]), orbit[0]))


def consistent_cycle_orbits(group: PermutationGroup, graph: Graph,
                            cycles: set[Walk] | None = None) -> CycleOrbitTable:
    """The census of G-orbits of G-consistent cycles.

    For a vertex-transitive group on a connected d-valent graph the table
    has exactly d records; otherwise the count assertion is suppressed and
    the table is still returned.
    """
    if cycles is None:
        cycles = enumerate_consistent_cycles(group, graph)
    orbits = partition_cycles(group, cycles)
    records = []
    for orbit in orbits:
        rep = orbit[0]
        stab = group.pointwise_stabilizer(rep[:-1])
        assert len(orbit) * stab.order == group.order
        records.append(OrbitRecord(
            representative=rep,
            length=len(rep) - 1,
            orbit_size=len(orbit),
            shunt_count=len(shunts(group, graph, rep)),
            stabilizer_order=stab.order,
            trivial=len(rep) == 3,
        ))
    transitive = is_vertex_transitive(group, graph)
    if transitive:
        assert len(records) == graph.valence(), (
            f"expected {graph.valence()} orbits, found {len(records)}")
    return CycleOrbitTable(records=tuple(records), group_order=group.order,
                           vertex_transitive=transitive)
