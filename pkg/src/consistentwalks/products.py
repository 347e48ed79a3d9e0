"""Blow-up constructions: cycle families and the no-trivial-stabilizer check.

The blow-up of a graph by independent m-sets replaces each vertex by a
fiber of m points, with fibers of adjacent vertices completely joined.
Each base orbit representative lifts to m cycles that sweep 1..m fibers,
shunted by fiber-cycling wreath elements; over a twin-free base with no
spanning consistent cycle these land in pairwise distinct orbits and no
consistent walk of the blow-up has a trivial stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseNotVertexTransitive, BadParameters
from .graphs import (
    Graph,
    automorphism_group,
    blowup_point,
    is_vertex_transitive,
    lex_blowup,
    twin_vertices,
    verify_automorphisms,
)
from .perms import Perm, PermutationGroup
from .walks import (
    Walk,
    CycleOrbitTable,
    consistent_cycle_orbits,
    enumerate_consistent_cycles,
    partition_cycles,
    shunts,
)


def lift_base_perm(p: Perm, m: int) -> Perm:
    """Base automorphism acting on blow-up points, fibers untouched."""
    n = len(p)
    images = [0] * (n * m)
    for v in range(n):
        for i in range(m):
            images[blowup_point(v, i, m)] = blowup_point(p[v], i, m)
    return Perm(images)


def fiber_perm(n: int, m: int, v: int, fiber_images: Perm) -> Perm:
    """Permutation of vertex v's fiber, all other points fixed."""
    images = list(range(n * m))
    for i in range(m):
        images[blowup_point(v, i, m)] = blowup_point(v, fiber_images[i], m)
    return Perm(images)


def fiber_swap(n: int, m: int, v: int, i: int, j: int) -> Perm:
    """Transposition of two points in vertex v's fiber."""
    swap = list(range(m))
    swap[i], swap[j] = j, i
    return fiber_perm(n, m, v, Perm(swap))


def wreath_group_generators(base_graph: Graph, base_group: PermutationGroup,
                            m: int) -> list[Perm]:
    """Generators of (fiber symmetries) x (lifted base group) on the blow-up.

    Fiber generators act on vertex 0's fiber only; conjugation by lifted
    base elements reaches every fiber when the base group is transitive.
    Each generator is verified to be a blow-up automorphism.
    """
    n = base_graph.vertex_count
    gens = [fiber_swap(n, m, 0, 0, 1)] if m >= 2 else []
    if m >= 3:
        gens.append(fiber_perm(n, m, 0, Perm(tuple(range(1, m)) + (0,))))
    gens.extend(lift_base_perm(p, m) for p in base_group.generators)
    blowup, _ = lex_blowup(base_graph, m)
    verify_automorphisms(blowup, gens)
    return gens


@dataclass(frozen=True)
class BlowupCycleFamily:
    """The m lifted cycles per base orbit representative, with their shunts."""

    base_representatives: tuple[Walk, ...]
    m: int
    blowup: Graph
    cycles: dict[tuple[int, int], Walk]   # (orbit index, fiber count j) -> cycle
    shunts: dict[tuple[int, int], Perm]

    def all_cycles(self) -> list[Walk]:
        return [self.cycles[key] for key in sorted(self.cycles)]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "base_representatives": [list(r) for r in self.base_representatives],
            "cycles": [{"orbit": i, "fibers": j,
                        "cycle": list(self.cycles[i, j]),
                        "shunt": list(self.shunts[i, j])}
                       for i, j in sorted(self.cycles)],
        }


def blowup_cycle_family(graph: Graph, group: PermutationGroup,
                        m: int) -> BlowupCycleFamily:
    """Build the fiber-sweeping cycles over each base orbit representative.

    The cycle for fiber count j walks the base cycle through fibers
    0..j-1 in order; its shunt applies the base shunt and advances the
    fiber index on arrival at the root vertex.  Every shunt is verified to
    be a blow-up automorphism that shunts its cycle.
    """
    if m < 2:
        raise BadParameters("the family needs m >= 2")
    if not graph.connected:
        raise BadParameters("the base graph must be connected")
    if not is_vertex_transitive(group, graph):
        raise BaseNotVertexTransitive("the base group must be vertex-transitive")
    table = consistent_cycle_orbits(group, graph)
    blowup, _ = lex_blowup(graph, m)
    n = graph.vertex_count
    cycles: dict[tuple[int, int], Walk] = {}
    shunt_map: dict[tuple[int, int], Perm] = {}
    for i, record in enumerate(table.records):
        rep = record.representative
        support = rep[:-1]
        base_shunt = shunts(group, graph, rep)[0]
        root = rep[0]
        for j in range(1, m + 1):
            cycle = tuple(blowup_point(v, fiber, m)
                          for fiber in range(j) for v in support)
            cycle += (blowup_point(root, 0, m),)
            images = [0] * (n * m)
            for v in range(n):
                advance = base_shunt[v] == root
                for a in range(m):
                    image_fiber = (a + 1) % j if advance and a < j else a
                    images[blowup_point(v, a, m)] = blowup_point(base_shunt[v], image_fiber, m)
            shunt = Perm(images)
            verify_automorphisms(blowup, [shunt])
            assert all(shunt[a] == b for a, b in zip(cycle, cycle[1:])), (
                f"constructed element does not shunt the fiber cycle for {rep}")
            assert len(cycle) - 1 == j * record.length
            cycles[i, j] = cycle
            shunt_map[i, j] = shunt
    return BlowupCycleFamily(
        base_representatives=tuple(r.representative for r in table.records),
        m=m, blowup=blowup, cycles=cycles, shunts=shunt_map)


def family_orbit_ids(family: BlowupCycleFamily,
                     blowup_group: PermutationGroup,
                     orbits: list[list[Walk]] | None = None,
                     ) -> dict[tuple[int, int], int]:
    """Index of each family cycle in the blow-up's consistent-cycle orbits."""
    if orbits is None:
        cycles = enumerate_consistent_cycles(blowup_group, family.blowup)
        orbits = partition_cycles(blowup_group, cycles)
    locate = {c: k for k, orbit in enumerate(orbits) for c in orbit}
    return {key: locate[cycle] for key, cycle in family.cycles.items()}


def verify_no_trivial_stabilizer(group: PermutationGroup, graph: Graph,
                                 table: CycleOrbitTable | None = None,
                                 ) -> tuple[bool, Walk | None]:
    """True iff every consistent-cycle orbit has a nontrivial stabilizer.

    Every consistent walk induces a consistent cycle with a stabilizer at
    most as large, so checking orbit representatives settles all walks.
    Returns the offending cycle when the answer is False.
    """
    if table is None:
        table = consistent_cycle_orbits(group, graph)
    for record in table.records:
        if record.stabilizer_order == 1:
            return False, record.representative
    return True, None


def check_blowup_hypotheses(graph: Graph,
                             group: PermutationGroup | None = None) -> dict:
    """Hypothesis report for the blow-up counterexample construction.

    The circulant-with-adjacent-steps exclusion is checked through its
    operative consequence: no consistent cycle spans all vertices (a
    spanning consistent cycle's shunt would generate a cyclic
    vertex-regular subgroup).
    """
    if group is None:
        group = automorphism_group(graph)
    table = consistent_cycle_orbits(group, graph)
    spanning = [r.representative for r in table.records
                if r.length == graph.vertex_count]
    twins = twin_vertices(graph)
    report = {
        "connected": graph.connected,
        "vertex_transitive": is_vertex_transitive(group, graph),
        "twin_free": not twins,
        "twins": [list(p) for p in twins],
        "spanning_consistent_cycle": bool(spanning),
        "spanning_example": list(spanning[0]) if spanning else None,
        "max_consistent_cycle_length": max(table.lengths(), default=0),
    }
    report["satisfied"] = report["twin_free"] and not report["spanning_consistent_cycle"]
    return report
