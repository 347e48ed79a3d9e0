"""
The cycle census: one orbit per unit of valence
===============================================

A walk in a graph is consistent (for a group G of automorphisms) when one
element of G slides it forward along itself.  Closed consistent walks are
the consistent cycles, rooted and directed, down to the degenerate
out-and-back "trivial cycle" (u, v, u) on each edge.

For a vertex-transitive group on a d-valent graph, the consistent cycles
fall into exactly d orbits.  This script computes the census for a small
zoo of graphs and prints the orbit tables.
"""

import consistentwalks as cw

ZOO = [
    ("hexagon", cw.named_graph("cycle:6")),
    ("tetrahedron K4", cw.named_graph("complete:4")),
    ("cube Q3", cw.named_graph("hypercube:3")),
    ("Petersen", cw.named_graph("petersen")),
    ("K5", cw.named_graph("complete:5")),
    ("4-cube Q4", cw.named_graph("hypercube:4")),
]

for name, graph in ZOO:
    group = cw.automorphism_group(graph)
    table = cw.consistent_cycle_orbits(group, graph)
    print(f"\n{name}: {graph.vertex_count} vertices, valence {graph.valence()}, "
          f"|Aut| = {group.order}")
    print(f"  {len(table.records)} orbits of consistent cycles "
          f"(= valence, as promised)")
    print("  length  orbit  shunts  |stabilizer|  trivial")
    for rec in table.records:
        print(f"  {rec.length:>6}  {rec.orbit_size:>5}  {rec.shunt_count:>6}"
              f"  {rec.stabilizer_order:>12}  {rec.trivial}")
        # orbit size times stabilizer order always recovers |Aut|
        assert rec.orbit_size * rec.stabilizer_order == group.order

print("""
Reading the tables: every orbit record satisfies
orbit_size * stabilizer_order = |Aut|, and the number of records always
equals the valence.  The trivial cycles always form one orbit of their own;
how many shunts each cycle has varies from orbit to orbit.
""")
