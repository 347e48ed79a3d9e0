import pytest

import consistentwalks as cw


def build_family_graphs() -> dict[str, cw.Graph]:
    """The eight graphs every cross-module test runs against."""
    graphs = {
        "c6": cw.named_graph("cycle:6"),
        "k4": cw.named_graph("complete:4"),
        "q3": cw.named_graph("hypercube:3"),
        "petersen": cw.named_graph("petersen"),
        "k5": cw.named_graph("complete:5"),
        "q4": cw.named_graph("hypercube:4"),
    }
    graphs["c4k2"] = cw.lex_blowup(cw.named_graph("cycle:4"), 2)[0]
    graphs["q3k2"] = cw.lex_blowup(cw.named_graph("hypercube:3"), 2)[0]
    return graphs


FAMILY_VALENCE = {"c6": 2, "k4": 3, "q3": 3, "petersen": 3,
                  "k5": 4, "q4": 4, "c4k2": 4, "q3k2": 6}


@pytest.fixture(scope="session")
def family():
    """name -> (graph, full automorphism group) for the test family."""
    return {name: (graph, cw.automorphism_group(graph))
            for name, graph in build_family_graphs().items()}


@pytest.fixture(scope="session")
def censuses(family):
    """name -> CycleOrbitTable under the full automorphism group."""
    return {name: cw.consistent_cycle_orbits(group, graph)
            for name, (graph, group) in family.items()}


@pytest.fixture(scope="session")
def c4_wreath():
    """C4 blow-up with the fiber-wreath subgroup (local group dihedral)."""
    base = cw.named_graph("cycle:4")
    blowup, _ = cw.lex_blowup(base, 2)
    gens = cw.wreath_group_generators(base, cw.automorphism_group(base), 2)
    return blowup, cw.close_group(gens)
