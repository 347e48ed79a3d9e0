import random

import pytest

import consistentwalks as cw
from consistentwalks.errors import InvalidWalk, NotConsistent

import oracles


ROTATION6 = cw.Perm((1, 2, 3, 4, 5, 0))


def test_validate_walk_errors():
    c6 = cw.named_graph("cycle:6")
    with pytest.raises(InvalidWalk):
        cw.validate_walk(c6, (0,))
    with pytest.raises(InvalidWalk):
        cw.validate_walk(c6, (0, 0))  # loops excluded in simple graphs
    with pytest.raises(InvalidWalk):
        cw.validate_walk(c6, (0, 2))
    with pytest.raises(InvalidWalk):
        cw.validate_walk(c6, (0, 9))


def test_shunts_c6(family):
    c6, aut = family["c6"]
    arc = cw.shunts(aut, c6, (0, 1))
    assert len(arc) == 2  # the rotation and one reflection
    assert ROTATION6 in arc
    closed = cw.shunts(aut, c6, (0, 1, 0))
    assert len(closed) == 1
    assert closed[0][0] == 1 and closed[0][1] == 0


def test_shunts_rotation_only_trivial_walk():
    c6 = cw.named_graph("cycle:6")
    rotations = cw.close_group([ROTATION6])
    # no rotation both sends 0 to 1 and 1 to 0, in either orientation
    assert cw.shunts(rotations, c6, (0, 1, 0)) == []
    assert cw.shunts(rotations, c6, (1, 0, 1)) == []
    assert cw.is_consistent(rotations, c6, (0, 1, 0)) is None


def test_shunt_coset_identities(family):
    # the shunt set is simultaneously a left and a right stabilizer coset
    rng = random.Random(11)
    for name in ("c6", "k4", "q3", "petersen"):
        graph, group = family[name]
        for _ in range(6):
            walk = oracles.random_consistent_walk(group, graph, rng, max_length=4)
            shs = set(cw.shunts(group, graph, walk))
            assert shs == set(oracles.oracle_shunts(group, walk))
            g0 = min(shs)
            suffix = oracles.oracle_stabilizer(group, walk[1:])
            prefix = oracles.oracle_stabilizer(group, walk[:-1])
            assert shs == {g0 * h for h in suffix} == {h * g0 for h in prefix}


def test_shunt_conjugation(family):
    rng = random.Random(12)
    graph, group = family["petersen"]
    for _ in range(5):
        walk = oracles.random_consistent_walk(group, graph, rng, max_length=4)
        x = group.elements[rng.randrange(group.order)]
        moved = tuple(x[v] for v in walk)
        conjugated = {x.inverse() * g * x for g in cw.shunts(group, graph, walk)}
        assert conjugated == set(cw.shunts(group, graph, moved))


def test_prefix_consistency_inheritance(family):
    rng = random.Random(13)
    graph, group = family["q3"]
    for _ in range(5):
        walk = oracles.random_consistent_walk(group, graph, rng, max_length=4)
        if len(walk) < 3:
            continue
        shs = set(cw.shunts(group, graph, walk))
        assert shs <= set(cw.shunts(group, graph, walk[:-1]))


def test_is_consistent_witnesses(family):
    pet, autp = family["petersen"]
    witness = cw.is_consistent(autp, pet, (0, 7, 3))
    assert witness is not None
    assert all(witness.shunt[a] == b for a, b in zip(witness.walk, witness.walk[1:]))


def test_successors_k5(family):
    k5, aut = family["k5"]
    succ = cw.successors(aut, k5, (0, 1))
    assert len(succ) == 4
    assert {s[-1] for s in succ} == {0, 2, 3, 4}  # every neighbor of 1
    assert all(s[0] == 1 for s in succ)


def test_successors_singleton(family):
    c6, aut = family["c6"]
    assert cw.successors(aut, c6, (0, 1, 0)) == [(1, 0, 1)]


def test_successors_petersen_two_arc(family):
    pet, aut = family["petersen"]
    two_arc = (0, 7, 3)
    succ = cw.successors(aut, pet, two_arc)
    assert len(succ) == 2


def test_successors_not_consistent():
    c6 = cw.named_graph("cycle:6")
    rotations = cw.close_group([ROTATION6])
    with pytest.raises(NotConsistent):
        cw.successors(rotations, c6, (0, 1, 0))


def test_successor_count_identities(family):
    k5, aut5 = family["k5"]
    assert cw.successor_count(aut5, k5, (0, 1)) == 4
    stab_u = oracles.oracle_stabilizer(aut5, (0,))
    stab_uv = oracles.oracle_stabilizer(aut5, (0, 1))
    assert len(stab_u) == 24 and len(stab_uv) == 6
    assert len(stab_u) // len(stab_uv) == 4

    c6, aut6 = family["c6"]
    assert cw.successor_count(aut6, c6, (0, 1, 0)) == 1
    q3, aut3 = family["q3"]
    assert cw.successor_count(aut3, q3, (1, 0, 2)) == 2


def test_order_identity_on_random_walks(family):
    rng = random.Random(14)
    for name in ("c6", "k4", "petersen", "q4"):
        graph, group = family[name]
        for _ in range(5):
            walk = oracles.random_consistent_walk(group, graph, rng)
            count = cw.successor_count(group, graph, walk)
            prefix = len(oracles.oracle_stabilizer(group, walk[:-1]))
            full = len(oracles.oracle_stabilizer(group, walk))
            assert prefix == full * count


def test_induced_cycle_examples(family):
    c6, aut6 = family["c6"]
    hexagon = cw.induced_cycle(cw.ConsistencyWitness((0, 1), ROTATION6, aut6))
    assert hexagon == (0, 1, 2, 3, 4, 5, 0)
    reflection = cw.shunts(aut6, c6, (0, 1, 0))[0]
    assert cw.induced_cycle(cw.ConsistencyWitness((0, 1, 0), reflection, aut6)) == (0, 1, 0)
    # a walk already wrapping past its root truncates to one period
    wrapped = cw.ConsistencyWitness((0, 1, 2, 3, 4, 5, 0, 1), ROTATION6, aut6)
    assert cw.induced_cycle(wrapped) == (0, 1, 2, 3, 4, 5, 0)

    k4, aut4 = family["k4"]
    three_cycle = cw.Perm((1, 2, 0, 3))
    triangle = cw.induced_cycle(cw.ConsistencyWitness((0, 1), three_cycle, aut4))
    assert triangle == (0, 1, 2, 0)


@pytest.mark.parametrize("name,lengths", [
    ("c6", [2, 6]),
    ("k4", [2, 3, 4]),
    ("petersen", [2, 5, 6]),
])
def test_census_against_oracle(name, lengths, family, censuses):
    graph, group = family[name]
    table = censuses[name]
    assert table.lengths() == lengths
    oracle_orbits = oracles.oracle_cycle_orbits(group, graph)
    assert len(oracle_orbits) == len(table.records)
    for record, orbit in zip(table.records, oracle_orbits):
        assert record.representative == orbit[0]
        assert record.orbit_size == len(orbit)
        assert record.shunt_count == len(oracles.oracle_shunts(group, record.representative))
        assert record.stabilizer_order == len(
            oracles.oracle_stabilizer(group, record.representative[:-1]))


def test_census_k5_shunt_counts(censuses):
    table = censuses["k5"]
    assert sorted(table.shunt_counts()) == [1, 1, 2, 6]
    assert table.trivial_record().shunt_count == 6


def test_census_orbit_stabilizer_invariant(family, censuses):
    for name, table in censuses.items():
        group = family[name][1]
        for record in table.records:
            assert record.orbit_size * record.stabilizer_order == group.order


def test_census_without_vertex_transitivity():
    # path graph: only automorphism flips the ends, nothing shunts an arc
    path = cw.validate(3, [(0, 1), (1, 2)])
    aut = cw.automorphism_group(path)
    assert aut.order == 2
    table = cw.consistent_cycle_orbits(aut, path)
    assert not table.vertex_transitive
    assert table.records == ()


def test_census_serialization(censuses):
    data = censuses["c6"].to_json()
    assert [row["length"] for row in data] == [2, 6]
    assert all(set(row) == {"representative", "length", "orbit_size",
                            "shunt_count", "stabilizer_order", "trivial"}
               for row in data)
