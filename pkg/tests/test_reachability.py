import random

import pytest

import consistentwalks as cw
from consistentwalks.errors import NotConsistent, OrbitTooLarge, WalkTooShort
from consistentwalks.reachability import no_intermediate_divisor

import oracles


ROTATION6 = cw.Perm((1, 2, 3, 4, 5, 0))


def test_arc_has_property_r(family):
    for name in ("c6", "k4", "q3", "petersen", "k5"):
        graph, group = family[name]
        arc = (0, graph.adj[0][0])
        assert cw.reachability_by_shunt_group(group, graph, arc).verdict
        assert cw.reachability_by_chase(group, graph, arc).verdict


def test_property_r_under_rotations_only():
    c6 = cw.named_graph("cycle:6")
    rotations = cw.close_group([ROTATION6])
    report = cw.reachability_by_shunt_group(rotations, c6, (0, 1, 2))
    assert report.verdict
    assert report.witness["shunt_group_order"] == 6


def test_shunt_group_equals_closure_of_all_shunts(family):
    # the prefix stabilizer plus any one shunt generates the same group as
    # the entire shunt coset
    rng = random.Random(99)
    for name in ("c6", "k4", "q3", "petersen"):
        graph, group = family[name]
        walk = oracles.random_consistent_walk(group, graph, rng, max_length=4)
        all_shunts = cw.shunts(group, graph, walk)
        direct = cw.close_group(all_shunts, degree=group.degree)
        prefix_stab = group.pointwise_stabilizer(walk[:-1])
        via_prefix_stabilizer = cw.close_group(
            list(prefix_stab.small_generating_set()) + [all_shunts[0]],
            degree=group.degree)
        assert direct.subgroup_equals(via_prefix_stabilizer)


def test_property_r_not_consistent():
    c6 = cw.named_graph("cycle:6")
    rotations = cw.close_group([ROTATION6])
    with pytest.raises(NotConsistent):
        cw.reachability_by_shunt_group(rotations, c6, (0, 1, 0))
    with pytest.raises(NotConsistent):
        cw.reachability_by_chase(rotations, c6, (0, 1, 0))


def test_chase_witness_chains(family):
    k4, aut = family["k4"]
    report = cw.reachability_by_chase(aut, k4, (0, 1), target=1)
    assert report.verdict and report.witness["chain"] == []
    report = cw.reachability_by_chase(aut, k4, (0, 1), target=3)
    chain = report.witness["chain"]
    assert chain and chain[-1][-1] == 3
    assert len(chain) <= 3  # diameter 1 plus slack
    # the chain is a genuine successor sequence
    current = (0, 1)
    for step in chain:
        assert tuple(step) in cw.successors(aut, k4, current)
        current = tuple(step)


def test_methods_agree_on_samples(family):
    rng = random.Random(15)
    for name in ("c6", "k4", "q3", "petersen", "c4k2"):
        graph, group = family[name]
        for _ in range(8):
            walk = oracles.random_consistent_walk(group, graph, rng)
            by_group = cw.reachability_by_shunt_group(group, graph, walk)
            by_chase = cw.reachability_by_chase(group, graph, walk)
            assert by_group.verdict == by_chase.verdict


def test_blowup_two_arc_fiber_chase(c4_wreath):
    # a 2-arc in the C4 blow-up under the fiber wreath group: compute both
    # verdicts, no claim which way, only that they agree
    blowup, wreath = c4_wreath
    walk = (2, 0, 6)
    by_group = cw.reachability_by_shunt_group(wreath, blowup, walk)
    by_chase = cw.reachability_by_chase(wreath, blowup, walk)
    assert by_group.verdict == by_chase.verdict


def test_no_intermediate_divisor_arithmetic():
    assert no_intermediate_divisor(3, 3)      # empty range
    assert no_intermediate_divisor(2, 3)      # 2 does not divide 3
    assert not no_intermediate_divisor(2, 4)  # 2 divides 4
    assert not no_intermediate_divisor(1, 2)  # 1 divides everything


def test_check_conditions_k4(family):
    k4, aut = family["k4"]
    shunt = cw.shunts(aut, k4, (0, 1, 2))[0]
    report = cw.check_conditions(aut, k4, (0, 1, 2), shunt)
    assert (report.succ_count, report.prefix_succ_count) == (2, 3)
    assert report.condition_a and report.condition_b and report.condition_c
    assert report.succ_count <= report.prefix_succ_count


def test_check_conditions_c_implies_b(family):
    rng = random.Random(16)
    for name in ("c6", "k4", "q3", "petersen"):
        graph, group = family[name]
        for _ in range(5):
            walk = oracles.random_consistent_walk(group, graph, rng, max_length=4)
            if len(walk) < 3:
                walk = cw.consistent_extensions(group, graph, walk)[0]
            shunt = cw.shunts(group, graph, walk)[0]
            report = cw.check_conditions(group, graph, walk, shunt)
            assert not report.condition_c or report.condition_b


def test_check_conditions_walk_too_short(family):
    c6, aut = family["c6"]
    with pytest.raises(WalkTooShort):
        cw.check_conditions(aut, c6, (0, 1), cw.shunts(aut, c6, (0, 1))[0])


def all_consistent_walks_up_to(group, graph, max_length):
    """Every consistent walk of length 2..max_length (exhaustive, small graphs)."""
    walks = [(u, w) for u in range(graph.vertex_count) for w in graph.adj[u]
             if cw.is_consistent(group, graph, (u, w))]
    for _ in range(max_length - 1):
        longer = [ext for w in walks if len(w) <= max_length
                  for ext in cw.consistent_extensions(group, graph, w)]
        fresh = [w for w in longer if len(w) - 1 <= max_length]
        yield from fresh
        walks = fresh


def test_conditions_lift_property_r_exhaustively(family):
    # whenever the prefix reaches every vertex and some condition holds, the
    # walk itself does too; exhaustive over the small graphs'
    # consistent walks of length <= 5, sampled elsewhere for the large ones
    for name in ("c6", "k4", "q3"):
        graph, group = family[name]
        for walk in all_consistent_walks_up_to(group, graph, 5):
            shunt = cw.shunts(group, graph, walk)[0]
            report = cw.check_conditions(group, graph, walk, shunt)
            prefix_r = cw.reachability_by_shunt_group(group, graph, walk[:-1]).verdict
            if prefix_r and (report.condition_a or report.condition_b
                             or report.condition_c):
                assert cw.reachability_by_shunt_group(group, graph, walk).verdict


def test_conditions_lift_property_r_sampled(family):
    rng = random.Random(17)
    for name in ("petersen", "q4", "c4k2"):
        graph, group = family[name]
        for _ in range(6):
            walk = oracles.random_consistent_walk(group, graph, rng, max_length=5)
            if len(walk) < 3:
                continue
            shunt = cw.shunts(group, graph, walk)[0]
            report = cw.check_conditions(group, graph, walk, shunt)
            prefix_r = cw.reachability_by_shunt_group(group, graph, walk[:-1]).verdict
            if prefix_r and (report.condition_a or report.condition_b
                             or report.condition_c):
                assert cw.reachability_by_shunt_group(group, graph, walk).verdict


def test_stabilizer_fixes_successors(family):
    c6, aut6 = family["c6"]
    assert cw.stabilizer_fixes_successors(aut6, c6, (0, 1, 2))  # trivial stabilizer
    k5, aut5 = family["k5"]
    assert not cw.stabilizer_fixes_successors(aut5, k5, (0, 1))


def test_fixes_successors_plus_property_r_forces_trivial_stabilizer(family):
    rng = random.Random(18)
    for name in ("k4", "q3", "petersen", "k5"):
        graph, group = family[name]
        for _ in range(6):
            walk = oracles.random_consistent_walk(group, graph, rng)
            if (cw.reachability_by_shunt_group(group, graph, walk).verdict
                    and cw.stabilizer_fixes_successors(group, graph, walk)):
                assert len(oracles.oracle_stabilizer(group, walk)) == 1


def test_certify_k4_two_arc(family):
    k4, aut = family["k4"]
    cert = cw.certify_trivial_stabilizer(aut, k4, (0, 1, 2))
    assert cert["certified"]
    assert cert["stabilizer_order"] == 1
    assert cert["prefix_conditions"] == [{"n": 1, "a": True, "b": True, "c": True}]


def test_certify_failure_reasons(family):
    k5, aut5 = family["k5"]
    cert = cw.certify_trivial_stabilizer(aut5, k5, (0, 1))
    assert not cert["certified"]
    assert cert["failure_reason"] == "final fix check"

    # conditions are sufficient, not necessary: this walk's stabilizer is
    # trivial yet its only prefix fails all three conditions
    c6, aut6 = family["c6"]
    cert = cw.certify_trivial_stabilizer(aut6, c6, (0, 1, 2))
    assert not cert["certified"]
    assert "violates all three conditions" in cert["failure_reason"]
    assert cert["stabilizer_order"] == 1


def test_successor_reachability_classes_rotations_single_class():
    c6 = cw.named_graph("cycle:6")
    rotations = cw.close_group([ROTATION6])
    classes = cw.successor_reachability_classes(rotations, c6, (0, 1, 2))
    assert len(classes) == 1


def test_successor_reachability_classes_block_structure(family):
    c6, aut6 = family["c6"]
    classes = cw.successor_reachability_classes(aut6, c6, (0, 1, 2))
    # orientation splits the 12 arcs into two G-invariant blocks
    assert sorted(len(c) for c in classes) == [6, 6]

    k4, aut4 = family["k4"]
    classes = cw.successor_reachability_classes(aut4, k4, (0, 1, 2))
    sizes = {len(c) for c in classes}
    assert len(sizes) == 1  # blocks of a transitive action share a size
    assert sum(len(c) for c in classes) == len(aut4.tuple_orbit((0, 1)))


def test_sim_alpha_prefix_and_shift_share_class(family):
    for name in ("c6", "k4", "q3"):
        graph, group = family[name]
        walk = oracles.random_consistent_walk(group, graph, random.Random(19), max_length=3)
        if len(walk) < 3:
            walk = cw.consistent_extensions(group, graph, walk)[0]
        shunt = cw.shunts(group, graph, walk)[0]
        classes = cw.successor_reachability_classes(group, graph, walk)
        prefix = walk[:-1]
        shifted = tuple(shunt[v] for v in prefix)
        (home,) = [c for c in classes if prefix in c]
        assert shifted in home


def test_sim_alpha_reachability_is_symmetric(family):
    # directed successor-prefix reachability restricted to a class is total:
    # every ordered pair is connected, which is the symmetry the class
    # partition silently relies on
    k4, aut = family["k4"]
    walk = (0, 1, 2)
    classes = cw.successor_reachability_classes(aut, k4, walk)
    edges: dict[tuple, set[tuple]] = {}
    for member in aut.tuple_orbit(walk):
        edges.setdefault(member[:-1], set()).add(member[1:])
    for cls in classes:
        for start in cls:
            seen = {start}
            frontier = [start]
            while frontier:
                new = []
                for node in frontier:
                    for nxt in edges.get(node, ()):
                        if nxt not in seen:
                            seen.add(nxt)
                            new.append(nxt)
                frontier = new
            assert seen == set(cls)


def test_sim_alpha_errors(family):
    c6, aut = family["c6"]
    with pytest.raises(WalkTooShort):
        cw.successor_reachability_classes(aut, c6, (0, 1))
    with pytest.raises(OrbitTooLarge):
        cw.successor_reachability_classes(aut, c6, (0, 1, 2), cap=3)
