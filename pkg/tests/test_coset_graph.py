import json
import random

import pytest

import regsets as rs
from regsets.config import Limits
from regsets.errors import (
    IntersectsSubgroup,
    NotDoubleCosetUnion,
    NotEquitable,
    NotInverseClosed,
)

import oracles


def cayley(G, U):
    H = rs.trivial_subgroup(G)
    return rs.build(G, H, rs.validate_connection_set(H, U))


# -- connection set validation ------------------------------------------------


def test_empty_connection_set_valid(s3):
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    conn = rs.validate_connection_set(H, [])
    assert conn.degree == 0


def test_cayley_pair_valid():
    g = rs.cyclic(5)
    conn = rs.validate_connection_set(rs.trivial_subgroup(g), [1, 4])
    assert conn.degree == 2


def test_connection_set_meeting_subgroup_rejected(s3):
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    with pytest.raises(IntersectsSubgroup):
        rs.validate_connection_set(H, H.members)


def test_connection_set_not_inverse_closed():
    g = rs.cyclic(5)
    with pytest.raises(NotInverseClosed):
        rs.validate_connection_set(rs.trivial_subgroup(g), [1])


def test_connection_set_not_double_coset_union(s3):
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    x = s3.perms.index((1, 2, 0))
    with pytest.raises(NotDoubleCosetUnion):
        rs.validate_connection_set(H, [x, s3.inv[x]])


# -- graph construction ---------------------------------------------------------


def test_empty_graph(s3):
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    graph = rs.build(s3, H, rs.validate_connection_set(H, []))
    assert graph.vertex_count == 3
    assert all(graph.neighbors(v) == () for v in range(3))


def test_c4_cayley_is_four_cycle():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    assert sorted(graph.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_complete_graph():
    g = rs.cyclic(5)
    graph = cayley(g, [1, 2, 3, 4])
    assert all(len(graph.neighbors(v)) == 4 for v in range(5))


def test_graph_regularity_on_random_connection_sets(small_corpus):
    rng = random.Random(3)
    for G in small_corpus[:8]:
        for H in rs.all_subgroups(G)[:4]:
            units = oracles.inverse_closed_units(G, set(H.members))
            for _ in range(4):
                chosen = [u for u in units if rng.random() < 0.5]
                U = set().union(*chosen) if chosen else set()
                graph = rs.build(G, H, rs.validate_connection_set(H, U))
                k = len(U) // H.order
                assert graph.degree == k
                assert all(len(graph.neighbors(v)) == k for v in range(graph.vertex_count))


def test_adjacency_is_representative_independent(s3):
    # recompute the edge set with random (non-minimal) coset representatives
    rng = random.Random(9)
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    x = s3.perms.index((1, 2, 0))
    U = rs.double_coset(H, x)
    graph = rs.build(s3, H, rs.validate_connection_set(H, U))
    space = graph.space
    for _ in range(10):
        reps = [rng.choice(space.members(i)) for i in range(space.size)]
        edges = set()
        for i in range(space.size):
            for j in range(space.size):
                if i < j and s3.mult[s3.inv[reps[i]]][reps[j]] in U:
                    edges.add((i, j))
        assert edges == set(graph.edges())


def test_lazy_adjacency_above_threshold():
    g = rs.cyclic(8)
    H = rs.trivial_subgroup(g)
    conn = rs.validate_connection_set(H, [1, 7])
    lazy = rs.build(g, H, conn, limits=Limits(adjacency_vertex_cap=4))
    eager = rs.build(g, H, conn)
    assert all(lazy.neighbors(v) == eager.neighbors(v) for v in range(8))


# -- profiles ----------------------------------------------------------------------


def test_profile_edgeless(s3):
    H = rs.generate_subgroup(s3, [s3.perms.index((1, 0, 2))])
    graph = rs.build(s3, H, rs.validate_connection_set(H, []))
    assert rs.profile_subset(graph, [0, 1]) == (0, 0)


def test_profile_complete_graph():
    g = rs.cyclic(5)
    graph = cayley(g, [1, 2, 3, 4])
    assert rs.profile_subset(graph, [0, 2, 3]) == (2, 3)


def test_profile_four_cycle_antipodal():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    assert rs.profile_subset(graph, [0, 2]) == (0, 2)


def test_profile_not_regular_returns_none():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    # outside vertex 2 sees 0 vertices of {0}, vertices 1 and 3 see one
    assert rs.profile_subset(graph, [0]) is None


def test_profile_whole_vertex_set_degenerate():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    assert rs.profile_subset(graph, [0, 1, 2, 3]) == (2, 0)


def test_profile_empty_rejected():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    with pytest.raises(ValueError):
        rs.profile_subset(graph, [])


def test_profile_matches_naive_recount(small_corpus):
    rng = random.Random(21)
    for G in small_corpus[:8]:
        H = rs.all_subgroups(G)[0]
        units = oracles.inverse_closed_units(G, {0})
        for _ in range(5):
            chosen = [u for u in units if rng.random() < 0.5]
            U = set().union(*chosen) if chosen else set()
            graph = rs.build(G, rs.trivial_subgroup(G), rs.validate_connection_set(rs.trivial_subgroup(G), U))
            size = rng.randrange(1, G.order + 1)
            C = set(rng.sample(range(G.order), size))
            got = rs.profile_subset(graph, C)
            want = oracles.graph_profile(G, {0}, U, C)
            if want is None:
                assert got is None
            elif want[1] is None:
                assert got == (want[0], 0)
            else:
                assert got == want


def test_edge_double_count_identity(small_corpus):
    # |C| * (k - r) == (|V| - |C|) * s whenever a profile exists
    rng = random.Random(4)
    for G in small_corpus[:8]:
        for H in rs.all_subgroups(G)[:3]:
            units = oracles.inverse_closed_units(G, set(H.members))
            space = rs.left_cosets(G, H)
            if space.size < 2:
                continue
            for _ in range(6):
                chosen = [u for u in units if rng.random() < 0.5]
                U = set().union(*chosen) if chosen else set()
                graph = rs.build(G, H, rs.validate_connection_set(H, U))
                size = rng.randrange(1, space.size)
                C = set(rng.sample(range(space.size), size))
                prof = rs.profile_subset(graph, C)
                if prof is not None:
                    r, s = prof
                    assert len(C) * (graph.degree - r) == (space.size - len(C)) * s


# -- perfect codes --------------------------------------------------------------------


def test_singleton_in_complete_graph_is_code():
    g = rs.cyclic(5)
    graph = cayley(g, [1, 2, 3, 4])
    assert rs.is_perfect_code(graph, [2])


def test_single_vertex_of_four_cycle_is_not():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    assert not rs.is_perfect_code(graph, [0])


def test_a3_in_transposition_cayley_graph(s3):
    t = s3.perms.index((1, 0, 2))
    graph = cayley(s3, [t])
    A3 = rs.generate_subgroup(s3, [s3.perms.index((1, 2, 0))])
    assert rs.is_perfect_code(graph, A3.members)


def test_perfect_code_matches_profile_definition(small_corpus):
    rng = random.Random(17)
    for G in small_corpus[:6]:
        if G.order < 2:
            continue
        units = oracles.inverse_closed_units(G, {0})
        for _ in range(8):
            chosen = [u for u in units if rng.random() < 0.5]
            U = set().union(*chosen) if chosen else set()
            graph = cayley(G, U)
            size = rng.randrange(1, G.order)
            C = set(rng.sample(range(G.order), size))
            assert rs.is_perfect_code(graph, C) == (rs.profile_subset(graph, C) == (0, 1))


# -- quotient matrices -------------------------------------------------------------------


def test_quotient_matrix_single_cell():
    g = rs.cyclic(5)
    graph = cayley(g, [1, 2, 3, 4])
    qm = rs.quotient_matrix(graph, [range(5)])
    assert qm.entries == ((4,),)


def test_quotient_matrix_regular_set_form():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    qm = rs.quotient_matrix(graph, [[0, 2], [1, 3]])
    assert qm.entries == ((0, 2), (2, 0))


def test_quotient_matrix_row_sums_are_degree(s3):
    t = s3.perms.index((1, 0, 2))
    graph = cayley(s3, [t, s3.perms.index((1, 2, 0)), s3.perms.index((2, 0, 1))])
    qm = rs.quotient_matrix(graph, [[0, 1, 2, 3, 4, 5]])
    assert all(sum(row) == graph.degree for row in qm.entries)


def test_quotient_matrix_not_equitable_witness():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    with pytest.raises(NotEquitable) as err:
        rs.quotient_matrix(graph, [[0], [1, 2, 3]])
    assert err.value.witness == 2


def test_quotient_matrix_partition_validation():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    with pytest.raises(ValueError):
        rs.quotient_matrix(graph, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        rs.quotient_matrix(graph, [[0, 1]])


# -- export ------------------------------------------------------------------------------


def test_edge_list_export():
    g = rs.cyclic(4)
    graph = cayley(g, [1, 3])
    text = graph.to_edge_list_text()
    lines = text.strip().split("\n")
    header = json.loads(lines[0])
    assert header["vertices"] == 4 and header["degree"] == 2
    assert header["reps"] == {"0": 0, "1": 1, "2": 2, "3": 3}
    assert lines[1:] == ["0 1", "0 3", "1 2", "2 3"]
