import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import gen_specs

from eqtree.automorphism import check_structure_laws, cycle_type, edge_period
from eqtree.errors import (
    CentralOrbitNotFixed,
    CentralWeightNotOne,
    DivisibilityViolated,
    DocumentError,
    LoopPresent,
)
from eqtree.generator import gen_quotient
from eqtree.modules.brute_force_module import iso_brute
from eqtree.quotient import (
    build_dynamics_quotient,
    build_quotient,
    expand_quotient,
    make_quotient,
    quotient_with_map,
)


def test_fix_d_expanded_ranks(fix_d):
    assert fix_d.n == 14
    assert fix_d.expanded.rank == (2, 2, 1, 1, 1, 0, 0, 0)
    assert fix_d.expanded.centers == (0, 1)
    assert fix_d.normalized() == fix_d


def test_fix_d_round_trip(fix_d):
    et = expand_quotient(fix_d)
    assert et.n == 14
    assert et.ranks.centers == (0, 1)
    assert sorted(cycle_type(et)) == sorted(fix_d.weight)
    assert check_structure_laws(et).passed
    assert build_quotient(et) == fix_d


def test_quotient_with_map_sends_vertices_to_orbits(fix_d):
    et = expand_quotient(fix_d)
    q, qvertex = quotient_with_map(et)
    for a in range(q.m):
        assert sum(1 for v in range(et.n) if qvertex[v] == a) == q.weight[a]


def test_star_quotient_is_central():
    star = make_quotient(2, [1, 3], [(0, 1, 1)], 1)
    assert star.expanded.centers == (0,)
    et = expand_quotient(star)
    assert et.ranks.centers == (0,)
    assert cycle_type(et) == (1, 3)


def test_edges_are_stored_sorted():
    q = make_quotient(3, [1, 1, 1], [(2, 0, 1), (1, 0, 2)], 2)
    assert q.qedges == ((0, 1, 2), (0, 2, 1))


def test_divisibility_violated():
    q = make_quotient(3, [1, 2, 3], [(0, 1, 1), (1, 2, 1)], 1)
    with pytest.raises(DivisibilityViolated) as info:
        expand_quotient(q)
    assert info.value.position == "edges[1]"


def test_weights_that_close_a_cycle():
    q = make_quotient(3, [1, 2, 1], [(0, 1, 1), (1, 2, 1)], 1)
    with pytest.raises(DivisibilityViolated):
        expand_quotient(q)


def test_central_weight_not_one():
    q = make_quotient(2, [2, 2], [(0, 1, 1)], 1)
    with pytest.raises(CentralWeightNotOne):
        expand_quotient(q)


@pytest.mark.parametrize(
    "weights, loop, position",
    [
        ([1, 0], None, "weights[1]"),
        ([1, 1], (0, 1), "loop"),
        ([2, 2], (0, 3), "loop"),
        ([1], None, "weights"),
    ],
)
def test_make_quotient_rejects(weights, loop, position):
    with pytest.raises(DocumentError) as info:
        make_quotient(2, weights, [(0, 1, 1)], 2, loop)
    assert info.value.position == position


def test_swapped_center_has_no_plain_quotient(path4_swap):
    with pytest.raises(CentralOrbitNotFixed):
        build_quotient(path4_swap)


def test_dynamics_quotient_keeps_a_loop(path4_swap):
    q = build_dynamics_quotient(path4_swap)
    assert q == make_quotient(2, [2, 2], [(0, 1, 1)], 2, loop=(0, 2))
    with pytest.raises(LoopPresent):
        expand_quotient(q)


@given(gen_specs(max_n=60, loop_probability=0.0), st.integers(0, 2**32 - 1))
def test_quotient_of_expansion_is_normalized(spec, seed):
    q = gen_quotient(spec, np.random.default_rng(seed))
    assert build_quotient(expand_quotient(q)) == q.normalized()


@given(gen_specs(max_n=9, loop_probability=0.0), st.integers(0, 2**32 - 1))
def test_expansion_of_quotient_is_isomorphic(spec, seed):
    et = expand_quotient(gen_quotient(spec, np.random.default_rng(seed)))
    assert iso_brute(expand_quotient(build_quotient(et)), et) is not None


@given(gen_specs(max_n=60, loop_probability=0.0), st.integers(0, 2**32 - 1))
def test_edge_period_is_the_weight_of_the_lower_endpoint(spec, seed):
    et = expand_quotient(gen_quotient(spec, np.random.default_rng(seed)))
    q, vertex_map = quotient_with_map(et)
    rank = et.ranks.rank
    for u, v, _ in et.tree.edges:
        if rank[u] == rank[v]:
            assert edge_period(et, (u, v)) == 1
            continue
        lower = u if rank[u] < rank[v] else v
        assert edge_period(et, (u, v)) == q.weight[vertex_map[lower]]
