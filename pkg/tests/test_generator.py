import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import gen_specs

from eqtree.automorphism import NormalCase, check_structure_laws, normalize, validate_automorphism
from eqtree.colored_tree import Mode, validate_tree
from eqtree.errors import InfeasibleSpec, ParameterError, WrongMode
from eqtree.generator import GenSpec, PairKind, gen_equipped, make_pair
from eqtree.modules.canon_module import iso_decide


def test_single_vertex():
    et = gen_equipped(GenSpec(n=1))
    assert et.n == 1
    assert et.tree.edges == ()
    assert et.perm.image == (0,)


def test_deterministic():
    spec = GenSpec(n=14, k=3, seed=42)
    assert gen_equipped(spec) == gen_equipped(spec)


def test_swapped_instances():
    et = gen_equipped(GenSpec(n=10, seed=5, loop_probability=1.0))
    assert et.n == 10
    assert normalize(et).case == NormalCase.SWAPPED


def test_odd_swapped_is_infeasible():
    with pytest.raises(InfeasibleSpec) as info:
        gen_equipped(GenSpec(n=7, loop_probability=1.0))
    assert info.value.nearest == 6
    assert info.value.position == "n"


def test_empty_is_infeasible():
    with pytest.raises(InfeasibleSpec) as info:
        gen_equipped(GenSpec(n=0))
    assert info.value.nearest == 1


def test_morse_smale_mode():
    et = gen_equipped(GenSpec(n=9, k=2, seed=1, mode=Mode.MORSE_SMALE))
    assert et.tree.mode == Mode.MORSE_SMALE
    with pytest.raises(WrongMode):
        gen_equipped(GenSpec(n=9, k=3, mode=Mode.MORSE_SMALE))


def test_noniso_on_star():
    tree = validate_tree(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)], 2)
    star = validate_automorphism(tree, [0, 2, 3, 1])
    first, second, expected = make_pair(star, PairKind.NONISO, seed=0)
    assert expected is False
    assert not iso_decide(first, second)


@given(gen_specs(max_n=200))
def test_generated_instances_pass_validators(spec):
    et = gen_equipped(spec)
    assert et.n == spec.n
    assert max(et.orbits.sizes) <= 2 * spec.max_orbit
    assert check_structure_laws(et).passed


@given(gen_specs(max_n=40), st.integers(0, 2**32 - 1))
def test_pairs_decide_as_expected(spec, seed):
    et = gen_equipped(spec)
    first, second, expected = make_pair(et, PairKind.ISO, seed)
    assert expected and iso_decide(first, second)
    first, second, expected = make_pair(et, PairKind.NONISO, seed)
    assert not expected and not iso_decide(first, second)


def test_make_pair_is_deterministic():
    et = gen_equipped(GenSpec(n=20, seed=3))
    assert make_pair(et, "noniso", 9) == make_pair(et, "noniso", 9)


def test_negative_seeds_are_rejected():
    with pytest.raises(ParameterError) as info:
        gen_equipped(GenSpec(n=5, seed=-1))
    assert info.value.position == "seed"
    with pytest.raises(ParameterError):
        make_pair(gen_equipped(GenSpec(n=5)), PairKind.ISO, -3)
