import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from strategies import equipped_trees

from eqtree.automorphism import validate_automorphism
from eqtree.canonical import VERSION, CodeKind, canon_quotient, canonical_code
from eqtree.colored_tree import validate_tree
from eqtree.generator import random_relabel
from eqtree.quotient import build_dynamics_quotient, expand_quotient, make_quotient


def test_fix_d_relabelings(fix_d):
    et = expand_quotient(fix_d)
    code = canonical_code(et)
    rng = np.random.default_rng(7)
    for _ in range(10):
        assert canonical_code(random_relabel(et, rng)) == code


def test_orientation_free():
    first = make_quotient(2, [1, 3], [(0, 1, 1)], 1)
    second = make_quotient(2, [3, 1], [(1, 0, 1)], 1)
    assert canon_quotient(first) == canon_quotient(second)


def test_weight_distinguishes():
    first = make_quotient(2, [1, 3], [(0, 1, 1)], 1)
    second = make_quotient(2, [1, 2], [(0, 1, 1)], 1)
    assert canon_quotient(first) != canon_quotient(second)


def test_color_distinguishes():
    first = make_quotient(3, [1, 1, 1], [(0, 1, 1), (1, 2, 2)], 2)
    second = make_quotient(3, [1, 1, 1], [(0, 1, 2), (1, 2, 2)], 2)
    assert canon_quotient(first) != canon_quotient(second)


def test_code_kinds(fix_d, star_rotation, path4_swap):
    assert canon_quotient(fix_d).kind == CodeKind.BICENTRAL
    star = make_quotient(2, [1, 3], [(0, 1, 1)], 1)
    assert canon_quotient(star).kind == CodeKind.CENTRAL
    assert canon_quotient(build_dynamics_quotient(path4_swap)).kind == CodeKind.LOOP
    assert canon_quotient(fix_d, root=5).kind == CodeKind.ROOTED

    assert canonical_code(expand_quotient(fix_d)).kind == CodeKind.FIXED
    assert canonical_code(star_rotation).kind == CodeKind.CENTRAL_DOUBLED
    assert canonical_code(path4_swap).kind == CodeKind.SWAPPED


def test_hex_layout():
    code = canon_quotient(make_quotient(1, [1], [], 1))
    assert code.data[0] == VERSION
    assert code.hex() == code.hex().lower()
    assert code.hex().startswith("0101")
    # one level, one tuple (1,), root id 0
    assert code.data[2:] == np.asarray([1, 1, 1, 1, 1, 0], dtype=">u4").tobytes()


def test_central_color_enters_swapped_codes(path4_swap):
    tree = validate_tree(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)], 2)
    recolored = validate_automorphism(tree, [3, 2, 1, 0])
    assert canonical_code(recolored) != canonical_code(path4_swap)


@given(equipped_trees(max_n=60), st.integers(0, 2**32 - 1))
def test_relabel_invariance(et, seed):
    rng = np.random.default_rng(seed)
    assert canonical_code(random_relabel(et, rng)) == canonical_code(et)
