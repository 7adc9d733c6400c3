import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqtree.automorphism import NormalCase, normalize, validate_automorphism
from eqtree.colored_tree import Mode, validate_tree
from eqtree.errors import WrongMode
from eqtree.generator import GenSpec, gen_equipped, with_mode
from eqtree.morse_smale import ms_report
from eqtree.quotient import build_dynamics_quotient


def test_fig1_shape(fig1_instance):
    report = ms_report(fig1_instance)
    assert report.saddle_count == 3
    assert report.domain_count == 4
    assert len(report.saddle_orbits) == 3
    assert [orbit.color for orbit in report.saddle_orbits] == ["u", "s", "u"]
    assert report.negative_orientation_saddles == 0


def test_swapped_central_saddle(path4_swap):
    report = ms_report(with_mode(path4_swap, Mode.MORSE_SMALE))
    assert report.saddle_count == 3
    assert [(o.color, o.period) for o in report.saddle_orbits] == [("s", 2), ("u", 1)]
    negative = [o for o in report.saddle_orbits if o.negative_orientation]
    assert len(negative) == 1
    assert negative[0].period == 1
    assert negative[0].edges == ((1, 2),)
    assert report.domain_periods == (2, 2)
    assert report.period == 2


def test_north_south():
    tree = validate_tree(1, [], 2, Mode.MORSE_SMALE)
    report = ms_report(validate_automorphism(tree, [0]))
    assert report.to_dict() == {
        "k_f": 0,
        "domains": 1,
        "saddle_orbits": [],
        "saddle_orbit_count": 0,
        "negative_orientation_saddles": 0,
        "domain_periods": [1],
        "period": 1,
    }


def test_generic_mode_is_rejected(star_rotation):
    with pytest.raises(WrongMode):
        ms_report(star_rotation)


@given(st.integers(1, 40), st.integers(0, 2**32 - 1), st.sampled_from([0.0, 0.3, 0.7, 1.0]))
def test_dynamics_quotients_loop_exactly_when_swapped(n, seed, loop_probability):
    if n % 2 == 1 and loop_probability >= 1.0:
        n += 1
    spec = GenSpec(n=n, k=2, seed=seed, loop_probability=loop_probability, mode=Mode.MORSE_SMALE)
    et = gen_equipped(spec)
    swapped = normalize(et).case == NormalCase.SWAPPED
    q = build_dynamics_quotient(et)
    assert (q.loop is not None) == swapped
    if swapped:
        assert q.weight[q.loop[0]] == 2
    report = ms_report(et)
    assert report.negative_orientation_saddles == (1 if swapped else 0)
    assert report.period == int(np.lcm.reduce(list(et.orbits.sizes)))
