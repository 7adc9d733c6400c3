import pytest
from hypothesis import HealthCheck, settings

from instances import FIX_D_EDGES, FIX_D_WEIGHTS

from eqtree.automorphism import validate_automorphism
from eqtree.colored_tree import Mode, validate_tree
from eqtree.quotient import make_quotient

settings.register_profile(
    "dev",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance",
    max_examples=5000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dev")


@pytest.fixture
def fix_d():
    return make_quotient(8, FIX_D_WEIGHTS, FIX_D_EDGES, 3)


@pytest.fixture
def path4_swap():
    tree = validate_tree(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)], 2)
    return validate_automorphism(tree, [3, 2, 1, 0])


@pytest.fixture
def star_rotation():
    tree = validate_tree(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)], 1)
    return validate_automorphism(tree, [0, 2, 3, 1])


@pytest.fixture
def star_identity():
    tree = validate_tree(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)], 1)
    return validate_automorphism(tree, [0, 1, 2, 3])


@pytest.fixture
def fig1_instance():
    # two sources and two sinks separated by three saddle spheres
    tree = validate_tree(4, [(0, 1, 2), (1, 2, 1), (2, 3, 2)], 2, Mode.MORSE_SMALE)
    return validate_automorphism(tree, [0, 1, 2, 3])
