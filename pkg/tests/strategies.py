from hypothesis import strategies as st

from eqtree.generator import GenSpec, gen_equipped


@st.composite
def gen_specs(draw, max_n=9, max_k=3, loop_probability=None):
    if loop_probability is None:
        loop_probability = draw(st.sampled_from([0.0, 0.5]))
    return GenSpec(
        n=draw(st.integers(1, max_n)),
        k=draw(st.integers(1, max_k)),
        max_orbit=draw(st.integers(1, 4)),
        seed=draw(st.integers(0, 2**32 - 1)),
        loop_probability=loop_probability,
    )


@st.composite
def equipped_trees(draw, max_n=9, max_k=3):
    return gen_equipped(draw(gen_specs(max_n, max_k)))
