"""Shared session fixtures: the expensive objects are built exactly once."""

import pytest

from brownalg.jordan import build_albert, build_h4_quaternion
from brownalg.model_a import build_model_a
from brownalg.model_b import build_model_b
from brownalg.isos import build_chain
from brownalg.lie import derivation_algebra, structure_algebra, kantor_algebra


@pytest.fixture(scope="session")
def albert():
    return build_albert()


@pytest.fixture(scope="session")
def h4():
    return build_h4_quaternion()


@pytest.fixture(scope="session")
def model_b(albert):
    return build_model_b(albert)


@pytest.fixture(scope="session")
def model_a(h4):
    return build_model_a(h4)


@pytest.fixture(scope="session")
def chain(model_a, model_b):
    return build_chain(model_a, model_b)


@pytest.fixture(scope="session")
def der6(model_b):
    return derivation_algebra(model_b.alg, model_b.grading)


@pytest.fixture(scope="session")
def str7(model_b, der6):
    st = structure_algebra(model_b.alg, model_b.grading, der6)
    st.lie.group = st.combined_group
    st.lie.degrees = st.combined_degrees
    return st


@pytest.fixture(scope="session")
def kan8(model_b, str7):
    return kantor_algebra(model_b.alg, model_b.grading, str7, model_b.s0_index)
