import pytest

from equisym import (
    dihedral_characters,
    f1_vector,
    f2_vector,
    metacyclic4_characters,
)


@pytest.fixture(scope="session")
def f2_q11():
    """The five-involution dihedral action at q = 11 with its characters."""
    vec = f2_vector(11)
    return vec, dihedral_characters(11, group=vec.group)


@pytest.fixture(scope="session")
def f1_q13():
    """The metacyclic (0;2,2,4,4) action at q = 13 with its characters."""
    vec = f1_vector(13)
    return vec, metacyclic4_characters(13, group=vec.group)
