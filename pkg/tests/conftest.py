import pytest

from wreathforge import FieldSpec


@pytest.fixture(scope="session")
def Q():
    return FieldSpec(FieldSpec.RATIONALS)


@pytest.fixture(scope="session")
def F7():
    return FieldSpec(FieldSpec.PRIME, 7)
