import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repo",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("repo")

WORKED_MODULUS = (1, 0, 1, 1, 0, 1, 1)


@pytest.fixture(scope="session")
def gf64():
    from designcodes.gf import field_new

    return field_new(2, 6, WORKED_MODULUS)


@pytest.fixture(scope="session")
def bent_n6(gf64):
    from designcodes import boolfn, constructions

    f = boolfn.with_trace_to(boolfn.from_exponent(6, 3, gf64, coef=gf64.generator), 1)
    return f, constructions.code_from_bent_support(f)


@pytest.fixture(scope="session")
def vbent_n6(gf64):
    from designcodes import boolfn, constructions

    F = boolfn.with_trace_to(boolfn.from_exponent(6, 3, gf64, coef=gf64.generator), 3)
    return F, constructions.code_from_vectorial(F)


@pytest.fixture(scope="session")
def kasami_n5():
    from designcodes import boolfn, constructions

    F, s = boolfn.kasami(5, 2)
    return F, s, constructions.code_from_vectorial(F)


@pytest.fixture(scope="session")
def ternary_m3():
    from designcodes import constructions

    return constructions.ternary_code(3)


@pytest.fixture
def hamming84():
    from designcodes.code import LinearCode

    return LinearCode.from_rows(2, [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
    ])
