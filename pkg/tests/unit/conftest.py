import os
from typing import Dict, Generator
from unittest.mock import patch

import pytest
from hypothesis import HealthCheck, settings
from wbench.exactalg import Family
from wbench.exactalg import Generator as YGenerator
from wbench.yangian import Mode, YangianAlgebra, build_algebra

settings.register_profile(
    "wbench",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("wbench")


@pytest.fixture(autouse=True)
def clean_env() -> Generator[None, None, None]:
    """Keep WBENCH_* variables from the developer's shell out of the tests."""
    env_vars: Dict[str, str] = {
        key: value for key, value in os.environ.items() if not key.startswith("WBENCH_")
    }
    with patch.dict(os.environ, env_vars, clear=True):
        yield


@pytest.fixture(scope="session")
def full2() -> YangianAlgebra:
    return build_algebra(2, Mode.FULL)


@pytest.fixture(scope="session")
def full3() -> YangianAlgebra:
    return build_algebra(3, Mode.FULL)


@pytest.fixture(scope="session")
def gl2() -> YangianAlgebra:
    return build_algebra(2, Mode.TRUNCATED_GL)


@pytest.fixture(scope="session")
def so2() -> YangianAlgebra:
    return build_algebra(2, Mode.TRUNCATED_SO)


@pytest.fixture
def gen():
    """Shorthand for generators: gen("E", 3)."""

    def make(family: str, superscript: int) -> YGenerator:
        return YGenerator(Family.parse(family), superscript)

    return make
