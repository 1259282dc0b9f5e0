import os

import pytest
from hypothesis import HealthCheck, settings

from jacobsladder.errors import LadderError
from jacobsladder.ladder import LadderContext
from jacobsladder.quadrature import build_integral_table
from jacobsladder.tableio import load_table, save_table
from jacobsladder.zeta import DEFAULT_CFG

settings.register_profile(
    "jl",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("jl")

_CACHE_ENV = "JACOBSLADDER_TEST_CACHE"


def _cached_table(name, t_max):
    """Session table, persisted between runs so only the first run pays."""
    cache = os.environ.get(
        _CACHE_ENV,
        os.path.join(os.path.expanduser("~"), ".cache", "jacobsladder-tests"))
    os.makedirs(cache, exist_ok=True)
    path = os.path.join(cache, name)
    if os.path.exists(path):
        try:
            table = load_table(path, expected_cfg=DEFAULT_CFG)
            if table.t_max >= t_max:
                return table
        except LadderError:
            pass
    table = build_integral_table(t_max)
    save_table(table, path)
    return table


@pytest.fixture(scope="session")
def table10k():
    """One shared integral table covering every unit-test height."""
    return _cached_table("table10k.jlt", 10050.0)


@pytest.fixture(scope="session")
def ctx10k(table10k):
    return LadderContext(table=table10k)
