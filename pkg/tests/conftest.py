from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from monoclinic.reference import synthetic
from monoclinic.variants import build_variants, material, symbolic_variants

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def sym():
    return symbolic_variants()


@pytest.fixture(scope="session")
def niti():
    return build_variants(material("NiTi"))


@pytest.fixture(scope="session")
def cuzr():
    return build_variants(material("CuZr"))


@pytest.fixture(scope="session")
def boundary():
    return build_variants(synthetic("boundary"))


@pytest.fixture(scope="session")
def ib():
    return build_variants(synthetic("Ib"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
