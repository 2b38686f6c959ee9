import numpy as np
import pytest

from tcplan import AnnulusSpec, SphereSpec, annulus_planner, disk_domain, sphere_planner, star_planner

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def circle():
    return sphere_planner(SphereSpec(1))


@pytest.fixture(scope="session")
def s3():
    return sphere_planner(SphereSpec(2))


@pytest.fixture(scope="session")
def disk():
    return star_planner(disk_domain())


@pytest.fixture(scope="session")
def annulus_spec():
    return AnnulusSpec(0.3, 0.2, rho=1.0)


@pytest.fixture(scope="session")
def annulus(annulus_spec):
    return annulus_planner(annulus_spec)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
