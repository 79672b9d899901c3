from __future__ import annotations

from importlib import resources

import pytest
from hypothesis import HealthCheck, settings

from friedzeta.laurent import parse_laurent
from friedzeta.linalg import parse_matrix
from friedzeta.words import parse_endomorphism
from friedzeta.zeta import zeta_of

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def data_text(name: str) -> str:
    return resources.files("friedzeta").joinpath("data", name).read_text()


@pytest.fixture(scope="session")
def ay_phi():
    return parse_endomorphism(data_text("arnoux_yoccoz.endo"))


@pytest.fixture(scope="session")
def ay_matrix():
    return parse_matrix(data_text("ay_minus_id.mat"))


@pytest.fixture(scope="session")
def ay_model(ay_phi):
    return zeta_of(ay_phi)


@pytest.fixture(scope="session")
def ay_zeta(ay_model):
    return ay_model[1]


def vt(text: str):
    return parse_laurent(text, ["v", "t"])


# ---- acceptance reporting: one line per criterion in the terminal summary

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    prev = _criteria.get(n)
    if prev is None or prev[0] == "PASS":
        _criteria[n] = (outcome, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcome, title = _criteria[n]
        terminalreporter.write_line(f"criterion {n:>2}: {outcome}  {title}")
