import json
from functools import lru_cache
from pathlib import Path

import pytest

from sextor.growth import torsion_configurations
from sextor.interface.fixtures import load_fixtures

DATA = Path(__file__).parent / "data"

# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE = {}


@lru_cache(maxsize=None)
def fixtures():
    return load_fixtures()


def curve(label):
    return fixtures().curve(label)


@lru_cache(maxsize=None)
def sextic_config(label):
    return torsion_configurations(curve(label), 6)


def expected_rows(source):
    return fixtures().rows(source)


@lru_cache(maxsize=None)
def oracle(name):
    return json.loads((DATA / name).read_text())


@pytest.fixture
def E():
    return curve


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
