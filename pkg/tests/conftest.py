from __future__ import annotations

import sys
import random

import pytest

from fingauge.groupoids.group import builtin_group, cyclic_group, direct_product, symmetric_group

SMALL_GROUPS = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3"]


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=SMALL_GROUPS)
def small_group(request):
    return builtin_group(request.param)


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def klein():
    return direct_product(cyclic_group(2), cyclic_group(2))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
