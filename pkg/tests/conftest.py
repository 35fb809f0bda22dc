import numpy as np
import pytest

from shadowlp.instances import cube_instance, simplex_instance


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log(request):
    lines = request.config._acceptance_lines

    def log(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
        lines.append(line)
        print(line)

    return log


@pytest.fixture
def simplex_lp():
    return simplex_instance()


@pytest.fixture
def cube_lp():
    return cube_instance(3)


@pytest.fixture
def gen():
    return np.random.default_rng(12345)
