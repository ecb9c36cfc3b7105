from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import GOLDEN  # noqa: E402

from peakit import SearchOptions, enumerate_peas, read_model  # noqa: E402
from peakit.io import read_model_file  # noqa: E402


@lru_cache(maxsize=None)
def peas(order: int, lattice: bool = False) -> tuple:
    return tuple(enumerate_peas(SearchOptions(order, require_lattice=lattice)))


def peas_up_to(order: int, lattice: bool = False) -> list:
    return [p for n in range(2, order + 1) for p in peas(n, lattice)]


def golden(name: str):
    return read_model(GOLDEN / f"{name}.json")


def golden_file(name: str):
    return read_model_file(GOLDEN / f"{name}.json")


@pytest.fixture(scope="session")
def lattice_peas_5() -> list:
    return peas_up_to(5, lattice=True)


@pytest.fixture(scope="session")
def all_peas_5() -> list:
    return peas_up_to(5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
