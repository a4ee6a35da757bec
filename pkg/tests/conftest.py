from __future__ import annotations

from pathlib import Path

import pytest

from extrilab.cli import Context, load_scenario

SCENARIO_DIR = Path(__file__).resolve().parents[1] / "scenarios"
SMALL = ["cyclic4_ct", "linear3_mod", "linear4_proj_inj"]
ALL = SMALL + ["cyclic10_subcat"]

_CONTEXTS: dict = {}


def context(name: str) -> Context:
    """One shared context per scenario, so expensive sides are built once."""
    if name not in _CONTEXTS:
        _CONTEXTS[name] = Context(load_scenario(str(SCENARIO_DIR / f"{name}.json")))
    return _CONTEXTS[name]


@pytest.fixture(scope="session")
def scenario_dir() -> Path:
    return SCENARIO_DIR


@pytest.fixture(scope="session")
def small_ct():
    return context("cyclic4_ct")


@pytest.fixture(scope="session")
def cyclic10_subcat():
    return context("cyclic10_subcat")


@pytest.fixture(scope="session")
def nonsplit():
    """A scenario whose quotient has nonsplit conflations."""
    return context("linear4_proj_inj")
