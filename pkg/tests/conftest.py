"""Shared fixtures: reference parameter sets and random draws."""

import sys
from pathlib import Path

import numpy as np
import pytest

from app.logging_setup import configure_logging
from app.schemas.parameters import ScaledParameters

configure_logging("WARNING", stream=sys.stderr)

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"

TRANSCRITICAL = dict(r=0.6, c=0.38, w=0.47, s=0.4, v=0.5, d=0.2, B=0.48)
EXAMPLE1 = dict(r=0.6, c=0.74, w=0.38, s=0.48, v=0.05, d=0.008, B=0.85)
EXAMPLE2 = dict(r=0.95, c=0.066, w=0.083, s=0.075, v=0.8, d=0.15, B=0.84)
EXAMPLE3 = dict(r=0.56, c=0.44, w=0.3, s=0.01, v=0.7, d=0.08, B=0.23)

# Hopf values of A for the three examples
HOPF_A = {1: 0.4331191029, 2: 0.6376318460, 3: 0.4964791610}


def random_scaled(rng: np.random.Generator, with_A: bool = True) -> ScaledParameters:
    """Draw a parameter set with V > 0 and, optionally, A inside (0, V/ds)."""
    while True:
        values = {name: float(rng.uniform(0.05, 1.5)) for name in ("r", "c", "w", "s", "v", "d", "B")}
        Q = values["s"] * values["v"] + values["c"] * values["d"] * values["w"]
        ds = values["d"] * values["s"]
        V = values["B"] * Q - ds
        if V > 1e-3 * ds:
            break
    if with_A:
        values["A"] = float(rng.uniform(0.02, 0.98)) * V / ds
    return ScaledParameters(**values)


@pytest.fixture
def transcritical() -> ScaledParameters:
    return ScaledParameters(**TRANSCRITICAL, A=0.20716)


@pytest.fixture
def example1() -> ScaledParameters:
    return ScaledParameters(**EXAMPLE1)


@pytest.fixture
def example2() -> ScaledParameters:
    return ScaledParameters(**EXAMPLE2)


@pytest.fixture
def example3() -> ScaledParameters:
    return ScaledParameters(**EXAMPLE3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
