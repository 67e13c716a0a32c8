"""Shared enums used across the application."""

from __future__ import annotations

import enum


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class EquilibriumKind(str, enum.Enum):
    ORIGIN = "Origin"
    PREY_ONLY = "PreyOnly"
    COEXISTENCE = "Coexistence"


class Regime(str, enum.Enum):
    """Split of the a2 analysis on BQ versus 3ds."""
    CASE1 = "Case1"  # BQ >= 3ds
    CASE2 = "Case2"  # BQ < 3ds


class A1Case(str, enum.Enum):
    A = "A"  # K <= 0, V/ds <= 1
    B = "B"  # K <= 0, V/ds > 1
    C = "C"  # K > 0,  V/ds <= 1
    D = "D"  # K > 0,  V/ds > 1


class A2Case(str, enum.Enum):
    P1 = "1+"
    P2 = "2+"
    P3 = "3+"
    P4 = "4+"
    N1 = "1-"
    N2 = "2-"
    N3 = "3-"
    N4 = "4-"
    N5 = "5-"
    N6 = "6-"
    N7 = "7-"
    DEGENERATE = "Degenerate"


class F1Regime(str, enum.Enum):
    """Three columns of the prey-only stability summary."""
    M1_NEGATIVE = "m1_negative"
    M0_NEGATIVE = "m0_negative"
    STABLE = "stable"


class VerdictKind(str, enum.Enum):
    STEADY_STATE = "SteadyState"
    LIMIT_CYCLE = "LimitCycle"
    UNDECIDED = "Undecided"


class CriticalKind(str, enum.Enum):
    TRANSCRITICAL = "Transcritical"
    HOPF = "Hopf"


class SweepParameter(str, enum.Enum):
    A = "A"
    B = "B"


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
